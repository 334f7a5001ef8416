#pragma once

#include <map>
#include <string>
#include <utility>

#include "subset.hpp"

namespace majority {

/// Nonnegative weights on the nonempty subsets of {1..n}, stored sparsely.
///
/// With integer weights this is a zone map: weight(I) counts the points lying in
/// exactly the sets indexed by I. With rational weights it is a size function.
/// In both readings star(I), the sum over all supersets of I, is the size of the
/// intersection of the sets indexed by I.
template <class Value>
class subset_function {
public:
    using value_type = Value;
    using storage = std::map<subset, Value>;

    subset_function() = default;

    explicit subset_function(int n) : n_(n) { require_index_count(n); }

    int n() const noexcept { return n_; }

    Value operator[](subset s) const {
        auto it = values_.find(s);
        return it == values_.end() ? Value(0) : it->second;
    }

    void set(subset s, const Value& v) {
        check_subset(s);
        if (v < 0) {
            throw error(error_code::precondition_violated,
                        "negative weight for subset {" + subset_key(s) + "}");
        }
        if (v == 0) {
            values_.erase(s);
        } else {
            values_[s] = v;
        }
    }

    void add(subset s, const Value& delta) { set(s, (*this)[s] + delta); }

    Value star(subset s) const {
        if (s == 0) throw error(error_code::empty_subset, "star of the empty subset");
        check_subset(s);
        Value total = 0;
        for (const auto& [key, v] : values_) {
            if (is_superset(key, s)) total += v;
        }
        return total;
    }

    Value total() const {
        Value t = 0;
        for (const auto& kv : values_) t += kv.second;
        return t;
    }

    // Only the nonzero entries, ascending by bitmask.
    const storage& entries() const noexcept { return values_; }

    bool empty() const noexcept { return values_.empty(); }

    friend bool operator==(const subset_function& a, const subset_function& b) {
        return a.n_ == b.n_ && a.values_ == b.values_;
    }

private:
    void check_subset(subset s) const {
        if (s == 0 || (s & ~full_subset(n_)) != 0) {
            throw error(error_code::index_out_of_range,
                        "subset {" + subset_key(s) + "} not a nonempty subset of 1.." + std::to_string(n_));
        }
    }

    int n_ = 0;
    storage values_;
};

// Renames index k to relabel[k-1]; relabel must be a permutation of 1..n.
template <class Value>
subset_function<Value> relabel_indices(const subset_function<Value>& f, const std::vector<int>& relabel) {
    subset_function<Value> out(f.n());
    for (const auto& [s, v] : f.entries()) {
        subset t = 0;
        for (int i : members(s)) t |= singleton(relabel[i - 1]);
        out.set(t, v);
    }
    return out;
}

}  // namespace majority
