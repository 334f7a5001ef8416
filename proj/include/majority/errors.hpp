#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace majority {

enum class error_code {
    index_out_of_range,
    equal_indices,
    insufficient_zone,
    invalid_interval,
    invalid_pq,
    invalid_alpha,
    empty_subset,
    one_way_cycle,
    precondition_violated,
    invalid_assignment,
    malformed_clause,
    resource_limit,
    syntax_error,
    parse_error,
};

class error : public std::runtime_error {
public:
    error(error_code code, const std::string& what) : std::runtime_error(what), code_(code) {}

    error_code code() const noexcept { return code_; }

private:
    error_code code_;
};

// Carries the closed witness cycle v1 -> ... -> vk -> v1 (first vertex repeated at the end).
class one_way_cycle_error : public error {
public:
    explicit one_way_cycle_error(std::vector<int> cycle)
        : error(error_code::one_way_cycle, describe(cycle)), cycle_(std::move(cycle)) {}

    const std::vector<int>& cycle() const noexcept { return cycle_; }

private:
    static std::string describe(const std::vector<int>& cycle) {
        std::string s = "digraph has a one-way cycle:";
        for (std::size_t k = 0; k < cycle.size(); ++k) {
            s += (k == 0 ? " " : " -> ") + std::to_string(cycle[k]);
        }
        return s;
    }

    std::vector<int> cycle_;
};

// Position is a 1-based column into the parsed text.
class syntax_error : public error {
public:
    syntax_error(std::size_t position, std::vector<std::string> expected, const std::string& found)
        : error(error_code::syntax_error, describe(position, expected, found)),
          position_(position), expected_(std::move(expected)) {}

    std::size_t position() const noexcept { return position_; }
    const std::vector<std::string>& expected() const noexcept { return expected_; }

private:
    static std::string describe(std::size_t position, const std::vector<std::string>& expected,
                                const std::string& found) {
        std::string s = "syntax error at column " + std::to_string(position) + ": expected ";
        for (std::size_t k = 0; k < expected.size(); ++k) {
            if (k) s += k + 1 == expected.size() ? " or " : ", ";
            s += expected[k];
        }
        return s + ", found " + found;
    }

    std::size_t position_;
    std::vector<std::string> expected_;
};

}  // namespace majority
