#pragma once

#include <majority/digraph.hpp>

namespace fixtures {

// The four-vertex worked example: 1<->2, 2<->3 two-way; 1->3, 3->4, 2->4 one-way.
inline majority::digraph worked_example() {
    return majority::digraph(4, {{1, 2}, {2, 1}, {2, 3}, {3, 2}, {1, 3}, {3, 4}, {2, 4}});
}

inline majority::digraph one_way_triangle() { return majority::digraph(3, {{1, 2}, {2, 3}, {3, 1}}); }

}  // namespace fixtures
