#pragma once

#include <utility>
#include <vector>

#include "sperner/labeling.hpp"
#include "sperner/subdivision.hpp"

// Built-in example instances.

namespace sperner {

// The "fig1" instance: a 7-cell subdivision of the triangle with a labeling
// that admits exactly one completely labeled cell, {d, e, e3}. Vertex ids:
//   0 e1=(1,0,0)   1 e2=(0,1,0)     2 e3=(0,0,1)     3 a=(2/3,1/3,0)
//   4 b=(1/3,2/3,0) 5 c=(0,3/5,2/5) 6 d=(1/2,0,1/2)  7 e=(1/3,1/3,1/3)
inline Subdivision fig1_subdivision() {
    const auto p = [](long long a1, long long a2, long long b1, long long b2, long long c1,
                      long long c2) {
        return BPoint({rat(a1, a2), rat(b1, b2), rat(c1, c2)});
    };
    std::vector<BPoint> vertices{
        p(1, 1, 0, 1, 0, 1),  // e1
        p(0, 1, 1, 1, 0, 1),  // e2
        p(0, 1, 0, 1, 1, 1),  // e3
        p(2, 3, 1, 3, 0, 1),  // a
        p(1, 3, 2, 3, 0, 1),  // b
        p(0, 1, 3, 5, 2, 5),  // c
        p(1, 2, 0, 1, 1, 2),  // d
        p(1, 3, 1, 3, 1, 3),  // e
    };
    std::vector<Cell> cells{
        Cell({0, 3, 6}),  // e1 a d
        Cell({3, 6, 7}),  // a d e
        Cell({3, 4, 7}),  // a b e
        Cell({4, 5, 7}),  // b c e
        Cell({1, 4, 5}),  // e2 b c
        Cell({2, 5, 7}),  // e3 c e
        Cell({2, 6, 7}),  // e3 d e
    };
    return Subdivision(3, std::move(vertices), std::move(cells));
}

inline Labeling fig1_labeling() {
    return Labeling{{1, 2, 3, 2, 1, 2, 1, 2}};
}

}  // namespace sperner
