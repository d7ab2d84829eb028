#pragma once

// Hand-transcribed quivers used as independent oracles.

#include "lcl/ice_quiver.hpp"

#include <string>

namespace fx {

inline lcl::IceQuiver u_to_f() {
    lcl::IceQuiver q;
    q.add_vertex(1, false, "u");
    q.add_vertex(2, true, "f");
    q.add_arrow("a", 1, 2);
    return q;
}

inline lcl::IceQuiver linear(int n, int first_frozen = 0) {
    lcl::IceQuiver q;
    for (int i = 1; i <= n; ++i) q.add_vertex(i, i <= first_frozen);
    for (int i = 1; i < n; ++i) q.add_arrow("a" + std::to_string(i), i, i + 1);
    return q;
}

// A3, w0 = (1,2,3,2,1,2), interval [-2,6], read off the drawing.
inline lcl::IceQuiver a3_example() {
    lcl::IceQuiver q;
    for (int s = -2; s <= 6; ++s) q.add_vertex(s, s == -2 || s == -1 || s == 1);
    const int arrows[][3] = {{-1, 0, 0}, {3, -1, 0}, {3, 4, 0}, {-2, -1, 1}, {-2, 1, 1}, {0, 3, 0}, {0, -2, 0},
                             {2, 0, 0},  {2, 5, 0},  {4, 2, 0}, {6, 4, 0},   {1, 2, 0},  {5, 6, 0}, {5, 1, 0}};
    for (const auto& a : arrows)
        q.add_arrow(std::to_string(a[0]) + "->" + std::to_string(a[1]), a[0], a[1], a[2] != 0);
    return q;
}

} // namespace fx
