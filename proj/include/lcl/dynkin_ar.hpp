#pragma once

// Module category of the Dynkin quiver Q_xi inside the repetition quiver ZDelta.
// Points are (i, p) with p of the parity of xi_i; tau^{-1} is p -> p + 2.
// The indecomposable kQ_xi-modules are the points (i, xi_i + 2r) with
// 0 <= 2r < xi_{i*} - xi_i + h. Shifts: Sigma^m N sits in cohomological degree -m.
// P_i has basis the paths of Q_xi ending at i (AR arrows P_i -> P_j for i -> j).

#include "lcl/coxeter.hpp"

#include <map>
#include <string>
#include <vector>

namespace lcl {

struct ZPoint {
    int i = 0;
    int p = 0;
    auto operator<=>(const ZPoint&) const = default;
};

using DimVector = std::vector<int>; // index i-1 for vertex i

bool in_window(const DynkinDiagram& d, const HeightFunction& xi, const ZPoint& pt);
std::vector<ZPoint> module_window(const DynkinDiagram& d, const HeightFunction& xi);
// Number of paths in Q_xi from each vertex to i.
DimVector projective_dim(const DynkinDiagram& d, const HeightFunction& xi, int i);
// Knitted dimension vectors of the whole window.
std::map<ZPoint, DimVector> knit(const DynkinDiagram& d, const HeightFunction& xi);
DimVector dim_vector(const DynkinDiagram& d, const HeightFunction& xi, const ZPoint& pt);

struct DerivedIndec {
    int m = 0;
    ZPoint point;
    DimVector dim;
};

// tau^{-q} P_i written as Sigma^m N with N a module.
DerivedIndec tau_inv_derived(const DynkinDiagram& d, const HeightFunction& xi, int i, int q);

std::string ar_dot(const DynkinDiagram& d, const HeightFunction& xi);

} // namespace lcl
