#include "lcl/dynkin_ar.hpp"

#include "lcl/error.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace lcl {

bool in_window(const DynkinDiagram& d, const HeightFunction& xi, const ZPoint& pt) {
    if (!d.has_vertex(pt.i)) return false;
    const auto& w = weyl_data(d);
    const int lo = xi.at(pt.i);
    const int hi = xi.at(w.star[pt.i]) + w.h; // exclusive
    return pt.p >= lo && pt.p < hi && (pt.p - lo) % 2 == 0;
}

std::vector<ZPoint> module_window(const DynkinDiagram& d, const HeightFunction& xi) {
    validate_height(d, xi);
    const auto& w = weyl_data(d);
    std::vector<ZPoint> out;
    for (int i = 1; i <= d.n; ++i)
        for (int p = xi.at(i); p < xi.at(w.star[i]) + w.h; p += 2) out.push_back({i, p});
    std::sort(out.begin(), out.end(), [](const ZPoint& x, const ZPoint& y) {
        return std::tie(x.p, x.i) < std::tie(y.p, y.i);
    });
    return out;
}

DimVector projective_dim(const DynkinDiagram& d, const HeightFunction& xi, int i) {
    // Q_xi is acyclic with heights increasing along arrows; count paths k ~> i.
    std::function<int(int, int)> paths = [&](int from, int to) {
        if (from == to) return 1;
        int total = 0;
        for (int j : d.adj[from])
            if (xi.at(j) == xi.at(from) + 1) total += paths(j, to);
        return total;
    };
    DimVector dv(d.n, 0);
    for (int k = 1; k <= d.n; ++k) dv[k - 1] = paths(k, i);
    return dv;
}

std::map<ZPoint, DimVector> knit(const DynkinDiagram& d, const HeightFunction& xi) {
    std::map<ZPoint, DimVector> dims;
    for (const auto& pt : module_window(d, xi)) {
        if (pt.p == xi.at(pt.i)) {
            dims[pt] = projective_dim(d, xi, pt.i);
            continue;
        }
        // Mesh ending at pt: tau pt = (i, p-2), middle terms (j, p-1).
        DimVector dv(d.n, 0);
        for (int j : d.adj[pt.i]) {
            auto it = dims.find({j, pt.p - 1});
            if (it == dims.end()) continue;
            for (int k = 0; k < d.n; ++k) dv[k] += it->second[k];
        }
        const auto& prev = dims.at({pt.i, pt.p - 2});
        for (int k = 0; k < d.n; ++k) dv[k] -= prev[k];
        for (int c : dv)
            if (c < 0) fail("Internal", "knitting produced a negative dimension");
        dims[pt] = dv;
    }
    return dims;
}

DimVector dim_vector(const DynkinDiagram& d, const HeightFunction& xi, const ZPoint& pt) {
    if (!in_window(d, xi, pt))
        fail("OutsideWindow", "(" + std::to_string(pt.i) + "," + std::to_string(pt.p) + ") is not a module");
    return knit(d, xi).at(pt);
}

DerivedIndec tau_inv_derived(const DynkinDiagram& d, const HeightFunction& xi, int i, int q) {
    validate_height(d, xi);
    if (q < 0) fail("BadArgument", "q must be non-negative");
    const auto& w = weyl_data(d);
    DerivedIndec out;
    out.point = {i, xi.at(i) + 2 * q};
    while (!in_window(d, xi, out.point)) {
        out.point = {w.star[out.point.i], out.point.p - w.h};
        ++out.m;
    }
    out.dim = dim_vector(d, xi, out.point);
    return out;
}

std::string ar_dot(const DynkinDiagram& d, const HeightFunction& xi) {
    auto dims = knit(d, xi);
    std::ostringstream os;
    auto name = [](const ZPoint& p) { return "\"" + std::to_string(p.i) + "," + std::to_string(p.p) + "\""; };
    os << "digraph AR {\n  rankdir=LR;\n";
    for (const auto& [pt, dv] : dims) {
        os << "  " << name(pt) << " [label=\"";
        for (int c : dv) os << c;
        os << "\"];\n";
    }
    for (const auto& [pt, dv] : dims)
        for (int j : d.adj[pt.i])
            if (dims.count({j, pt.p + 1})) os << "  " << name(pt) << " -> " << name({j, pt.p + 1}) << ";\n";
    os << "}\n";
    return os.str();
}

} // namespace lcl
