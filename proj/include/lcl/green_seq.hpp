#pragma once

// Green and red vertices on framed quivers, maximal green sequences and
// the mutation sequences realising left duals on interval quivers.

#include "lcl/ice_quiver.hpp"
#include "lcl/interval_quiver.hpp"

#include <map>
#include <optional>
#include <vector>

namespace lcl {

struct GreenState {
    IceQuiver current; // mutated framed quiver
    IceQuiver base;
    std::map<int, bool> green; // unfrozen vertex -> green?

    bool all_red() const;
};

struct GreenRun {
    std::vector<int> sequence;
    std::vector<std::map<int, bool>> colors; // colours before each step, then the final ones
    GreenState final;
    std::optional<VertexMap> sigma; // present iff the run is maximal
};

std::map<int, bool> colors_of(const IceQuiver& framed);
GreenState start_green(const IceQuiver& q);
// Throws NotGreenAtStep / MutationIllegal; the detail starts with "step k".
GreenRun run_green(const IceQuiver& q, const std::vector<int>& seq);

// ((v1,w1),...,(v1,ws),(v2,w1),...).
std::vector<std::pair<int, int>> boxtimes_sequence(const std::vector<int>& v, const std::vector<int>& w);
std::vector<int> boxtimes_ids(const ProductQuiver& p, const std::vector<int>& v, const std::vector<int>& w);

// v^{<=r} for n-fold left duality on the window [a,b]. Row j's s-th vertex counted
// from b leftwards plays (j, xi_j - 2s); rows are read in the sink order i_b, i_{b-1}, ...
// and every other block is the starred copy.
std::vector<int> duality_sequence(const IntervalIQP& iqp, const IndexSequence& w, const HeightFunction& xi, int n,
                                  int r);
// The s-th vertex of row j counted from b leftwards, if it lies in [a,b].
std::optional<int> row_vertex(const IntervalIQP& iqp, const IndexSequence& w, int j, int s);

nlohmann::json to_json(const GreenRun& run);

} // namespace lcl
