#pragma once

#include "lcl/compatible_pair.hpp"
#include "lcl/laurent.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <vector>

namespace lcl {

// Cluster variables are Laurent polynomials in the root seed's variables.
// Indices are matrix indices (first n unfrozen).
struct LambdaSeed {
    std::vector<LaurentPoly> cluster;
    CompatiblePair pair;
    IntMatrix bhat;
    std::vector<int> trail; // mutated indices, from the root
    int m() const { return static_cast<int>(cluster.size()); }
    int n() const { return pair.btilde.cols(); }
};

LambdaSeed root_seed(const CompatiblePair& pair, const IntMatrix& bhat);
LambdaSeed mutate_seed(const LambdaSeed& s, int v);
LambdaSeed mutate_along(const LambdaSeed& s, const std::vector<int>& seq);

// Product of cluster variables of one seed, addressed by the path from the root.
struct ClusterMonomial {
    std::vector<int> trail;
    std::vector<int> exps; // length m, non-negative
    bool operator==(const ClusterMonomial&) const = default;
};

ClusterMonomial cluster_variable(const std::vector<int>& trail, int slot, int m);

struct PointedDecomposition {
    std::vector<std::int64_t> g; // length m
    LaurentPoly f;               // polynomial in n variables with constant term 1
};

// u is written in the variables of a seed with extended exchange matrix btilde.
PointedDecomposition decompose(const LaurentPoly& u, const IntMatrix& btilde);

// u written in the variables of seed t: re-root at t and walk back to u's seed.
LaurentPoly express_in(const ClusterMonomial& u, const LambdaSeed& t);
PointedDecomposition decompose_in(const ClusterMonomial& u, const LambdaSeed& t);

std::int64_t tropical_eval(const LaurentPoly& f, const std::vector<std::int64_t>& r);

std::int64_t tropical_invariant(const PointedDecomposition& u, const PointedDecomposition& u2, const CompatiblePair& p);
std::int64_t tropical_invariant(const ClusterMonomial& u, const ClusterMonomial& u2, const LambdaSeed& t);

// Sum of the two F-terms; checked against the sum of the two tropical invariants.
std::int64_t f_invariant(const ClusterMonomial& u, const ClusterMonomial& u2, const LambdaSeed& t);
std::int64_t f_invariant(const PointedDecomposition& u, const PointedDecomposition& u2, const CompatiblePair& p);

// Cancels adjacent repeated letters (mutation is an involution).
std::vector<int> reduce_trail(const std::vector<int>& seq);

nlohmann::json to_json(const LambdaSeed& s);

} // namespace lcl
