#pragma once

#include "lcl/ice_quiver.hpp"
#include "lcl/int_matrix.hpp"

#include <json.hpp>

#include <map>
#include <vector>

namespace lcl {

// Matrix index k refers to vertex ids[k]; the first n entries are unfrozen.
struct VertexOrder {
    std::vector<int> ids;
    int n = 0;
    int m() const { return static_cast<int>(ids.size()); }
    int index(int id) const;
};

// Unfrozen ascending, then frozen ascending.
VertexOrder standard_order(const IceQuiver& q);

// b_ii = 0 (unfrozen) or 1 (frozen); b_ij = #unfrozen(i->j) - #(j->i).
IntMatrix euler_matrix(const IceQuiver& q, const VertexOrder& order);

struct CompatiblePair {
    IntMatrix btilde;       // m x n
    IntMatrix lambda;       // m x m
    std::int64_t d = 0;     // S = d * I_n
    bool operator==(const CompatiblePair&) const = default;
};

// |det| (B^-T - B^-1) with type 2|det|. Throws EulerSingular.
CompatiblePair build_pair(const IntMatrix& bhat, int n);

struct QuiverPair {
    VertexOrder order;
    IntMatrix bhat;
    BigInt det;
    CompatiblePair pair;
};
QuiverPair build_pair(const IceQuiver& q);

bool is_compatible(const CompatiblePair& p);

IntMatrix e_matrix(const IntMatrix& bhat, int v);

// Componentwise mutation rules for the extended exchange matrix and Lambda.
IntMatrix mutate_btilde(const IntMatrix& btilde, int v);
IntMatrix mutate_lambda(const IntMatrix& lambda, const IntMatrix& btilde, int v);

struct MutatedPair {
    CompatiblePair pair;
    IntMatrix bhat;
};
// Conjugation by E_v; cross-checked against the componentwise rules (throws
// MatrixMismatch if they disagree).
MutatedPair mutate_pair(const CompatiblePair& p, const IntMatrix& bhat, int v);

nlohmann::json to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const nlohmann::json& j);

} // namespace lcl
