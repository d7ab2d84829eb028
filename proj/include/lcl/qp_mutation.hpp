#pragma once

#include "lcl/ice_quiver.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace lcl {

// A path is written as a composition: the rightmost arrow is traversed first,
// so for a_1 ... a_k we need src(a_i) == dst(a_{i+1}).
using Path = std::vector<std::string>;
using PathSum = std::map<Path, std::int64_t>;

// Lexicographically least rotation.
Path canonical_rotation(const Path& cycle);

class Potential {
public:
    // Adds coeff * cycle (stored in canonical rotation); zero sums vanish.
    void add(const Path& cycle, std::int64_t coeff);
    const std::map<Path, std::int64_t>& terms() const { return terms_; }
    std::int64_t coeff(const Path& cycle) const;
    bool empty() const { return terms_.empty(); }
    std::size_t max_length() const;
    bool operator==(const Potential&) const = default;

private:
    std::map<Path, std::int64_t> terms_;
};

struct QP {
    IceQuiver quiver;
    Potential potential;
};

bool is_closed_path(const IceQuiver& q, const Path& p);
// Throws BadPotentialTerm for non-cycles or short loop terms.
void validate_potential(const QP& qp);
// Throws RedundantPotentialTerm if some term has only frozen arrows.
void check_irredundant(const QP& qp);

PathSum cyclic_derivative(const QP& qp, const std::string& alpha);

QP premutate(const QP& qp, int v);

struct ReduceOptions {
    std::size_t degree_cap = 0; // 0: three times the longest input cycle
    int max_passes = 64;
};

QP reduce(const QP& qp, const ReduceOptions& opt = {});
QP mutate_qp(const QP& qp, int v, const ReduceOptions& opt = {});

// Potentials agree after renaming vertices along m, matching parallel arrows,
// and flipping signs of individual arrows. Rotation is absorbed by the
// canonical form. Returns the arrow map when they agree.
std::optional<std::map<std::string, std::string>> match_potentials(const QP& a, const QP& b, const VertexMap& m);

nlohmann::json to_json(const Potential& w);
Potential potential_from_json(const nlohmann::json& j);

} // namespace lcl
