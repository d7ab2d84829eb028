#pragma once

// Ice quivers with potential attached to intervals of the doubly infinite word
// extending a reduced expression of w0 by i_{s+l} = i_s^*.

#include "lcl/coxeter.hpp"
#include "lcl/qp_mutation.hpp"

#include <map>
#include <optional>
#include <vector>

namespace lcl {

class IndexSequence {
public:
    // The word must be a reduced expression of w0; its letters sit at positions 1..l.
    static IndexSequence extended(const DynkinDiagram& d, const std::vector<int>& w0);

    int at(int s) const;
    int minus(int s) const;
    int plus(int s) const;
    int l0() const { return static_cast<int>(base_.size()); }
    const DynkinDiagram& diagram() const { return d_; }
    const std::vector<int>& base() const { return base_; }
    const std::map<int, int>& overrides() const { return overrides_; }
    SeqWindow window(int a, int b) const;
    // Applies a move at position s to the whole infinite sequence.
    IndexSequence with_move(MoveKind kind, int s) const;

private:
    DynkinDiagram d_;
    std::vector<int> base_;
    std::vector<int> star_;
    std::map<int, int> overrides_;
    int reach_ = 0; // bound on the distance to the next equal letter
};

struct IntervalIQP {
    int a = 0;
    int b = 0;
    QP qp;
    std::map<int, int> row; // vertex -> i_s
};

IntervalIQP build_interval(const IndexSequence& w, int a, int b);

// Minimum row size over the Dynkin vertices.
int regular_width(const IntervalIQP& iqp, const DynkinDiagram& d);

struct HLPoint {
    int i = 0;
    int p = 0;
    auto operator<=>(const HLPoint&) const = default;
};

// Height function after moving the right end of the window from 0 to b.
HeightFunction shifted_height(const IndexSequence& w, const HeightFunction& xi, int b);
std::map<int, HLPoint> hl_coordinates(const IntervalIQP& iqp, const IndexSequence& w, const HeightFunction& xi);
// Q_HL restricted to the given points.
IceQuiver hl_window(const DynkinDiagram& d, const std::vector<HLPoint>& pts);

struct KRLabel {
    int i = 0;
    int r = 0;
    int p = 0;
    bool operator==(const KRLabel&) const = default;
};

KRLabel kr_label(const HLPoint& pt, const HeightFunction& xi);
// n applications of the left dual (negative n applies the right dual).
KRLabel dual_label(const KRLabel& l, int n, const DynkinDiagram& d);

struct Residue {
    int a_prime = 0;
    std::vector<int> letters;
    WeylElement element;
    bool is_w0 = false;
    std::optional<std::pair<HeightFunction, std::vector<int>>> adapted;
};

Residue residue(const IndexSequence& w, int a, int b);

struct MoveWitness {
    VertexMap vertices;
    std::map<std::string, std::string> arrows;
};

// Commutation at a <= s < b: identity outside {s, s+1}, which are swapped.
// Braid at a < s < b: mutate at s+1 first, then swap s-1 and s.
MoveWitness verify_move(const IndexSequence& w, MoveKind kind, int s, int a, int b);

nlohmann::json to_json(const IntervalIQP& iqp);
nlohmann::json to_json(const KRLabel& l);

} // namespace lcl
