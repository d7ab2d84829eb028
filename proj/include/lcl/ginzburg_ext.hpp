#pragma once

// Graded Ext dimensions between the projectives e_s Gamma of the relative
// Ginzburg algebra of a regular window Q_xi (x) Q°_l of an adapted interval.
//
// Degrees: the term tau^{-q} P = Sigma^m N contributes to degree -m, so every
// table lives in degrees <= 0. The A1 window of width 2 is the smoke test for
// this sign (tests/unit/test_ginzburg_ext.cpp).

#include "lcl/compatible_pair.hpp"
#include "lcl/interval_quiver.hpp"
#include "lcl/seed.hpp"

#include <map>
#include <mutex>
#include <utility>
#include <vector>

namespace lcl {

struct ModelVertex {
    int row = 0;
    int c = 0; // column from the left, frozen column is 1
    int d = 0; // column from the right
};

struct RegularModel {
    IndexSequence w;
    HeightFunction base_xi; // w.base() is a source sequence for it
    HeightFunction xi;      // orientation of the columns (shifted to b)
    int ell = 0;
    int a = 0; // this is a'
    int b = 0;
    IntervalIQP iqp;
    std::map<int, ModelVertex> vertices;
};

using ExtRow = std::map<int, int>; // degree -> dimension, zero entries omitted
using ExtTable = std::map<std::pair<int, int>, ExtRow>;

// Height function making the base word a source sequence; NotAdapted otherwise.
HeightFunction adapted_height(const IndexSequence& w);
// Smallest a' <= a with 2 l(w0) | b - a' + 1.
RegularModel regular_embed(const IndexSequence& w, int a, int b);
// Regular window [b - 2 l(w0) k + 1, b].
RegularModel regular_window(const IndexSequence& w, int b, int k);

ExtRow ext_dims(const RegularModel& m, int s, int t);
// All pairs of vertices in [a,b] (default: the whole model).
ExtTable ext_table(const RegularModel& m);
ExtTable ext_table(const RegularModel& m, int a, int b);

int bracket(const RegularModel& m, int s, int t);
int euler_char(const RegularModel& m, int s, int t);

// Matrices indexed by the standard order of the model quiver restricted to [a,b].
IntMatrix bracket_matrix(const RegularModel& m, const VertexOrder& order);
IntMatrix chi_matrix(const RegularModel& m, const VertexOrder& order);
// chi == B^-T of the interval quiver on [a,b]; throws MatrixMismatch with the entry.
bool euler_matrix_check(const RegularModel& m, int a, int b);
bool euler_matrix_check(const RegularModel& m);

int lambda_additive(const RegularModel& m, int s, int t);

struct DualD {
    int route_a = 0;
    int route_b = 0;
    int k = 0; // regular window used for route B (both k and k+1 agree)
};

// d(V, D^{-n} W) on the fixture (w, [a,b]) computed homologically and through
// mutation along the duality sequence. Seeds are cached per (k, n).
class DualPipeline {
public:
    DualPipeline(IndexSequence w, int a, int b, int max_k = 6);

    const RegularModel& model() const { return model_; }
    DualD d_invariant_dual(int v, int w, int n);
    int route_a(int v, int w, int n) const;
    int route_b(int v, int w, int n, int k);
    // Sum over n = 1..N of (-1)^{n-1} (d(V, D^{-n} W) - d(W, D^{-n} V)).
    int lambda_series(int v, int w, int n_max);

private:
    struct Window {
        RegularModel model;
        QuiverPair pair;
        std::map<int, LambdaSeed> seeds; // by n
    };
    Window& window(int k);
    const LambdaSeed& dual_seed(Window& win, int n);

    IndexSequence w_;
    int a_ = 0;
    int b_ = 0;
    int max_k_ = 0;
    RegularModel model_;
    ExtTable table_;
    std::map<int, Window> windows_;
    std::mutex mu_;
};

nlohmann::json to_json(const RegularModel& m);
nlohmann::json to_json(const ExtTable& t);

} // namespace lcl
