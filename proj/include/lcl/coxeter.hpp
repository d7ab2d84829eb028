#pragma once

// Simply-laced root systems and reduced-word combinatorics.
// Vertices are labelled 1..n. D_n: chain 1..n-2 with n-1 and n attached to n-2.
// E_n: Bourbaki labelling (2 hangs off 4).

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace lcl {

struct DynkinDiagram {
    char type = 'A';
    int n = 0;
    std::vector<std::vector<int>> adj; // adj[i] for i in 1..n, adj[0] unused

    bool adjacent(int i, int j) const;
    bool has_vertex(int i) const { return i >= 1 && i <= n; }
    std::vector<int> vertices() const;
    std::string name() const { return std::string(1, type) + std::to_string(n); }
};

DynkinDiagram parse_dynkin(const std::string& s);

using Root = std::vector<int>; // coordinates in the simple-root basis

// Weyl element as its permutation of the full root set (positives first).
using WeylElement = std::vector<int>;

struct WeylData {
    std::vector<Root> roots; // positives [0, npos), then their negatives in the same order
    int npos = 0;
    std::vector<WeylElement> simple; // simple[i] for i in 1..n
    std::vector<int> star;           // star[i] for i in 1..n
    int h = 0;                       // Coxeter number
    std::vector<int> w0_word;

    int l0() const { return npos; }
    int index_of(const Root& r) const;
    int simple_index(int i) const; // index of alpha_i
    std::map<Root, int> lookup;
};

// Cached per diagram name; the reference stays valid for the program lifetime.
const WeylData& weyl_data(const DynkinDiagram& d);

WeylElement identity_element(const WeylData& w);
WeylElement compose(const WeylElement& a, const WeylElement& b); // a after b
WeylElement inverse(const WeylElement& a);
WeylElement word_element(const DynkinDiagram& d, const std::vector<int>& word);
int length(const WeylData& w, const WeylElement& e);
bool is_reduced(const DynkinDiagram& d, const std::vector<int>& word);
void check_word(const DynkinDiagram& d, const std::vector<int>& word);

using HeightFunction = std::map<int, int>;

// Parity reference: epsilon_1 = 0, alternating along edges.
int epsilon(const DynkinDiagram& d, int i);
void validate_height(const DynkinDiagram& d, const HeightFunction& xi);
// Arrow i -> j iff xi_j = xi_i + 1, so sources are local minima.
std::vector<int> sources(const DynkinDiagram& d, const HeightFunction& xi);
HeightFunction reflect_source(const DynkinDiagram& d, const HeightFunction& xi, int i);
bool is_source_sequence(const DynkinDiagram& d, const HeightFunction& xi, const std::vector<int>& word);
std::vector<int> adapted_word(const DynkinDiagram& d, const HeightFunction& xi);
// Every height function up to a global shift, one per orientation, normalised so min xi = 0 or 1.
std::vector<HeightFunction> all_orientations(const DynkinDiagram& d);
// A reduced word for e adapted to some orientation, if any.
std::optional<std::pair<HeightFunction, std::vector<int>>> adapted_expression(const DynkinDiagram& d,
                                                                                const WeylElement& e);

enum class MoveKind { commutation, braid };
MoveKind parse_move_kind(const std::string& s);
std::string to_string(MoveKind k);

// A finite piece of an index sequence: letters[k] sits at position first + k.
struct SeqWindow {
    int first = 0;
    std::vector<int> letters;
    int at(int s) const;
    bool contains(int s) const { return s >= first && s < first + static_cast<int>(letters.size()); }
    bool operator==(const SeqWindow&) const = default;
};

SeqWindow apply_move(const DynkinDiagram& d, const SeqWindow& w, MoveKind kind, int s);

nlohmann::json to_json(const WeylData& w);

} // namespace lcl
