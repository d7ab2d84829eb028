#pragma once

#include <json.hpp>

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lcl {

struct Vertex {
    int id = 0;
    bool frozen = false;
    std::string name; // display label; empty means the id
};

struct Arrow {
    std::string label;
    int src = 0;
    int dst = 0;
    bool frozen = false;
};

class IceQuiver {
public:
    IceQuiver() = default;

    void add_vertex(int id, bool frozen = false, std::string name = {});
    void add_arrow(std::string label, int src, int dst, bool frozen = false);
    // Label chosen as "src->dst", primed until unique.
    const Arrow& add_arrow_auto(int src, int dst, bool frozen = false);

    const std::vector<Vertex>& vertices() const { return vertices_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }
    std::vector<Arrow>& arrows_mut() { return arrows_; }

    bool has_vertex(int id) const;
    const Vertex& vertex(int id) const;
    bool is_frozen(int id) const { return vertex(id).frozen; }
    void set_frozen(int id, bool frozen);

    const Arrow* find_arrow(const std::string& label) const;
    bool has_label(const std::string& label) const { return find_arrow(label) != nullptr; }
    std::string fresh_label(std::string base) const;

    std::vector<int> vertex_ids() const;
    std::vector<int> unfrozen_ids() const;
    std::vector<int> frozen_ids() const;

    int count_arrows(int src, int dst) const;
    int count_unfrozen_arrows(int src, int dst) const;

    bool has_loop_at(int v) const;
    bool has_two_cycle_at(int v) const;
    // Number of fully unfrozen 2-cycles anywhere (pairs of opposite unfrozen arrows).
    bool has_unfrozen_two_cycle() const;

    void remove_arrow(const std::string& label);
    void remove_vertex(int id);

    // Throws DanglingArrow, FrozenArrowUnfrozenEndpoint or DuplicateLabel.
    void validate() const;

    std::string display(int id) const;

private:
    std::vector<Vertex> vertices_; // sorted by id
    std::vector<Arrow> arrows_;
    std::size_t vertex_index(int id) const;
};

// Extended Fomin-Zelevinsky mutation (four steps). New composite arrows are
// labelled "[b*a]" written as in a path "beta alpha"; reversed arrows toggle a
// trailing '*'.
IceQuiver mutate_fz(const IceQuiver& iq, int v);

// Throws VertexFrozen / LoopOrTwoCycleAtVertex / UnknownVertex.
void check_mutable(const IceQuiver& iq, int v);

// Offset used for framing: v' = v + frame_offset(q).
int frame_offset(const IceQuiver& q);
IceQuiver frame(const IceQuiver& q, bool co);
// Drop frozen vertices and every arrow touching them.
IceQuiver unfrozen_part(const IceQuiver& q);

enum class ProductKind { tensor, triangle };

struct ProductQuiver {
    IceQuiver quiver;
    std::vector<int> left_ids;  // vertex ids of the first factor, in order
    std::vector<int> right_ids; // vertex ids of the second factor, in order
    // Flattened id, row-major in the first factor.
    int id_of(int left, int right) const;
    std::pair<int, int> pair_of(int id) const;
};

ProductQuiver product(const IceQuiver& q, const IceQuiver& q2, ProductKind kind);

using VertexMap = std::map<int, int>;

struct IsoOptions {
    bool ignore_frozen_frozen = false; // skip arrows whose endpoints are both frozen
    bool compare_arrow_frozen = true;  // count frozen and unfrozen arrows separately
    VertexMap fixed;                   // forced assignments
};

std::optional<VertexMap> find_iso(const IceQuiver& a, const IceQuiver& b, const IsoOptions& opt = {});
bool is_iso_map(const IceQuiver& a, const IceQuiver& b, const VertexMap& m, const IsoOptions& opt = {});

// Renames vertices along m (every vertex must be mapped).
IceQuiver relabel_vertices(const IceQuiver& q, const VertexMap& m);

nlohmann::json to_json(const IceQuiver& q);
IceQuiver quiver_from_json(const nlohmann::json& j);
std::string to_dot(const IceQuiver& q, const std::string& name = "Q");

} // namespace lcl
