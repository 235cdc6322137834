#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace tww {

using VertexId = std::uint32_t;

enum class EdgeColor : std::uint8_t { black, red };

struct Edge {
    VertexId u;
    VertexId v;
    EdgeColor color;

    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Raised for references to vertices that are not (or no longer) present,
/// self-loops, and other structural misuse of a Trigraph.
class TrigraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A simple graph whose edges are black or red.
///
/// Vertices carry stable integer labels. Storage is indexed by label, so a
/// trigraph built on [0, n) and contracted down keeps the original labels of
/// its surviving vertices; contracting (keep, drop) removes `drop` and lets
/// `keep` stand for the merged vertex.
///
/// Each vertex keeps an ordered neighbor map with the color of the shared
/// edge, and the trigraph tracks a histogram of red degrees so that the
/// maximum red degree is available in O(1) after every contraction.
class Trigraph {
public:
    using NeighborMap = std::map<VertexId, EdgeColor>;

    Trigraph() = default;
    /// Edgeless trigraph on vertices 0..n-1.
    explicit Trigraph(std::size_t n);

    void add_vertex(VertexId v);
    /// Adds uv with the given color, or recolors it if already present.
    void add_edge(VertexId u, VertexId v, EdgeColor color = EdgeColor::black);
    void remove_edge(VertexId u, VertexId v);
    void remove_vertex(VertexId v);

    [[nodiscard]] bool has_vertex(VertexId v) const noexcept {
        return v < alive_.size() && alive_[v];
    }
    [[nodiscard]] std::optional<EdgeColor> edge(VertexId u, VertexId v) const;
    [[nodiscard]] bool adjacent(VertexId u, VertexId v) const { return edge(u, v).has_value(); }

    [[nodiscard]] std::size_t num_vertices() const noexcept { return num_vertices_; }
    [[nodiscard]] std::size_t num_black_edges() const noexcept { return num_black_; }
    [[nodiscard]] std::size_t num_red_edges() const noexcept { return num_red_; }
    [[nodiscard]] std::size_t num_edges() const noexcept { return num_black_ + num_red_; }
    [[nodiscard]] bool is_plain() const noexcept { return num_red_ == 0; }

    /// One past the largest label ever used; labels of live vertices are below it.
    [[nodiscard]] std::size_t id_bound() const noexcept { return alive_.size(); }

    /// Live vertices in increasing label order.
    [[nodiscard]] std::vector<VertexId> vertices() const;
    [[nodiscard]] const NeighborMap& neighbors(VertexId v) const;
    [[nodiscard]] std::size_t degree(VertexId v) const { return neighbors(v).size(); }
    [[nodiscard]] std::size_t red_degree(VertexId v) const;
    [[nodiscard]] std::size_t max_red_degree() const noexcept { return max_red_; }

    /// Edges with u < v, sorted; all edges when no color is given.
    [[nodiscard]] std::vector<Edge> edges() const;
    [[nodiscard]] std::vector<Edge> edges(EdgeColor color) const;

    /// In-place contraction of `keep` and `drop` into `keep`.
    ///
    /// For every other vertex x the new edge keep-x is black when both
    /// keep-x and drop-x were black, absent when both were absent, and red
    /// otherwise. Throws TrigraphError on unknown ids or keep == drop.
    void contract(VertexId keep, VertexId drop);

    friend bool operator==(const Trigraph& a, const Trigraph& b);

private:
    void require(VertexId v) const;
    void set_red_degree(VertexId v, std::size_t value);
    void bump_red(VertexId v, int delta);
    void set_color(VertexId u, VertexId v, std::optional<EdgeColor> color);

    std::vector<NeighborMap> adj_;
    std::vector<std::uint32_t> red_deg_;
    std::vector<bool> alive_;
    std::vector<std::size_t> red_histogram_;  // red_histogram_[r] = #live vertices with red degree r
    std::size_t num_vertices_ = 0;
    std::size_t num_black_ = 0;
    std::size_t num_red_ = 0;
    std::size_t max_red_ = 0;
};

/// Value-returning contraction: G/{u,v} with the merged vertex labeled u.
[[nodiscard]] Trigraph contract(Trigraph g, VertexId u, VertexId v);

[[nodiscard]] inline std::size_t red_degree(const Trigraph& g, VertexId v) { return g.red_degree(v); }
[[nodiscard]] inline std::size_t max_red_degree(const Trigraph& g) { return g.max_red_degree(); }

/// Number of edges (of either color) with exactly one end in `part`.
[[nodiscard]] std::size_t boundary_size(const Trigraph& g, std::span<const VertexId> part);

/// |(N(u) xor N(v)) \ {u,v}| in a plain graph, i.e. the red degree the merged
/// vertex would get from contracting u and v.
[[nodiscard]] std::size_t symmetric_difference_size(const Trigraph& g, VertexId u, VertexId v);

/// Subgraph induced by `keep`, labels preserved.
[[nodiscard]] Trigraph induced_subgraph(const Trigraph& g, std::span<const VertexId> keep);

/// Applies a label bijection given as old-label -> new-label.
[[nodiscard]] Trigraph relabel(const Trigraph& g, const std::map<VertexId, VertexId>& mapping);

/// Vertex sets of the connected components, each sorted, ordered by smallest label.
[[nodiscard]] std::vector<std::vector<VertexId>> connected_components(const Trigraph& g);

}  // namespace tww
