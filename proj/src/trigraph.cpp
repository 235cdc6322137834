#include "tww/trigraph.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace tww {

Trigraph::Trigraph(std::size_t n)
    : adj_(n), red_deg_(n, 0), alive_(n, true), red_histogram_(1, n), num_vertices_(n) {}

void Trigraph::require(VertexId v) const {
    if (!has_vertex(v)) {
        throw TrigraphError("unknown vertex " + std::to_string(v));
    }
}

void Trigraph::add_vertex(VertexId v) {
    if (has_vertex(v)) {
        throw TrigraphError("duplicate vertex " + std::to_string(v));
    }
    if (v >= alive_.size()) {
        adj_.resize(v + 1);
        red_deg_.resize(v + 1, 0);
        alive_.resize(v + 1, false);
    }
    alive_[v] = true;
    red_deg_[v] = 0;
    ++num_vertices_;
    if (red_histogram_.empty()) red_histogram_.assign(1, 0);
    ++red_histogram_[0];
}

void Trigraph::set_red_degree(VertexId v, std::size_t value) {
    const std::size_t old = red_deg_[v];
    --red_histogram_[old];
    if (value >= red_histogram_.size()) red_histogram_.resize(value + 1, 0);
    ++red_histogram_[value];
    red_deg_[v] = static_cast<std::uint32_t>(value);
    if (value > max_red_) {
        max_red_ = value;
    } else {
        while (max_red_ > 0 && red_histogram_[max_red_] == 0) --max_red_;
    }
}

void Trigraph::bump_red(VertexId v, int delta) {
    set_red_degree(v, static_cast<std::size_t>(static_cast<long>(red_deg_[v]) + delta));
}

void Trigraph::set_color(VertexId u, VertexId v, std::optional<EdgeColor> color) {
    const auto old = edge(u, v);
    if (old == color) return;
    if (old) {
        if (*old == EdgeColor::red) {
            --num_red_;
            bump_red(u, -1);
            bump_red(v, -1);
        } else {
            --num_black_;
        }
    }
    if (color) {
        adj_[u][v] = *color;
        adj_[v][u] = *color;
        if (*color == EdgeColor::red) {
            ++num_red_;
            bump_red(u, 1);
            bump_red(v, 1);
        } else {
            ++num_black_;
        }
    } else {
        adj_[u].erase(v);
        adj_[v].erase(u);
    }
}

void Trigraph::add_edge(VertexId u, VertexId v, EdgeColor color) {
    require(u);
    require(v);
    if (u == v) throw TrigraphError("self-loop at vertex " + std::to_string(u));
    set_color(u, v, color);
}

void Trigraph::remove_edge(VertexId u, VertexId v) {
    require(u);
    require(v);
    set_color(u, v, std::nullopt);
}

void Trigraph::remove_vertex(VertexId v) {
    require(v);
    while (!adj_[v].empty()) {
        set_color(v, adj_[v].begin()->first, std::nullopt);
    }
    --red_histogram_[0];
    alive_[v] = false;
    --num_vertices_;
}

std::optional<EdgeColor> Trigraph::edge(VertexId u, VertexId v) const {
    require(u);
    require(v);
    const auto& nu = adj_[u];
    const auto it = nu.find(v);
    if (it == nu.end()) return std::nullopt;
    return it->second;
}

std::vector<VertexId> Trigraph::vertices() const {
    std::vector<VertexId> out;
    out.reserve(num_vertices_);
    for (VertexId v = 0; v < alive_.size(); ++v) {
        if (alive_[v]) out.push_back(v);
    }
    return out;
}

const Trigraph::NeighborMap& Trigraph::neighbors(VertexId v) const {
    require(v);
    return adj_[v];
}

std::size_t Trigraph::red_degree(VertexId v) const {
    require(v);
    return red_deg_[v];
}

std::vector<Edge> Trigraph::edges() const {
    std::vector<Edge> out;
    out.reserve(num_edges());
    for (VertexId u = 0; u < alive_.size(); ++u) {
        if (!alive_[u]) continue;
        for (auto it = adj_[u].upper_bound(u); it != adj_[u].end(); ++it) {
            out.push_back({u, it->first, it->second});
        }
    }
    return out;
}

std::vector<Edge> Trigraph::edges(EdgeColor color) const {
    auto all = edges();
    std::erase_if(all, [color](const Edge& e) { return e.color != color; });
    return all;
}

void Trigraph::contract(VertexId keep, VertexId drop) {
    require(keep);
    require(drop);
    if (keep == drop) {
        throw TrigraphError("cannot contract vertex " + std::to_string(keep) + " with itself");
    }
    // Snapshot both neighborhoods before any edge is rewritten.
    std::vector<std::pair<VertexId, std::pair<std::optional<EdgeColor>, std::optional<EdgeColor>>>> merged;
    merged.reserve(adj_[keep].size() + adj_[drop].size());
    auto ik = adj_[keep].begin();
    auto id = adj_[drop].begin();
    const auto ek = adj_[keep].end();
    const auto ed = adj_[drop].end();
    while (ik != ek || id != ed) {
        if (id == ed || (ik != ek && ik->first < id->first)) {
            merged.push_back({ik->first, {ik->second, std::nullopt}});
            ++ik;
        } else if (ik == ek || id->first < ik->first) {
            merged.push_back({id->first, {std::nullopt, id->second}});
            ++id;
        } else {
            merged.push_back({ik->first, {ik->second, id->second}});
            ++ik;
            ++id;
        }
    }
    remove_vertex(drop);
    for (const auto& [x, colors] : merged) {
        if (x == keep || x == drop) continue;
        const auto [ck, cd] = colors;
        std::optional<EdgeColor> next;
        if (ck == EdgeColor::black && cd == EdgeColor::black) {
            next = EdgeColor::black;
        } else if (!ck && !cd) {
            next = std::nullopt;
        } else {
            next = EdgeColor::red;
        }
        set_color(keep, x, next);
    }
}

bool operator==(const Trigraph& a, const Trigraph& b) {
    return a.vertices() == b.vertices() && a.edges() == b.edges();
}

Trigraph contract(Trigraph g, VertexId u, VertexId v) {
    g.contract(u, v);
    return g;
}

std::size_t boundary_size(const Trigraph& g, std::span<const VertexId> part) {
    std::vector<bool> inside(g.id_bound(), false);
    for (const VertexId v : part) {
        if (!g.has_vertex(v)) throw TrigraphError("unknown vertex " + std::to_string(v));
        inside[v] = true;
    }
    std::size_t count = 0;
    for (VertexId v = 0; v < inside.size(); ++v) {
        if (!inside[v]) continue;
        for (const auto& [x, color] : g.neighbors(v)) {
            if (!inside[x]) ++count;
        }
    }
    return count;
}

std::size_t symmetric_difference_size(const Trigraph& g, VertexId u, VertexId v) {
    if (!g.is_plain()) throw TrigraphError("symmetric difference requires a graph without red edges");
    if (u == v) throw TrigraphError("symmetric difference needs two distinct vertices");
    const auto& nu = g.neighbors(u);
    const auto& nv = g.neighbors(v);
    std::size_t count = 0;
    for (const auto& [x, c] : nu) {
        if (x != v && !nv.contains(x)) ++count;
    }
    for (const auto& [x, c] : nv) {
        if (x != u && !nu.contains(x)) ++count;
    }
    return count;
}

Trigraph induced_subgraph(const Trigraph& g, std::span<const VertexId> keep) {
    Trigraph h;
    std::vector<bool> inside(g.id_bound(), false);
    for (const VertexId v : keep) {
        if (!g.has_vertex(v)) throw TrigraphError("unknown vertex " + std::to_string(v));
        h.add_vertex(v);
        inside[v] = true;
    }
    for (const VertexId v : keep) {
        for (const auto& [x, color] : g.neighbors(v)) {
            if (inside[x] && v < x) h.add_edge(v, x, color);
        }
    }
    return h;
}

Trigraph relabel(const Trigraph& g, const std::map<VertexId, VertexId>& mapping) {
    Trigraph h;
    for (const VertexId v : g.vertices()) {
        const auto it = mapping.find(v);
        if (it == mapping.end()) throw TrigraphError("relabeling misses vertex " + std::to_string(v));
        h.add_vertex(it->second);
    }
    for (const auto& e : g.edges()) {
        h.add_edge(mapping.at(e.u), mapping.at(e.v), e.color);
    }
    return h;
}

std::vector<std::vector<VertexId>> connected_components(const Trigraph& g) {
    std::vector<std::vector<VertexId>> out;
    std::vector<bool> seen(g.id_bound(), false);
    std::vector<VertexId> stack;
    for (const VertexId s : g.vertices()) {
        if (seen[s]) continue;
        std::vector<VertexId> comp;
        seen[s] = true;
        stack.push_back(s);
        while (!stack.empty()) {
            const VertexId v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (const auto& [x, c] : g.neighbors(v)) {
                if (!seen[x]) {
                    seen[x] = true;
                    stack.push_back(x);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

}  // namespace tww
