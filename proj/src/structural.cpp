#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>

#include "tww/constructions.hpp"

namespace tww {

namespace {

constexpr VertexId kNone = std::numeric_limits<VertexId>::max();

struct Collapse {
    ContractionSequence steps;
    VertexId residue = kNone;  // the single merged child left next to the root
};

/// Collapses the tree hanging from `root` (never entering `blocked` vertices)
/// down to the root and at most one child. Children are merged into one
/// accumulated sibling as soon as their own subtree is collapsed, so every
/// vertex sees at most two red edges: the accumulated child and the child
/// currently being collapsed, or the accumulated child and its parent.
Collapse collapse_rooted(const Trigraph& g, VertexId root, const std::vector<bool>& blocked) {
    struct Frame {
        VertexId v;
        VertexId parent;
        std::vector<VertexId> children;
        std::size_t next = 0;
    };
    Collapse out;
    std::vector<VertexId> acc(g.id_bound(), kNone);
    std::vector<bool> seen(g.id_bound(), false);

    const auto make_frame = [&](VertexId v, VertexId parent) {
        Frame f{v, parent, {}, 0};
        for (const auto& [x, c] : g.neighbors(v)) {
            if (x != parent && !blocked[x]) {
                if (seen[x]) throw TrigraphError("hanging subgraph at " + std::to_string(root) + " is not a tree");
                f.children.push_back(x);
            }
        }
        seen[v] = true;
        return f;
    };

    std::vector<Frame> stack;
    stack.push_back(make_frame(root, kNone));
    while (!stack.empty()) {
        Frame& top = stack.back();
        if (top.next < top.children.size()) {
            const VertexId c = top.children[top.next++];
            const VertexId parent = top.v;
            stack.push_back(make_frame(c, parent));
            continue;
        }
        const VertexId v = top.v;
        const VertexId p = top.parent;
        stack.pop_back();
        if (v == root) break;
        if (acc[v] != kNone) out.steps.push(v, acc[v]);
        if (acc[p] != kNone) {
            out.steps.push(acc[p], v);
        } else {
            acc[p] = v;
        }
    }
    out.residue = acc[root];
    return out;
}

std::size_t count_component_edges(const Trigraph& g, const std::vector<VertexId>& comp) {
    std::size_t twice = 0;
    for (const auto v : comp) twice += g.degree(v);
    return twice / 2;
}

/// Vertices on the unique cycle of a connected unicyclic graph, in cycle order.
std::vector<VertexId> cycle_order(const Trigraph& g, const std::vector<VertexId>& comp) {
    std::vector<std::size_t> deg(g.id_bound(), 0);
    std::vector<bool> removed(g.id_bound(), false);
    std::vector<VertexId> queue;
    for (const auto v : comp) {
        deg[v] = g.degree(v);
        if (deg[v] <= 1) queue.push_back(v);
    }
    while (!queue.empty()) {
        const VertexId v = queue.back();
        queue.pop_back();
        if (removed[v]) continue;
        removed[v] = true;
        for (const auto& [x, c] : g.neighbors(v)) {
            if (!removed[x] && --deg[x] == 1) queue.push_back(x);
        }
    }
    std::vector<VertexId> core;
    for (const auto v : comp) {
        if (!removed[v]) core.push_back(v);
    }
    if (core.empty()) return core;
    std::vector<VertexId> order{core.front()};
    VertexId prev = kNone;
    VertexId cur = core.front();
    while (true) {
        VertexId next = kNone;
        for (const auto& [x, c] : g.neighbors(cur)) {
            if (!removed[x] && x != prev) {
                next = x;
                break;
            }
        }
        if (next == order.front() || next == kNone) break;
        order.push_back(next);
        prev = cur;
        cur = next;
    }
    return order;
}

std::vector<VertexId> sorted_neighbors(const Trigraph& g, VertexId v, bool closed) {
    std::vector<VertexId> key;
    key.reserve(g.degree(v) + 1);
    for (const auto& [x, c] : g.neighbors(v)) key.push_back(x);
    if (closed) key.insert(std::upper_bound(key.begin(), key.end(), v), v);
    return key;
}

}  // namespace

bool is_forest(const Trigraph& g) {
    const auto comps = connected_components(g);
    return g.num_edges() + comps.size() == g.num_vertices();
}

bool is_tree(const Trigraph& g) {
    return g.num_vertices() >= 1 && g.num_edges() + 1 == g.num_vertices() && is_forest(g);
}

std::optional<BoundedSequence> cograph_sequence(const Trigraph& g) {
    if (!g.is_plain()) throw TrigraphError("cograph test expects a graph without red edges");
    Trigraph work = g;
    ContractionSequence seq;
    bool changed = true;
    while (changed && work.num_vertices() > 1) {
        changed = false;
        for (const bool closed : {false, true}) {
            std::map<std::vector<VertexId>, std::vector<VertexId>> classes;
            for (const auto v : work.vertices()) classes[sorted_neighbors(work, v, closed)].push_back(v);
            // Merging one twin class keeps every other twin relation intact,
            // so all classes found in this pass can be merged together.
            for (const auto& [key, members] : classes) {
                for (std::size_t i = 1; i < members.size(); ++i) {
                    work.contract(members[0], members[i]);
                    seq.push(members[0], members[i]);
                    changed = true;
                }
            }
        }
    }
    if (work.num_vertices() > 1) return std::nullopt;
    return certify(g, std::move(seq), 0.0, false);
}

bool is_cograph(const Trigraph& g) { return cograph_sequence(g).has_value(); }

bool is_caterpillar(const Trigraph& t) {
    if (!is_tree(t)) throw TrigraphError("caterpillar test expects a tree");
    if (t.num_vertices() <= 2) return true;
    for (const auto v : t.vertices()) {
        if (t.degree(v) < 2) continue;
        std::size_t spine_neighbors = 0;
        for (const auto& [x, c] : t.neighbors(v)) {
            if (t.degree(x) >= 2) ++spine_neighbors;
        }
        if (spine_neighbors > 2) return false;
    }
    return true;
}

bool contains_subdivided_claw(const Trigraph& forest) {
    for (const auto v : forest.vertices()) {
        std::size_t long_arms = 0;
        for (const auto& [x, c] : forest.neighbors(v)) {
            if (forest.degree(x) >= 2) ++long_arms;
        }
        if (long_arms >= 3) return true;
    }
    return false;
}

bool contains_induced_subdivided_claw(const Trigraph& g) {
    // center c, arms a[i], tips b[i] hanging off a[i]; no other edges among them.
    std::vector<VertexId> chosen;
    for (const auto c : g.vertices()) {
        std::vector<VertexId> nc;
        for (const auto& [x, col] : g.neighbors(c)) nc.push_back(x);
        if (nc.size() < 3) continue;
        for (std::size_t i = 0; i < nc.size(); ++i) {
            for (std::size_t j = i + 1; j < nc.size(); ++j) {
                if (g.adjacent(nc[i], nc[j])) continue;
                for (std::size_t k = j + 1; k < nc.size(); ++k) {
                    if (g.adjacent(nc[i], nc[k]) || g.adjacent(nc[j], nc[k])) continue;
                    const VertexId arms[3] = {nc[i], nc[j], nc[k]};
                    // tips: tip t hangs off arm t and avoids c and every other chosen vertex
                    chosen = {c, arms[0], arms[1], arms[2]};
                    const auto tip_ok = [&](VertexId b, std::size_t arm) {
                        if (b == c || g.adjacent(b, c)) return false;
                        for (std::size_t o = 0; o < 3; ++o) {
                            if (o != arm && (b == arms[o] || g.adjacent(b, arms[o]))) return false;
                        }
                        for (std::size_t o = 4; o < chosen.size(); ++o) {
                            if (chosen[o] == b || g.adjacent(chosen[o], b)) return false;
                        }
                        return true;
                    };
                    const auto search = [&](auto&& self, std::size_t arm) -> bool {
                        if (arm == 3) return true;
                        for (const auto& [b, col] : g.neighbors(arms[arm])) {
                            if (!tip_ok(b, arm)) continue;
                            chosen.push_back(b);
                            if (self(self, arm + 1)) return true;
                            chosen.pop_back();
                        }
                        return false;
                    };
                    if (search(search, 0)) return true;
                }
            }
        }
    }
    return false;
}

BoundedSequence caterpillar_sequence(const Trigraph& t) {
    if (!is_caterpillar(t)) throw TrigraphError("tree is not a caterpillar");
    if (t.num_vertices() <= 2) return certify(t, lowest_label_completion(t), 1.0, false);

    std::vector<VertexId> spine;
    for (const auto v : t.vertices()) {
        if (t.degree(v) >= 2) spine.push_back(v);
    }
    const auto spine_degree = [&](VertexId v) {
        std::size_t d = 0;
        for (const auto& [x, c] : t.neighbors(v)) d += t.degree(x) >= 2;
        return d;
    };
    VertexId start = spine.front();
    for (const auto v : spine) {
        if (spine_degree(v) <= 1) {
            start = v;
            break;
        }
    }
    std::vector<VertexId> order;
    VertexId prev = kNone;
    VertexId cur = start;
    while (cur != kNone) {
        VertexId next = kNone;
        for (const auto& [x, c] : t.neighbors(cur)) {
            if (t.degree(x) == 1) {
                order.push_back(x);
            } else if (x != prev) {
                next = x;
            }
        }
        order.push_back(cur);
        prev = cur;
        cur = next;
    }
    ContractionSequence seq;
    for (std::size_t i = 1; i < order.size(); ++i) seq.push(order[i], order[i - 1]);
    return certify(t, std::move(seq), 1.0, false);
}

BoundedSequence caterpillar_forest_sequence(const Trigraph& g) {
    ContractionSequence seq;
    for (const auto& comp : connected_components(g)) {
        seq.append(caterpillar_sequence(induced_subgraph(g, comp)).sequence);
    }
    return certify(g, complete_sequence(g, std::move(seq)), 1.0, false);
}

BoundedSequence tree_sequence(const Trigraph& t, VertexId root) {
    if (!is_tree(t)) throw TrigraphError("tree sequence expects a tree");
    if (!t.has_vertex(root)) throw TrigraphError("root " + std::to_string(root) + " is not a vertex");
    auto collapse = collapse_rooted(t, root, std::vector<bool>(t.id_bound(), false));
    if (collapse.residue != kNone) collapse.steps.push(root, collapse.residue);
    return certify(t, std::move(collapse.steps), 2.0, false);
}

BoundedSequence unicyclic_sequence(const Trigraph& g) {
    if (!g.is_plain()) throw TrigraphError("unicyclic sequence expects a graph without red edges");
    ContractionSequence seq;
    for (const auto& comp : connected_components(g)) {
        const std::size_t m = count_component_edges(g, comp);
        if (m > comp.size()) {
            throw TrigraphError("component containing vertex " + std::to_string(comp.front()) +
                                " has more than one cycle");
        }
        if (m + 1 == comp.size()) {
            auto collapse = collapse_rooted(g, comp.front(), std::vector<bool>(g.id_bound(), false));
            if (collapse.residue != kNone) collapse.steps.push(comp.front(), collapse.residue);
            seq.append(collapse.steps);
            continue;
        }
        const auto cycle = cycle_order(g, comp);
        std::vector<bool> on_cycle(g.id_bound(), false);
        for (const auto v : cycle) on_cycle[v] = true;
        std::vector<VertexId> residue(cycle.size(), kNone);
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            auto collapse = collapse_rooted(g, cycle[i], on_cycle);
            seq.append(collapse.steps);
            residue[i] = collapse.residue;
        }
        // Each leftover residue is absorbed by the previous cycle vertex, which
        // leaves a cycle that is then swallowed from one end.
        if (residue[0] != kNone) seq.push(cycle[0], residue[0]);
        for (std::size_t i = 1; i < cycle.size(); ++i) {
            if (residue[i] != kNone) seq.push(cycle[i - 1], residue[i]);
        }
        for (std::size_t i = 1; i < cycle.size(); ++i) seq.push(cycle[0], cycle[i]);
    }
    return certify(g, complete_sequence(g, std::move(seq)), 2.0, false);
}

BoundedSequence greedy_sequence(const Trigraph& g) {
    Trigraph work = g;
    ContractionSequence seq;
    while (work.num_vertices() > 1) {
        const auto vs = work.vertices();
        std::size_t best_cost = std::numeric_limits<std::size_t>::max();
        VertexId best_u = vs[0];
        VertexId best_v = vs[1];
        for (std::size_t i = 0; i < vs.size(); ++i) {
            const auto& nu = work.neighbors(vs[i]);
            for (std::size_t j = i + 1; j < vs.size(); ++j) {
                const auto& nv = work.neighbors(vs[j]);
                std::map<VertexId, std::pair<int, int>> side;  // 0 none, 1 black, 2 red
                for (const auto& [x, c] : nu) {
                    if (x != vs[j]) side[x].first = c == EdgeColor::black ? 1 : 2;
                }
                for (const auto& [x, c] : nv) {
                    if (x != vs[i]) side[x].second = c == EdgeColor::black ? 1 : 2;
                }
                std::size_t merged = 0;
                std::size_t cost = 0;
                for (const auto& [x, cs] : side) {
                    const bool red = !(cs.first == 1 && cs.second == 1);
                    merged += red;
                    const std::size_t before = (cs.first == 2) + (cs.second == 2);
                    cost = std::max(cost, work.red_degree(x) - before + red);
                }
                cost = std::max(cost, merged);
                if (cost < best_cost) {
                    best_cost = cost;
                    best_u = vs[i];
                    best_v = vs[j];
                }
            }
        }
        work.contract(best_u, best_v);
        seq.push(best_u, best_v);
    }
    return certify(g, std::move(seq), static_cast<double>(g.num_vertices()), false);
}

BoundedSequence best_upper_bound(const Trigraph& g, std::uint64_t seed) {
    if (g.num_vertices() <= 2) return certify(g, lowest_label_completion(g), 0.0, false);
    if (auto co = cograph_sequence(g)) return *co;

    const auto comps = connected_components(g);
    bool all_trees = true;
    bool all_caterpillars = true;
    bool at_most_one_cycle = true;
    for (const auto& comp : comps) {
        const std::size_t m = count_component_edges(g, comp);
        if (m + 1 != comp.size()) {
            all_trees = false;
            all_caterpillars = false;
        } else if (!is_caterpillar(induced_subgraph(g, comp))) {
            all_caterpillars = false;
        }
        if (m > comp.size()) at_most_one_cycle = false;
    }
    if (all_trees && all_caterpillars) return caterpillar_forest_sequence(g);

    std::vector<BoundedSequence> candidates;
    if (at_most_one_cycle) candidates.push_back(unicyclic_sequence(g));
    candidates.push_back(vertex_bound_sequence(g, seed));
    candidates.push_back(edge_bound_sequence(g, seed));
    if (g.num_vertices() <= 64) candidates.push_back(greedy_sequence(g));
    return *std::min_element(candidates.begin(), candidates.end(),
                             [](const auto& a, const auto& b) { return a.width < b.width; });
}

}  // namespace tww
