#include "tww/exact.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>
#include <tuple>
#include <unordered_set>

#include "tww/constructions.hpp"

namespace tww {

namespace {

// ---- canonical labeling --------------------------------------------------

/// Dense colored adjacency: 0 none, 1 black, 2 red.
class Canonizer {
public:
    Canonizer(std::size_t n, std::vector<std::uint8_t> colors) : n_(n), m_(std::move(colors)) {}

    std::string run(const std::vector<std::size_t>& initial) {
        std::vector<std::vector<std::size_t>> cells;
        std::vector<std::size_t> order(n_);
        for (std::size_t v = 0; v < n_; ++v) order[v] = v;
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return initial[a] < initial[b]; });
        for (std::size_t i = 0; i < n_; ++i) {
            if (i == 0 || initial[order[i]] != initial[order[i - 1]]) cells.emplace_back();
            cells.back().push_back(order[i]);
        }
        best_.clear();
        search(std::move(cells));
        return std::to_string(n_) + ":" + best_;
    }

private:
    std::uint8_t at(std::size_t a, std::size_t b) const { return m_[a * n_ + b]; }

    bool twins(std::size_t a, std::size_t b) const {
        for (std::size_t x = 0; x < n_; ++x) {
            if (x != a && x != b && at(a, x) != at(b, x)) return false;
        }
        return true;
    }

    void refine(std::vector<std::vector<std::size_t>>& cells) const {
        std::vector<std::size_t> cell_of(n_);
        while (true) {
            for (std::size_t c = 0; c < cells.size(); ++c) {
                for (const auto v : cells[c]) cell_of[v] = c;
            }
            std::vector<std::vector<std::size_t>> next;
            for (const auto& cell : cells) {
                if (cell.size() == 1) {
                    next.push_back(cell);
                    continue;
                }
                std::vector<std::pair<std::vector<std::uint32_t>, std::size_t>> sig;
                for (const auto v : cell) {
                    std::vector<std::uint32_t> counts(2 * cells.size(), 0);
                    for (std::size_t x = 0; x < n_; ++x) {
                        if (const auto c = at(v, x); c != 0) ++counts[2 * cell_of[x] + (c - 1)];
                    }
                    sig.emplace_back(std::move(counts), v);
                }
                std::sort(sig.begin(), sig.end());
                for (std::size_t i = 0; i < sig.size(); ++i) {
                    if (i == 0 || sig[i].first != sig[i - 1].first) next.emplace_back();
                    next.back().push_back(sig[i].second);
                }
            }
            const bool stable = next.size() == cells.size();
            cells = std::move(next);
            if (stable) return;
        }
    }

    void search(std::vector<std::vector<std::size_t>> cells) {
        refine(cells);
        const auto open = std::find_if(cells.begin(), cells.end(), [](const auto& c) { return c.size() > 1; });
        if (open == cells.end()) {
            std::string code;
            code.reserve(n_ * (n_ - 1) / 2);
            for (std::size_t i = 0; i < n_; ++i) {
                for (std::size_t j = i + 1; j < n_; ++j) {
                    code.push_back(static_cast<char>('0' + at(cells[i][0], cells[j][0])));
                }
            }
            if (best_.empty() || code < best_) best_ = std::move(code);
            return;
        }
        const auto t = static_cast<std::size_t>(open - cells.begin());
        const auto cell = cells[t];
        std::vector<std::size_t> tried;
        for (const auto v : cell) {
            // Swapping twins is an automorphism, so their subtrees agree.
            if (std::any_of(tried.begin(), tried.end(), [&](std::size_t w) { return twins(v, w); })) continue;
            tried.push_back(v);
            auto split = cells;
            split[t] = {v};
            std::vector<std::size_t> rest;
            for (const auto w : cell) {
                if (w != v) rest.push_back(w);
            }
            split.insert(split.begin() + static_cast<std::ptrdiff_t>(t) + 1, std::move(rest));
            search(std::move(split));
        }
    }

    std::size_t n_;
    std::vector<std::uint8_t> m_;
    std::string best_;
};

// ---- bitmask search ------------------------------------------------------

constexpr std::size_t kCanonicalLimit = 12;

std::uint64_t bit(std::size_t i) { return std::uint64_t{1} << i; }

struct Board {
    std::uint64_t alive = 0;
    std::vector<std::uint64_t> black;
    std::vector<std::uint64_t> red;
};

template <class F>
void for_bits(std::uint64_t mask, F&& f) {
    while (mask != 0) {
        f(static_cast<std::size_t>(std::countr_zero(mask)));
        mask &= mask - 1;
    }
}

/// Contracts v into u in place and returns the red degree of the merged vertex.
std::size_t contract_board(Board& b, std::size_t u, std::size_t v) {
    const std::uint64_t others = b.alive & ~(bit(u) | bit(v));
    const std::uint64_t nb = b.black[u] & b.black[v] & others;
    const std::uint64_t any = (b.black[u] | b.red[u] | b.black[v] | b.red[v]) & others;
    const std::uint64_t nr = any & ~nb;
    for_bits(others, [&](std::size_t x) {
        b.black[x] &= ~(bit(u) | bit(v));
        b.red[x] &= ~(bit(u) | bit(v));
        if (nb & bit(x)) b.black[x] |= bit(u);
        if (nr & bit(x)) b.red[x] |= bit(u);
    });
    b.black[u] = nb;
    b.red[u] = nr;
    b.black[v] = b.red[v] = 0;
    b.alive &= ~bit(v);
    return static_cast<std::size_t>(std::popcount(nr));
}

std::size_t board_max_red(const Board& b) {
    std::size_t out = 0;
    for_bits(b.alive, [&](std::size_t x) { out = std::max<std::size_t>(out, std::popcount(b.red[x])); });
    return out;
}

bool board_twins(const Board& b, std::size_t u, std::size_t v) {
    const std::uint64_t drop = ~(bit(u) | bit(v));
    return (b.black[u] & drop) == (b.black[v] & drop) && (b.red[u] & drop) == (b.red[v] & drop);
}

std::string board_canonical(const Board& b, const std::vector<std::size_t>& initial_color) {
    std::vector<std::size_t> idx;
    for_bits(b.alive, [&](std::size_t x) { idx.push_back(x); });
    const std::size_t k = idx.size();
    std::vector<std::uint8_t> m(k * k, 0);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            if (b.black[idx[i]] & bit(idx[j])) m[i * k + j] = 1;
            if (b.red[idx[i]] & bit(idx[j])) m[i * k + j] = 2;
        }
    }
    return Canonizer(k, std::move(m)).run(initial_color.empty() ? std::vector<std::size_t>(k, 0) : initial_color);
}

class Solver {
public:
    Solver(const Trigraph& g, std::size_t d, std::uint64_t budget) : labels_(g.vertices()), d_(d), budget_(budget) {
        const std::size_t n = labels_.size();
        root_.black.assign(n, 0);
        root_.red.assign(n, 0);
        for (std::size_t i = 0; i < n; ++i) {
            root_.alive |= bit(i);
            for (std::size_t j = 0; j < n; ++j) {
                if (const auto c = g.edge(labels_[i], labels_[j])) {
                    (*c == EdgeColor::black ? root_.black : root_.red)[i] |= bit(j);
                }
            }
        }
    }

    Decision run(ContractionSequence* witness) {
        if (board_max_red(root_) > d_) return Decision::no;
        transitive_ = vertex_transitive(root_);
        const Decision r = dfs(root_, true);
        if (r == Decision::yes && witness != nullptr) *witness = found_;
        return r;
    }

    std::uint64_t nodes() const { return nodes_; }

private:
    static bool vertex_transitive(const Board& b) {
        const auto k = static_cast<std::size_t>(std::popcount(b.alive));
        if (k > kCanonicalLimit || k < 2) return false;
        std::string first;
        for (std::size_t i = 0; i < k; ++i) {
            std::vector<std::size_t> color(k, 1);
            color[i] = 0;
            auto form = board_canonical(b, color);
            if (i == 0) {
                first = std::move(form);
            } else if (form != first) {
                return false;
            }
        }
        return true;
    }

    std::string key(const Board& b) const {
        if (std::popcount(b.alive) <= static_cast<int>(kCanonicalLimit)) return "c" + board_canonical(b, {});
        std::string out = "r";
        const auto put = [&](std::uint64_t w) {
            for (int s = 0; s < 64; s += 8) out.push_back(static_cast<char>((w >> s) & 0xff));
        };
        put(b.alive);
        for_bits(b.alive, [&](std::size_t x) {
            put(b.black[x]);
            put(b.red[x]);
        });
        return out;
    }

    Decision dfs(const Board& b, bool root) {
        if (static_cast<std::size_t>(std::popcount(b.alive)) <= d_ + 1) {
            found_.steps = path_;
            std::vector<std::size_t> rest;
            for_bits(b.alive, [&](std::size_t x) { rest.push_back(x); });
            for (std::size_t i = 1; i < rest.size(); ++i) found_.push(labels_[rest[0]], labels_[rest[i]]);
            return Decision::yes;
        }
        if (++nodes_ > budget_) return Decision::unknown;
        auto k = key(b);
        if (failed_.contains(k)) return Decision::no;

        std::vector<std::size_t> alive;
        for_bits(b.alive, [&](std::size_t x) { alive.push_back(x); });

        std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> moves;  // merged red, u, v
        bool forced = false;
        for (std::size_t i = 0; i < alive.size() && !forced; ++i) {
            for (std::size_t j = i + 1; j < alive.size(); ++j) {
                if (board_twins(b, alive[i], alive[j])) {
                    moves = {{0, alive[i], alive[j]}};
                    forced = true;
                    break;
                }
            }
        }
        if (!forced) {
            const std::size_t limit = root && transitive_ ? 1 : alive.size();
            for (std::size_t i = 0; i < limit; ++i) {
                for (std::size_t j = i + 1; j < alive.size(); ++j) {
                    Board child = b;
                    const std::size_t merged = contract_board(child, alive[i], alive[j]);
                    if (merged <= d_ && board_max_red(child) <= d_) moves.emplace_back(merged, alive[i], alive[j]);
                }
            }
            std::sort(moves.begin(), moves.end());
        }

        Decision result = Decision::no;
        for (const auto& [merged, u, v] : moves) {
            Board child = b;
            contract_board(child, u, v);
            if (board_max_red(child) > d_) continue;
            path_.push_back({labels_[u], labels_[v]});
            const Decision r = dfs(child, false);
            path_.pop_back();
            if (r == Decision::yes) return r;
            if (r == Decision::unknown) result = Decision::unknown;
            if (nodes_ > budget_) return Decision::unknown;
        }
        if (result == Decision::no) failed_.insert(std::move(k));
        return result;
    }

    std::vector<VertexId> labels_;
    std::size_t d_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    bool transitive_ = false;
    Board root_;
    std::vector<ContractionStep> path_;
    ContractionSequence found_;
    std::unordered_set<std::string> failed_;
};

Decision decide_counted(const Trigraph& g, std::size_t d, std::uint64_t budget, ContractionSequence* witness,
                        std::uint64_t& nodes) {
    if (g.num_vertices() > kExactMaxVertices) {
        throw std::invalid_argument("exact search supports at most " + std::to_string(kExactMaxVertices) +
                                    " vertices");
    }
    Solver solver(g, d, budget);
    const Decision r = solver.run(witness);
    nodes = solver.nodes();
    return r;
}

}  // namespace

Decision decide_at_most(const Trigraph& g, std::size_t d, std::uint64_t node_budget, ContractionSequence* witness) {
    std::uint64_t nodes = 0;
    return decide_counted(g, d, node_budget, witness, nodes);
}

std::size_t pair_lower_bound(const Trigraph& g) {
    std::size_t best = g.max_red_degree();
    const auto vs = g.vertices();
    if (vs.size() < 2) return best;
    std::size_t min_merged = vs.size();
    for (std::size_t i = 0; i < vs.size(); ++i) {
        const auto& nu = g.neighbors(vs[i]);
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
            const auto& nv = g.neighbors(vs[j]);
            std::size_t red = 0;
            for (const auto& [x, c] : nu) {
                if (x == vs[j]) continue;
                const auto it = nv.find(x);
                red += it == nv.end() || c == EdgeColor::red || it->second == EdgeColor::red;
            }
            for (const auto& [x, c] : nv) {
                if (x != vs[i] && !nu.contains(x)) ++red;
            }
            min_merged = std::min(min_merged, red);
        }
    }
    return std::max(best, min_merged);
}

ExactResult exact_twinwidth(const Trigraph& g, const ExactOptions& options) {
    if (g.num_vertices() > kExactMaxVertices) {
        throw std::invalid_argument("exact search supports at most " + std::to_string(kExactMaxVertices) +
                                    " vertices");
    }
    ExactResult out;
    const BoundedSequence heuristic = g.is_plain() ? best_upper_bound(g, options.seed) : greedy_sequence(g);
    out.upper = heuristic.width;
    out.certificate = heuristic.sequence;
    out.lower = std::min(pair_lower_bound(g), out.upper);

    for (std::size_t d = out.lower; d < out.upper; ++d) {
        ContractionSequence witness;
        std::uint64_t used = 0;
        const std::uint64_t left = options.node_budget > out.nodes ? options.node_budget - out.nodes : 0;
        const Decision r = decide_counted(g, d, left, &witness, used);
        out.nodes += used;
        if (r == Decision::yes) {
            out.upper = d;
            out.certificate = std::move(witness);
            break;
        }
        if (r == Decision::unknown) {
            out.lower = d;
            out.status = ExactResult::Status::unknown;
            return out;
        }
        out.lower = d + 1;
    }
    out.lower = out.upper;
    out.status = ExactResult::Status::exact;
    return out;
}

std::string canonical_form(const Trigraph& g) {
    const auto vs = g.vertices();
    const std::size_t n = vs.size();
    std::vector<std::uint8_t> m(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (const auto& [x, c] : g.neighbors(vs[i])) {
            const auto j = static_cast<std::size_t>(std::lower_bound(vs.begin(), vs.end(), x) - vs.begin());
            m[i * n + j] = c == EdgeColor::black ? 1 : 2;
        }
    }
    return Canonizer(n, std::move(m)).run(std::vector<std::size_t>(n, 0));
}

std::vector<Trigraph> graph_catalog(std::size_t n) {
    std::vector<Trigraph> level{Trigraph(0)};
    for (std::size_t k = 1; k <= n; ++k) {
        std::vector<Trigraph> next;
        std::unordered_set<std::string> seen;
        const auto v = static_cast<VertexId>(k - 1);
        for (const auto& g : level) {
            for (std::uint64_t mask = 0; mask < bit(k - 1); ++mask) {
                Trigraph h = g;
                h.add_vertex(v);
                for_bits(mask, [&](std::size_t x) { h.add_edge(static_cast<VertexId>(x), v); });
                if (seen.insert(canonical_form(h)).second) next.push_back(std::move(h));
            }
        }
        level = std::move(next);
    }
    return level;
}

}  // namespace tww
