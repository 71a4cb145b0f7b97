#include "torelli/graph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include "json.hpp"
#include <set>

#include "torelli/errors.hpp"
#include "torelli/linalg.hpp"
#include "torelli/symgroup.hpp"

namespace torelli {

int MarkedGraph::valence(int v) const {
    return static_cast<int>(std::count(vertex_of.begin(), vertex_of.end(), v));
}

int MarkedGraph::vertex_degree(int v) const { return labels[v].degree() + n * (valence(v) - 2); }

int MarkedGraph::degree() const {
    int d = 0;
    for (int v = 0; v < num_vertices(); ++v) d += vertex_degree(v);
    return d;
}

void MarkedGraph::validate() const {
    if (!std::is_sorted(vertex_of.begin(), vertex_of.end()))
        throw InvalidGraph("incidence map is not monotone");
    for (int v : vertex_of)
        if (v < 0 || v >= num_vertices()) throw InvalidGraph("half-edge on a missing vertex");
    std::multiset<Endpoint> used;
    for (auto& [a, b] : matching) {
        used.insert(a);
        used.insert(b);
    }
    std::multiset<Endpoint> expected;
    for (int h = 0; h < num_half_edges(); ++h) expected.insert(Endpoint::half(h));
    for (int s : legs) expected.insert(Endpoint::leg(s));
    if (used != expected) throw InvalidGraph("matching does not partition half-edges and legs");
    for (auto& c : labels)
        if (c.n() != n) throw InvalidGraph("label for a different n");
    for (int v = 0; v < num_vertices(); ++v)
        if (vertex_degree(v) <= 0)
            throw InvalidGraph("vertex " + std::to_string(v) + " has nonpositive degree");
}

bool MarkedGraph::is_trivalent() const {
    for (int v = 0; v < num_vertices(); ++v) {
        int r = valence(v);
        if (r == 2 || r > 3) return false;
        if (r == 3 && !labels[v].is_one()) return false;
    }
    return true;
}

GraphBuilder::GraphBuilder(int n, std::vector<int> legs) {
    g_.n = n;
    std::sort(legs.begin(), legs.end());
    g_.legs = legs;
}

std::vector<int> GraphBuilder::add_vertex(const LabelMonomial& label, int valence) {
    int v = g_.num_vertices();
    g_.labels.push_back(label);
    std::vector<int> ids;
    for (int i = 0; i < valence; ++i) {
        ids.push_back(g_.num_half_edges());
        g_.vertex_of.push_back(v);
    }
    return ids;
}

void GraphBuilder::pair(Endpoint a, Endpoint b) { g_.matching.emplace_back(a, b); }

MarkedGraph GraphBuilder::build() const {
    g_.validate();
    return g_;
}

namespace {

int sign_pow(int s, int n) { return (n % 2 == 0) ? 1 : s; }

struct WVertex {
    LabelMonomial label;
    std::vector<int> halfs;
};

// Mutable graph with stable half-edge ids; every move records its sign.
struct WorkGraph {
    int n = 1;
    std::vector<int> legs;
    std::vector<WVertex> verts;
    std::vector<std::pair<Endpoint, Endpoint>> pairs;
    int sign = 1;

    static WorkGraph from(const MarkedGraph& g) {
        WorkGraph w;
        w.n = g.n;
        w.legs = g.legs;
        for (auto& c : g.labels) w.verts.push_back({c, {}});
        for (int h = 0; h < g.num_half_edges(); ++h) w.verts[g.vertex_of[h]].halfs.push_back(h);
        w.pairs = g.matching;
        return w;
    }

    MarkedGraph to_graph() const {
        MarkedGraph g;
        g.n = n;
        g.legs = legs;
        std::map<int, int> renum;
        for (int v = 0; v < static_cast<int>(verts.size()); ++v) {
            g.labels.push_back(verts[v].label);
            for (int h : verts[v].halfs) {
                renum[h] = g.num_half_edges();
                g.vertex_of.push_back(v);
            }
        }
        auto map_ep = [&](Endpoint e) { return e.is_leg ? e : Endpoint::half(renum.at(e.id)); };
        for (auto& [a, b] : pairs) g.matching.emplace_back(map_ep(a), map_ep(b));
        return g;
    }

    int vdeg(int v) const {
        return verts[v].label.degree() + n * (static_cast<int>(verts[v].halfs.size()) - 2);
    }

    std::pair<int, int> locate(int h) const {
        for (int v = 0; v < static_cast<int>(verts.size()); ++v)
            for (int i = 0; i < static_cast<int>(verts[v].halfs.size()); ++i)
                if (verts[v].halfs[i] == h) return {v, i};
        throw std::logic_error("half-edge not found");
    }

    int pair_index(Endpoint e) const {
        for (int i = 0; i < static_cast<int>(pairs.size()); ++i)
            if (pairs[i].first == e || pairs[i].second == e) return i;
        throw std::logic_error("endpoint not matched");
    }

    Endpoint partner(Endpoint e) const {
        auto& p = pairs[pair_index(e)];
        return p.first == e ? p.second : p.first;
    }

    void move_vertex(int from, int to) {
        if (from == to) return;
        int odd_passed = 0;
        if (from < to)
            for (int k = from + 1; k <= to; ++k) odd_passed += vdeg(k) % 2 != 0;
        else
            for (int k = to; k < from; ++k) odd_passed += vdeg(k) % 2 != 0;
        if (vdeg(from) % 2 != 0 && odd_passed % 2) sign = -sign;
        WVertex v = verts[from];
        verts.erase(verts.begin() + from);
        verts.insert(verts.begin() + to, v);
    }

    void move_half(int v, int from, int to) {
        if (from == to) return;
        if (n % 2 && std::abs(from - to) % 2) sign = -sign;
        auto& hs = verts[v].halfs;
        int h = hs[from];
        hs.erase(hs.begin() + from);
        hs.insert(hs.begin() + to, h);
    }

    // Makes the pair containing first start with it.
    int orient(Endpoint first) {
        int i = pair_index(first);
        if (!(pairs[i].first == first)) {
            std::swap(pairs[i].first, pairs[i].second);
            if (n % 2) sign = -sign;
        }
        return i;
    }

    // Brings the internal pair starting at x into the normal position: x last at its vertex,
    // its partner first at the next vertex. Returns (u, w) vertex indices.
    std::pair<int, int> bring_adjacent(int x) {
        int pi = orient(Endpoint::half(x));
        int y = pairs[pi].second.id;
        auto [u, px] = locate(x);
        auto [w, py] = locate(y);
        if (u == w) throw std::logic_error("bring_adjacent on a loop");
        if (w > u)
            move_vertex(w, u + 1);
        else {
            move_vertex(w, u);
            --u;
        }
        w = u + 1;
        px = locate(x).second;
        move_half(u, px, static_cast<int>(verts[u].halfs.size()) - 1);
        py = locate(y).second;
        move_half(w, py, 0);
        return {u, w};
    }

    void contract(int x) {
        int pi = orient(Endpoint::half(x));
        Endpoint other = pairs[pi].second;
        if (other.is_leg) throw std::logic_error("contract on a leg pair");
        int y = other.id;
        auto [u, px] = locate(x);
        auto [w, py] = locate(y);
        if (u == w) {
            int to = py > px ? px + 1 : px;
            move_half(u, py, to);
            auto& hs = verts[u].halfs;
            hs.erase(std::find(hs.begin(), hs.end(), x));
            hs.erase(std::find(hs.begin(), hs.end(), y));
            verts[u].label = verts[u].label * LabelMonomial::euler(n);
        } else {
            auto [uu, ww] = bring_adjacent(x);
            auto& a = verts[uu].halfs;
            auto& b = verts[ww].halfs;
            std::vector<int> merged(a.begin(), a.end() - 1);
            merged.insert(merged.end(), b.begin() + 1, b.end());
            verts[uu].label = verts[uu].label * verts[ww].label;
            verts[uu].halfs = merged;
            verts.erase(verts.begin() + ww);
        }
        pairs.erase(pairs.begin() + pair_index(Endpoint::half(x)));
    }

    std::vector<int> internal_pair_starts() const {
        std::vector<int> out;
        for (auto& [a, b] : pairs)
            if (!a.is_leg && !b.is_leg) out.push_back(a.id);
        return out;
    }

    SignedPartitionVector extract() const {
        SignedPartitionVector out;
        out.n = n;
        out.ground = legs;
        int c = sign;
        std::vector<int> word;
        std::vector<Part> parts;
        for (auto& v : verts) {
            Part part{{}, v.label};
            for (int h : v.halfs) {
                const auto& p = pairs[pair_index(Endpoint::half(h))];
                Endpoint other = p.first == Endpoint::half(h) ? p.second : p.first;
                if (!other.is_leg) throw std::logic_error("internal edge left after reduction");
                if (p.first.is_leg) c = sign_pow(-1, n) * c;
                word.push_back(other.id);
                part.elements.push_back(other.id);
            }
            parts.push_back(part);
        }
        for (auto& [a, b] : pairs)
            if (a.is_leg && b.is_leg) {
                word.push_back(a.id);
                word.push_back(b.id);
                parts.push_back(Part{{a.id, b.id}, LabelMonomial::one(n)});
            }
        c *= sign_pow(word_sign(word), n);
        LabelledPartition lp(n, legs, parts);
        if (!lp.satisfies(PartitionVariant::NonNegative))
            throw ForbiddenResult("reduction produced a part outside P_{>=0}");
        out.add(lp, c);
        return out;
    }
};

}  // namespace

void SignedGraphVector::add_raw(const MarkedGraph& g, const Rational& c) {
    if (c == 0) return;
    auto [it, ins] = terms.emplace(g, c);
    if (!ins) {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

void SignedGraphVector::add(const MarkedGraph& g, const Rational& c) {
    auto cg = canonicalize(g);
    if (cg.zero) return;
    add_raw(cg.graph, c * Rational(cg.sign));
}

CanonicalGraph canonicalize(const MarkedGraph& g) {
    g.validate();
    int V = g.num_vertices();
    std::vector<std::vector<int>> halfs(V);
    for (int h = 0; h < g.num_half_edges(); ++h) halfs[g.vertex_of[h]].push_back(h);
    using Key = std::tuple<int, LabelMonomial, int>;
    std::vector<Key> keys;
    for (int v = 0; v < V; ++v) keys.emplace_back(g.vertex_degree(v), g.labels[v], g.valence(v));
    std::vector<int> order(V);
    for (int v = 0; v < V; ++v) order[v] = v;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return keys[a] < keys[b]; });

    std::optional<MarkedGraph> best;
    int best_sign = 1;
    bool zero = false;

    std::vector<std::vector<int>> hperm(V);
    auto evaluate = [&]() {
        MarkedGraph c;
        c.n = g.n;
        c.legs = g.legs;
        std::map<int, int> renum;
        int s = 1;
        for (int k = 0; k < V; ++k) {
            int v = order[k];
            c.labels.push_back(g.labels[v]);
            for (int h : hperm[v]) {
                renum[h] = c.num_half_edges();
                c.vertex_of.push_back(k);
            }
            std::vector<int> pos;
            for (int h : hperm[v])
                pos.push_back(static_cast<int>(std::find(halfs[v].begin(), halfs[v].end(), h) -
                                               halfs[v].begin()));
            s *= sign_pow(permutation_sign(pos), g.n);
        }
        // Koszul sign of the vertex reordering among odd-degree vertices
        std::vector<int> odd;
        for (int v : order)
            if (g.vertex_degree(v) % 2) odd.push_back(v);
        s *= word_sign(odd);
        auto map_ep = [&](Endpoint e) { return e.is_leg ? e : Endpoint::half(renum.at(e.id)); };
        for (auto& [a, b] : g.matching) {
            Endpoint x = map_ep(a), y = map_ep(b);
            if (y < x) {
                std::swap(x, y);
                s *= sign_pow(-1, g.n);
            }
            c.matching.emplace_back(x, y);
        }
        std::sort(c.matching.begin(), c.matching.end());
        if (!best || c < *best) {
            best = c;
            best_sign = s;
            zero = false;
        } else if (c == *best && s != best_sign) {
            zero = true;
        }
    };

    std::function<void(int)> rec_halfs = [&](int k) {
        if (k == V) {
            evaluate();
            return;
        }
        int v = order[k];
        hperm[v] = halfs[v];
        std::sort(hperm[v].begin(), hperm[v].end());
        do {
            rec_halfs(k + 1);
        } while (std::next_permutation(hperm[v].begin(), hperm[v].end()));
    };

    // permute vertices within blocks of equal key
    std::function<void(int)> rec_blocks = [&](int start) {
        if (start == V) {
            rec_halfs(0);
            return;
        }
        int end = start;
        while (end < V && keys[order[end]] == keys[order[start]]) ++end;
        std::vector<int> block(order.begin() + start, order.begin() + end);
        std::sort(block.begin(), block.end());
        do {
            std::copy(block.begin(), block.end(), order.begin() + start);
            rec_blocks(end);
        } while (std::next_permutation(block.begin(), block.end()));
    };
    rec_blocks(0);
    if (!best) {
        // no vertices
        MarkedGraph c = g;
        int s = 1;
        for (auto& [a, b] : c.matching)
            if (b < a) {
                std::swap(a, b);
                s *= sign_pow(-1, g.n);
            }
        std::sort(c.matching.begin(), c.matching.end());
        return {c, s, false};
    }
    return {*best, best_sign, zero};
}

std::optional<int> compare_sign(const MarkedGraph& a, const MarkedGraph& b) {
    if (a.n != b.n || a.legs != b.legs) return std::nullopt;
    auto ca = canonicalize(a), cb = canonicalize(b);
    if (!(ca.graph == cb.graph)) return std::nullopt;
    return ca.sign * cb.sign;
}

SignedPartitionVector reduce(const MarkedGraph& g, std::mt19937_64* rng) {
    g.validate();
    WorkGraph w = WorkGraph::from(g);
    auto starts = w.internal_pair_starts();
    if (rng) std::shuffle(starts.begin(), starts.end(), *rng);
    for (int x : starts) {
        // the pair may have been reoriented; contract from whichever end is recorded
        int pi = w.pair_index(Endpoint::half(x));
        int first = w.pairs[pi].first.id;
        w.contract(first);
    }
    return w.extract();
}

SignedPartitionVector reduce(const SignedGraphVector& x, std::mt19937_64* rng) {
    SignedPartitionVector out;
    bool init = false;
    for (const auto& [g, c] : x.terms) {
        auto r = reduce(g, rng);
        if (!init) {
            out.n = r.n;
            out.ground = r.ground;
            init = true;
        }
        for (auto& [lp, v] : r.terms) out.add(lp, v * c);
    }
    return out;
}

namespace {

// I=H on the internal pair at half-edge x, with u = (keep, other, x) and
// w = (y, w_second, other) before the move.
void i_to_h(WorkGraph& w, int x, std::optional<int> keep, std::optional<int> w_second) {
    auto [u, v] = w.bring_adjacent(x);
    auto check = [&](int k) {
        if (w.verts[k].halfs.size() != 3 || !w.verts[k].label.is_one())
            throw NonTrivalentInput("I=H needs two trivalent vertices labelled 1");
    };
    check(u);
    check(v);
    if (keep && w.verts[u].halfs[0] != *keep) w.move_half(u, 1, 0);
    if (w_second && w.verts[v].halfs[1] != *w_second) w.move_half(v, 2, 1);
    auto U = w.verts[u].halfs, W = w.verts[v].halfs;
    w.verts[u].halfs = {U[0], W[1], U[2]};
    w.verts[v].halfs = {W[0], W[2], U[1]};
}

struct CycleStep {
    bool loop = false;
    int x = -1;  // loop half-edge or edge half at u
    int keep = -1, w_second = -1;
};

// Shortest cycle first: I=H along a shortest cycle of length L leaves one of length L-1,
// so the girth drops until a loop appears.
std::optional<CycleStep> find_cycle(const WorkGraph& w) {
    int V = static_cast<int>(w.verts.size());
    std::map<int, int> vert_of;
    for (int v = 0; v < V; ++v)
        for (int h : w.verts[v].halfs) vert_of[h] = v;
    std::vector<std::pair<int, int>> edges;  // half ids
    for (auto& [a, b] : w.pairs)
        if (!a.is_leg && !b.is_leg) edges.emplace_back(a.id, b.id);
    for (auto [a, b] : edges)
        if (vert_of[a] == vert_of[b]) return CycleStep{true, a, -1, -1};
    std::optional<CycleStep> best;
    int best_len = 0;
    for (std::size_t ei = 0; ei < edges.size(); ++ei) {
        int x = edges[ei].first, y = edges[ei].second;
        int u = vert_of[x], t = vert_of[y];
        // BFS from t to u avoiding edge ei; remember the half-edges used
        std::vector<int> prev_edge(V, -1), prev_vert(V, -1), dist(V, -1);
        std::deque<int> dq{t};
        dist[t] = 0;
        while (!dq.empty()) {
            int a = dq.front();
            dq.pop_front();
            for (std::size_t ej = 0; ej < edges.size(); ++ej) {
                if (ej == ei) continue;
                int p = vert_of[edges[ej].first], q = vert_of[edges[ej].second];
                int b = p == a ? q : (q == a ? p : -1);
                if (b < 0 || dist[b] >= 0) continue;
                dist[b] = dist[a] + 1;
                prev_edge[b] = static_cast<int>(ej);
                prev_vert[b] = a;
                dq.push_back(b);
            }
        }
        if (dist[u] < 0 || (best && dist[u] + 1 >= best_len)) continue;
        // path t = p0, p1, ..., u; edge into u gives keep, edge out of t gives w_second
        int last_edge = prev_edge[u];
        int keep = vert_of[edges[last_edge].first] == u ? edges[last_edge].first
                                                         : edges[last_edge].second;
        int cur = u, first_edge = last_edge;
        while (prev_vert[cur] != t) {
            cur = prev_vert[cur];
            first_edge = prev_edge[cur];
        }
        int w_second = vert_of[edges[first_edge].first] == t ? edges[first_edge].first
                                                              : edges[first_edge].second;
        best = CycleStep{false, x, keep, w_second};
        best_len = dist[u] + 1;
    }
    return best;
}

bool absorb_once(WorkGraph& w) {
    auto is_univalent_internal = [&](Endpoint e, int& vert) {
        if (e.is_leg) return false;
        auto [v, i] = w.locate(e.id);
        (void)i;
        vert = v;
        return w.verts[v].halfs.size() == 1;
    };
    // two univalent vertices joined
    for (auto& [a, b] : w.pairs) {
        int va, vb;
        if (is_univalent_internal(a, va) && is_univalent_internal(b, vb) && va != vb) {
            w.contract(a.id);
            return true;
        }
    }
    // trivalent vertex with two univalent neighbours
    for (int v = 0; v < static_cast<int>(w.verts.size()); ++v) {
        if (w.verts[v].halfs.size() != 3) continue;
        std::vector<int> hits;
        for (int h : w.verts[v].halfs) {
            Endpoint o = w.partner(Endpoint::half(h));
            int vo;
            if (is_univalent_internal(o, vo) && vo != v) hits.push_back(h);
        }
        if (hits.size() >= 2) {
            w.contract(hits[0]);
            w.contract(hits[1]);
            return true;
        }
    }
    return false;
}

void check_trivalent(const MarkedGraph& g) {
    if (!g.is_trivalent()) throw NonTrivalentInput("graph has a vertex outside {0,1,3}-valent form");
}

}  // namespace

RewriteResult apply_i_to_h(const MarkedGraph& g, int h) {
    check_trivalent(g);
    WorkGraph w = WorkGraph::from(g);
    i_to_h(w, h, std::nullopt, std::nullopt);
    return {w.to_graph(), w.sign};
}

RewriteResult apply_loop_removal(const MarkedGraph& g, int vertex) {
    check_trivalent(g);
    WorkGraph w = WorkGraph::from(g);
    for (int h : w.verts[vertex].halfs) {
        Endpoint o = w.partner(Endpoint::half(h));
        if (!o.is_leg && w.locate(o.id).first == vertex) {
            w.contract(h);
            return {w.to_graph(), w.sign};
        }
    }
    throw std::invalid_argument("no loop at this vertex");
}

std::optional<RewriteResult> apply_absorption(const MarkedGraph& g) {
    WorkGraph w = WorkGraph::from(g);
    if (!absorb_once(w)) return std::nullopt;
    return RewriteResult{w.to_graph(), w.sign};
}

MarkedGraph standard_forest(const LabelledPartition& x) {
    const int n = x.n();
    GraphBuilder b(n, x.ground());
    for (const auto& part : x.parts()) {
        const auto& T = part.elements;
        int i = static_cast<int>(T.size());
        const auto& c = part.label;
        if (i == 0) {
            b.add_vertex(c, 0);
        } else if (i == 1) {
            auto hs = b.add_vertex(c, 1);
            b.pair(Endpoint::half(hs[0]), Endpoint::leg(T[0]));
        } else if (i == 2 && c.is_one()) {
            b.pair(Endpoint::leg(T[0]), Endpoint::leg(T[1]));
        } else {
            int L = i + (c.is_one() ? 0 : 1);
            std::vector<std::vector<int>> tri;
            for (int k = 0; k < L - 2; ++k) tri.push_back(b.add_vertex(LabelMonomial::one(n), 3));
            std::vector<int> uni;
            if (!c.is_one()) uni = b.add_vertex(c, 1);
            // leaves in order: legs, then the labelled univalent vertex
            std::vector<Endpoint> leaves;
            for (int t : T) leaves.push_back(Endpoint::leg(t));
            if (!c.is_one()) leaves.push_back(Endpoint::half(uni[0]));
            // caterpillar: first vertex takes two leaves, last takes two, middle take one
            int li = 0;
            for (int k = 0; k < L - 2; ++k) {
                auto& hs = tri[k];
                if (k == 0) {
                    b.pair(Endpoint::half(hs[0]), leaves[li++]);
                } else {
                    b.pair(Endpoint::half(tri[k - 1][2]), Endpoint::half(hs[0]));
                }
                b.pair(Endpoint::half(hs[1]), leaves[li++]);
                if (k == L - 3) b.pair(Endpoint::half(hs[2]), leaves[li++]);
            }
        }
    }
    return b.build();
}

SignedGraphVector reduce_trivalent(const MarkedGraph& g) {
    check_trivalent(g);
    g.validate();
    WorkGraph w = WorkGraph::from(g);
    while (auto step = find_cycle(w)) {
        if (step->loop)
            w.contract(step->x);
        else
            i_to_h(w, step->x, step->keep, step->w_second);
    }
    while (absorb_once(w)) {
    }
    MarkedGraph final_graph = w.to_graph();
    auto r = reduce(final_graph);
    SignedGraphVector out;
    for (const auto& [lp, sigma] : r.terms) {
        MarkedGraph f = standard_forest(lp);
        auto rf = reduce(f);
        Rational tau = rf.terms.at(lp);
        out.add_raw(f, Rational(w.sign) * sigma / tau);
    }
    return out;
}

SignedGraphVector reduce_trivalent(const SignedGraphVector& x) {
    SignedGraphVector out;
    for (const auto& [g, c] : x.terms)
        for (const auto& [f, v] : reduce_trivalent(g).terms) out.add_raw(f, c * v);
    return out;
}

MarkedGraph sakasai_graph(int n) {
    GraphBuilder b(n, {1});
    auto one = LabelMonomial::one(n);
    auto A = b.add_vertex(one, 3);
    auto B = b.add_vertex(one, 3);
    auto C = b.add_vertex(one, 3);
    auto H = [](int h) { return Endpoint::half(h); };
    b.pair(H(A[0]), Endpoint::leg(1));
    b.pair(H(A[1]), H(B[0]));
    b.pair(H(A[2]), H(C[0]));
    b.pair(H(B[1]), H(C[1]));
    b.pair(H(B[2]), H(C[2]));
    return b.build();
}

MarkedGraph i_graph(int n) {
    GraphBuilder b(n, {1, 2, 5, 6});
    auto one = LabelMonomial::one(n);
    auto u = b.add_vertex(one, 3);
    auto w = b.add_vertex(one, 3);
    auto H = [](int h) { return Endpoint::half(h); };
    b.pair(H(u[0]), Endpoint::leg(1));
    b.pair(H(u[1]), Endpoint::leg(2));
    b.pair(H(u[2]), H(w[0]));
    b.pair(H(w[1]), Endpoint::leg(5));
    b.pair(H(w[2]), Endpoint::leg(6));
    return b.build();
}

MarkedGraph h_graph(int n) {
    GraphBuilder b(n, {1, 2, 5, 6});
    auto one = LabelMonomial::one(n);
    auto u = b.add_vertex(one, 3);
    auto w = b.add_vertex(one, 3);
    auto H = [](int h) { return Endpoint::half(h); };
    b.pair(H(u[0]), Endpoint::leg(1));
    b.pair(H(u[1]), Endpoint::leg(5));
    b.pair(H(u[2]), H(w[0]));
    b.pair(H(w[1]), Endpoint::leg(6));
    b.pair(H(w[2]), Endpoint::leg(2));
    return b.build();
}

MarkedGraph lollipop_graph(int n) {
    GraphBuilder b(n, {1});
    auto v = b.add_vertex(LabelMonomial::one(n), 3);
    b.pair(Endpoint::half(v[0]), Endpoint::leg(1));
    b.pair(Endpoint::half(v[1]), Endpoint::half(v[2]));
    return b.build();
}

MarkedGraph random_graph(int n, std::mt19937_64& rng, int max_vertices, int max_half_edges,
                         int max_legs) {
    auto uni = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    for (;;) {
        int V = uni(1, max_vertices);
        std::vector<int> val(V);
        int total = 0;
        for (int v = 0; v < V; ++v) {
            val[v] = uni(0, 4);
            total += val[v];
        }
        if (total > max_half_edges) continue;
        int legs = uni(0, max_legs);
        if ((total + legs) % 2) {
            if (legs < max_legs)
                ++legs;
            else if (legs > 0)
                --legs;
            else
                continue;
        }
        std::vector<int> leg_names(legs);
        for (int i = 0; i < legs; ++i) leg_names[i] = i + 1;
        GraphBuilder b(n, leg_names);
        std::vector<Endpoint> eps;
        for (int v = 0; v < V; ++v) {
            // labels of small degree making the vertex degree positive
            std::vector<LabelMonomial> choices;
            for (int d = 0; d <= 4 * n + 4; d += 2)
                for (auto& c : monomials_of_degree(n, d))
                    if (c.degree() + n * (val[v] - 2) > 0) choices.push_back(c);
            auto c = choices[uni(0, static_cast<int>(choices.size()) - 1) % std::min<int>(choices.size(), 4)];
            for (int h : b.add_vertex(c, val[v])) eps.push_back(Endpoint::half(h));
        }
        for (int s : leg_names) eps.push_back(Endpoint::leg(s));
        std::shuffle(eps.begin(), eps.end(), rng);
        for (std::size_t i = 0; i + 1 < eps.size(); i += 2) b.pair(eps[i], eps[i + 1]);
        return b.build();
    }
}

bool AuditReport::ok() const {
    if (rows.empty()) return false;
    return std::all_of(rows.begin(), rows.end(), [](const AuditRow& r) {
        return r.images_ok && r.graph_count == r.partition_count;
    });
}

AuditReport presentation_audit(int n, int degree_cap) {
    AuditReport rep;
    rep.n = n;
    rep.degree_cap = degree_cap;
    // Ends of the low-degree graphs: a leg (0) or a univalent vertex labelled p_i (i > 0).
    std::vector<int> ps;
    for (int i = pontryagin_min(n); i <= pontryagin_max(n); ++i)
        if (4 * i - n <= degree_cap) ps.push_back(i);
    std::vector<int> end_kinds{0};
    end_kinds.insert(end_kinds.end(), ps.begin(), ps.end());

    struct Built {
        MarkedGraph g;
        int size;
    };
    std::vector<Built> graphs;
    auto build = [&](int type, std::vector<int> ends) {
        std::vector<int> legs;
        int s = 0;
        for (int k : ends)
            if (k == 0) legs.push_back(++s);
        GraphBuilder b(n, legs);
        int next_leg = 1;
        auto end_point = [&](int k) {
            if (k == 0) return Endpoint::leg(next_leg++);
            auto h = b.add_vertex(LabelMonomial::pontryagin(n, k), 1);
            return Endpoint::half(h[0]);
        };
        if (type == 1) {
            Endpoint a = end_point(ends[0]), c = end_point(ends[1]);
            b.pair(a, c);
        } else if (type == 2) {
            auto hs = b.add_vertex(LabelMonomial::one(n), 3);
            for (int j = 0; j < 3; ++j) b.pair(Endpoint::half(hs[j]), end_point(ends[j]));
        } else {
            auto hs = b.add_vertex(LabelMonomial::one(n), 3);
            b.pair(Endpoint::half(hs[1]), Endpoint::half(hs[2]));
            b.pair(Endpoint::half(hs[0]), end_point(ends[0]));
        }
        MarkedGraph g = b.build();
        if (g.degree() <= degree_cap) graphs.push_back({g, s});
    };
    // unordered multisets of ends
    for (std::size_t a = 0; a < end_kinds.size(); ++a) {
        build(3, {end_kinds[a]});
        for (std::size_t c = a; c < end_kinds.size(); ++c) {
            build(1, {end_kinds[a], end_kinds[c]});
            for (std::size_t d = c; d < end_kinds.size(); ++d)
                build(2, {end_kinds[a], end_kinds[c], end_kinds[d]});
        }
    }
    // group by (degree, size)
    std::map<std::pair<int, int>, std::vector<LabelledPartition>> images;
    for (auto& bg : graphs) {
        auto r = reduce(bg.g);
        for (auto& [lp, c] : r.terms) images[{bg.g.degree(), bg.size}].push_back(lp);
    }
    int max_size = 3;
    for (int d = 0; d <= degree_cap; ++d)
        for (int s = 0; s <= max_size; ++s) {
            AuditRow row;
            row.degree = d;
            row.part_size = s;
            int label_deg = d - n * (s - 2);
            std::vector<LabelMonomial> labels;
            for (auto& c : monomials_of_degree(n, label_deg)) {
                Part p{std::vector<int>(s), c};
                for (int k = 0; k < s; ++k) p.elements[k] = k + 1;
                if (part_allowed(p, n, PartitionVariant::NonNegative)) labels.push_back(c);
            }
            // L_i relations live on empty parts of degree 4i - 2n
            std::vector<LabelPoly> rels;
            if (s == 0)
                for (int i = 1; 4 * i - 2 * n <= d; ++i)
                    if (4 * i - 2 * n == d && 2 * i > n) rels.push_back(l_class_image(i, n));
            auto& imgs = images[{d, s}];
            row.graph_count = static_cast<int>(imgs.size());
            row.partition_count = static_cast<int>(labels.size()) - static_cast<int>(rels.size());
            // rank of images together with relations must be the full label count
            std::vector<SparseRow> rows;
            auto index_of = [&](const LabelMonomial& c) {
                return static_cast<long>(std::find(labels.begin(), labels.end(), c) - labels.begin());
            };
            bool well_formed = true;
            for (auto& lp : imgs) {
                if (lp.parts().size() != 1) {
                    well_formed = false;
                    continue;
                }
                long idx = index_of(lp.parts()[0].label);
                if (idx == static_cast<long>(labels.size())) well_formed = false;
                SparseRow r;
                r[idx] = 1;
                rows.push_back(r);
            }
            for (auto& rel : rels) {
                SparseRow r;
                for (auto& [c, v] : rel) {
                    long idx = index_of(c);
                    if (idx == static_cast<long>(labels.size())) well_formed = false;
                    r[idx] = v;
                }
                rows.push_back(r);
            }
            row.images_ok = well_formed && exact_rank(rows) == static_cast<int>(labels.size());
            if (labels.empty() && imgs.empty()) continue;
            rep.rows.push_back(row);
        }
    return rep;
}

MarkedGraph graph_from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    int n = j.at("n").get<int>();
    GraphBuilder b(n, j.value("legs", std::vector<int>{}));
    MarkedGraph g;
    g.n = n;
    g.legs = j.value("legs", std::vector<int>{});
    std::sort(g.legs.begin(), g.legs.end());
    for (auto& v : j.at("vertices")) g.labels.push_back(parse_label(v.at("label").get<std::string>(), n));
    for (auto& h : j.at("half_edges")) g.vertex_of.push_back(h.at("vertex").get<int>());
    auto ep = [](const std::string& s) {
        if (s.size() < 2 || (s[0] != 'h' && s[0] != 'L')) throw InvalidGraph("bad endpoint " + s);
        int id = std::stoi(s.substr(1));
        return s[0] == 'h' ? Endpoint::half(id) : Endpoint::leg(id);
    };
    for (auto& p : j.at("matching"))
        g.matching.emplace_back(ep(p.at(0).get<std::string>()), ep(p.at(1).get<std::string>()));
    g.validate();
    return g;
}

std::string graph_to_json(const MarkedGraph& g) {
    nlohmann::json j;
    j["n"] = g.n;
    j["legs"] = g.legs;
    j["vertices"] = nlohmann::json::array();
    for (auto& c : g.labels) j["vertices"].push_back({{"label", to_string(c)}});
    j["half_edges"] = nlohmann::json::array();
    for (int v : g.vertex_of) j["half_edges"].push_back({{"vertex", v}});
    j["matching"] = nlohmann::json::array();
    auto ep = [](Endpoint e) { return (e.is_leg ? "L" : "h") + std::to_string(e.id); };
    for (auto& [a, b] : g.matching) j["matching"].push_back({ep(a), ep(b)});
    return j.dump();
}

}  // namespace torelli
