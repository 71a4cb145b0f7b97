#include "torelli/brauer.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <tuple>

namespace torelli {

void BrauerMorphism::validate() const {
    std::multiset<int> s_used, t_used;
    for (auto [a, b] : through) {
        s_used.insert(a);
        t_used.insert(b);
    }
    for (auto [a, b] : source_pairs) {
        s_used.insert(a);
        s_used.insert(b);
    }
    for (auto [a, b] : target_pairs) {
        t_used.insert(a);
        t_used.insert(b);
    }
    if (std::vector<int>(s_used.begin(), s_used.end()) != source ||
        std::vector<int>(t_used.begin(), t_used.end()) != target)
        throw std::invalid_argument("malformed Brauer morphism");
}

BrauerMorphism BrauerMorphism::identity(const std::vector<int>& set) {
    BrauerMorphism m;
    m.source = m.target = set;
    for (int x : set) m.through.emplace_back(x, x);
    return m;
}

BrauerMorphism BrauerMorphism::normalized() const {
    BrauerMorphism m = *this;
    std::sort(m.through.begin(), m.through.end());
    auto key = [](const std::pair<int, int>& p) { return std::minmax(p.first, p.second); };
    auto cmp = [&](const auto& a, const auto& b) { return key(a) < key(b); };
    std::sort(m.source_pairs.begin(), m.source_pairs.end(), cmp);
    std::sort(m.target_pairs.begin(), m.target_pairs.end(), cmp);
    return m;
}

namespace {

struct Edge {
    int a, b;        // node ids
    bool oriented;   // pairs are oriented a -> b; through strands are not
};

}  // namespace

ScaledMorphism compose(const BrauerMorphism& second, const BrauerMorphism& first, bool is_signed,
                       const Rational& charge) {
    if (first.target != second.source)
        throw std::invalid_argument("compose: morphisms are not composable");
    // Node ids: S as 0:x, T as 1:x, U as 2:x, packed into one int space.
    std::map<std::pair<int, int>, int> id;
    std::vector<std::pair<int, int>> name;
    auto node = [&](int layer, int x) {
        auto [it, ins] = id.emplace(std::make_pair(layer, x), static_cast<int>(name.size()));
        if (ins) name.emplace_back(layer, x);
        return it->second;
    };
    std::vector<Edge> edges;
    for (auto [s, t] : first.through) edges.push_back({node(0, s), node(1, t), false});
    for (auto [a, b] : first.source_pairs) edges.push_back({node(0, a), node(0, b), true});
    for (auto [a, b] : first.target_pairs) edges.push_back({node(1, a), node(1, b), true});
    for (auto [t, u] : second.through) edges.push_back({node(1, t), node(2, u), false});
    for (auto [a, b] : second.source_pairs) edges.push_back({node(1, a), node(1, b), true});
    for (auto [a, b] : second.target_pairs) edges.push_back({node(2, a), node(2, b), true});

    std::vector<std::vector<int>> inc(name.size());
    for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
        inc[edges[i].a].push_back(i);
        inc[edges[i].b].push_back(i);
    }
    std::vector<char> used(edges.size(), 0), seen(name.size(), 0);
    int sign = 1;
    int loops = 0;
    ScaledMorphism out;
    out.morphism.source = first.source;
    out.morphism.target = second.target;

    auto walk = [&](int start, int first_edge) {
        int cur = start, rev = 0, oriented = 0, e = first_edge;
        seen[start] = 1;
        while (true) {
            used[e] = 1;
            const Edge& ed = edges[e];
            int next = ed.a == cur ? ed.b : ed.a;
            if (ed.oriented) ++oriented;
            if (ed.oriented && ed.a != cur) ++rev;
            if (ed.a == ed.b) next = cur;
            cur = next;
            seen[cur] = 1;
            int nxt = -1;
            for (int f : inc[cur])
                if (!used[f]) nxt = f;
            if (nxt < 0) break;
            e = nxt;
        }
        return std::make_tuple(cur, rev, oriented);
    };

    for (int v = 0; v < static_cast<int>(name.size()); ++v) {
        if (seen[v] || name[v].first == 1) continue;
        auto [end, rev, oriented] = walk(v, inc[v][0]);
        auto [l1, x] = name[v];
        auto [l2, y] = name[end];
        // A composite pair has an odd number of oriented pieces, so one direction of travel
        // meets an even number of reversals; orient it that way.
        if (l1 == l2 && rev % 2) {
            std::swap(x, y);
            rev = oriented - rev;
        }
        if (rev % 2) sign = -sign;
        if (l1 == 0 && l2 == 0)
            out.morphism.source_pairs.emplace_back(x, y);
        else if (l1 == 2 && l2 == 2)
            out.morphism.target_pairs.emplace_back(x, y);
        else if (l1 == 0)
            out.morphism.through.emplace_back(x, y);
        else
            out.morphism.through.emplace_back(y, x);
    }
    for (int v = 0; v < static_cast<int>(name.size()); ++v) {
        if (seen[v]) continue;
        auto [end, rev, oriented] = walk(v, inc[v][0]);
        (void)end;
        (void)oriented;
        if (rev % 2) sign = -sign;
        ++loops;
    }
    Rational scalar = is_signed ? Rational(sign) : Rational(1);
    for (int i = 0; i < loops; ++i) scalar *= charge;
    out.scalar = scalar;
    out.morphism = out.morphism.normalized();
    return out;
}

BrauerMorphism random_morphism(const std::vector<int>& source, const std::vector<int>& target,
                               bool downward, std::mt19937_64& rng) {
    int s = static_cast<int>(source.size()), t = static_cast<int>(target.size());
    if ((s + t) % 2) throw std::invalid_argument("random_morphism: |S|+|T| must be even");
    if (downward && t > s) throw std::invalid_argument("random_morphism: |T| > |S| downward");
    int max_through = std::min(s, t);
    std::vector<int> choices;
    for (int k = max_through; k >= 0; k -= 2)
        if (!downward || k == t) choices.push_back(k);
    int k = choices[std::uniform_int_distribution<int>(0, choices.size() - 1)(rng)];
    std::vector<int> S = source, T = target;
    std::shuffle(S.begin(), S.end(), rng);
    std::shuffle(T.begin(), T.end(), rng);
    BrauerMorphism m;
    m.source = source;
    m.target = target;
    for (int i = 0; i < k; ++i) m.through.emplace_back(S[i], T[i]);
    std::bernoulli_distribution flip(0.5);
    for (int i = k; i + 1 < s; i += 2)
        m.source_pairs.push_back(flip(rng) ? std::make_pair(S[i], S[i + 1])
                                           : std::make_pair(S[i + 1], S[i]));
    for (int i = k; i + 1 < t; i += 2)
        m.target_pairs.push_back(flip(rng) ? std::make_pair(T[i], T[i + 1])
                                           : std::make_pair(T[i + 1], T[i]));
    return m.normalized();
}

}  // namespace torelli
