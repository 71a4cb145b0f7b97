#include "torelli/partition_functor.hpp"

#include <algorithm>
#include <functional>

#include "torelli/errors.hpp"

namespace torelli {

LabelledPartition::LabelledPartition(int n, std::vector<int> ground, std::vector<Part> parts)
    : n_(n), ground_(std::move(ground)), parts_(std::move(parts)) {
    std::sort(ground_.begin(), ground_.end());
    std::vector<int> seen;
    for (auto& p : parts_) {
        std::sort(p.elements.begin(), p.elements.end());
        seen.insert(seen.end(), p.elements.begin(), p.elements.end());
        if (p.label.n() != n) throw std::invalid_argument("label for a different n");
    }
    std::sort(seen.begin(), seen.end());
    if (seen != ground_) throw std::invalid_argument("parts do not partition the ground set");
    canonicalize();
}

void LabelledPartition::canonicalize() {
    std::sort(parts_.begin(), parts_.end(), [](const Part& a, const Part& b) {
        if (a.elements.empty() != b.elements.empty()) return b.elements.empty();
        if (!a.elements.empty()) return a.elements[0] < b.elements[0];
        return a.label < b.label;
    });
}

int LabelledPartition::degree() const {
    int d = 0;
    for (const auto& p : parts_) d += p.degree(n_);
    return d;
}

bool part_allowed(const Part& part, int n, PartitionVariant variant) {
    if (variant == PartitionVariant::All) return true;
    int s = static_cast<int>(part.elements.size());
    int c = part.label.degree();
    if (s == 0 && c <= 2 * n) return false;
    if (s == 1 && c < n) return false;
    if (variant == PartitionVariant::Reduced && s == 2 && part.label.is_one()) return false;
    return true;
}

bool LabelledPartition::satisfies(PartitionVariant variant) const {
    return std::all_of(parts_.begin(), parts_.end(),
                       [&](const Part& p) { return part_allowed(p, n_, variant); });
}

LabelledPartition LabelledPartition::relabelled(const std::map<int, int>& f) const {
    std::vector<int> ground;
    for (int x : ground_) ground.push_back(f.at(x));
    std::vector<Part> parts = parts_;
    for (auto& p : parts)
        for (int& x : p.elements) x = f.at(x);
    return LabelledPartition(n_, ground, parts);
}

void SignedPartitionVector::add(const LabelledPartition& x, const Rational& c) {
    if (c == 0) return;
    auto [it, ins] = terms.emplace(x, c);
    if (!ins) {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

SignedPartitionVector single(const LabelledPartition& x, const Rational& c) {
    SignedPartitionVector v;
    v.n = x.n();
    v.ground = x.ground();
    v.add(x, c);
    return v;
}

int word_sign(const std::vector<int>& word) {
    int inv = 0;
    for (std::size_t i = 0; i < word.size(); ++i)
        for (std::size_t j = i + 1; j < word.size(); ++j) inv += word[i] > word[j];
    return inv % 2 ? -1 : 1;
}

namespace {

// Multisets of labels with degree > 2n, as empty parts, of total part-degree <= budget.
void empty_part_multisets(int n, int budget, std::vector<std::vector<LabelMonomial>>& out) {
    std::vector<LabelMonomial> labels;
    for (int d = 2 * n + 2; d - 2 * n <= budget; d += 2)
        for (auto& c : monomials_of_degree(n, d)) labels.push_back(c);
    std::vector<LabelMonomial> cur;
    std::function<void(std::size_t, int)> rec = [&](std::size_t start, int left) {
        out.push_back(cur);
        for (std::size_t i = start; i < labels.size(); ++i) {
            int d = labels[i].degree() - 2 * n;
            if (d > left) continue;
            cur.push_back(labels[i]);
            rec(i, left - d);
            cur.pop_back();
        }
    };
    rec(0, budget);
}

void set_partitions(const std::vector<int>& elems, std::size_t idx,
                    std::vector<std::vector<int>>& blocks,
                    std::vector<std::vector<std::vector<int>>>& out) {
    if (idx == elems.size()) {
        out.push_back(blocks);
        return;
    }
    for (std::size_t k = 0; k < blocks.size(); ++k) {
        blocks[k].push_back(elems[idx]);
        set_partitions(elems, idx + 1, blocks, out);
        blocks[k].pop_back();
    }
    blocks.push_back({elems[idx]});
    set_partitions(elems, idx + 1, blocks, out);
    blocks.pop_back();
}

}  // namespace

std::vector<LabelledPartition> enumerate_basis(const std::vector<int>& ground_in, int n,
                                               PartitionVariant variant, int degree_cap) {
    if (variant == PartitionVariant::All)
        throw Unsupported("P(S,V) is infinite-dimensional in each degree; enumerate P_{>=0}");
    std::vector<int> ground = ground_in;
    std::sort(ground.begin(), ground.end());
    std::vector<std::vector<std::vector<int>>> sps;
    std::vector<std::vector<int>> blocks;
    set_partitions(ground, 0, blocks, sps);
    std::vector<LabelledPartition> out;
    for (const auto& sp : sps) {
        // choose labels block by block
        std::vector<Part> parts;
        std::function<void(std::size_t, int)> rec = [&](std::size_t bi, int used) {
            if (bi == sp.size()) {
                std::vector<std::vector<LabelMonomial>> empties;
                empty_part_multisets(n, degree_cap - used, empties);
                for (auto& em : empties) {
                    std::vector<Part> all = parts;
                    for (auto& c : em) all.push_back(Part{{}, c});
                    out.emplace_back(n, ground, all);
                }
                return;
            }
            int s = static_cast<int>(sp[bi].size());
            for (int c = 0; c + n * (s - 2) + used <= degree_cap; c += 2) {
                for (auto& lab : monomials_of_degree(n, c)) {
                    Part part{sp[bi], lab};
                    if (!part_allowed(part, n, variant)) continue;
                    parts.push_back(part);
                    rec(bi + 1, used + part.degree(n));
                    parts.pop_back();
                }
            }
        };
        rec(0, 0);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return a < b;
    });
    return out;
}

bool is_signed(BrauerMode mode) {
    return mode == BrauerMode::SignedDownward || mode == BrauerMode::SignedBrauer;
}

namespace {

bool explicit_g(BrauerMode mode) {
    return mode == BrauerMode::Brauer || mode == BrauerMode::SignedBrauer;
}

// Value of an empty part whose label has degree <= 2n.
Rational phi(const LabelMonomial& c, int n, BrauerMode mode, std::optional<int> g) {
    if (!explicit_g(mode) || c.degree() != 2 * n) return 0;
    if (c == LabelMonomial::euler(n)) return Rational(2 + (n % 2 ? -2 : 2) * *g);
    return 0;  // Pontryagin numbers of W_g vanish
}

}  // namespace

SignedPartitionVector apply_morphism(const BrauerMorphism& m, const SignedPartitionVector& x,
                                     BrauerMode mode, std::optional<int> g) {
    m.validate();
    if (m.source != x.ground) throw std::invalid_argument("morphism source differs from ground set");
    if (is_signed(mode) != (x.n % 2 == 1))
        throw std::invalid_argument("signed modes go with odd n, unsigned modes with even n");
    if (explicit_g(mode) && !g) throw std::invalid_argument("Brauer modes need g");
    if (!explicit_g(mode) && !m.is_downward())
        throw std::invalid_argument("downward modes admit no target pairs");
    const int n = x.n;
    SignedPartitionVector out;
    out.n = n;
    out.ground = m.target;
    std::map<int, int> f;
    for (auto [s, t] : m.through) f[s] = t;

    for (const auto& [lp, coeff] : x.terms) {
        Rational c = coeff;
        std::vector<int> word = lp.ground();
        std::vector<Part> parts = lp.parts();
        bool dead = false;
        for (auto [a, b] : m.source_pairs) {
            // rewrite the orientation as a ^ b ^ rest
            auto ia = std::find(word.begin(), word.end(), a) - word.begin();
            int sgn = ia % 2 ? -1 : 1;
            word.erase(word.begin() + ia);
            auto ib = std::find(word.begin(), word.end(), b) - word.begin();
            if (ib % 2) sgn = -sgn;
            word.erase(word.begin() + ib);
            if (n % 2 && sgn < 0) c = -c;

            auto find_part = [&](int z) {
                for (std::size_t i = 0; i < parts.size(); ++i)
                    if (std::find(parts[i].elements.begin(), parts[i].elements.end(), z) !=
                        parts[i].elements.end())
                        return i;
                throw std::logic_error("element not in any part");
            };
            std::size_t pa = find_part(a), pb = find_part(b);
            auto drop = [](std::vector<int>& v, int z) { v.erase(std::find(v.begin(), v.end(), z)); };
            if (pa == pb) {
                Part& P = parts[pa];
                if (P.elements.size() == 2 && P.label.is_one()) {
                    if (!explicit_g(mode))
                        throw IllegalContraction("closing a size-2 part labelled 1 needs g");
                    c *= Rational((n % 2 ? -2 : 2) * *g);
                    parts.erase(parts.begin() + pa);
                    continue;
                }
                drop(P.elements, a);
                drop(P.elements, b);
                P.label = P.label * LabelMonomial::euler(n);
            } else {
                Part merged;
                merged.elements = parts[pa].elements;
                merged.elements.insert(merged.elements.end(), parts[pb].elements.begin(),
                                       parts[pb].elements.end());
                drop(merged.elements, a);
                drop(merged.elements, b);
                std::sort(merged.elements.begin(), merged.elements.end());
                merged.label = parts[pa].label * parts[pb].label;
                parts.erase(parts.begin() + std::max(pa, pb));
                parts.erase(parts.begin() + std::min(pa, pb));
                parts.push_back(merged);
            }
            // empty parts of low degree become scalars
            for (std::size_t i = 0; i < parts.size();) {
                if (parts[i].elements.empty() && parts[i].label.degree() <= 2 * n) {
                    c *= phi(parts[i].label, n, mode, g);
                    parts.erase(parts.begin() + i);
                } else {
                    ++i;
                }
            }
            if (c == 0) {
                dead = true;
                break;
            }
        }
        if (dead) continue;
        for (auto& P : parts)
            for (int& z : P.elements) z = f.at(z);
        for (int& z : word) z = f.at(z);
        for (auto it = m.target_pairs.rbegin(); it != m.target_pairs.rend(); ++it) {
            word.insert(word.begin(), it->second);
            word.insert(word.begin(), it->first);
            parts.push_back(Part{{it->first, it->second}, LabelMonomial::one(n)});
        }
        if (n % 2 && word_sign(word) < 0) c = -c;
        out.add(LabelledPartition(n, m.target, parts), c);
    }
    return out;
}

SignedPartitionVector day_product(const SignedPartitionVector& x, const SignedPartitionVector& y) {
    if (x.n != y.n) throw std::invalid_argument("day_product: different n");
    for (int a : x.ground)
        if (std::binary_search(y.ground.begin(), y.ground.end(), a))
            throw GroundSetOverlap("day_product needs disjoint ground sets");
    SignedPartitionVector out;
    out.n = x.n;
    std::vector<int> word = x.ground;
    word.insert(word.end(), y.ground.begin(), y.ground.end());
    out.ground = word;
    std::sort(out.ground.begin(), out.ground.end());
    int sgn = (x.n % 2) ? word_sign(word) : 1;
    for (const auto& [a, ca] : x.terms)
        for (const auto& [b, cb] : y.terms) {
            std::vector<Part> parts = a.parts();
            parts.insert(parts.end(), b.parts().begin(), b.parts().end());
            out.add(LabelledPartition(x.n, out.ground, parts), ca * cb * Rational(sgn));
        }
    return out;
}

ClassFunction sigma_character(int q, int n, int degree, PartitionVariant variant) {
    std::vector<int> ground(q);
    for (int i = 0; i < q; ++i) ground[i] = i + 1;
    std::vector<LabelledPartition> basis;
    for (auto& b : enumerate_basis(ground, n, variant, degree))
        if (b.degree() == degree) basis.push_back(b);
    ClassFunction chi{q, {}};
    for (const auto& mu : partitions_of(q)) {
        auto perm = permutation_of_type(mu);
        std::map<int, int> f;
        for (int i = 0; i < q; ++i) f[i + 1] = perm[i] + 1;
        long fixed = 0;
        for (const auto& b : basis)
            if (b.relabelled(f) == b) ++fixed;
        int sgn = (n % 2) ? permutation_sign(perm) : 1;
        chi.values[mu] = Rational(fixed * sgn);
    }
    return chi;
}

LambdaSeries l_quotient_factor(int n, int trunc) {
    LambdaSeries acc = LambdaSeries::constant(SymFunc(1), trunc);
    for (int i = 1; 4 * i - 2 * n <= trunc; ++i) {
        if (4 * i <= 2 * n) continue;
        LambdaSeries f = LambdaSeries::constant(SymFunc(1), trunc);
        f.add_term(4 * i - 2 * n, SymFunc(-1));
        acc = acc * f;
    }
    return acc;
}

LambdaSeries quotient_series_by_L(const LambdaSeries& s, int n) {
    return l_quotient_factor(n, s.truncation()) * s;
}

}  // namespace torelli
