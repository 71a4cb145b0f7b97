#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "torelli/brauer.hpp"
#include "torelli/errors.hpp"
#include "torelli/partition_functor.hpp"

using namespace torelli;

namespace {

BrauerMorphism cup(int a, int b) {
    BrauerMorphism m;
    m.target = {std::min(a, b), std::max(a, b)};
    m.target_pairs = {{a, b}};
    return m;
}

BrauerMorphism cap(int a, int b) {
    BrauerMorphism m;
    m.source = {std::min(a, b), std::max(a, b)};
    m.source_pairs = {{a, b}};
    return m;
}

std::vector<int> range(int lo, int hi) {
    std::vector<int> v;
    for (int i = lo; i <= hi; ++i) v.push_back(i);
    return v;
}

// Random labelled partition of the ground set with small labels.
LabelledPartition random_partition(const std::vector<int>& ground, int n, std::mt19937_64& rng) {
    std::vector<Part> parts;
    std::vector<int> shuffled = ground;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    std::vector<LabelMonomial> labels{LabelMonomial::one(n), LabelMonomial::euler(n)};
    for (int i = pontryagin_min(n); i <= pontryagin_max(n); ++i) labels.push_back(LabelMonomial::pontryagin(n, i));
    for (int z : shuffled) {
        if (!parts.empty() && rng() % 2)
            parts[rng() % parts.size()].elements.push_back(z);
        else
            parts.push_back(Part{{z}, labels[rng() % labels.size()]});
    }
    if (rng() % 3 == 0) parts.push_back(Part{{}, LabelMonomial(n, 3)});
    return LabelledPartition(n, ground, parts);
}

}  // namespace

TEST_CASE("Brauer composition: circles") {
    for (int g = 1; g <= 3; ++g) {
        auto un = compose(cap(1, 2), cup(1, 2), false, 2 * g);
        CHECK(un.scalar == 2 * g);
        auto sg = compose(cap(1, 2), cup(1, 2), true, 2 * g);
        CHECK(sg.scalar == -2 * g);
        // reversed cap against the cup closes the circle the other way
        auto rev = compose(cap(2, 1), cup(1, 2), true, 2 * g);
        CHECK(rev.scalar == 2 * g);
        CHECK(rev.morphism.source.empty());
        CHECK(rev.morphism.target.empty());
    }
}

TEST_CASE("Brauer composition: identities and zig-zag") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 30; ++t) {
        auto m = random_morphism(range(1, 4), range(1, 2 + 2 * (t % 2)), false, rng);
        for (bool s : {false, true}) {
            auto l = compose(BrauerMorphism::identity(m.target), m, s, 4);
            CHECK(l.scalar == 1);
            CHECK(l.morphism.normalized() == m.normalized());
            auto r = compose(m, BrauerMorphism::identity(m.source), s, 4);
            CHECK(r.scalar == 1);
            CHECK(r.morphism.normalized() == m.normalized());
        }
    }
    // (cap_{23} x id_1) o (id_1 x cup_{23}) = id_1 relabelled 1 -> 3 up to sign
    BrauerMorphism first;
    first.source = {1};
    first.target = {1, 2, 3};
    first.through = {{1, 1}};
    first.target_pairs = {{2, 3}};
    BrauerMorphism second;
    second.source = {1, 2, 3};
    second.target = {3};
    second.through = {{3, 3}};
    second.source_pairs = {{1, 2}};
    auto z = compose(second, first, false, 6);
    CHECK(z.scalar == 1);
    CHECK(z.morphism.through == std::vector<std::pair<int, int>>{{1, 3}});
}

TEST_CASE("Brauer composition is associative") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 60; ++t) {
        int a = 2 * (rng() % 3), b = 2 * (rng() % 3), c = 2 * (rng() % 3), d = 2 * (rng() % 3);
        if (t % 2) ++a, ++b, ++c, ++d;
        auto m1 = random_morphism(range(1, a), range(1, b), false, rng);
        auto m2 = random_morphism(range(1, b), range(1, c), false, rng);
        auto m3 = random_morphism(range(1, c), range(1, d), false, rng);
        for (bool s : {false, true}) {
            auto x = compose(m2, m1, s, 5);
            auto lhs = compose(m3, x.morphism, s, 5);
            auto y = compose(m3, m2, s, 5);
            auto rhs = compose(y.morphism, m1, s, 5);
            CHECK(lhs.scalar * x.scalar == rhs.scalar * y.scalar);
            CHECK(lhs.morphism.normalized() == rhs.morphism.normalized());
        }
    }
}

TEST_CASE("functoriality of the partition functor under composition") {
    std::mt19937_64 rng(3);
    int checked = 0;
    for (int t = 0; t < 200; ++t) {
        int n = 1 + t % 4;  // 1, 2, 3, 4
        bool sgn = n % 2;
        int g = 2 + t % 2;
        BrauerMode mode = sgn ? BrauerMode::SignedBrauer : BrauerMode::Brauer;
        int a = 1 + rng() % 4, b = 1 + rng() % 4, c = 1 + rng() % 4;
        if ((a + b) % 2) ++b;
        if ((b + c) % 2) ++c;
        auto m1 = random_morphism(range(1, a), range(1, b), false, rng);
        auto m2 = random_morphism(range(1, b), range(1, c), false, rng);
        auto x = single(random_partition(range(1, a), n, rng));
        auto composed = compose(m2, m1, sgn, 2 * g);
        auto lhs = apply_morphism(composed.morphism, x, mode, g);
        for (auto& [lp, v] : lhs.terms) v *= composed.scalar;
        auto rhs = apply_morphism(m2, apply_morphism(m1, x, mode, g), mode, g);
        CHECK(lhs == rhs);
        ++checked;
    }
    CHECK(checked == 200);
}

TEST_CASE("downward functoriality without g") {
    std::mt19937_64 rng(9);
    for (int t = 0; t < 100; ++t) {
        int n = 1 + t % 4;
        BrauerMode mode = n % 2 ? BrauerMode::SignedDownward : BrauerMode::Downward;
        int a = 2 + rng() % 4, b = a - 2 * (rng() % 2), c = b - 2 * (rng() % 2);
        if (c < 0) c = b;
        auto m1 = random_morphism(range(1, a), range(1, b), true, rng);
        auto m2 = random_morphism(range(1, b), range(1, c), true, rng);
        // labels keep every contraction legal: no size-2 parts labelled 1
        auto lp = random_partition(range(1, a), n, rng);
        bool legal = true;
        for (auto& p : lp.parts())
            if (p.elements.size() == 2 && p.label.is_one()) legal = false;
        if (!legal) continue;
        auto x = single(lp);
        auto composed = compose(m2, m1, n % 2, 0);
        auto lhs = apply_morphism(composed.morphism, x, mode);
        for (auto& [k, v] : lhs.terms) v *= composed.scalar;
        SignedPartitionVector rhs;
        try {
            rhs = apply_morphism(m2, apply_morphism(m1, x, mode), mode);
        } catch (const IllegalContraction&) {
            continue;
        }
        CHECK(lhs == rhs);
    }
}

TEST_CASE("closing a labelled-1 pair") {
    LabelledPartition x(3, {1, 2}, {Part{{1, 2}, LabelMonomial::one(3)}});
    CHECK_THROWS_AS(apply_morphism(cap(1, 2), single(x), BrauerMode::SignedDownward), IllegalContraction);
    auto r = apply_morphism(cap(1, 2), single(x), BrauerMode::SignedBrauer, 4);
    REQUIRE(r.terms.size() == 1);
    CHECK(r.terms.begin()->second == -8);
    LabelledPartition y(2, {1, 2}, {Part{{1, 2}, LabelMonomial::one(2)}});
    CHECK(apply_morphism(cap(1, 2), single(y), BrauerMode::Brauer, 4).terms.begin()->second == 8);
}

TEST_CASE("contracting within a part multiplies by e, across parts merges") {
    int n = 3;
    auto p1 = LabelMonomial::pontryagin(n, 1);
    LabelledPartition x(n, {1, 2, 3}, {Part{{1, 2, 3}, p1}});
    BrauerMorphism m;
    m.source = {1, 2, 3};
    m.target = {3};
    m.through = {{3, 3}};
    m.source_pairs = {{1, 2}};
    auto r = apply_morphism(m, single(x), BrauerMode::SignedDownward);
    REQUIRE(r.terms.size() == 1);
    auto& [lp, c] = *r.terms.begin();
    CHECK(lp.parts().size() == 1);
    CHECK(lp.parts()[0].label == p1 * LabelMonomial::euler(n));
    CHECK(c == 1);
    LabelledPartition y(n, {1, 2}, {Part{{1}, p1}, Part{{2}, LabelMonomial::euler(n)}});
    auto s = apply_morphism(cap(1, 2), single(y), BrauerMode::SignedDownward);
    REQUIRE(s.terms.size() == 1);
    CHECK(s.terms.begin()->first.parts()[0].label == p1 * LabelMonomial::euler(n));
    CHECK(s.terms.begin()->first.parts()[0].elements.empty());
    // reversing the pair costs (-1)^n
    auto s2 = apply_morphism(cap(2, 1), single(y), BrauerMode::SignedDownward);
    CHECK(s2.terms.begin()->second == -s.terms.begin()->second);
}

TEST_CASE("empty parts of degree 2n evaluate through phi") {
    int n = 1;
    LabelledPartition x(n, {1, 2}, {Part{{1}, LabelMonomial::one(n)}, Part{{2}, LabelMonomial::euler(n)}});
    // merging gives an empty part labelled e of degree 2n
    auto stable = apply_morphism(cap(1, 2), single(x), BrauerMode::SignedDownward);
    CHECK(stable.is_zero());
    auto r = apply_morphism(cap(1, 2), single(x), BrauerMode::SignedBrauer, 3);
    REQUIRE(r.terms.size() == 1);
    CHECK(r.terms.begin()->second == 2 - 2 * 3);
}

TEST_CASE("Day convolution product") {
    int n = 2;
    LabelledPartition a(n, {1}, {Part{{1}, LabelMonomial::euler(n)}});
    LabelledPartition b(n, {2, 3}, {Part{{2, 3}, LabelMonomial::one(n)}});
    auto ab = day_product(single(a), single(b));
    CHECK(ab.ground == std::vector<int>{1, 2, 3});
    CHECK(ab.terms.size() == 1);
    CHECK_THROWS_AS(day_product(single(a), single(a)), GroundSetOverlap);
    // odd n: swapping odd-sized factors costs a sign
    LabelledPartition c(1, {1}, {Part{{1}, LabelMonomial::euler(1)}});
    LabelledPartition d(1, {2}, {Part{{2}, LabelMonomial::euler(1)}});
    auto cd = day_product(single(c), single(d));
    auto dc = day_product(single(d), single(c));
    CHECK(cd.terms.begin()->second == -dc.terms.begin()->second);
}

TEST_CASE("basis enumeration") {
    auto b = enumerate_basis({1, 2}, 3, PartitionVariant::NonNegative, 0);
    // only {1,2} labelled 1 has degree 0
    CHECK(b.size() == 1);
    CHECK(enumerate_basis({1, 2}, 3, PartitionVariant::Reduced, 0).empty());
    CHECK_THROWS_AS(enumerate_basis({1}, 3, PartitionVariant::All, 2), Unsupported);
    for (auto& x : enumerate_basis({1, 2, 3}, 2, PartitionVariant::NonNegative, 6)) {
        CHECK(x.satisfies(PartitionVariant::NonNegative));
        CHECK(x.degree() <= 6);
    }
}

TEST_CASE("sigma_character counts fixed basis elements with a sign twist") {
    auto chi = sigma_character(0, 3, 2, PartitionVariant::Reduced);
    CHECK(chi.values.at(Partition{}) == 2);  // p1^2 and p2 in degree 8 = 2 + 2n
    auto c1 = sigma_character(1, 3, 1, PartitionVariant::Reduced);
    CHECK(c1.values.at(Partition{1}) == 1);
    // brute-force check of the trace for q = 3 against all permutations of each class
    auto chi3 = sigma_character(3, 1, 2, PartitionVariant::Reduced);
    std::vector<LabelledPartition> basis;
    for (auto& x : enumerate_basis({1, 2, 3}, 1, PartitionVariant::Reduced, 2))
        if (x.degree() == 2) basis.push_back(x);
    for (auto& perm : oracle::all_permutations(3)) {
        std::map<int, int> f;
        for (int i = 0; i < 3; ++i) f[i + 1] = perm[i] + 1;
        long tr = 0;
        for (auto& x : basis)
            if (x.relabelled(f) == x) tr += oracle::inversion_sign(perm);
        CHECK(chi3.values.at(oracle::cycle_type(perm)) == tr);
    }
}

TEST_CASE("word signs") {
    CHECK(word_sign({1, 2, 3}) == 1);
    CHECK(word_sign({2, 1, 3}) == -1);
    CHECK(word_sign({3, 1, 2}) == 1);
}
