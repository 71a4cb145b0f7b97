#include <random>

#include "doctest.h"
#include "torelli/branching.hpp"
#include "torelli/errors.hpp"
#include "torelli/invariants.hpp"

using namespace torelli;

namespace {

std::vector<int> range(int lo, int hi) {
    std::vector<int> v;
    for (int i = lo; i <= hi; ++i) v.push_back(i);
    return v;
}

DenseTensor random_tensor(const std::vector<int>& shape, int dim, std::mt19937_64& rng) {
    DenseTensor t(shape, dim);
    for (int k = 0; k < 12; ++k) t.entries[rng() % t.size()] = static_cast<long>(rng() % 7) - 3;
    return t;
}

}  // namespace

TEST_CASE("forms: symmetry type and the omega identity") {
    for (int g = 1; g <= 4; ++g)
        for (int eps : {-1, 1}) {
            auto f = EpsForm::make(g, eps);
            int N = f.dim();
            for (int i = 0; i < N; ++i)
                for (int j = 0; j < N; ++j) CHECK(f.lambda(j, i) == eps * f.lambda(i, j));
            // (lambda (x) id)(a_j (x) omega) = a_j
            for (int j = 0; j < N; ++j)
                for (int k = 0; k < N; ++k) {
                    Rational s = 0;
                    for (int i = 0; i < N; ++i) s += f.lambda(j, i) * f.omega[i][k];
                    CHECK(s == (j == k ? 1 : 0));
                }
        }
}

TEST_CASE("omega_m examples") {
    for (int eps : {-1, 1}) {
        auto f = EpsForm::make(2, eps);
        auto w = omega_m({{1, 2}}, {1, 2}, f);
        for (long i = 0; i < w.size(); ++i) {
            auto c = w.coords(i);
            CHECK(w.entries[i] == f.omega[c[0]][c[1]]);
        }
        auto rev = omega_m({{2, 1}}, {1, 2}, f);
        for (long i = 0; i < w.size(); ++i) CHECK(rev.entries[i] == eps * w.entries[i]);
        auto two = omega_m({{1, 2}, {3, 4}}, {1, 2, 3, 4}, f);
        auto both_rev = omega_m({{2, 1}, {4, 3}}, {1, 2, 3, 4}, f);
        CHECK(two == both_rev);
    }
    auto f = EpsForm::make(1, -1);
    auto t = omega_m({{1, 2}, {3, 4}}, {1, 2, 3, 4}, f);
    CHECK(t.size() == 16);
    int nonzero = 0;
    for (long i = 0; i < t.size(); ++i) {
        auto c = t.coords(i);
        CHECK(t.entries[i] == f.omega[c[0]][c[1]] * f.omega[c[2]][c[3]]);
        CHECK((t.entries[i] == 0 || t.entries[i] == 1 || t.entries[i] == -1));
        nonzero += t.entries[i] != 0;
    }
    CHECK(nonzero == 4);
    CHECK_THROWS_AS(omega_m({{1, 2}}, {1, 2, 3}, f), NotPerfect);
}

TEST_CASE("matching span ranks") {
    CHECK(matching_span_rank(2, 1, -1).rank == 1);
    CHECK(matching_span_rank(2, 1, -1).matching_dim == 1);
    auto low = matching_span_rank(4, 1, -1);
    CHECK(low.rank == 2);
    CHECK(low.matching_dim == 3);
    auto at = matching_span_rank(4, 2, -1);
    CHECK(at.rank == 3);
    CHECK(at.matching_dim == 3);
    for (int s = 2; s <= 6; s += 2)
        for (int g = (s + 1) / 2; g <= 3; ++g)
            for (int eps : {-1, 1}) {
                auto r = matching_span_rank(s, g, eps);
                CHECK(r.rank == r.matching_dim);
            }
}

TEST_CASE("tensor size cap") {
    CHECK_THROWS_AS(DenseTensor(range(1, 9), 8), TensorTooLarge);
    CHECK_NOTHROW(DenseTensor(range(1, 6), 6));
}

TEST_CASE("K on identities and circles") {
    std::mt19937_64 rng(1);
    for (int eps : {-1, 1}) {
        auto f = EpsForm::make(2, eps);
        auto x = random_tensor({1, 2, 3}, 4, rng);
        CHECK(K_on_morphism(BrauerMorphism::identity({1, 2, 3}), x, f) == x);
        BrauerMorphism cup, cap;
        cup.target = {1, 2};
        cup.target_pairs = {{1, 2}};
        cap.source = {1, 2};
        cap.source_pairs = {{1, 2}};
        DenseTensor one({}, 4);
        one.entries[0] = 1;
        auto circle = K_on_morphism(cap, K_on_morphism(cup, one, f), f);
        CHECK(circle.entries[0] == eps * 4);
        CHECK(compose(cap, cup, eps == -1, 4).scalar == eps * 4);
    }
}

TEST_CASE("K is a functor on random diagrams") {
    std::mt19937_64 rng(42);
    int checked = 0;
    for (int t = 0; t < 60; ++t) {
        int g = 1 + t % 3;
        int eps = t % 2 ? -1 : 1;
        int a = static_cast<int>(rng() % 5) + 1;
        int b = static_cast<int>(rng() % 5) + 1;
        int c = static_cast<int>(rng() % 5) + 1;
        if ((a + b) % 2) b = b == 5 ? 4 : b + 1;
        if ((b + c) % 2) c = c == 5 ? 4 : c + 1;
        auto f = EpsForm::make(g, eps);
        auto m1 = random_morphism(range(1, a), range(1, b), false, rng);
        auto m2 = random_morphism(range(1, b), range(1, c), false, rng);
        auto x = random_tensor(range(1, a), 2 * g, rng);
        auto composed = compose(m2, m1, eps == -1, 2 * g);
        auto lhs = K_on_morphism(composed.morphism, x, f);
        for (auto& v : lhs.entries) v *= composed.scalar;
        auto rhs = K_on_morphism(m2, K_on_morphism(m1, x, f), f);
        CHECK(lhs == rhs);
        ++checked;
    }
    CHECK(checked >= 50);
}

TEST_CASE("harmonic tensors") {
    CHECK(harmonic_projection(0, EpsForm::make(2, -1)).size() == 1);
    CHECK(harmonic_projection(1, EpsForm::make(2, -1)).size() == 4);
    auto h2 = harmonic_projection(2, EpsForm::make(2, -1));
    CHECK(h2.size() == 15);
    CHECK(h2.size() == static_cast<std::size_t>(Integer(dim_irrep({1, 1}, -1, 2) + dim_irrep({2}, -1, 2)).get_si()));
    auto o2 = harmonic_projection(2, EpsForm::make(2, 1));
    CHECK(o2.size() == static_cast<std::size_t>(Integer(dim_irrep({1, 1}, 1, 2) + dim_irrep({2}, 1, 2)).get_si()));
}

TEST_CASE("Schur-Weyl multiplicities of harmonic tensors") {
    for (int eps : {-1, 1}) {
        auto f = EpsForm::make(3, eps);
        for (int q = 0; q <= 3; ++q)
            for (auto& lambda : partitions_of(q))
                CHECK(harmonic_multiplicity(lambda, f) == dim_irrep(lambda, eps, 3));
    }
}
