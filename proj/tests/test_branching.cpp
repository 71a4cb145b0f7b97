#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "torelli/branching.hpp"
#include "torelli/series.hpp"

using namespace torelli;

namespace {

Rational det(std::vector<std::vector<Rational>> a) {
    int N = static_cast<int>(a.size());
    Rational d = 1;
    for (int c = 0; c < N; ++c) {
        int p = c;
        while (p < N && a[p][c] == 0) ++p;
        if (p == N) return 0;
        if (p != c) {
            std::swap(a[p], a[c]);
            d = -d;
        }
        d *= a[c][c];
        for (int r = c + 1; r < N; ++r) {
            Rational f = a[r][c] / a[c][c];
            for (int k = c; k < N; ++k) a[r][k] -= f * a[c][k];
        }
    }
    return d;
}

Rational power(const Rational& x, int k) {
    Rational r = 1;
    for (int i = 0; i < std::abs(k); ++i) r *= x;
    return k < 0 ? 1 / r : r;
}

// Weyl character of Sp_{2g} (epsilon = -1) or O_{2g} restricted to SO_{2g} (epsilon = +1,
// length(lambda) < g) at the torus point x.
Rational weyl_character(const Partition& lambda, int epsilon, const std::vector<Rational>& x) {
    int g = static_cast<int>(x.size());
    auto alternant = [&](const std::vector<int>& l) {
        std::vector<std::vector<Rational>> m(g, std::vector<Rational>(g));
        for (int i = 0; i < g; ++i)
            for (int j = 0; j < g; ++j)
                m[i][j] = epsilon == -1 ? Rational(power(x[j], l[i]) - power(x[j], -l[i]))
                                        : Rational(power(x[j], l[i]) + power(x[j], -l[i]));
        return det(m);
    };
    std::vector<int> l(g), d(g);
    for (int i = 0; i < g; ++i) {
        int shift = epsilon == -1 ? g + 1 - (i + 1) : g - (i + 1);
        l[i] = lambda[i] + shift;
        d[i] = shift;
    }
    return alternant(l) / alternant(d);
}

// Weyl dimension formula.
Integer weyl_dimension(const Partition& lambda, int epsilon, int g) {
    Rational num = 1, den = 1;
    for (int i = 1; i <= g; ++i) {
        int li = lambda[i - 1] + (epsilon == -1 ? g + 1 - i : g - i);
        int di = epsilon == -1 ? g + 1 - i : g - i;
        for (int j = i + 1; j <= g; ++j) {
            int lj = lambda[j - 1] + (epsilon == -1 ? g + 1 - j : g - j);
            int dj = epsilon == -1 ? g + 1 - j : g - j;
            num *= Rational((li - lj) * (li + lj));
            den *= Rational((di - dj) * (di + dj));
        }
        if (epsilon == -1) {
            num *= li;
            den *= di;
        }
    }
    Rational r = num / den;
    return r.get_num();
}

std::vector<OrthSympClass> small_classes(int epsilon, int max_size) {
    std::vector<OrthSympClass> out;
    for (int a = 0; a <= max_size; ++a)
        for (auto& l : partitions_of(a)) out.push_back(OrthSympClass::basis(epsilon, l));
    return out;
}

}  // namespace

TEST_CASE("restriction and class_to_schur are inverse through degree 8") {
    for (int eps : {-1, 1})
        for (int a = 0; a <= 8; ++a)
            for (auto& lambda : partitions_of(a)) {
                auto x = OrthSympClass::basis(eps, lambda);
                CHECK(restrict_to_classes(class_to_schur(x), eps) == x);
                CHECK(class_to_schur(restrict_to_classes(schur(lambda), eps)) == schur(lambda));
            }
}

TEST_CASE("restriction is unitriangular with Littlewood orientation") {
    // Sp: remove partitions with even columns; O: even rows
    auto sp = restrict_coeffs({1, 1}, -1);
    CHECK(sp.at(Partition{1, 1}) == 1);
    CHECK(sp.at(Partition{}) == 1);
    CHECK(sp.size() == 2);
    auto o = restrict_coeffs({2}, 1);
    CHECK(o.at(Partition{2}) == 1);
    CHECK(o.at(Partition{}) == 1);
    CHECK(restrict_coeffs({1, 1}, 1).size() == 1);
    CHECK(restrict_coeffs({2}, -1).size() == 1);
}

TEST_CASE("restriction preserves dimension (Weyl dimension formula, stable g)") {
    for (int eps : {-1, 1})
        for (int a = 0; a <= 5; ++a)
            for (auto& lambda : partitions_of(a)) {
                int g = 7;
                Integer lhs = schur_dimension(lambda, 2 * g);
                Integer rhs = 0;
                for (auto& [mu, c] : restrict_coeffs(lambda, eps)) rhs += c * weyl_dimension(mu, eps, g);
                CHECK(lhs == rhs);
            }
}

TEST_CASE("dim_irrep matches the Weyl dimension formula") {
    CHECK(dim_irrep({1, 1}, -1, 2) == 5);
    CHECK(dim_irrep({2}, -1, 2) == 10);
    CHECK(dim_irrep({1}, 1, 3) == 6);
    for (int eps : {-1, 1})
        for (int a = 0; a <= 4; ++a)
            for (auto& lambda : partitions_of(a)) CHECK(dim_irrep(lambda, eps, 6) == weyl_dimension(lambda, eps, 6));
    bool warned = false;
    dim_irrep({1, 1, 1}, -1, 1, [&](const std::string&) { warned = true; });
    CHECK(warned);
}

TEST_CASE("nl_product agrees with the restriction of GL products") {
    for (int eps : {-1, 1}) {
        auto xs = small_classes(eps, 3);
        for (auto& x : xs)
            for (auto& y : xs)
                CHECK(nl_product(x, y) ==
                      restrict_to_classes(multiply(class_to_schur(x), class_to_schur(y)), eps));
    }
}

TEST_CASE("nl_product: unit, commutativity, associativity") {
    for (int eps : {-1, 1}) {
        auto xs = small_classes(eps, 3);
        auto one = OrthSympClass::unit(eps);
        for (auto& x : xs) {
            CHECK(nl_product(one, x) == x);
            for (auto& y : xs) CHECK(nl_product(x, y) == nl_product(y, x));
        }
        auto ys = small_classes(eps, 2);
        for (auto& x : ys)
            for (auto& y : ys)
                for (auto& z : ys) CHECK(nl_product(nl_product(x, y), z) == nl_product(x, nl_product(y, z)));
    }
}

TEST_CASE("nl_product matches explicit torus characters in the stable range") {
    std::vector<Rational> sample{Rational(2), Rational(3), Rational(5, 2), Rational(7, 3), Rational(11, 5)};
    for (int eps : {-1, 1}) {
        auto xs = small_classes(eps, 2);
        for (auto& x : xs)
            for (auto& y : xs) {
                auto lx = x.terms().begin()->first, ly = y.terms().begin()->first;
                auto prod = nl_product(x, y);
                Rational lhs = weyl_character(lx, eps, sample) * weyl_character(ly, eps, sample);
                Rational rhs = 0;
                for (auto& [nu, c] : prod.terms()) rhs += c * weyl_character(nu, eps, sample);
                CHECK(lhs == rhs);
            }
    }
}

TEST_CASE("Sp_4 example V_1 (x) V_1") {
    auto v1 = OrthSympClass::basis(-1, {1});
    auto prod = nl_product(v1, v1);
    CHECK(prod == OrthSympClass(-1, {{Partition{2}, 1}, {Partition{1, 1}, 1}, {Partition{}, 1}}));
    Integer dim = 0;
    for (auto& [nu, c] : prod.terms()) dim += c.get_num() * dim_irrep(nu, -1, 2);
    CHECK(dim == 16);
}

TEST_CASE("D relabels and rejects nothing") {
    auto x = D(schur({2, 1}) * Rational(3) + schur({}), 1);
    CHECK(x.coeff({2, 1}) == 3);
    CHECK(x.coeff({}) == 1);
    CHECK(x.epsilon() == 1);
}

TEST_CASE("class series inversion") {
    ClassSeries s(-1, 3);
    s.add_term(0, OrthSympClass::unit(-1));
    s.add_term(1, OrthSympClass::basis(-1, {1}));
    s.add_term(2, OrthSympClass::unit(-1));
    auto inv = class_series_invert(s);
    auto prod = s * inv;
    CHECK(prod.coeff(0) == OrthSympClass::unit(-1));
    for (int k = 1; k <= 3; ++k) CHECK(prod.coeff(k).is_zero());
    CHECK(inv.coeff(1) == OrthSympClass(-1, {{Partition{1}, -1}}));
    CHECK(inv.coeff(2) == OrthSympClass(-1, {{Partition{1, 1}, 1}, {Partition{2}, 1}}));
}

TEST_CASE("restricted plethysms have the dimension of the composite functor") {
    auto pleth = [](const SymFunc& f, const SymFunc& g) {
        return plethysm(f, LambdaSeries::constant(g, 0)).coeff(0);
    };
    auto binom = [](Integer a, int k) {
        Integer r = 1;
        for (int i = 0; i < k; ++i) r = r * (a - i) / (i + 1);
        return r;
    };
    for (int g = 6; g <= 8; ++g) {
        Integer N = 2 * g;
        auto dim = [&](const OrthSympClass& x, int eps) {
            Integer d = 0;
            for (auto& [l, c] : x.terms()) d += c.get_num() * dim_irrep(l, eps, g);
            return d;
        };
        // Lambda^2 Lambda^3 over Sp, Sym^2 Sym^3 and Sym^3 Sym^2 over O
        CHECK(dim(restrict_to_classes(pleth(e(2), e(3)), -1), -1) == binom(binom(N, 3), 2));
        CHECK(dim(restrict_to_classes(pleth(h(2), h(3)), 1), 1) == binom(binom(N + 2, 3) + 1, 2));
        CHECK(dim(restrict_to_classes(pleth(h(3), h(2)), 1), 1) == binom(binom(N + 1, 2) + 2, 3));
    }
    CHECK(restrict_to_classes(pleth(e(2), e(3)), -1) ==
          OrthSympClass(-1, {{Partition{1, 1, 1, 1, 1, 1}, 1}, {Partition{1, 1, 1, 1}, 2}, {Partition{1, 1}, 3},
                             {Partition{}, 2}, {Partition{2, 2, 1, 1}, 1}, {Partition{2, 2}, 1},
                             {Partition{2, 1, 1}, 1}}));
    CHECK(restrict_to_classes(pleth(h(2), h(3)), 1) ==
          OrthSympClass(1, {{Partition{}, 2}, {Partition{2}, 3}, {Partition{4}, 2}, {Partition{3, 1}, 1},
                            {Partition{2, 2}, 1}, {Partition{6}, 1}, {Partition{4, 2}, 1}}));
}
