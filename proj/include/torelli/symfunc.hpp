#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "torelli/partition.hpp"
#include "torelli/rational.hpp"

namespace torelli {

// Element of the ring of symmetric functions, stored in the Schur basis.
class SymFunc {
public:
    using Terms = std::map<Partition, Rational>;

    SymFunc() = default;
    explicit SymFunc(Terms terms);
    SymFunc(const Rational& scalar);  // NOLINT: scalars embed as multiples of s_0
    SymFunc(long scalar) : SymFunc(Rational(scalar)) {}

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coeff(const Partition& lambda) const;
    void add_term(const Partition& lambda, const Rational& c);

    // True if the element lies in degree 0, i.e. is a rational number.
    bool is_scalar() const;
    Rational scalar_part() const { return coeff(Partition{}); }
    int max_degree() const;  // -1 for zero

    SymFunc homogeneous_part(int degree) const;
    SymFunc truncate_degree(int max_degree) const;

    SymFunc& operator+=(const SymFunc& o);
    SymFunc& operator-=(const SymFunc& o);
    SymFunc& operator*=(const Rational& c);

    friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
    friend SymFunc operator-(SymFunc a, const SymFunc& b) { return a -= b; }
    friend SymFunc operator-(SymFunc a) { return a *= Rational(-1); }
    friend SymFunc operator*(SymFunc a, const Rational& c) { return a *= c; }
    friend SymFunc operator*(const Rational& c, SymFunc a) { return a *= c; }
    friend SymFunc operator*(const SymFunc& a, const SymFunc& b);
    friend bool operator==(const SymFunc& a, const SymFunc& b) { return a.terms_ == b.terms_; }

private:
    Terms terms_;
};

SymFunc schur(const Partition& lambda);
SymFunc h(int k);
SymFunc e(int k);
SymFunc p(int k);

// Products h_{l1} h_{l2} ..., and likewise for e and p.
SymFunc h_monomial(const Partition& lambda);
SymFunc e_monomial(const Partition& lambda);
SymFunc p_monomial(const Partition& lambda);

// Parses products like "h3*e2*p1^2" with optional leading rational, e.g. "2*h2".
SymFunc change_basis(const std::string& hep_monomial);

// c^lambda_{mu nu}: coefficient of s_lambda in s_mu s_nu.
std::int64_t lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

SymFunc multiply(const SymFunc& f, const SymFunc& g);
SymFunc omega(const SymFunc& f);

// Power-sum basis, used internally for plethysm and as a test route.
using PowerSumPoly = std::map<Partition, Rational>;
PowerSumPoly to_power_sum(const SymFunc& f);
SymFunc from_power_sum(const PowerSumPoly& f);
PowerSumPoly multiply(const PowerSumPoly& a, const PowerSumPoly& b);

}  // namespace torelli
