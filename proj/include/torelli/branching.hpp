#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>

#include "torelli/series.hpp"
#include "torelli/symfunc.hpp"

namespace torelli {

// Formal combination of the stable classes V_lambda = s_<lambda> for O (epsilon = +1)
// or Sp (epsilon = -1).
class OrthSympClass {
public:
    using Terms = std::map<Partition, Rational>;

    OrthSympClass() = default;
    explicit OrthSympClass(int epsilon) : epsilon_(epsilon) {}
    OrthSympClass(int epsilon, Terms terms);

    static OrthSympClass unit(int epsilon) { return basis(epsilon, Partition{}); }
    static OrthSympClass basis(int epsilon, const Partition& lambda);

    int epsilon() const { return epsilon_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coeff(const Partition& lambda) const;
    void add_term(const Partition& lambda, const Rational& c);

    OrthSympClass& operator+=(const OrthSympClass& o);
    OrthSympClass& operator-=(const OrthSympClass& o);
    OrthSympClass& operator*=(const Rational& c);
    friend OrthSympClass operator+(OrthSympClass a, const OrthSympClass& b) { return a += b; }
    friend OrthSympClass operator-(OrthSympClass a, const OrthSympClass& b) { return a -= b; }
    friend bool operator==(const OrthSympClass& a, const OrthSympClass& b) {
        return a.epsilon_ == b.epsilon_ && a.terms_ == b.terms_;
    }

private:
    int epsilon_ = -1;
    Terms terms_;
};

// a_{lambda,mu}: multiplicity of V_mu in the restriction of the GL-irreducible S_lambda.
std::map<Partition, std::int64_t> restrict_coeffs(const Partition& lambda, int epsilon);

// Basis relabelling s_lambda -> s_<lambda>.
OrthSympClass D(const SymFunc& f, int epsilon);

// The element of the ring of symmetric functions represented by x (Schur expansion).
SymFunc class_to_schur(const OrthSympClass& x);

// Expansion of f in the s_<lambda> basis; inverse of class_to_schur. On a GL-character this
// is stable restriction to O or Sp.
OrthSympClass restrict_to_classes(const SymFunc& f, int epsilon);

// Stable tensor product via the triple Littlewood-Richardson sum.
OrthSympClass nl_product(const OrthSympClass& x, const OrthSympClass& y);
std::int64_t nl_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

// Evaluation of class_to_schur(s_<lambda>) on the 2g-dimensional defining representation.
// Outside 2|lambda| <= 2g the value is formal and the warning hook (if any) is called.
Integer dim_irrep(const Partition& lambda, int epsilon, int g,
                  const std::function<void(const std::string&)>& warn = {});

// s_mu(1^N) by the hook-content formula.
Integer schur_dimension(const Partition& mu, int N);

// Series with OrthSympClass coefficients; multiplication is the stable tensor product.
class ClassSeries {
public:
    ClassSeries() = default;
    ClassSeries(int epsilon, int truncation) : epsilon_(epsilon), trunc_(truncation) {}

    int epsilon() const { return epsilon_; }
    int truncation() const { return trunc_; }
    const std::map<int, OrthSympClass>& terms() const { return terms_; }
    OrthSympClass coeff(int k) const;
    void add_term(int k, const OrthSympClass& x);
    std::optional<int> valuation() const;

    friend ClassSeries operator*(const ClassSeries& a, const ClassSeries& b);
    friend bool operator==(const ClassSeries& a, const ClassSeries& b) {
        return a.epsilon_ == b.epsilon_ && a.trunc_ == b.trunc_ && a.terms_ == b.terms_;
    }

private:
    int epsilon_ = -1;
    int trunc_ = 0;
    std::map<int, OrthSympClass> terms_;
};

ClassSeries D_series(const LambdaSeries& s, int epsilon);
ClassSeries scalar_times(const LambdaSeries& scalar_series, const ClassSeries& s);
ClassSeries class_series_invert(const ClassSeries& s);

}  // namespace torelli
