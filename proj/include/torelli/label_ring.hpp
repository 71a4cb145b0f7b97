#pragma once

#include <map>
#include <string>
#include <vector>

#include "torelli/rational.hpp"
#include "torelli/series.hpp"

namespace torelli {

// Window of Pontryagin indices present in the label algebra for half-dimension n.
int pontryagin_min(int n);  // ceil((n+1)/4)
int pontryagin_max(int n);  // n-1

// Monomial e^a * prod p_i^{b_i} in Q[e, p_{ceil((n+1)/4)}, ..., p_{n-1}].
class LabelMonomial {
public:
    LabelMonomial() = default;
    explicit LabelMonomial(int n, int e_exp = 0, std::map<int, int> p_exps = {});

    static LabelMonomial one(int n) { return LabelMonomial(n); }
    static LabelMonomial euler(int n) { return LabelMonomial(n, 1); }
    static LabelMonomial pontryagin(int n, int i) { return LabelMonomial(n, 0, {{i, 1}}); }

    int n() const { return n_; }
    int e_exponent() const { return e_; }
    const std::map<int, int>& p_exponents() const { return p_; }
    int degree() const;
    bool is_one() const { return e_ == 0 && p_.empty(); }

    friend LabelMonomial operator*(const LabelMonomial& a, const LabelMonomial& b);
    friend auto operator<=>(const LabelMonomial& a, const LabelMonomial& b) {
        if (auto c = a.degree() <=> b.degree(); c != 0) return c;
        if (auto c = a.e_ <=> b.e_; c != 0) return c;
        return a.p_ <=> b.p_;
    }
    friend bool operator==(const LabelMonomial& a, const LabelMonomial& b) {
        return a.n_ == b.n_ && a.e_ == b.e_ && a.p_ == b.p_;
    }

private:
    int n_ = 1;
    int e_ = 0;
    std::map<int, int> p_;
};

// "1", "e", "e^2*p1", "p1^2*p2".
std::string to_string(const LabelMonomial& c);
LabelMonomial parse_label(const std::string& text, int n);

// Monomial basis B in a given degree.
std::vector<LabelMonomial> monomials_of_degree(int n, int degree);

enum class PoincareSelector { All, AboveTwoN, AtLeastN, Positive };

// Poincare series of the label algebra (or the selected part of it) to order trunc.
LambdaSeries poincare_series(int n, PoincareSelector selector, int trunc);

// h_0 P(V_{>2n}) t^{-2n} + h_1 P(V_{>=n}) t^{-n} + h_2 P(V_{>0}) + sum_{q>=3} h_q P(V) t^{n(q-2)}.
LambdaSeries ch_B(int n, int trunc);

// Polynomial in p_1, p_2, ...; key lists exponents of p_1..p_k.
using PontryaginPoly = std::map<std::vector<int>, Rational>;

// Hirzebruch L-polynomial from the multiplicative sequence of sqrt(z)/tanh(sqrt(z)).
PontryaginPoly l_class(int i);
std::string to_string(const PontryaginPoly& poly);

using LabelPoly = std::map<LabelMonomial, Rational>;
// Image of L_i in the label algebra: p_j -> 0 below the window or above n, p_n -> e^2.
LabelPoly l_class_image(int i, int n);

}  // namespace torelli
