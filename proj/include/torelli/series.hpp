#pragma once

#include <map>
#include <optional>

#include "torelli/symfunc.hpp"

namespace torelli {

// Truncated Laurent series in t with coefficients in the ring of symmetric functions.
// Coefficients of t^k for k > truncation() are unknown.
class LambdaSeries {
public:
    LambdaSeries() = default;
    explicit LambdaSeries(int truncation) : trunc_(truncation) {}
    LambdaSeries(std::map<int, SymFunc> terms, int truncation);

    static LambdaSeries constant(const SymFunc& f, int truncation);
    static LambdaSeries monomial(const SymFunc& f, int exponent, int truncation);

    const std::map<int, SymFunc>& terms() const { return terms_; }
    int truncation() const { return trunc_; }
    SymFunc coeff(int k) const;
    void add_term(int k, const SymFunc& f);

    // Smallest exponent with a nonzero coefficient; nullopt for the zero series.
    std::optional<int> valuation() const;
    LambdaSeries truncated(int d) const;
    // Keeps only Schur terms of weight <= w.
    LambdaSeries weight_truncated(int w) const;

    LambdaSeries& operator+=(const LambdaSeries& o);
    LambdaSeries& operator-=(const LambdaSeries& o);
    LambdaSeries& operator*=(const Rational& c);

    friend LambdaSeries operator+(LambdaSeries a, const LambdaSeries& b) { return a += b; }
    friend LambdaSeries operator-(LambdaSeries a, const LambdaSeries& b) { return a -= b; }
    friend LambdaSeries operator*(const LambdaSeries& a, const LambdaSeries& b);
    friend bool operator==(const LambdaSeries& a, const LambdaSeries& b) {
        return a.trunc_ == b.trunc_ && a.terms_ == b.terms_;
    }

private:
    std::map<int, SymFunc> terms_;
    int trunc_ = 0;
};

// Precision of a product of series known to d1, d2 with valuations v1, v2.
int product_truncation(int d1, std::optional<int> v1, int d2, std::optional<int> v2);

LambdaSeries omega(const LambdaSeries& s);

// f o g with p_k o t = t^k and no extra signs. max_weight drops Schur terms above that weight.
LambdaSeries plethysm(const SymFunc& f, const LambdaSeries& g,
                      std::optional<int> max_weight = std::nullopt);

// sum_q h_q o g; needs valuation(g) >= 1.
LambdaSeries exp_h(const LambdaSeries& g, std::optional<int> max_weight = std::nullopt);

LambdaSeries series_invert(const LambdaSeries& g);

}  // namespace torelli
