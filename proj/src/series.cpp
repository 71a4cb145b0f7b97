#include "torelli/series.hpp"

#include <algorithm>

#include "torelli/errors.hpp"

namespace torelli {

LambdaSeries::LambdaSeries(std::map<int, SymFunc> terms, int truncation) : trunc_(truncation) {
    for (auto& [k, f] : terms)
        if (k <= trunc_ && !f.is_zero()) terms_.emplace(k, f);
}

LambdaSeries LambdaSeries::constant(const SymFunc& f, int truncation) {
    return monomial(f, 0, truncation);
}

LambdaSeries LambdaSeries::monomial(const SymFunc& f, int exponent, int truncation) {
    LambdaSeries s(truncation);
    s.add_term(exponent, f);
    return s;
}

SymFunc LambdaSeries::coeff(int k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? SymFunc() : it->second;
}

void LambdaSeries::add_term(int k, const SymFunc& f) {
    if (k > trunc_ || f.is_zero()) return;
    auto [it, inserted] = terms_.emplace(k, f);
    if (!inserted) {
        it->second += f;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

std::optional<int> LambdaSeries::valuation() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.begin()->first;
}

LambdaSeries LambdaSeries::truncated(int d) const {
    LambdaSeries out(std::min(d, trunc_));
    for (const auto& [k, f] : terms_) out.add_term(k, f);
    return out;
}

LambdaSeries LambdaSeries::weight_truncated(int w) const {
    LambdaSeries out(trunc_);
    for (const auto& [k, f] : terms_) out.add_term(k, f.truncate_degree(w));
    return out;
}

LambdaSeries& LambdaSeries::operator+=(const LambdaSeries& o) {
    trunc_ = std::min(trunc_, o.trunc_);
    std::erase_if(terms_, [this](const auto& kv) { return kv.first > trunc_; });
    for (const auto& [k, f] : o.terms_) add_term(k, f);
    return *this;
}

LambdaSeries& LambdaSeries::operator-=(const LambdaSeries& o) {
    trunc_ = std::min(trunc_, o.trunc_);
    std::erase_if(terms_, [this](const auto& kv) { return kv.first > trunc_; });
    for (const auto& [k, f] : o.terms_) add_term(k, -f);
    return *this;
}

LambdaSeries& LambdaSeries::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, f] : terms_) f *= c;
    return *this;
}

int product_truncation(int d1, std::optional<int> v1, int d2, std::optional<int> v2) {
    int a = d1 + std::min(v2.value_or(0), 0);
    int b = d2 + std::min(v1.value_or(0), 0);
    return std::min(a, b);
}

LambdaSeries operator*(const LambdaSeries& a, const LambdaSeries& b) {
    LambdaSeries out(product_truncation(a.trunc_, a.valuation(), b.trunc_, b.valuation()));
    for (const auto& [i, f] : a.terms_)
        for (const auto& [j, g] : b.terms_)
            if (i + j <= out.trunc_) out.add_term(i + j, multiply(f, g));
    return out;
}

LambdaSeries omega(const LambdaSeries& s) {
    LambdaSeries out(s.truncation());
    for (const auto& [k, f] : s.terms()) out.add_term(k, omega(f));
    return out;
}

namespace {

// Series with power-sum coefficients.
struct PSeries {
    std::map<int, PowerSumPoly> terms;
    int trunc = 0;

    std::optional<int> valuation() const {
        for (const auto& [k, f] : terms)
            if (!f.empty()) return k;
        return std::nullopt;
    }
};

PSeries to_pseries(const LambdaSeries& g) {
    PSeries out;
    out.trunc = g.truncation();
    for (const auto& [k, f] : g.terms()) {
        auto ps = to_power_sum(f);
        if (!ps.empty()) out.terms[k] = std::move(ps);
    }
    return out;
}

void add_into(PowerSumPoly& acc, const Partition& mu, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = acc.emplace(mu, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) acc.erase(it);
    }
}

PSeries pmul(const PSeries& a, const PSeries& b, std::optional<int> max_weight) {
    PSeries out;
    out.trunc = product_truncation(a.trunc, a.valuation(), b.trunc, b.valuation());
    for (const auto& [i, f] : a.terms)
        for (const auto& [j, g] : b.terms) {
            if (i + j > out.trunc) continue;
            auto& acc = out.terms[i + j];
            for (const auto& [m1, c1] : f)
                for (const auto& [m2, c2] : g) {
                    if (max_weight && m1.size() + m2.size() > *max_weight) continue;
                    add_into(acc, join(m1, m2), c1 * c2);
                }
        }
    std::erase_if(out.terms, [](const auto& kv) { return kv.second.empty(); });
    return out;
}

// p_k o G: p_m -> p_{km}, t -> t^k.
PSeries adams(const PSeries& g, int k, std::optional<int> max_weight) {
    PSeries out;
    out.trunc = g.trunc;
    for (const auto& [e, f] : g.terms) {
        if (k * e > out.trunc) continue;
        auto& acc = out.terms[k * e];
        for (const auto& [mu, c] : f) {
            if (max_weight && k * mu.size() > *max_weight) continue;
            add_into(acc, scale(mu, k), c);
        }
    }
    std::erase_if(out.terms, [](const auto& kv) { return kv.second.empty(); });
    return out;
}

PSeries pone(int trunc) {
    PSeries out;
    out.trunc = trunc;
    if (trunc >= 0) out.terms[0][Partition{}] = 1;
    return out;
}

LambdaSeries from_pseries(const PSeries& g) {
    LambdaSeries out(g.trunc);
    for (const auto& [k, f] : g.terms) out.add_term(k, from_power_sum(f));
    return out;
}

// Evaluates sum_mu c_mu prod_i (p_{mu_i} o G), reusing prefix products.
class PlethysmEvaluator {
public:
    PlethysmEvaluator(const LambdaSeries& g, std::optional<int> max_weight)
        : g_(to_pseries(g)), max_weight_(max_weight) {}

    const PSeries& power(const Partition& mu) {
        auto it = products_.find(mu);
        if (it != products_.end()) return it->second;
        PSeries val;
        if (mu.empty()) {
            val = pone(g_.trunc);
        } else {
            // drop the smallest part
            std::vector<int> parts = mu.parts();
            int k = parts.back();
            parts.pop_back();
            PSeries prefix = power(Partition(parts));
            val = pmul(prefix, adams_of(k), max_weight_);
        }
        return products_.emplace(mu, std::move(val)).first->second;
    }

    int truncation() const { return g_.trunc; }

private:
    const PSeries& adams_of(int k) {
        auto it = adams_.find(k);
        if (it != adams_.end()) return it->second;
        return adams_.emplace(k, adams(g_, k, max_weight_)).first->second;
    }

    PSeries g_;
    std::optional<int> max_weight_;
    std::map<int, PSeries> adams_;
    std::map<Partition, PSeries> products_;
};

void accumulate(PSeries& acc, const PSeries& term, const Rational& c) {
    acc.trunc = std::min(acc.trunc, term.trunc);
    for (const auto& [k, f] : term.terms) {
        if (k > acc.trunc) continue;
        auto& dst = acc.terms[k];
        for (const auto& [mu, v] : f) add_into(dst, mu, v * c);
    }
    std::erase_if(acc.terms, [&](const auto& kv) { return kv.second.empty() || kv.first > acc.trunc; });
}

}  // namespace

LambdaSeries plethysm(const SymFunc& f, const LambdaSeries& g, std::optional<int> max_weight) {
    PlethysmEvaluator ev(g, max_weight);
    PSeries acc;
    acc.trunc = g.truncation();
    for (const auto& [mu, c] : to_power_sum(f)) accumulate(acc, ev.power(mu), c);
    return from_pseries(acc);
}

LambdaSeries exp_h(const LambdaSeries& g, std::optional<int> max_weight) {
    auto v = g.valuation();
    if (v && *v < 1)
        throw PlethysmDivergence("exp_h needs an argument of positive t-valuation");
    int d = g.truncation();
    PlethysmEvaluator ev(g, max_weight);
    PSeries acc = pone(d);
    // h_q o g has valuation >= q, so q <= d suffices.
    for (int q = 1; q <= d; ++q) {
        for (const auto& mu : partitions_of(q))
            accumulate(acc, ev.power(mu), Rational(1) / Rational(static_cast<long>(z_lambda(mu))));
    }
    return from_pseries(acc);
}

LambdaSeries series_invert(const LambdaSeries& g) {
    auto v = g.valuation();
    if (!v || *v != 0) throw NotAUnit("series has no invertible constant term");
    SymFunc c0 = g.coeff(0);
    if (!c0.is_scalar()) throw NotAUnit("constant term is not a scalar");
    Rational inv0 = Rational(1) / c0.scalar_part();
    int d = g.truncation();
    LambdaSeries out(d);
    std::map<int, SymFunc> res;
    res[0] = SymFunc(inv0);
    for (int k = 1; k <= d; ++k) {
        SymFunc acc;
        for (const auto& [j, gj] : g.terms()) {
            if (j < 1 || j > k) continue;
            auto it = res.find(k - j);
            if (it != res.end()) acc += multiply(gj, it->second);
        }
        acc *= -inv0;
        res[k] = acc;
    }
    for (auto& [k, f] : res) out.add_term(k, f);
    return out;
}

}  // namespace torelli
