#include "torelli/branching.hpp"

#include <mutex>

#include "torelli/errors.hpp"

namespace torelli {

OrthSympClass::OrthSympClass(int epsilon, Terms terms) : epsilon_(epsilon) {
    for (auto& [k, v] : terms) add_term(k, v);
}

OrthSympClass OrthSympClass::basis(int epsilon, const Partition& lambda) {
    OrthSympClass x(epsilon);
    x.add_term(lambda, 1);
    return x;
}

Rational OrthSympClass::coeff(const Partition& lambda) const {
    auto it = terms_.find(lambda);
    return it == terms_.end() ? Rational(0) : it->second;
}

void OrthSympClass::add_term(const Partition& lambda, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(lambda, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

OrthSympClass& OrthSympClass::operator+=(const OrthSympClass& o) {
    if (!o.is_zero() && !is_zero() && o.epsilon_ != epsilon_)
        throw EpsilonMismatch("adding classes of different type");
    if (is_zero()) epsilon_ = o.epsilon_;
    for (const auto& [k, v] : o.terms_) add_term(k, v);
    return *this;
}

OrthSympClass& OrthSympClass::operator-=(const OrthSympClass& o) {
    if (!o.is_zero() && !is_zero() && o.epsilon_ != epsilon_)
        throw EpsilonMismatch("subtracting classes of different type");
    if (is_zero()) epsilon_ = o.epsilon_;
    for (const auto& [k, v] : o.terms_) add_term(k, -v);
    return *this;
}

OrthSympClass& OrthSympClass::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, v] : terms_) v *= c;
    return *this;
}

namespace {

std::mutex g_branch_mutex;
std::map<std::pair<Partition, int>, std::map<Partition, std::int64_t>> g_restrict_memo;
std::map<std::pair<Partition, int>, SymFunc> g_class_memo;

std::vector<Partition> partitions_up_to(int n) {
    std::vector<Partition> out;
    for (int k = 0; k <= n; ++k)
        for (auto& p : partitions_of(k)) out.push_back(p);
    return out;
}

}  // namespace

std::map<Partition, std::int64_t> restrict_coeffs(const Partition& lambda, int epsilon) {
    auto key = std::make_pair(lambda, epsilon);
    {
        std::lock_guard<std::mutex> lock(g_branch_mutex);
        auto it = g_restrict_memo.find(key);
        if (it != g_restrict_memo.end()) return it->second;
    }
    std::map<Partition, std::int64_t> out;
    for (int k = 0; k <= lambda.size(); k += 2)
        for (const auto& delta : partitions_of(k)) {
            if (!lambda.contains(delta)) continue;
            if (epsilon == 1 ? !even_rows(delta) : !even_columns(delta)) continue;
            for (const auto& mu : partitions_of(lambda.size() - k)) {
                std::int64_t c = lr_coefficient(lambda, mu, delta);
                if (c) out[mu] += c;
            }
        }
    std::lock_guard<std::mutex> lock(g_branch_mutex);
    g_restrict_memo.emplace(key, out);
    return out;
}

OrthSympClass D(const SymFunc& f, int epsilon) {
    return OrthSympClass(epsilon, OrthSympClass::Terms(f.terms().begin(), f.terms().end()));
}

namespace {

// Schur expansion of s_<lambda>: s_lambda - sum_{mu != lambda} a_{lambda,mu} s_<mu>.
SymFunc class_basis_to_schur(const Partition& lambda, int epsilon) {
    auto key = std::make_pair(lambda, epsilon);
    {
        std::lock_guard<std::mutex> lock(g_branch_mutex);
        auto it = g_class_memo.find(key);
        if (it != g_class_memo.end()) return it->second;
    }
    SymFunc out = schur(lambda);
    for (const auto& [mu, a] : restrict_coeffs(lambda, epsilon))
        if (mu != lambda) out -= class_basis_to_schur(mu, epsilon) * Rational(static_cast<long>(a));
    std::lock_guard<std::mutex> lock(g_branch_mutex);
    g_class_memo.emplace(key, out);
    return out;
}

}  // namespace

SymFunc class_to_schur(const OrthSympClass& x) {
    SymFunc out;
    for (const auto& [lam, c] : x.terms()) out += class_basis_to_schur(lam, x.epsilon()) * c;
    return out;
}

OrthSympClass restrict_to_classes(const SymFunc& f, int epsilon) {
    OrthSympClass out(epsilon);
    for (const auto& [lam, c] : f.terms())
        for (const auto& [mu, a] : restrict_coeffs(lam, epsilon))
            out.add_term(mu, c * Rational(static_cast<long>(a)));
    return out;
}

std::int64_t nl_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
    // N = sum_{alpha,beta,gamma} c^lambda_{alpha beta} c^mu_{alpha gamma} c^nu_{beta gamma}
    std::int64_t total = 0;
    int sa2 = lambda.size() + mu.size() - nu.size();
    if (sa2 < 0 || sa2 % 2) return 0;
    int sa = sa2 / 2;
    int sb = lambda.size() - sa, sg = mu.size() - sa;
    if (sb < 0 || sg < 0) return 0;
    for (const auto& alpha : partitions_of(sa)) {
        if (!lambda.contains(alpha) || !mu.contains(alpha)) continue;
        for (const auto& beta : partitions_of(sb)) {
            std::int64_t c1 = lr_coefficient(lambda, alpha, beta);
            if (!c1) continue;
            for (const auto& gamma : partitions_of(sg)) {
                std::int64_t c2 = lr_coefficient(mu, alpha, gamma);
                if (!c2) continue;
                std::int64_t c3 = lr_coefficient(nu, beta, gamma);
                total += c1 * c2 * c3;
            }
        }
    }
    return total;
}

OrthSympClass nl_product(const OrthSympClass& x, const OrthSympClass& y) {
    if (!x.is_zero() && !y.is_zero() && x.epsilon() != y.epsilon())
        throw EpsilonMismatch("stable product of classes of different type");
    OrthSympClass out(x.is_zero() ? y.epsilon() : x.epsilon());
    for (const auto& [lam, a] : x.terms())
        for (const auto& [mu, b] : y.terms()) {
            if (lam.empty() || mu.empty()) {
                out.add_term(lam.empty() ? mu : lam, a * b);
                continue;
            }
            for (const auto& nu : partitions_up_to(lam.size() + mu.size())) {
                if ((nu.size() + lam.size() + mu.size()) % 2) continue;
                std::int64_t c = nl_coefficient(lam, mu, nu);
                if (c) out.add_term(nu, a * b * Rational(static_cast<long>(c)));
            }
        }
    return out;
}

Integer schur_dimension(const Partition& mu, int N) {
    Integer num = 1, den = 1;
    Partition conj = conjugate(mu);
    for (int i = 0; i < mu.length(); ++i)
        for (int j = 0; j < mu[i]; ++j) {
            num *= N + j - i;
            den *= (mu[i] - j - 1) + (conj[j] - i - 1) + 1;
        }
    return num / den;
}

Integer dim_irrep(const Partition& lambda, int epsilon, int g,
                  const std::function<void(const std::string&)>& warn) {
    if (2 * lambda.size() > 2 * g && warn)
        warn("V[" + to_string(lambda) + "] is outside the stable range for g=" +
             std::to_string(g) + "; dimension is formal");
    Rational total = 0;
    auto expansion = class_basis_to_schur(lambda, epsilon);
    for (const auto& [mu, c] : expansion.terms())
        total += c * Rational(schur_dimension(mu, 2 * g));
    return total.get_num();
}

OrthSympClass ClassSeries::coeff(int k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? OrthSympClass(epsilon_) : it->second;
}

void ClassSeries::add_term(int k, const OrthSympClass& x) {
    if (k > trunc_ || x.is_zero()) return;
    if (x.epsilon() != epsilon_) throw EpsilonMismatch("class series of different type");
    auto [it, inserted] = terms_.emplace(k, x);
    if (!inserted) {
        it->second += x;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

std::optional<int> ClassSeries::valuation() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.begin()->first;
}

ClassSeries operator*(const ClassSeries& a, const ClassSeries& b) {
    if (a.epsilon_ != b.epsilon_) throw EpsilonMismatch("class series of different type");
    ClassSeries out(a.epsilon_,
                    product_truncation(a.trunc_, a.valuation(), b.trunc_, b.valuation()));
    for (const auto& [i, x] : a.terms_)
        for (const auto& [j, y] : b.terms_)
            if (i + j <= out.trunc_) out.add_term(i + j, nl_product(x, y));
    return out;
}

ClassSeries D_series(const LambdaSeries& s, int epsilon) {
    ClassSeries out(epsilon, s.truncation());
    for (const auto& [k, f] : s.terms()) out.add_term(k, D(f, epsilon));
    return out;
}

ClassSeries scalar_times(const LambdaSeries& scalar_series, const ClassSeries& s) {
    ClassSeries sc(s.epsilon(), scalar_series.truncation());
    for (const auto& [k, f] : scalar_series.terms()) {
        if (!f.is_scalar()) throw std::invalid_argument("scalar_times: non-scalar coefficient");
        sc.add_term(k, OrthSympClass::unit(s.epsilon()) *= f.scalar_part());
    }
    return sc * s;
}

ClassSeries class_series_invert(const ClassSeries& s) {
    auto v = s.valuation();
    if (!v || *v != 0) throw NotAUnit("class series has no invertible constant term");
    OrthSympClass c0 = s.coeff(0);
    if (c0.terms().size() != 1 || !c0.terms().begin()->first.empty())
        throw NotAUnit("constant term is not a scalar");
    Rational inv0 = Rational(1) / c0.terms().begin()->second;
    int eps = s.epsilon();
    ClassSeries out(eps, s.truncation());
    std::map<int, OrthSympClass> res;
    res[0] = OrthSympClass::unit(eps) *= inv0;
    for (int k = 1; k <= s.truncation(); ++k) {
        OrthSympClass acc(eps);
        for (const auto& [j, x] : s.terms()) {
            if (j < 1 || j > k) continue;
            acc += nl_product(x, res[k - j]);
        }
        acc *= -inv0;
        res[k] = acc;
    }
    for (auto& [k, x] : res) out.add_term(k, x);
    return out;
}

}  // namespace torelli
