#include "torelli/symfunc.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <tuple>

#include "torelli/symgroup.hpp"

namespace torelli {

SymFunc::SymFunc(Terms terms) {
    for (auto& [k, v] : terms)
        if (v != 0) terms_.emplace(k, v);
}

SymFunc::SymFunc(const Rational& scalar) {
    if (scalar != 0) terms_.emplace(Partition{}, scalar);
}

Rational SymFunc::coeff(const Partition& lambda) const {
    auto it = terms_.find(lambda);
    return it == terms_.end() ? Rational(0) : it->second;
}

void SymFunc::add_term(const Partition& lambda, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(lambda, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

bool SymFunc::is_scalar() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

int SymFunc::max_degree() const {
    int d = -1;
    for (const auto& [k, v] : terms_) d = std::max(d, k.size());
    return d;
}

SymFunc SymFunc::homogeneous_part(int degree) const {
    SymFunc out;
    for (const auto& [k, v] : terms_)
        if (k.size() == degree) out.terms_.emplace(k, v);
    return out;
}

SymFunc SymFunc::truncate_degree(int max_degree) const {
    SymFunc out;
    for (const auto& [k, v] : terms_)
        if (k.size() <= max_degree) out.terms_.emplace(k, v);
    return out;
}

SymFunc& SymFunc::operator+=(const SymFunc& o) {
    for (const auto& [k, v] : o.terms_) add_term(k, v);
    return *this;
}

SymFunc& SymFunc::operator-=(const SymFunc& o) {
    for (const auto& [k, v] : o.terms_) add_term(k, -v);
    return *this;
}

SymFunc& SymFunc::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, v] : terms_) v *= c;
    return *this;
}

SymFunc operator*(const SymFunc& a, const SymFunc& b) { return multiply(a, b); }

SymFunc schur(const Partition& lambda) { return SymFunc(SymFunc::Terms{{lambda, Rational(1)}}); }
SymFunc h(int k) { return k < 0 ? SymFunc() : schur(Partition{k}); }
SymFunc e(int k) {
    return k < 0 ? SymFunc() : schur(Partition(std::vector<int>(k, 1)));
}
SymFunc p(int k) { return p_monomial(Partition{k}); }

SymFunc h_monomial(const Partition& lambda) {
    SymFunc out(1);
    for (int k : lambda.parts()) out = multiply(out, h(k));
    return out;
}

SymFunc e_monomial(const Partition& lambda) {
    SymFunc out(1);
    for (int k : lambda.parts()) out = multiply(out, e(k));
    return out;
}

SymFunc p_monomial(const Partition& lambda) { return from_power_sum(PowerSumPoly{{lambda, 1}}); }

SymFunc change_basis(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    SymFunc out(1);
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t next = s.find('*', pos);
        std::string tok = s.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
        pos = next == std::string::npos ? s.size() : next + 1;
        if (tok.empty()) throw std::invalid_argument("bad h/e/p monomial: " + text);
        char b = tok[0];
        if (b != 'h' && b != 'e' && b != 'p') {
            out *= Rational(tok);
            continue;
        }
        auto caret = tok.find('^');
        int k = std::stoi(tok.substr(1, caret == std::string::npos ? std::string::npos : caret - 1));
        int m = caret == std::string::npos ? 1 : std::stoi(tok.substr(caret + 1));
        if (k < 0 || m < 0) throw std::invalid_argument("negative exponent in " + text);
        Partition lam(std::vector<int>(m, k));
        SymFunc f = b == 'h' ? h_monomial(lam) : b == 'e' ? e_monomial(lam) : p_monomial(lam);
        out = multiply(out, f);
    }
    return out;
}

namespace {

// Counts LR tableaux of shape lambda/mu and content nu, filling cells in reading order
// (rows top to bottom, each row right to left).
struct LRCounter {
    const Partition& lambda;
    const Partition& mu;
    const Partition& nu;
    std::vector<std::pair<int, int>> cells;
    std::vector<std::vector<int>> fill;
    std::vector<int> count;
    std::int64_t total = 0;

    LRCounter(const Partition& l, const Partition& m, const Partition& n)
        : lambda(l), mu(m), nu(n) {
        fill.resize(l.length());
        for (int i = 0; i < l.length(); ++i) {
            fill[i].assign(l[i], 0);
            for (int j = l[i] - 1; j >= mu[i]; --j) cells.emplace_back(i, j);
        }
        count.assign(n.length() + 1, 0);
    }

    void run(std::size_t idx) {
        if (idx == cells.size()) {
            ++total;
            return;
        }
        auto [i, j] = cells[idx];
        int hi = nu.length();
        if (j + 1 < lambda[i] && j + 1 >= mu[i]) hi = std::min(hi, fill[i][j + 1]);
        int lo = 1;
        if (i > 0 && j >= mu[i - 1]) lo = fill[i - 1][j] + 1;
        for (int v = lo; v <= hi; ++v) {
            if (count[v] >= nu[v - 1]) continue;
            if (v > 1 && count[v] + 1 > count[v - 1]) continue;
            ++count[v];
            fill[i][j] = v;
            run(idx + 1);
            --count[v];
        }
        fill[i][j] = 0;
    }
};

std::mutex g_lr_mutex;
std::map<std::tuple<Partition, Partition, Partition>, std::int64_t> g_lr_memo;

}  // namespace

std::int64_t lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
    if (mu.size() + nu.size() != lambda.size()) return 0;
    if (!lambda.contains(mu) || !lambda.contains(nu)) return 0;
    if (nu.empty() || mu.empty()) return 1;
    // c is symmetric in mu, nu; key on the ordered pair to share work.
    auto key = mu < nu ? std::make_tuple(lambda, mu, nu) : std::make_tuple(lambda, nu, mu);
    {
        std::lock_guard<std::mutex> lock(g_lr_mutex);
        auto it = g_lr_memo.find(key);
        if (it != g_lr_memo.end()) return it->second;
    }
    LRCounter counter(lambda, std::get<1>(key), std::get<2>(key));
    counter.run(0);
    std::lock_guard<std::mutex> lock(g_lr_mutex);
    g_lr_memo.emplace(key, counter.total);
    return counter.total;
}

namespace {

// All lambda of size |mu|+|nu| containing both.
std::vector<Partition> product_support(const Partition& mu, const Partition& nu) {
    std::vector<Partition> out;
    int n = mu.size() + nu.size();
    for (auto& lam : partitions_of(n, mu.length() + nu.length()))
        if (lam.contains(mu) && lam.contains(nu) && lam[0] <= mu[0] + nu[0]) out.push_back(lam);
    return out;
}

}  // namespace

SymFunc multiply(const SymFunc& f, const SymFunc& g) {
    SymFunc out;
    for (const auto& [mu, a] : f.terms())
        for (const auto& [nu, b] : g.terms()) {
            if (mu.empty() || nu.empty()) {
                out.add_term(mu.empty() ? nu : mu, a * b);
                continue;
            }
            Rational ab = a * b;
            for (const auto& lam : product_support(mu, nu)) {
                std::int64_t c = lr_coefficient(lam, mu, nu);
                if (c) out.add_term(lam, ab * Rational(static_cast<long>(c)));
            }
        }
    return out;
}

SymFunc omega(const SymFunc& f) {
    SymFunc::Terms t;
    for (const auto& [k, v] : f.terms()) t.emplace(conjugate(k), v);
    return SymFunc(t);
}

PowerSumPoly to_power_sum(const SymFunc& f) {
    PowerSumPoly out;
    for (const auto& [lam, c] : f.terms())
        for (const auto& mu : partitions_of(lam.size())) {
            std::int64_t chi = character(lam, mu);
            if (chi == 0) continue;
            out[mu] += c * Rational(static_cast<long>(chi)) /
                       Rational(static_cast<long>(z_lambda(mu)));
        }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

SymFunc from_power_sum(const PowerSumPoly& f) {
    SymFunc out;
    for (const auto& [mu, c] : f) {
        if (c == 0) continue;
        for (const auto& lam : partitions_of(mu.size())) {
            std::int64_t chi = character(lam, mu);
            if (chi) out.add_term(lam, c * Rational(static_cast<long>(chi)));
        }
    }
    return out;
}

PowerSumPoly multiply(const PowerSumPoly& a, const PowerSumPoly& b) {
    PowerSumPoly out;
    for (const auto& [m1, c1] : a)
        for (const auto& [m2, c2] : b) out[join(m1, m2)] += c1 * c2;
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

}  // namespace torelli
