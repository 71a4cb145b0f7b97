#include "torelli/symgroup.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>

#include "torelli/errors.hpp"
#include "torelli/symfunc.hpp"

namespace torelli {

namespace {

std::mutex g_char_mutex;
std::map<std::pair<Partition, Partition>, std::int64_t> g_char_memo;

// Beta numbers of lambda with exactly len beads.
std::vector<int> beta_set(const Partition& lambda, int len) {
    std::vector<int> b(len);
    for (int i = 0; i < len; ++i) b[i] = lambda[i] + (len - 1 - i);
    return b;
}

Partition from_beta(std::vector<int> b) {
    std::sort(b.begin(), b.end(), std::greater<int>());
    int len = static_cast<int>(b.size());
    std::vector<int> parts(len);
    for (int i = 0; i < len; ++i) parts[i] = b[i] - (len - 1 - i);
    return Partition(parts);
}

std::int64_t character_uncached(const Partition& lambda, const Partition& mu);

std::int64_t character_cached(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size()) return 0;
    if (mu.empty()) return 1;
    auto key = std::make_pair(lambda, mu);
    {
        std::lock_guard<std::mutex> lock(g_char_mutex);
        auto it = g_char_memo.find(key);
        if (it != g_char_memo.end()) return it->second;
    }
    std::int64_t v = character_uncached(lambda, mu);
    std::lock_guard<std::mutex> lock(g_char_mutex);
    g_char_memo.emplace(key, v);
    return v;
}

std::int64_t character_uncached(const Partition& lambda, const Partition& mu) {
    // Remove a rim hook of length k = mu_1 in every possible way.
    int k = mu[0];
    Partition rest(std::vector<int>(mu.parts().begin() + 1, mu.parts().end()));
    int len = lambda.length() + k;
    std::vector<int> b = beta_set(lambda, len);
    std::vector<char> occupied(b[0] + 1, 0);
    for (int x : b) occupied[x] = 1;
    std::int64_t total = 0;
    for (int i = 0; i < len; ++i) {
        int from = b[i], to = from - k;
        if (to < 0 || occupied[to]) continue;
        int between = 0;
        for (int y = to + 1; y < from; ++y) between += occupied[y];
        std::vector<int> nb = b;
        nb[i] = to;
        std::int64_t c = character_cached(from_beta(nb), rest);
        total += (between % 2 ? -c : c);
    }
    return total;
}

}  // namespace

std::int64_t character(const Partition& lambda, const Partition& mu) {
    return character_cached(lambda, mu);
}

Rational ClassFunction::at(const Partition& mu) const {
    auto it = values.find(mu);
    return it == values.end() ? Rational(0) : it->second;
}

ClassFunction irreducible_character(const Partition& lambda) {
    ClassFunction chi{lambda.size(), {}};
    for (const auto& mu : partitions_of(lambda.size()))
        chi.values[mu] = Rational(static_cast<long>(character(lambda, mu)));
    return chi;
}

ClassFunction trivial_character(int q) {
    ClassFunction chi{q, {}};
    for (const auto& mu : partitions_of(q)) chi.values[mu] = 1;
    return chi;
}

ClassFunction sign_character(int q) {
    ClassFunction chi{q, {}};
    for (const auto& mu : partitions_of(q)) chi.values[mu] = ((q - mu.length()) % 2) ? -1 : 1;
    return chi;
}

ClassFunction regular_character(int q) {
    ClassFunction chi{q, {}};
    std::int64_t fact = 1;
    for (int i = 2; i <= q; ++i) fact *= i;
    for (const auto& mu : partitions_of(q))
        chi.values[mu] = (mu.length() == q) ? Rational(static_cast<long>(fact)) : Rational(0);
    return chi;
}

ClassFunction operator+(const ClassFunction& a, const ClassFunction& b) {
    if (a.q != b.q) throw std::invalid_argument("class functions of different degree");
    ClassFunction c = a;
    for (const auto& [mu, v] : b.values) c.values[mu] += v;
    return c;
}

ClassFunction operator*(const ClassFunction& a, const ClassFunction& b) {
    if (a.q != b.q) throw std::invalid_argument("class functions of different degree");
    ClassFunction c{a.q, {}};
    for (const auto& [mu, v] : a.values) c.values[mu] = v * b.at(mu);
    return c;
}

SymFunc ch_q(const ClassFunction& chi) {
    PowerSumPoly ps;
    for (const auto& [mu, v] : chi.values) {
        if (mu.size() != chi.q) throw std::invalid_argument("class outside S_q");
        if (v != 0) ps[mu] += v / Rational(static_cast<long>(z_lambda(mu)));
    }
    return from_power_sum(ps);
}

std::map<Partition, Integer> decompose(const ClassFunction& chi) {
    std::map<Partition, Integer> out;
    for (const auto& lambda : partitions_of(chi.q)) {
        Rational m = 0;
        for (const auto& [mu, v] : chi.values)
            if (v != 0)
                m += v * Rational(static_cast<long>(character(lambda, mu))) /
                     Rational(static_cast<long>(z_lambda(mu)));
        if (!is_integer(m))
            throw NonIntegralMultiplicity("non-integral multiplicity " + m.get_str() + " at " +
                                          to_string(lambda));
        if (m != 0) out[lambda] = m.get_num();
    }
    return out;
}

std::vector<int> permutation_of_type(const Partition& mu) {
    std::vector<int> perm(mu.size());
    int start = 0;
    for (int len : mu.parts()) {
        for (int i = 0; i < len; ++i) perm[start + i] = start + (i + 1) % len;
        start += len;
    }
    return perm;
}

int permutation_sign(const std::vector<int>& perm) {
    std::vector<char> seen(perm.size(), 0);
    int sign = 1;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (std::size_t j = i; !seen[j]; j = perm[j]) {
            seen[j] = 1;
            ++len;
        }
        if (len % 2 == 0) sign = -sign;
    }
    return sign;
}

Partition cycle_type(const std::vector<int>& perm) {
    std::vector<char> seen(perm.size(), 0);
    std::vector<int> lens;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (std::size_t j = i; !seen[j]; j = perm[j]) {
            seen[j] = 1;
            ++len;
        }
        lens.push_back(len);
    }
    return Partition(lens);
}

}  // namespace torelli
