#include "torelli/label_ring.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "torelli/errors.hpp"

namespace torelli {

int pontryagin_min(int n) { return (n + 1 + 3) / 4; }
int pontryagin_max(int n) { return n - 1; }

LabelMonomial::LabelMonomial(int n, int e_exp, std::map<int, int> p_exps) : n_(n), e_(e_exp) {
    if (n < 1) throw std::invalid_argument("label algebra needs n >= 1");
    if (e_exp < 0) throw std::invalid_argument("negative exponent");
    for (auto [i, k] : p_exps) {
        if (k < 0) throw std::invalid_argument("negative exponent");
        if (k == 0) continue;
        if (i < pontryagin_min(n) || i > pontryagin_max(n))
            throw std::invalid_argument("p" + std::to_string(i) + " is not a generator for n=" +
                                        std::to_string(n));
        p_[i] = k;
    }
}

int LabelMonomial::degree() const {
    int d = 2 * n_ * e_;
    for (auto [i, k] : p_) d += 4 * i * k;
    return d;
}

LabelMonomial operator*(const LabelMonomial& a, const LabelMonomial& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("labels for different n");
    LabelMonomial c = a;
    c.e_ += b.e_;
    for (auto [i, k] : b.p_) c.p_[i] += k;
    return c;
}

std::string to_string(const LabelMonomial& c) {
    if (c.is_one()) return "1";
    std::vector<std::string> f;
    if (c.e_exponent()) f.push_back(c.e_exponent() == 1 ? "e" : "e^" + std::to_string(c.e_exponent()));
    for (auto [i, k] : c.p_exponents())
        f.push_back("p" + std::to_string(i) + (k == 1 ? "" : "^" + std::to_string(k)));
    std::string out;
    for (std::size_t j = 0; j < f.size(); ++j) out += (j ? "*" : "") + f[j];
    return out;
}

LabelMonomial parse_label(const std::string& text, int n) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty() || s == "1") return LabelMonomial(n);
    int e_exp = 0;
    std::map<int, int> ps;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, '*')) {
        auto caret = tok.find('^');
        std::string base = tok.substr(0, caret);
        int k = caret == std::string::npos ? 1 : std::stoi(tok.substr(caret + 1));
        if (base == "e") {
            e_exp += k;
        } else if (base.size() > 1 && base[0] == 'p') {
            ps[std::stoi(base.substr(1))] += k;
        } else if (base == "1") {
        } else {
            throw std::invalid_argument("bad label: " + text);
        }
    }
    return LabelMonomial(n, e_exp, ps);
}

namespace {
void gen_monomials(int n, int degree, int idx, int e_exp, std::map<int, int>& ps, int rest,
                   std::vector<LabelMonomial>& out) {
    if (idx > pontryagin_max(n)) {
        if (rest % (2 * n) == 0) out.emplace_back(n, e_exp + rest / (2 * n), ps);
        return;
    }
    for (int k = 0; 4 * idx * k <= rest; ++k) {
        if (k) ps[idx] = k;
        gen_monomials(n, degree, idx + 1, e_exp, ps, rest - 4 * idx * k, out);
    }
    ps.erase(idx);
}
}  // namespace

std::vector<LabelMonomial> monomials_of_degree(int n, int degree) {
    std::vector<LabelMonomial> out;
    if (degree < 0) return out;
    std::map<int, int> ps;
    gen_monomials(n, degree, pontryagin_min(n), 0, ps, degree, out);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

std::vector<Rational> geometric_product(const std::vector<int>& degrees, int trunc) {
    std::vector<Rational> c(std::max(trunc, 0) + 1, 0);
    if (trunc < 0) return c;
    c[0] = 1;
    for (int d : degrees)
        for (int k = d; k <= trunc; ++k) c[k] += c[k - d];
    return c;
}

}  // namespace

LambdaSeries poincare_series(int n, PoincareSelector selector, int trunc) {
    std::vector<int> degrees{2 * n};
    for (int i = pontryagin_min(n); i <= pontryagin_max(n); ++i) degrees.push_back(4 * i);
    auto c = geometric_product(degrees, trunc);
    auto sub = [&](int k) {
        if (k <= trunc) c[k] -= 1;
    };
    switch (selector) {
        case PoincareSelector::All:
            break;
        case PoincareSelector::AboveTwoN:
            sub(0);
            sub(2 * n);
            for (int i = pontryagin_min(n); i <= n / 2; ++i) sub(4 * i);
            break;
        case PoincareSelector::AtLeastN:
        case PoincareSelector::Positive:
            sub(0);
            break;
    }
    LambdaSeries out(trunc);
    for (int k = 0; k <= trunc; ++k) out.add_term(k, SymFunc(c[k]));
    return out;
}

LambdaSeries ch_B(int n, int trunc) {
    LambdaSeries acc(trunc);
    auto add_piece = [&](int q, PoincareSelector sel, int shift) {
        LambdaSeries ps = poincare_series(n, sel, trunc - shift);
        for (const auto& [k, f] : ps.terms()) acc.add_term(k + shift, f * h(q));
    };
    add_piece(0, PoincareSelector::AboveTwoN, -2 * n);
    add_piece(1, PoincareSelector::AtLeastN, -n);
    add_piece(2, PoincareSelector::Positive, 0);
    for (int q = 3; n * (q - 2) <= trunc; ++q) add_piece(q, PoincareSelector::All, n * (q - 2));
    auto v = acc.valuation();
    if (v && *v < 1)
        throw ValuationViolation("ch(B) has a term of t-exponent " + std::to_string(*v));
    return acc;
}

namespace {

// Coefficients of sqrt(z)/tanh(sqrt(z)) = (sum z^k/(2k)!) / (sum z^k/(2k+1)!).
std::vector<Rational> l_series(int order) {
    std::vector<Rational> num(order + 1), den(order + 1), q(order + 1);
    Integer f = 1;
    for (int k = 0; k <= 2 * order + 1; ++k) {
        if (k > 0) f *= k;
        if (k % 2 == 0 && k / 2 <= order) num[k / 2] = Rational(1) / Rational(f);
        if (k % 2 == 1 && k / 2 <= order) den[k / 2] = Rational(1) / Rational(f);
    }
    for (int k = 0; k <= order; ++k) {
        Rational s = num[k];
        for (int j = 1; j <= k; ++j) s -= den[j] * q[k - j];
        q[k] = s / den[0];
    }
    return q;
}

// Polynomials in p_1..p_m, truncated at weighted degree m (p_i has weight i).
using Poly = PontryaginPoly;

int weight(const std::vector<int>& ex) {
    int w = 0;
    for (std::size_t i = 0; i < ex.size(); ++i) w += static_cast<int>(i + 1) * ex[i];
    return w;
}

Poly pmul(const Poly& a, const Poly& b, int m) {
    Poly out;
    for (const auto& [x, c1] : a)
        for (const auto& [y, c2] : b) {
            if (weight(x) + weight(y) > m) continue;
            std::vector<int> z(m, 0);
            for (int i = 0; i < m; ++i) z[i] = x[i] + y[i];
            out[z] += c1 * c2;
        }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

}  // namespace

PontryaginPoly l_class(int i) {
    if (i < 1) throw std::invalid_argument("l_class index must be positive");
    int m = i;
    // log Q(z) = sum a_k z^k
    auto q = l_series(m);
    std::vector<Rational> logq(m + 1, 0);
    for (int k = 1; k <= m; ++k) {
        // k a_k = k q_k - sum_{j=1}^{k-1} j a_j q_{k-j}  (q_0 = 1)
        Rational s = Rational(k) * q[k];
        for (int j = 1; j < k; ++j) s -= Rational(j) * logq[j] * q[k - j];
        logq[k] = s / Rational(k);
    }
    // Power sums of the formal roots in terms of elementary p_j (Newton identities).
    std::vector<Poly> P(m + 1);
    auto unit_vec = [&](int j) {
        std::vector<int> v(m, 0);
        if (j >= 1) v[j - 1] = 1;
        return v;
    };
    for (int k = 1; k <= m; ++k) {
        Poly pk;
        // P_k = sum_{j=1}^{k-1} (-1)^{j-1} e_j P_{k-j} + (-1)^{k-1} k e_k
        for (int j = 1; j < k; ++j) {
            Poly ej{{unit_vec(j), Rational(j % 2 ? 1 : -1)}};
            for (auto& [x, c] : pmul(ej, P[k - j], m)) pk[x] += c;
        }
        pk[unit_vec(k)] += Rational(k % 2 ? k : -k);
        std::erase_if(pk, [](const auto& kv) { return kv.second == 0; });
        P[k] = pk;
    }
    // L = exp(sum_k a_k P_k)
    Poly arg;
    for (int k = 1; k <= m; ++k)
        for (auto& [x, c] : P[k]) arg[x] += logq[k] * c;
    Poly result{{std::vector<int>(m, 0), Rational(1)}};
    Poly term = result;
    for (int j = 1; j <= m; ++j) {
        term = pmul(term, arg, m);
        for (auto& [x, c] : term) c /= Rational(j);
        for (auto& [x, c] : term) result[x] += c;
    }
    Poly out;
    for (auto& [x, c] : result)
        if (weight(x) == m && c != 0) out[x] = c;
    return out;
}

std::string to_string(const PontryaginPoly& poly) {
    std::ostringstream os;
    bool first = true;
    for (auto it = poly.rbegin(); it != poly.rend(); ++it) {
        const auto& [x, c] = *it;
        os << (first ? "" : " + ") << "(" << c.get_str() << ")";
        for (std::size_t i = 0; i < x.size(); ++i)
            if (x[i]) os << "*p" << (i + 1) << (x[i] > 1 ? "^" + std::to_string(x[i]) : "");
        first = false;
    }
    return first ? "0" : os.str();
}

LabelPoly l_class_image(int i, int n) {
    if (2 * i <= n)
        throw IndexOutOfRange("l_class_image needs i > n/2 (got i=" + std::to_string(i) +
                              ", n=" + std::to_string(n) + ")");
    LabelPoly out;
    for (const auto& [x, c] : l_class(i)) {
        int e_exp = 0;
        std::map<int, int> ps;
        bool zero = false;
        for (std::size_t j0 = 0; j0 < x.size(); ++j0) {
            int j = static_cast<int>(j0) + 1, k = x[j0];
            if (!k) continue;
            if (j < pontryagin_min(n) || j > n) {
                zero = true;
                break;
            }
            if (j == n)
                e_exp += 2 * k;
            else
                ps[j] += k;
        }
        if (zero) continue;
        out[LabelMonomial(n, e_exp, ps)] += c;
    }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

}  // namespace torelli
