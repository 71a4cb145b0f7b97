#include "torelli/partition.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace torelli {

Partition::Partition(std::vector<int> parts) {
    for (int p : parts) {
        if (p < 0) throw std::invalid_argument("partition parts must be nonnegative");
        if (p > 0) parts_.push_back(p);
    }
    std::sort(parts_.begin(), parts_.end(), std::greater<int>());
    for (int p : parts_) size_ += p;
}

int Partition::multiplicity(int k) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), k));
}

bool Partition::contains(const Partition& mu) const {
    if (mu.length() > length()) return false;
    for (int i = 0; i < mu.length(); ++i)
        if (mu.parts_[i] > parts_[i]) return false;
    return true;
}

std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    if (a.size_ != b.size_) return a.size_ <=> b.size_;
    // reverse lex: (3) before (2,1) before (1,1,1)
    for (std::size_t i = 0; i < std::min(a.parts_.size(), b.parts_.size()); ++i)
        if (a.parts_[i] != b.parts_[i]) return b.parts_[i] <=> a.parts_[i];
    return a.parts_.size() <=> b.parts_.size();
}

Partition conjugate(const Partition& lambda) {
    std::vector<int> out;
    if (lambda.empty()) return Partition{};
    for (int j = 1; j <= lambda[0]; ++j) {
        int c = 0;
        for (int p : lambda.parts()) c += (p >= j);
        out.push_back(c);
    }
    return Partition(out);
}

namespace {
void gen(int n, int max_part, std::optional<int> max_len, std::vector<int>& cur,
         std::vector<Partition>& out) {
    if (n == 0) {
        out.emplace_back(cur);
        return;
    }
    if (max_len && static_cast<int>(cur.size()) >= *max_len) return;
    for (int p = std::min(n, max_part); p >= 1; --p) {
        cur.push_back(p);
        gen(n - p, p, max_len, cur, out);
        cur.pop_back();
    }
}
}  // namespace

std::vector<Partition> partitions_of(int n, std::optional<int> max_length) {
    if (n < 0) throw std::invalid_argument("partitions_of: negative size");
    std::vector<Partition> out;
    std::vector<int> cur;
    gen(n, n, max_length, cur, out);
    return out;
}

std::int64_t partition_count(int n) {
    std::vector<std::int64_t> p(n + 1, 0);
    p[0] = 1;
    for (int m = 1; m <= n; ++m) {
        std::int64_t s = 0;
        for (int k = 1;; ++k) {
            int g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
            if (g1 > m) break;
            std::int64_t sign = (k % 2) ? 1 : -1;
            s += sign * p[m - g1];
            if (g2 <= m) s += sign * p[m - g2];
        }
        p[m] = s;
    }
    return p[n];
}

std::int64_t z_lambda(const Partition& lambda) {
    std::int64_t z = 1;
    const auto& ps = lambda.parts();
    std::size_t i = 0;
    while (i < ps.size()) {
        std::size_t j = i;
        while (j < ps.size() && ps[j] == ps[i]) ++j;
        std::int64_t m = static_cast<std::int64_t>(j - i);
        for (std::int64_t k = 1; k <= m; ++k) z *= ps[i] * k;
        i = j;
    }
    return z;
}

bool even_rows(const Partition& lambda) {
    return std::all_of(lambda.parts().begin(), lambda.parts().end(),
                       [](int p) { return p % 2 == 0; });
}

bool even_columns(const Partition& lambda) { return even_rows(conjugate(lambda)); }

std::string to_string(const Partition& lambda) {
    if (lambda.empty()) return "0";
    std::ostringstream os;
    const auto& ps = lambda.parts();
    std::size_t i = 0;
    bool first = true;
    while (i < ps.size()) {
        std::size_t j = i;
        while (j < ps.size() && ps[j] == ps[i]) ++j;
        if (!first) os << ',';
        first = false;
        os << ps[i];
        if (j - i > 1) os << '^' << (j - i);
        i = j;
    }
    return os.str();
}

Partition parse_partition(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)) && c != '(' && c != ')' && c != '[' &&
            c != ']')
            s.push_back(c);
    if (s.empty() || s == "0") return Partition{};
    std::vector<int> parts;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        auto caret = tok.find('^');
        try {
            int v = std::stoi(tok.substr(0, caret));
            int m = caret == std::string::npos ? 1 : std::stoi(tok.substr(caret + 1));
            if (v <= 0 || m <= 0) throw std::invalid_argument("");
            for (int k = 0; k < m; ++k) parts.push_back(v);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad partition syntax: " + text);
        }
    }
    return Partition(parts);
}

Partition join(const Partition& a, const Partition& b) {
    std::vector<int> v = a.parts();
    v.insert(v.end(), b.parts().begin(), b.parts().end());
    return Partition(v);
}

Partition scale(const Partition& a, int k) {
    std::vector<int> v = a.parts();
    for (int& x : v) x *= k;
    return Partition(v);
}

}  // namespace torelli
