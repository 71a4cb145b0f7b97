#include "torelli/invariants.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "torelli/errors.hpp"
#include "torelli/symgroup.hpp"

namespace torelli {

namespace {

constexpr long kMaxEntries = 10'000'000;

std::vector<std::vector<Rational>> invert(std::vector<std::vector<Rational>> a) {
    int N = static_cast<int>(a.size());
    std::vector<std::vector<Rational>> inv(N, std::vector<Rational>(N, 0));
    for (int i = 0; i < N; ++i) inv[i][i] = 1;
    for (int c = 0; c < N; ++c) {
        int p = c;
        while (p < N && a[p][c] == 0) ++p;
        if (p == N) throw std::invalid_argument("singular gram matrix");
        std::swap(a[p], a[c]);
        std::swap(inv[p], inv[c]);
        Rational s = 1 / a[c][c];
        for (int k = 0; k < N; ++k) {
            a[c][k] *= s;
            inv[c][k] *= s;
        }
        for (int r = 0; r < N; ++r) {
            if (r == c || a[r][c] == 0) continue;
            Rational f = a[r][c];
            for (int k = 0; k < N; ++k) {
                a[r][k] -= f * a[c][k];
                inv[r][k] -= f * inv[c][k];
            }
        }
    }
    return inv;
}

int position(const std::vector<int>& shape, int s) {
    auto it = std::lower_bound(shape.begin(), shape.end(), s);
    if (it == shape.end() || *it != s) throw std::invalid_argument("label not in tensor shape");
    return static_cast<int>(it - shape.begin());
}

}  // namespace

EpsForm EpsForm::make(int g, int epsilon) {
    if (g < 1 || (epsilon != 1 && epsilon != -1)) throw std::invalid_argument("bad form");
    EpsForm f;
    f.g = g;
    f.epsilon = epsilon;
    int N = 2 * g;
    f.gram.assign(N, std::vector<Rational>(N, 0));
    for (int i = 0; i < g; ++i) {
        f.gram[i][g + i] = 1;
        f.gram[g + i][i] = epsilon;
    }
    // lambda(a_i^#, a_j) = delta_ij gives omega = gram^{-1}
    f.omega = invert(f.gram);
    return f;
}

DenseTensor::DenseTensor(std::vector<int> s, int d) : shape(std::move(s)), dim(d) {
    std::sort(shape.begin(), shape.end());
    long total = 1;
    for (std::size_t k = 0; k < shape.size(); ++k) {
        total *= dim;
        if (total > kMaxEntries) throw TensorTooLarge("tensor exceeds 10^7 entries");
    }
    entries.assign(total, 0);
}

long DenseTensor::index(const std::vector<int>& c) const {
    long idx = 0, stride = 1;
    for (int v : c) {
        idx += v * stride;
        stride *= dim;
    }
    return idx;
}

std::vector<int> DenseTensor::coords(long idx) const {
    std::vector<int> c(shape.size());
    for (auto& v : c) {
        v = static_cast<int>(idx % dim);
        idx /= dim;
    }
    return c;
}

DenseTensor omega_m(const Matching& m, const std::vector<int>& set, const EpsForm& form) {
    DenseTensor t(set, form.dim());
    std::vector<int> used;
    for (auto [a, b] : m) {
        used.push_back(a);
        used.push_back(b);
    }
    std::sort(used.begin(), used.end());
    if (used != t.shape) throw NotPerfect("matching is not perfect on the set");
    std::vector<std::pair<int, int>> pos;
    for (auto [a, b] : m) pos.emplace_back(position(t.shape, a), position(t.shape, b));
    for (long i = 0; i < t.size(); ++i) {
        auto c = t.coords(i);
        Rational v = 1;
        for (auto [a, b] : pos) {
            v *= form.omega[c[a]][c[b]];
            if (v == 0) break;
        }
        t.entries[i] = v;
    }
    return t;
}

std::vector<Matching> perfect_matchings(const std::vector<int>& set) {
    std::vector<Matching> out;
    if (set.size() % 2) return out;
    std::function<void(std::vector<int>, Matching)> rec = [&](std::vector<int> rest, Matching m) {
        if (rest.empty()) {
            out.push_back(m);
            return;
        }
        int a = rest[0];
        for (std::size_t k = 1; k < rest.size(); ++k) {
            std::vector<int> r2;
            for (std::size_t j = 1; j < rest.size(); ++j)
                if (j != k) r2.push_back(rest[j]);
            Matching m2 = m;
            m2.emplace_back(a, rest[k]);
            rec(r2, m2);
        }
    };
    std::vector<int> s = set;
    std::sort(s.begin(), s.end());
    rec(s, {});
    return out;
}

SpanRank matching_span_rank(int set_size, int g, int epsilon) {
    auto form = EpsForm::make(g, epsilon);
    std::vector<int> set(set_size);
    std::iota(set.begin(), set.end(), 1);
    auto ms = perfect_matchings(set);
    // omega_m is supported on index tuples with each pair hitting a nonzero omega entry
    std::vector<std::pair<int, int>> nz;
    for (int i = 0; i < form.dim(); ++i)
        for (int j = 0; j < form.dim(); ++j)
            if (form.omega[i][j] != 0) nz.emplace_back(i, j);
    std::vector<SparseRow> rows;
    for (auto& m : ms) {
        SparseRow row;
        std::vector<int> c(set_size);
        std::function<void(std::size_t, Rational)> rec = [&](std::size_t k, Rational v) {
            if (k == m.size()) {
                long idx = 0, stride = 1;
                for (int x : c) {
                    idx += x * stride;
                    stride *= form.dim();
                }
                row[idx] = v;
                return;
            }
            for (auto [i, j] : nz) {
                c[m[k].first - 1] = i;
                c[m[k].second - 1] = j;
                rec(k + 1, v * form.omega[i][j]);
            }
        };
        rec(0, 1);
        rows.push_back(std::move(row));
    }
    return {exact_rank(rows), static_cast<int>(ms.size())};
}

DenseTensor K_on_morphism(const BrauerMorphism& m, const DenseTensor& x, const EpsForm& form) {
    m.validate();
    if (x.shape != m.source) throw std::invalid_argument("tensor shape differs from source");
    DenseTensor out(m.target, form.dim());
    std::vector<std::pair<int, int>> thr, sp, tp;
    for (auto [a, b] : m.through) thr.emplace_back(position(x.shape, a), position(out.shape, b));
    for (auto [a, b] : m.source_pairs) sp.emplace_back(position(x.shape, a), position(x.shape, b));
    for (auto [a, b] : m.target_pairs)
        tp.emplace_back(position(out.shape, a), position(out.shape, b));
    std::vector<std::pair<int, int>> nz;
    for (int i = 0; i < form.dim(); ++i)
        for (int j = 0; j < form.dim(); ++j)
            if (form.omega[i][j] != 0) nz.emplace_back(i, j);
    std::vector<int> tc(out.shape.size());
    for (long i = 0; i < x.size(); ++i) {
        if (x.entries[i] == 0) continue;
        auto c = x.coords(i);
        Rational v = x.entries[i];
        for (auto [a, b] : sp) {
            v *= form.lambda(c[a], c[b]);
            if (v == 0) break;
        }
        if (v == 0) continue;
        for (auto [a, b] : thr) tc[b] = c[a];
        std::function<void(std::size_t, Rational)> rec = [&](std::size_t k, Rational w) {
            if (k == tp.size()) {
                out.entries[out.index(tc)] += w;
                return;
            }
            for (auto [p, q] : nz) {
                tc[tp[k].first] = p;
                tc[tp[k].second] = q;
                rec(k + 1, w * form.omega[p][q]);
            }
        };
        rec(0, v);
    }
    return out;
}

std::vector<SparseRow> harmonic_projection(int q, const EpsForm& form,
                                           std::vector<long>* free_columns) {
    const int N = form.dim();
    long total = 1;
    for (int k = 0; k < q; ++k) {
        total *= N;
        if (total > kMaxEntries) throw TensorTooLarge("tensor exceeds 10^7 entries");
    }
    if (q < 2) {
        std::vector<SparseRow> basis;
        for (long i = 0; i < total; ++i) {
            basis.push_back(SparseRow{{i, 1}});
            if (free_columns) free_columns->push_back(i);
        }
        return basis;
    }
    std::vector<SparseRow> rows;
    std::vector<int> c(q);
    for (int a = 0; a < q; ++a)
        for (int b = a + 1; b < q; ++b) {
            // one row per assignment of the remaining q-2 positions
            long rest_total = total / (N * N);
            for (long r = 0; r < rest_total; ++r) {
                long rr = r;
                for (int k = 0; k < q; ++k) {
                    if (k == a || k == b) continue;
                    c[k] = static_cast<int>(rr % N);
                    rr /= N;
                }
                SparseRow row;
                for (int i = 0; i < N; ++i)
                    for (int j = 0; j < N; ++j) {
                        if (form.lambda(i, j) == 0) continue;
                        c[a] = i;
                        c[b] = j;
                        long idx = 0, stride = 1;
                        for (int x : c) {
                            idx += x * stride;
                            stride *= N;
                        }
                        row[idx] = form.lambda(i, j);
                    }
                rows.push_back(std::move(row));
            }
        }
    return nullspace(rows, total, free_columns);
}

Integer harmonic_multiplicity(const Partition& lambda, const EpsForm& form) {
    const int q = lambda.size();
    const int N = form.dim();
    std::vector<long> free_col;
    auto basis = harmonic_projection(q, form, &free_col);
    std::vector<int> perm(q);
    std::iota(perm.begin(), perm.end(), 0);
    Rational total = 0;
    Rational fact = 1;
    for (int k = 2; k <= q; ++k) fact *= k;
    do {
        // sigma moves the entry at position k to position perm[k]
        Rational tr = 0;
        for (std::size_t b = 0; b < basis.size(); ++b) {
            long target = free_col[b];
            std::vector<int> tcs(q);
            long t = target;
            for (auto& x : tcs) {
                x = static_cast<int>(t % N);
                t /= N;
            }
            std::vector<int> src(q);
            for (int k = 0; k < q; ++k) src[k] = tcs[perm[k]];
            long idx = 0, stride = 1;
            for (int x : src) {
                idx += x * stride;
                stride *= N;
            }
            auto it = basis[b].find(idx);
            if (it != basis[b].end()) tr += it->second;
        }
        std::vector<int> cycles;
        std::vector<char> seen(q, 0);
        for (int k = 0; k < q; ++k) {
            if (seen[k]) continue;
            int len = 0;
            for (int j = k; !seen[j]; j = perm[j]) {
                seen[j] = 1;
                ++len;
            }
            cycles.push_back(len);
        }
        total += Rational(character(lambda, Partition(cycles))) * tr;
    } while (std::next_permutation(perm.begin(), perm.end()));
    total /= fact;
    if (!is_integer(total)) throw NonIntegralMultiplicity("non-integral harmonic multiplicity");
    return total.get_num();
}

}  // namespace torelli
