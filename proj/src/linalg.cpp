#include "torelli/linalg.hpp"

#include <algorithm>

namespace torelli {

namespace {

void axpy(SparseRow& y, const Rational& a, const SparseRow& x) {
    for (const auto& [k, v] : x) {
        auto it = y.find(k);
        if (it == y.end())
            y.emplace(k, a * v);
        else {
            it->second += a * v;
            if (it->second == 0) y.erase(it);
        }
    }
}

}  // namespace

std::vector<SparseRow> row_reduce(std::vector<SparseRow> rows) {
    // pivot rows keyed by leading column
    std::map<long, SparseRow> pivots;
    for (auto& r : rows) {
        for (auto it = r.begin(); it != r.end();)
            it = it->second == 0 ? r.erase(it) : std::next(it);
        while (!r.empty()) {
            long lead = r.begin()->first;
            auto p = pivots.find(lead);
            if (p == pivots.end()) {
                Rational inv = 1 / r.begin()->second;
                for (auto& [k, v] : r) v *= inv;
                pivots.emplace(lead, std::move(r));
                break;
            }
            Rational a = -r.begin()->second;
            axpy(r, a, p->second);
        }
    }
    // back substitution, last pivot first
    for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
        for (auto jt = pivots.begin(); jt->first != it->first; ++jt) {
            auto f = jt->second.find(it->first);
            if (f != jt->second.end()) {
                Rational a = -f->second;
                axpy(jt->second, a, it->second);
            }
        }
    }
    std::vector<SparseRow> out;
    for (auto& [k, r] : pivots) out.push_back(std::move(r));
    return out;
}

int exact_rank(const std::vector<SparseRow>& rows) {
    std::map<long, SparseRow> pivots;
    int rank = 0;
    for (SparseRow r : rows) {
        for (auto it = r.begin(); it != r.end();)
            it = it->second == 0 ? r.erase(it) : std::next(it);
        while (!r.empty()) {
            long lead = r.begin()->first;
            auto p = pivots.find(lead);
            if (p == pivots.end()) {
                pivots.emplace(lead, std::move(r));
                ++rank;
                break;
            }
            Rational a = -r.begin()->second / p->second.begin()->second;
            axpy(r, a, p->second);
        }
    }
    return rank;
}

std::vector<SparseRow> nullspace(const std::vector<SparseRow>& rows, long ncols,
                                 std::vector<long>* free_columns) {
    auto rref = row_reduce(rows);
    std::vector<char> is_pivot(ncols, 0);
    for (auto& r : rref) is_pivot[r.begin()->first] = 1;
    std::vector<SparseRow> basis;
    for (long f = 0; f < ncols; ++f) {
        if (is_pivot[f]) continue;
        SparseRow v;
        v[f] = 1;
        for (auto& r : rref) {
            auto it = r.find(f);
            if (it != r.end()) v[r.begin()->first] = -it->second;
        }
        basis.push_back(std::move(v));
        if (free_columns) free_columns->push_back(f);
    }
    return basis;
}

}  // namespace torelli
