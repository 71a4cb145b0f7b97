#pragma once

#include <map>
#include <vector>

#include "torelli/rational.hpp"

namespace torelli {

using SparseRow = std::map<long, Rational>;

// Reduced row echelon form; zero rows dropped.
std::vector<SparseRow> row_reduce(std::vector<SparseRow> rows);
int exact_rank(const std::vector<SparseRow>& rows);
// Basis of {x : row . x = 0 for all rows}, x indexed by 0..ncols-1.
// Each basis vector is 1 at its own free column and 0 at the other free columns.
std::vector<SparseRow> nullspace(const std::vector<SparseRow>& rows, long ncols,
                                 std::vector<long>* free_columns = nullptr);

}  // namespace torelli
