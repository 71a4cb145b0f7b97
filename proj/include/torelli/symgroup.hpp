#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "torelli/partition.hpp"
#include "torelli/rational.hpp"

namespace torelli {

class SymFunc;

// chi^lambda on the class of cycle type mu, by border-strip removal. Memoized and thread safe.
std::int64_t character(const Partition& lambda, const Partition& mu);

struct ClassFunction {
    int q = 0;
    std::map<Partition, Rational> values;  // missing classes read as 0

    Rational at(const Partition& mu) const;
};

ClassFunction irreducible_character(const Partition& lambda);
ClassFunction trivial_character(int q);
ClassFunction sign_character(int q);
ClassFunction regular_character(int q);

ClassFunction operator+(const ClassFunction& a, const ClassFunction& b);
ClassFunction operator*(const ClassFunction& a, const ClassFunction& b);

// Frobenius characteristic sum_mu chi(mu) p_mu / z_mu, in the Schur basis.
SymFunc ch_q(const ClassFunction& chi);

// Multiplicities of irreducibles; throws NonIntegralMultiplicity unless all are integers.
std::map<Partition, Integer> decompose(const ClassFunction& chi);

// Permutation of {0..q-1} in one-line notation with the given cycle type.
std::vector<int> permutation_of_type(const Partition& mu);
int permutation_sign(const std::vector<int>& perm);
Partition cycle_type(const std::vector<int>& perm);

}  // namespace torelli
