#pragma once

#include <utility>
#include <vector>

#include "torelli/brauer.hpp"
#include "torelli/linalg.hpp"
#include "torelli/partition.hpp"
#include "torelli/rational.hpp"

namespace torelli {

// The 2g-dimensional space with a nondegenerate form, gram^T = epsilon * gram.
struct EpsForm {
    int g = 1;
    int epsilon = -1;
    std::vector<std::vector<Rational>> gram;   // lambda(a_i, a_j)
    std::vector<std::vector<Rational>> omega;  // coefficient of a_i (x) a_j in omega

    static EpsForm make(int g, int epsilon);
    int dim() const { return 2 * g; }
    const Rational& lambda(int i, int j) const { return gram[i][j]; }
};

// Entries indexed by functions shape -> {0..2g-1}; the first element of shape varies fastest.
struct DenseTensor {
    std::vector<int> shape;  // sorted
    int dim = 2;
    std::vector<Rational> entries;

    DenseTensor() = default;
    DenseTensor(std::vector<int> shape, int dim);  // throws TensorTooLarge above 10^7 entries
    long size() const { return static_cast<long>(entries.size()); }
    long index(const std::vector<int>& coords) const;
    std::vector<int> coords(long index) const;
    friend bool operator==(const DenseTensor& a, const DenseTensor& b) = default;
};

using Matching = std::vector<std::pair<int, int>>;

DenseTensor omega_m(const Matching& m, const std::vector<int>& set, const EpsForm& form);

// All perfect matchings of the set, each pair oriented small to large.
std::vector<Matching> perfect_matchings(const std::vector<int>& set);

struct SpanRank {
    int rank = 0;
    int matching_dim = 0;
};
SpanRank matching_span_rank(int set_size, int g, int epsilon);

DenseTensor K_on_morphism(const BrauerMorphism& m, const DenseTensor& x, const EpsForm& form);

// Basis of the common kernel of all pairwise contractions on H^{(x) q}.
std::vector<SparseRow> harmonic_projection(int q, const EpsForm& form,
                                           std::vector<long>* free_columns = nullptr);

// Multiplicity of S^lambda in H^{[q]} from the trace of the Sigma_q action.
Integer harmonic_multiplicity(const Partition& lambda, const EpsForm& form);

}  // namespace torelli
