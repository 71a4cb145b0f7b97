#pragma once

#include <map>
#include <optional>
#include <vector>

#include "torelli/brauer.hpp"
#include "torelli/label_ring.hpp"
#include "torelli/series.hpp"
#include "torelli/symgroup.hpp"

namespace torelli {

struct Part {
    std::vector<int> elements;  // sorted
    LabelMonomial label;

    int degree(int n) const {
        return label.degree() + n * (static_cast<int>(elements.size()) - 2);
    }
    friend auto operator<=>(const Part& a, const Part& b) = default;
    friend bool operator==(const Part& a, const Part& b) = default;
};

enum class PartitionVariant { All, NonNegative, Reduced };  // P, P_{>=0}, P'_{>=0}

// Set partition of the ground set with labelled parts; empty parts allowed.
class LabelledPartition {
public:
    LabelledPartition() = default;
    LabelledPartition(int n, std::vector<int> ground, std::vector<Part> parts);

    int n() const { return n_; }
    const std::vector<int>& ground() const { return ground_; }
    const std::vector<Part>& parts() const { return parts_; }
    int degree() const;
    bool satisfies(PartitionVariant variant) const;

    // Applies a bijection of the ground set (given as old -> new).
    LabelledPartition relabelled(const std::map<int, int>& f) const;

    friend auto operator<=>(const LabelledPartition& a, const LabelledPartition& b) = default;
    friend bool operator==(const LabelledPartition& a, const LabelledPartition& b) = default;

private:
    void canonicalize();
    int n_ = 1;
    std::vector<int> ground_;
    std::vector<Part> parts_;  // nonempty parts by min element, then empty parts by label
};

bool part_allowed(const Part& part, int n, PartitionVariant variant);

// Linear combination of labelled partitions on a common ground set, tensored with
// det^{n}; each coefficient refers to the ascending order of the ground set.
struct SignedPartitionVector {
    int n = 1;
    std::vector<int> ground;
    std::map<LabelledPartition, Rational> terms;

    void add(const LabelledPartition& x, const Rational& c);
    bool is_zero() const { return terms.empty(); }
    friend bool operator==(const SignedPartitionVector& a, const SignedPartitionVector& b) {
        return a.n == b.n && a.ground == b.ground && a.terms == b.terms;
    }
};

SignedPartitionVector single(const LabelledPartition& x, const Rational& c = 1);

std::vector<LabelledPartition> enumerate_basis(const std::vector<int>& ground, int n,
                                               PartitionVariant variant, int degree_cap);

enum class BrauerMode { Downward, SignedDownward, Brauer, SignedBrauer };
bool is_signed(BrauerMode mode);

SignedPartitionVector apply_morphism(const BrauerMorphism& m, const SignedPartitionVector& x,
                                     BrauerMode mode, std::optional<int> g = std::nullopt);

SignedPartitionVector day_product(const SignedPartitionVector& x, const SignedPartitionVector& y);

// Sign of the permutation sorting word, i.e. word relative to ascending order.
int word_sign(const std::vector<int>& word);

// Character of S_q on the degree-d basis of variant([q], V), times sign^n.
ClassFunction sigma_character(int q, int n, int degree, PartitionVariant variant);

// prod_{4i>2n} (1 - t^{4i-2n}) to order trunc.
LambdaSeries l_quotient_factor(int n, int trunc);
LambdaSeries quotient_series_by_L(const LambdaSeries& s, int n);

}  // namespace torelli
