#pragma once

#include <random>
#include <utility>
#include <vector>

#include "torelli/rational.hpp"

namespace torelli {

// Morphism S -> T of the (signed) Brauer category: a bijection between S minus the source
// pairs and T minus the target pairs, plus ordered matchings on each side.
struct BrauerMorphism {
    std::vector<int> source;                        // sorted
    std::vector<int> target;                        // sorted
    std::vector<std::pair<int, int>> through;       // (s, f(s))
    std::vector<std::pair<int, int>> source_pairs;  // contracted by the form
    std::vector<std::pair<int, int>> target_pairs;  // filled with omega

    bool is_downward() const { return target_pairs.empty(); }
    void validate() const;

    static BrauerMorphism identity(const std::vector<int>& set);

    // Sorted pairs and through-strands; pair orientation is kept.
    BrauerMorphism normalized() const;
    friend bool operator==(const BrauerMorphism& a, const BrauerMorphism& b) = default;
};

struct ScaledMorphism {
    Rational scalar;
    BrauerMorphism morphism;
};

// second o first. In the signed category reversing a pair costs -1; closed loops contribute
// charge each, after orienting their pieces compatibly.
ScaledMorphism compose(const BrauerMorphism& second, const BrauerMorphism& first, bool is_signed,
                       const Rational& charge);

// Uniformly random morphism between the given sets (downward if requested). Pair
// orientations are random too.
BrauerMorphism random_morphism(const std::vector<int>& source, const std::vector<int>& target,
                               bool downward, std::mt19937_64& rng);

}  // namespace torelli
