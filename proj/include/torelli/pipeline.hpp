#pragma once

#include <optional>
#include <string>
#include <vector>

#include "torelli/branching.hpp"
#include "torelli/series.hpp"

namespace torelli {

enum class Variant { Disc, Point, Closed };

Variant parse_variant(const std::string& s);
std::string to_string(Variant v);

struct PipelineConfig {
    int two_n = 6;
    int max_degree = 4;
    Variant variant = Variant::Disc;
    std::optional<int> g;  // explicit genus; stable mode if absent

    int n() const { return two_n / 2; }
    int epsilon() const { return n() % 2 ? -1 : 1; }
    // Throws ConfigError on an invalid configuration; returns warnings.
    std::vector<std::string> validate() const;
};

struct PipelineStages {
    LambdaSeries ch_b;
    LambdaSeries plethysm;  // exp_h(ch_b)
    LambdaSeries pre_d;     // after omega^n
    ClassSeries post_d;     // after D, before the L-quotient
    ClassSeries quotient;   // after the L-quotient
    ClassSeries final;      // after the variant adjustment
};

struct CohomologyTable {
    PipelineConfig config;
    std::vector<OrthSympClass> degrees;  // index d
    std::optional<int> trusted_up_to;
    std::vector<std::string> notes;
    PipelineStages stages;
};

PipelineStages compute_stages(const PipelineConfig& cfg);
// Throws NegativeMultiplicity if an entry is negative or non-integral.
CohomologyTable compute_cohomology(const PipelineConfig& cfg);

// Scalar series 1/(1-t^{2n}) prod_{i<n} 1/(1-t^{4i}).
LambdaSeries point_factor(int n, int trunc);
ClassSeries variant_adjust(const ClassSeries& s, Variant variant, int n);

// Largest trusted degree; Unsupported for 2n = 4.
int stable_range(int two_n, int g);

struct OracleCell {
    int q = 0;
    int degree = 0;
    bool pass = false;
    SymFunc oracle;    // from the symmetric-group decomposition
    SymFunc pipeline;  // weight-q part of the quotiented pre-D series
};

std::vector<OracleCell> oracle_check(int two_n, int d_max, int q_max);

}  // namespace torelli
