#include "torelli/pipeline.hpp"

#include "torelli/errors.hpp"
#include "torelli/label_ring.hpp"
#include "torelli/partition_functor.hpp"
#include "torelli/symgroup.hpp"

namespace torelli {

Variant parse_variant(const std::string& s) {
    if (s == "disc") return Variant::Disc;
    if (s == "point") return Variant::Point;
    if (s == "closed") return Variant::Closed;
    throw ConfigError("unknown variant '" + s + "'");
}

std::string to_string(Variant v) {
    switch (v) {
        case Variant::Disc: return "disc";
        case Variant::Point: return "point";
        case Variant::Closed: return "closed";
    }
    return "disc";
}

std::vector<std::string> PipelineConfig::validate() const {
    std::vector<std::string> warnings;
    if (two_n < 2 || two_n % 2) throw ConfigError("dimension must be an even integer >= 2");
    if (max_degree < 0) throw ConfigError("max degree must be nonnegative");
    if (g && *g < 1) throw ConfigError("genus must be positive");
    if (two_n == 4)
        warnings.push_back("2n=4: the answer is only known after taking the limit g -> infinity");
    if (variant == Variant::Closed && n() > 1)
        warnings.push_back("closed variant for n > 1 is an extrapolation");
    if (variant == Variant::Closed && n() % 2 && g && *g == 1)
        warnings.push_back("closed variant needs n even or g != 1");
    return warnings;
}

LambdaSeries point_factor(int n, int trunc) {
    auto geometric = [&](int step) {
        LambdaSeries s(trunc);
        for (int k = 0; k <= trunc; k += step) s.add_term(k, SymFunc(1));
        return s;
    };
    LambdaSeries acc = geometric(2 * n);
    for (int i = 1; i < n; ++i) acc = acc * geometric(4 * i);
    return acc;
}

ClassSeries variant_adjust(const ClassSeries& s, Variant variant, int n) {
    if (variant == Variant::Disc) return s;
    ClassSeries pt = scalar_times(point_factor(n, s.truncation()), s);
    if (variant == Variant::Point) return pt;
    ClassSeries denom(s.epsilon(), s.truncation());
    denom.add_term(0, OrthSympClass::unit(s.epsilon()));
    if (n <= s.truncation()) denom.add_term(n, OrthSympClass::basis(s.epsilon(), Partition{1}));
    if (2 * n <= s.truncation()) denom.add_term(2 * n, OrthSympClass::unit(s.epsilon()));
    return class_series_invert(denom) * pt;
}

PipelineStages compute_stages(const PipelineConfig& cfg) {
    cfg.validate();
    const int n = cfg.n();
    PipelineStages st;
    st.ch_b = ch_B(n, cfg.max_degree);
    st.plethysm = exp_h(st.ch_b);
    st.pre_d = n % 2 ? omega(st.plethysm) : st.plethysm;
    st.post_d = D_series(st.pre_d, cfg.epsilon());
    st.quotient = scalar_times(l_quotient_factor(n, cfg.max_degree), st.post_d);
    st.final = variant_adjust(st.quotient, cfg.variant, n);
    return st;
}

CohomologyTable compute_cohomology(const PipelineConfig& cfg) {
    CohomologyTable t;
    t.config = cfg;
    t.notes = cfg.validate();
    t.stages = compute_stages(cfg);
    for (int d = 0; d <= cfg.max_degree; ++d) {
        OrthSympClass x = t.stages.final.coeff(d);
        for (const auto& [lambda, c] : x.terms())
            if (c < 0 || !is_integer(c))
                throw NegativeMultiplicity("degree " + std::to_string(d) + ": multiplicity " +
                                           c.get_str() + " at " + to_string(lambda));
        t.degrees.push_back(x);
    }
    if (cfg.g) {
        if (cfg.two_n != 4) t.trusted_up_to = stable_range(cfg.two_n, *cfg.g);
    }
    if (cfg.two_n == 2)
        t.notes.push_back("2n=2: valid provided the stable cohomology is finite dimensional in each degree");
    return t;
}

int stable_range(int two_n, int g) {
    if (g < 1) throw ConfigError("genus must be positive");
    if (two_n == 4) throw Unsupported("2n=4: only the limit g -> infinity is known");
    auto floor_div = [](int a, int b) { return a >= 0 ? a / b : -((-a + b - 1) / b); };
    if (two_n == 2) return floor_div(2 * g - 2, 3);
    if (two_n >= 6 && two_n % 2 == 0) return floor_div(g - 3, 2);
    throw ConfigError("dimension must be an even integer >= 2");
}

std::vector<OracleCell> oracle_check(int two_n, int d_max, int q_max) {
    PipelineConfig cfg;
    cfg.two_n = two_n;
    cfg.max_degree = d_max;
    cfg.validate();
    const int n = cfg.n();
    LambdaSeries chb = ch_B(n, d_max);
    LambdaSeries pre = exp_h(chb, q_max);
    if (n % 2) pre = omega(pre);
    LambdaSeries pipeline = quotient_series_by_L(pre, n);

    std::vector<OracleCell> cells;
    for (int q = 0; q <= q_max; ++q) {
        LambdaSeries enumerated(d_max);
        for (int d = 0; d <= d_max; ++d) {
            ClassFunction chi = sigma_character(q, n, d, PartitionVariant::Reduced);
            SymFunc f;
            for (const auto& [lambda, m] : decompose(chi)) f.add_term(lambda, Rational(m));
            enumerated.add_term(d, f);
        }
        LambdaSeries oracle = quotient_series_by_L(enumerated, n);
        for (int d = 0; d <= d_max; ++d) {
            OracleCell c;
            c.q = q;
            c.degree = d;
            c.oracle = oracle.coeff(d);
            c.pipeline = pipeline.coeff(d).homogeneous_part(q);
            c.pass = c.oracle == c.pipeline;
            cells.push_back(std::move(c));
        }
    }
    return cells;
}

}  // namespace torelli
