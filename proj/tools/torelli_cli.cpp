#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "torelli/errors.hpp"
#include "torelli/graph.hpp"
#include "torelli/invariants.hpp"
#include "torelli/label_ring.hpp"
#include "torelli/pipeline.hpp"
#include "torelli/render.hpp"

using namespace torelli;

namespace {

void check_format(const std::string& f) {
    if (f != "text" && f != "json" && f != "latex") throw ConfigError("unknown format '" + f + "'");
}

PipelineConfig make_config(int dim, int max_degree, const std::string& variant, int genus) {
    PipelineConfig cfg;
    cfg.two_n = dim;
    cfg.max_degree = max_degree;
    cfg.variant = parse_variant(variant);
    if (genus > 0) cfg.g = genus;
    for (const auto& w : cfg.validate()) std::cerr << "warning: " << w << "\n";
    return cfg;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string render_vector(const SignedPartitionVector& v) {
    std::string out;
    for (const auto& [lp, c] : v.terms) {
        if (!out.empty()) out += " + ";
        if (c != 1) out += to_string(c) + "*";
        out += "{";
        bool first = true;
        for (const auto& p : lp.parts()) {
            if (!first) out += " | ";
            first = false;
            out += "[";
            for (std::size_t i = 0; i < p.elements.size(); ++i)
                out += (i ? "," : "") + std::to_string(p.elements[i]);
            out += "]:" + to_string(p.label);
        }
        out += "}";
    }
    return out.empty() ? "0" : out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Stable cohomology of Torelli groups of high-dimensional manifolds"};
    app.require_subcommand(1);

    int dim = 6, max_degree = 4, genus = 0;
    std::string variant = "disc", format = "text", stage = "final";

    auto* coh = app.add_subcommand("cohomology", "Decomposition of the stable cohomology by degree");
    coh->add_option("--dim", dim, "Manifold dimension 2n")->required();
    coh->add_option("--max-degree", max_degree, "Largest cohomological degree");
    coh->add_option("--variant", variant, "disc | point | closed");
    coh->add_option("--genus", genus, "Explicit genus g (for stable range flags)");
    coh->add_option("--format", format, "text | json | latex");

    auto* ser = app.add_subcommand("series", "Intermediate series of the computation");
    ser->add_option("--dim", dim, "Manifold dimension 2n")->required();
    ser->add_option("--max-degree", max_degree, "Truncation degree");
    ser->add_option("--stage", stage, "chB | plethysm | pre-D | post-D | quotient | final");
    ser->add_option("--variant", variant, "disc | point | closed");
    ser->add_option("--format", format, "text | json");

    int qmax = 5, dmax = 5;
    auto* ora = app.add_subcommand("oracle", "Cross-check against explicit symmetric group characters");
    ora->add_option("--dim", dim, "Manifold dimension 2n")->required();
    ora->add_option("--qmax", qmax, "Largest number of legs");
    ora->add_option("--dmax", dmax, "Largest degree");
    ora->add_option("--format", format, "text | json");

    int lmax = 6;
    auto* lcl = app.add_subcommand("lclass", "Hirzebruch L-polynomials and their images");
    lcl->add_option("--max", lmax, "Largest index");
    lcl->add_option("--dim", dim, "Also show images in the label ring for this 2n");

    std::string graph_file;
    bool trivalent = false;
    int audit_cap = 5;
    auto* gra = app.add_subcommand("graph", "Graph calculus");
    gra->require_subcommand(1);
    auto* red = gra->add_subcommand("reduce", "Reduce a graph given as JSON");
    red->add_option("file", graph_file, "Graph JSON file")->required();
    red->add_flag("--trivalent", trivalent, "Rewrite to standard forests instead of partitions");
    auto* aud = gra->add_subcommand("audit", "Generator audit for low degrees");
    aud->add_option("--dim", dim, "Manifold dimension 2n")->required();
    aud->add_option("--cap", audit_cap, "Degree cap");

    int g = 2, set_size = 4, epsilon = -1;
    auto* inv = app.add_subcommand("invariants", "Invariant theory of the epsilon-symmetric form");
    inv->require_subcommand(1);
    auto* rank = inv->add_subcommand("rank", "Rank of the matching invariants");
    rank->add_option("--g", g, "Genus")->required();
    rank->add_option("--set-size", set_size, "Size of S")->required();
    rank->add_option("--epsilon", epsilon, "+1 or -1")->required();

    auto* rng = app.add_subcommand("range", "Stable range for a given genus");
    rng->add_option("--dim", dim, "Manifold dimension 2n")->required();
    rng->add_option("--genus", genus, "Genus g")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 3;
    }

    try {
        check_format(format);
        if (*coh) {
            auto table = compute_cohomology(make_config(dim, max_degree, variant, genus));
            if (format == "json")
                std::cout << to_json(table).dump(2) << "\n";
            else if (format == "latex")
                std::cout << render_latex(table);
            else
                std::cout << render(table);
        } else if (*ser) {
            auto st = compute_stages(make_config(dim, max_degree, variant, 0));
            nlohmann::json j;
            std::string text;
            if (stage == "chB") {
                j = to_json(st.ch_b), text = render(st.ch_b);
            } else if (stage == "plethysm") {
                j = to_json(st.plethysm), text = render(st.plethysm);
            } else if (stage == "pre-D") {
                j = to_json(st.pre_d), text = render(st.pre_d);
            } else if (stage == "post-D") {
                j = to_json(st.post_d), text = render(st.post_d);
            } else if (stage == "quotient") {
                j = to_json(st.quotient), text = render(st.quotient);
            } else if (stage == "final") {
                j = to_json(st.final), text = render(st.final);
            } else {
                throw ConfigError("unknown stage '" + stage + "'");
            }
            std::cout << (format == "json" ? j.dump(2) : text) << "\n";
        } else if (*ora) {
            auto cells = oracle_check(dim, dmax, qmax);
            bool ok = true;
            nlohmann::json j = nlohmann::json::array();
            for (const auto& c : cells) {
                ok = ok && c.pass;
                if (format == "json")
                    j.push_back({{"q", c.q}, {"degree", c.degree}, {"pass", c.pass},
                                 {"oracle", to_json(c.oracle)}, {"pipeline", to_json(c.pipeline)}});
                else
                    std::cout << "q=" << c.q << " d=" << c.degree << " " << (c.pass ? "pass" : "FAIL")
                              << "  " << render(c.oracle) << (c.pass ? "" : "  vs  " + render(c.pipeline))
                              << "\n";
            }
            if (format == "json") std::cout << j.dump(2) << "\n";
            return ok ? 0 : 1;
        } else if (*lcl) {
            for (int i = 1; i <= lmax; ++i) {
                std::cout << "L_" << i << " = " << to_string(l_class(i));
                if (lcl->count("--dim") && 2 * i > dim / 2) {
                    std::string img;
                    for (const auto& [c, v] : l_class_image(i, dim / 2)) {
                        if (!img.empty()) img += " + ";
                        img += to_string(v) + "*" + to_string(c);
                    }
                    std::cout << "   ->   " << (img.empty() ? "0" : img);
                }
                std::cout << "\n";
            }
        } else if (*gra) {
            if (*red) {
                auto graph = graph_from_json(read_file(graph_file));
                if (trivalent) {
                    for (const auto& [f, c] : reduce_trivalent(graph).terms)
                        std::cout << to_string(c) << " * " << graph_to_json(f) << "\n";
                } else {
                    std::cout << render_vector(reduce(graph)) << "\n";
                }
            } else {
                auto rep = presentation_audit(dim / 2, audit_cap);
                for (const auto& r : rep.rows)
                    std::cout << "degree " << r.degree << " size " << r.part_size << ": graphs "
                              << r.graph_count << ", partitions " << r.partition_count << ", images "
                              << (r.images_ok ? "span" : "DEFICIENT") << "\n";
                std::cout << (rep.ok() ? "audit ok" : "audit FAILED") << "\n";
                return rep.ok() ? 0 : 1;
            }
        } else if (*inv) {
            auto r = matching_span_rank(set_size, g, epsilon);
            std::cout << "|S|=" << set_size << " g=" << g << " epsilon=" << epsilon << ": rank " << r.rank
                      << ", matchings " << r.matching_dim
                      << (r.rank == r.matching_dim ? " (injective)" : " (not injective)") << "\n";
        } else if (*rng) {
            std::cout << stable_range(dim, genus) << "\n";
        }
    } catch (const NegativeMultiplicity& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const Unsupported& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
