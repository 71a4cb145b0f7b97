#pragma once

#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "torelli/label_ring.hpp"
#include "torelli/partition_functor.hpp"

namespace torelli {

// A half-edge (by position in the total order of half-edges) or a leg (by its name in S).
struct Endpoint {
    bool is_leg = false;
    int id = 0;

    static Endpoint half(int h) { return {false, h}; }
    static Endpoint leg(int s) { return {true, s}; }
    friend auto operator<=>(const Endpoint& a, const Endpoint& b) = default;
    friend bool operator==(const Endpoint& a, const Endpoint& b) = default;
};

struct MarkedGraph {
    int n = 1;
    std::vector<int> legs;                               // sorted leg names
    std::vector<LabelMonomial> labels;                   // vertices in order
    std::vector<int> vertex_of;                          // per half-edge, weakly increasing
    std::vector<std::pair<Endpoint, Endpoint>> matching; // ordered pairs

    int num_vertices() const { return static_cast<int>(labels.size()); }
    int num_half_edges() const { return static_cast<int>(vertex_of.size()); }
    int valence(int v) const;
    int vertex_degree(int v) const;
    int degree() const;

    // Throws InvalidGraph on a malformed graph or a vertex of nonpositive degree.
    void validate() const;
    bool is_trivalent() const;

    friend auto operator<=>(const MarkedGraph& a, const MarkedGraph& b) = default;
    friend bool operator==(const MarkedGraph& a, const MarkedGraph& b) = default;
};

// Incremental construction: add vertices in order, each with its number of half-edges.
class GraphBuilder {
public:
    GraphBuilder(int n, std::vector<int> legs);
    // Returns the ids of the new half-edges.
    std::vector<int> add_vertex(const LabelMonomial& label, int valence);
    void pair(Endpoint a, Endpoint b);
    MarkedGraph build() const;

private:
    MarkedGraph g_;
};

struct CanonicalGraph {
    MarkedGraph graph;
    int sign = 1;       // [input] = sign * [graph]
    bool zero = false;  // an odd automorphism kills the class
};

CanonicalGraph canonicalize(const MarkedGraph& g);

// +1/-1 if the graphs agree up to relabelling, reorientation and reordering; nullopt otherwise.
std::optional<int> compare_sign(const MarkedGraph& a, const MarkedGraph& b);

struct SignedGraphVector {
    std::map<MarkedGraph, Rational> terms;
    void add(const MarkedGraph& g, const Rational& c);  // canonicalizes first
    void add_raw(const MarkedGraph& g, const Rational& c);
};

// Contracts all internal edges and loops. If rng is given, contraction order is shuffled.
SignedPartitionVector reduce(const MarkedGraph& g, std::mt19937_64* rng = nullptr);
SignedPartitionVector reduce(const SignedGraphVector& x, std::mt19937_64* rng = nullptr);

// Single rewriting moves on trivalent graphs; each returns the sign s with [g] = s [result].
struct RewriteResult {
    MarkedGraph graph;
    int sign = 1;
};
// I=H move on the internal edge whose first endpoint is half-edge h.
RewriteResult apply_i_to_h(const MarkedGraph& g, int h);
// Loop elimination at a trivalent vertex.
RewriteResult apply_loop_removal(const MarkedGraph& g, int vertex);
// Absorbs univalent non-leg neighbours (trivalent vertex with two of them, or two joined).
std::optional<RewriteResult> apply_absorption(const MarkedGraph& g);

// Standard forest representing a labelled partition in P_{>=0}.
MarkedGraph standard_forest(const LabelledPartition& x);

SignedGraphVector reduce_trivalent(const SignedGraphVector& x);
SignedGraphVector reduce_trivalent(const MarkedGraph& g);

// Small named graphs.
MarkedGraph sakasai_graph(int n);
MarkedGraph i_graph(int n);
MarkedGraph h_graph(int n);
MarkedGraph lollipop_graph(int n);

MarkedGraph random_graph(int n, std::mt19937_64& rng, int max_vertices = 4, int max_half_edges = 8,
                         int max_legs = 3);

struct AuditRow {
    int degree = 0;
    int part_size = 0;
    int graph_count = 0;
    int partition_count = 0;  // basis labels minus L-relations
    bool images_ok = false;
};

struct AuditReport {
    int n = 0;
    int degree_cap = 0;
    std::vector<AuditRow> rows;
    bool ok() const;
};

AuditReport presentation_audit(int n, int degree_cap);

MarkedGraph graph_from_json(const std::string& text);
std::string graph_to_json(const MarkedGraph& g);

}  // namespace torelli
