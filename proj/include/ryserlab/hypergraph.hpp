#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ryserlab/errors.hpp"

namespace ryserlab::hg {

// Partite hypergraph on dense vertex ids 0..n-1. Canonical form throughout:
// class members and edge vertex lists sorted ascending, edges sorted
// lexicographically. Class order is significant. create() establishes the
// canonical form and validates the invariants; the raw fields stay public so
// predicates can be asked about arbitrary (possibly invalid) data.
struct PartiteHypergraph {
    int r = 0;
    std::vector<std::vector<int>> classes;
    std::vector<std::vector<int>> edges;
    std::map<int, std::string> labels;
    std::map<std::string, std::string> meta;

    int vertex_count() const;
    int edge_count() const { return (int)edges.size(); }

    // Index of an edge (given as a set of vertex ids) in canonical order.
    int edge_index(std::vector<int> edge) const;

    friend bool operator==(const PartiteHypergraph&,
                           const PartiteHypergraph&) = default;

    static PartiteHypergraph create(std::vector<std::vector<int>> classes,
                                    std::vector<std::vector<int>> edges,
                                    std::map<int, std::string> labels = {},
                                    std::map<std::string, std::string> meta = {});
};

struct WitnessPair {
    int edge_a = -1;
    int edge_b = -1;
};

// Pairwise edge-intersection summary. min/max are -1 when fewer than 2 edges.
struct IntersectionProfile {
    int min = -1;
    int max = -1;
    std::map<int, long long> histogram;
};

bool is_r_partite(const PartiteHypergraph& h);
bool is_uniform(const PartiteHypergraph& h, int k);

// True iff every pair of distinct edges shares a vertex; on failure the
// witness (when given) receives a disjoint pair.
bool is_intersecting(const PartiteHypergraph& h, WitnessPair* witness = nullptr);

IntersectionProfile intersection_profile(const PartiteHypergraph& h);

// Canonical line-oriented text format (.rhg). Byte-identical across runs.
std::string serialize(const PartiteHypergraph& h);

// Strict parser: ParseError for malformed input, ValidationError when the
// parsed object violates the type invariants.
PartiteHypergraph parse(std::string_view text);

// Adds one new vertex in a new class to every edge. Requires h to be
// r-partite and r-uniform; the cover number is unchanged.
PartiteHypergraph extend_universal(const PartiteHypergraph& h);

// Convenience accessors for integer-valued metadata.
std::optional<long long> meta_int(const PartiteHypergraph& h,
                                  const std::string& key);

}  // namespace ryserlab::hg
