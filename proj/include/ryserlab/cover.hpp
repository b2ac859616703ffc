#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ryserlab/hypergraph.hpp"

namespace ryserlab::cover {

// Result of an exact or budget-limited cover computation. The cover always
// hits every edge and lower_bound <= size; optimal means the two are equal
// and the search completed.
struct CoverCertificate {
    std::vector<int> cover;
    int size = 0;
    bool optimal = false;
    int lower_bound = 0;
    std::string lb_method;  // edge-degree-bound | packing | exhausted-search
    std::string ub_method;  // greedy | seeded | branch-and-bound
    long long nodes_explored = 0;
    double elapsed_seconds = 0.0;
    bool timed_out = false;
};

struct MatchingCertificate {
    std::vector<int> matching;  // pairwise disjoint edge indices
    int size = 0;
    bool optimal = false;
};

struct SolveOptions {
    double budget_seconds = 60.0;
    bool parallel = false;  // split the root branching; certified size matches
    std::optional<std::vector<int>> seed_cover;
};

// Repeatedly takes a maximum-degree vertex among uncovered edges, ties by
// least id. Always a valid cover.
std::vector<int> greedy_cover(const hg::PartiteHypergraph& h);

// Branch and bound on the vertices of an uncovered edge, pruned by
// current_size + lower_bound >= best with
// lower_bound = max(ceil(uncovered/max_degree), greedy edge packing).
// Deterministic in canonical (non-parallel) mode. Timeout is a result state:
// the certificate then carries the best cover found and a proven lower bound.
// If the instance metadata records a tau_guarantee, a certified optimum below
// it throws GuaranteeViolation.
CoverCertificate solve_exact(const hg::PartiteHypergraph& h,
                             const SolveOptions& options = {});

// Exact maximum matching by branch and bound over edge inclusion, with the
// intersecting fast path (nu = 1).
MatchingCertificate matching_number(const hg::PartiteHypergraph& h);

struct VerifyResult {
    bool ok = false;
    std::optional<int> first_missed_edge;
};

VerifyResult verify_cover(const hg::PartiteHypergraph& h,
                          const std::vector<int>& cover);

struct Rational {
    long long num = 0;
    long long den = 1;

    friend bool operator==(const Rational&, const Rational&) = default;
};

// tau / ((r-1) * nu), reduced; 1 exactly when the instance is r-Ryser.
// Throws RequiresExactCertificates unless both certificates are optimal.
Rational ryser_ratio(const hg::PartiteHypergraph& h, const CoverCertificate& tau,
                     const MatchingCertificate& nu);

std::string serialize_certificate(const CoverCertificate& cert);
CoverCertificate parse_certificate(std::string_view text);

}  // namespace ryserlab::cover
