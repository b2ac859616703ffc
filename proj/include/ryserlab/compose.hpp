#pragma once

#include <cstdint>
#include <vector>

#include "ryserlab/hypergraph.hpp"
#include "ryserlab/planes.hpp"
#include "ryserlab/primes.hpp"

namespace ryserlab::compose {

// How a gadget copy's vertex classes map onto host classes. Class
// `gadget_class_into_vi` of copy i lands in host class V_i; the remaining
// r0-1 gadget classes (in gadget order) land in the host classes named by
// class_map, which must be a bijection onto p+1..p+r0-1.
struct Placement {
    int gadget_class_into_vi = 0;
    std::vector<int> class_map;

    static Placement canonical(int r0, long long p);
    static Placement randomized(int r0, long long p, uint64_t seed);
};

// Appends every edge of a fresh gadget copy to every edge of each parallel
// class of A_p. The gadget must be r0-partite r0-uniform intersecting with
// r0 <= p and carry a tau_guarantee of at least 2. The result is
// (p+r0)-partite, (p+r0)-uniform and intersecting, with
// tau_guarantee = p + min(gadget guarantee, r0-1) - 1.
hg::PartiteHypergraph compose_near_extremal(const planes::TruncatedStructure& ap,
                                            const hg::PartiteHypergraph& gadget,
                                            const Placement& placement);

// The r = 2p-1 construction: each edge of a parallel class C_i is extended
// only by the edges of its matched parallel class of the gadget built from
// AG(2,p-1). Intersecting with tau_guarantee = r-1. Requires p and p-1 to be
// prime powers.
hg::PartiteHypergraph compose_extremal(long long p);

// Recursive chain construction: the base case is the truncated projective
// plane, each further prime power composes via compose_near_extremal. The
// result has r = 1 + sum(p_i) and tau_guarantee = r - k.
hg::PartiteHypergraph build_chain(const primes::ChainDecomposition& chain);
hg::PartiteHypergraph build_chain(const std::vector<long long>& ps);

// Exploration variant: placements drawn from the seed, one per parallel
// class level; the bound metadata is unaffected by the choice.
hg::PartiteHypergraph build_chain_randomized(const std::vector<long long>& ps,
                                             uint64_t seed);

}  // namespace ryserlab::compose
