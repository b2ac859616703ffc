#include "ryserlab/compose.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace ryserlab::compose {

namespace {

// Host classes p+1..p+r0-1 receive the gadget classes other than the chosen
// one, in gadget-class order.
std::vector<int> identity_map(int r0, long long p) {
    std::vector<int> map;
    for (int j = 0; j < r0 - 1; j++) map.push_back((int)p + 1 + j);
    return map;
}

void check_placement(const Placement& pl, int r0, long long p) {
    if (pl.gadget_class_into_vi < 0 || pl.gadget_class_into_vi >= r0)
        throw PlacementSizeMismatch("gadget class index out of range");
    if ((int)pl.class_map.size() != r0 - 1)
        throw PlacementSizeMismatch("class_map must assign exactly r0-1 classes");
    std::vector<int> sorted = pl.class_map;
    std::sort(sorted.begin(), sorted.end());
    for (int j = 0; j < r0 - 1; j++)
        if (sorted[j] != (int)p + 1 + j)
            throw PlacementSizeMismatch(
                "class_map must be a bijection onto the new host classes");
}

long long require_ap_shape(const planes::TruncatedStructure& ap) {
    long long p = ap.base.r - 1;
    if (p < 2 || (long long)ap.parallel_classes.size() != p + 1)
        throw PreconditionViolated("first argument does not look like an A_p");
    for (const auto& cls : ap.parallel_classes)
        if ((long long)cls.size() != p - 1)
            throw PreconditionViolated("first argument does not look like an A_p");
    return p;
}

struct Extension {
    // for parallel class i and one of its edges e, the gadget edges appended
    // to e (as indices into the gadget's canonical edge list)
    std::vector<std::vector<std::vector<int>>> gadget_edges_for;
};

// Shared assembly for both compositions. The gadget copies are placed per
// the placement; which gadget edges extend which host edge comes from ext.
hg::PartiteHypergraph assemble(const planes::TruncatedStructure& ap,
                               const hg::PartiteHypergraph& gadget,
                               const Placement& placement, const Extension& ext,
                               std::map<std::string, std::string> meta) {
    long long p = require_ap_shape(ap);
    int r0 = gadget.r;
    int n_host = ap.base.vertex_count();
    int n_gadget = gadget.vertex_count();
    int copies = (int)(p + 1);
    int r = (int)p + r0;

    // vertex class of each gadget vertex, in gadget-local ids
    std::vector<int> gadget_class(n_gadget, -1);
    for (int ci = 0; ci < r0; ci++)
        for (int v : gadget.classes[ci]) gadget_class[v] = ci;

    // host class each gadget class maps to: the chosen one is resolved per
    // copy, the others are fixed by the placement
    std::vector<int> host_of_class(r0, -1);
    {
        int next = 0;
        for (int ci = 0; ci < r0; ci++) {
            if (ci == placement.gadget_class_into_vi) continue;
            host_of_class[ci] = placement.class_map[next++];
        }
    }

    std::vector<std::vector<int>> classes(r);
    for (int ci = 0; ci < ap.base.r; ci++) classes[ci] = ap.base.classes[ci];

    std::map<int, std::string> labels = ap.base.labels;
    auto gadget_label = [&](int copy, int v) {
        auto it = gadget.labels.find(v);
        std::string inner = it != gadget.labels.end() ? it->second : std::to_string(v);
        return "J" + std::to_string(copy) + ":" + inner;
    };

    // fresh ids for copy i start at n_host + i*n_gadget
    for (int copy = 0; copy < copies; copy++) {
        int base_id = n_host + copy * n_gadget;
        for (int v = 0; v < n_gadget; v++) {
            int cls = gadget_class[v];
            int host = cls == placement.gadget_class_into_vi ? copy
                                                             : host_of_class[cls];
            classes[host].push_back(base_id + v);
            if (!gadget.labels.empty()) labels[base_id + v] = gadget_label(copy, v);
        }
    }

    std::vector<std::vector<int>> edges;
    for (int copy = 0; copy < copies; copy++) {
        int base_id = n_host + copy * n_gadget;
        const auto& cls = ap.parallel_classes[copy];
        for (size_t j = 0; j < cls.size(); j++) {
            const auto& host_edge = ap.base.edges[cls[j]];
            for (int ge : ext.gadget_edges_for[copy][j]) {
                std::vector<int> e = host_edge;
                for (int v : gadget.edges[ge]) e.push_back(base_id + v);
                edges.push_back(std::move(e));
            }
        }
    }

    return hg::PartiteHypergraph::create(std::move(classes), std::move(edges),
                                         std::move(labels), std::move(meta));
}

}  // namespace

Placement Placement::canonical(int r0, long long p) {
    Placement pl;
    pl.gadget_class_into_vi = 0;
    pl.class_map = identity_map(r0, p);
    return pl;
}

Placement Placement::randomized(int r0, long long p, uint64_t seed) {
    std::mt19937_64 rng(seed);
    Placement pl;
    pl.gadget_class_into_vi = (int)(rng() % (uint64_t)r0);
    pl.class_map = identity_map(r0, p);
    std::shuffle(pl.class_map.begin(), pl.class_map.end(), rng);
    return pl;
}

hg::PartiteHypergraph compose_near_extremal(const planes::TruncatedStructure& ap,
                                            const hg::PartiteHypergraph& gadget,
                                            const Placement& placement) {
    long long p = require_ap_shape(ap);
    int r0 = gadget.r;
    if (r0 > p)
        throw PreconditionViolated("gadget has r0 = " + std::to_string(r0) +
                                   " > p = " + std::to_string(p));
    if (!hg::is_uniform(gadget, r0) || !hg::is_r_partite(gadget))
        throw PreconditionViolated("gadget must be r0-partite and r0-uniform");
    if (!hg::is_intersecting(gadget))
        throw GadgetNotIntersecting("gadget is not intersecting");
    auto guarantee = hg::meta_int(gadget, "tau_guarantee");
    if (!guarantee || *guarantee < 2)
        throw PreconditionViolated("gadget needs tau_guarantee >= 2");
    check_placement(placement, r0, p);

    Extension ext;
    std::vector<int> all_edges(gadget.edge_count());
    std::iota(all_edges.begin(), all_edges.end(), 0);
    for (size_t i = 0; i < ap.parallel_classes.size(); i++)
        ext.gadget_edges_for.push_back(std::vector<std::vector<int>>(
            ap.parallel_classes[i].size(), all_edges));

    long long effective = std::min<long long>(*guarantee, r0 - 1);
    std::map<std::string, std::string> meta{
        {"construction", "hr"},
        {"p", std::to_string(p)},
        {"r0", std::to_string(r0)},
        {"tau_guarantee", std::to_string(p + effective - 1)},
        {"claim_uniform", std::to_string(p + r0)},
        {"claim_intersecting", "1"},
        {"placement", placement.gadget_class_into_vi == 0 &&
                              placement.class_map == identity_map(r0, p)
                          ? "canonical"
                          : "custom"},
    };
    return assemble(ap, gadget, placement, ext, std::move(meta));
}

hg::PartiteHypergraph compose_extremal(long long p) {
    planes::TruncatedStructure ap = planes::build_Ap(p);
    planes::TruncatedStructure j = planes::build_J_gadget(p);
    int r0 = j.base.r;  // p - 1
    long long r = 2 * p - 1;

    // canonical matching: the j-th edge of C_i gets the j-th parallel class
    Extension ext;
    for (size_t i = 0; i < ap.parallel_classes.size(); i++) {
        std::vector<std::vector<int>> per_edge;
        for (size_t e = 0; e < ap.parallel_classes[i].size(); e++)
            per_edge.push_back(j.parallel_classes[e]);
        ext.gadget_edges_for.push_back(std::move(per_edge));
    }

    std::map<std::string, std::string> meta{
        {"construction", "gr"},
        {"p", std::to_string(p)},
        {"r0", std::to_string(r0)},
        {"tau_guarantee", std::to_string(r - 1)},
        {"claim_uniform", std::to_string(r)},
        {"claim_intersecting", "1"},
        {"placement", "canonical"},
    };
    return assemble(ap, j.base, Placement::canonical(r0, p), ext,
                    std::move(meta));
}

namespace {

hg::PartiteHypergraph build_chain_impl(const primes::ChainDecomposition& chain,
                                       const uint64_t* seed) {
    // revalidate so a hand-built struct cannot bypass the conditions
    primes::validate_chain(chain.primes);
    std::string chain_text;
    for (size_t i = 0; i < chain.primes.size(); i++)
        chain_text += (i ? "," : "") + std::to_string(chain.primes[i]);

    hg::PartiteHypergraph h = planes::truncate_projective(chain.primes[0]).base;
    for (size_t i = 1; i < chain.primes.size(); i++) {
        long long p = chain.primes[i];
        planes::TruncatedStructure ap = planes::build_Ap(p);
        Placement pl = seed ? Placement::randomized(h.r, p, *seed + i)
                            : Placement::canonical(h.r, p);
        h = compose_near_extremal(ap, h, pl);
    }
    h.meta["construction"] = "hr-chain";
    h.meta["chain"] = chain_text;
    if (seed) h.meta["placement"] = "seed:" + std::to_string(*seed);
    return h;
}

}  // namespace

hg::PartiteHypergraph build_chain(const primes::ChainDecomposition& chain) {
    return build_chain_impl(chain, nullptr);
}

hg::PartiteHypergraph build_chain(const std::vector<long long>& ps) {
    return build_chain_impl(primes::validate_chain(ps), nullptr);
}

hg::PartiteHypergraph build_chain_randomized(const std::vector<long long>& ps,
                                             uint64_t seed) {
    return build_chain_impl(primes::validate_chain(ps), &seed);
}

}  // namespace ryserlab::compose
