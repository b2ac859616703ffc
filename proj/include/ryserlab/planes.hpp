#pragma once

#include <string>
#include <vector>

#include "ryserlab/hypergraph.hpp"

namespace ryserlab::planes {

enum class PlaneKind { projective, affine };

// Point/line incidence structure for PG(2,q) or AG(2,q). Points carry their
// canonical coordinates as labels; lines are sorted point-index sets. For the
// affine kind, parallel_classes partitions the line indices into q+1 groups
// of q, ordered by slope with the vertical (infinite-slope) class last.
struct IncidencePlane {
    PlaneKind kind = PlaneKind::projective;
    long long q = 0;
    std::vector<std::string> points;
    std::vector<std::vector<int>> lines;
    std::vector<std::vector<int>> parallel_classes;

    friend bool operator==(const IncidencePlane&, const IncidencePlane&) = default;
};

// What was removed from a plane to produce a truncated structure.
struct DeletedRecord {
    std::string point;
    std::string line;

    friend bool operator==(const DeletedRecord&, const DeletedRecord&) = default;
};

// A hypergraph cut out of a plane, keeping the parallel-class structure of
// its edges (indices into base.edges, each group sorted ascending).
struct TruncatedStructure {
    hg::PartiteHypergraph base;
    std::vector<std::vector<int>> parallel_classes;
    DeletedRecord deleted;

    friend bool operator==(const TruncatedStructure&,
                           const TruncatedStructure&) = default;
};

// PG(2,q): points are normalized homogeneous triples (leftmost nonzero
// coordinate 1) in lexicographic order, lines the same by duality.
IncidencePlane build_projective(long long q);

// AG(2,q), from PG(2,q) by deleting the line whose points have third
// homogeneous coordinate zero. Points are labeled with affine pairs.
IncidencePlane build_affine(long long q);

// PG(2,q) minus one point and every line through it. (q+1)-partite and
// (q+1)-uniform: q^2+q vertices in q+1 classes of q, q^2 edges of size q+1,
// intersecting. The removed point is the lexicographically least one.
TruncatedStructure truncate_projective(long long q);

// AG(2,p) minus the origin and every line through it: (p+1)-partite,
// p-uniform, p+1 parallel edge classes of p-1 disjoint edges each.
TruncatedStructure build_Ap(long long p);

// From AG(2,p-1): the vertical parallel class becomes the vertex partition,
// the remaining lines the edges. (p-1)-partite, (p-1)-uniform, p-1 parallel
// edge classes of p-1 edges; edges from different classes meet in one vertex.
// Requires both p and p-1 to be prime powers.
TruncatedStructure build_J_gadget(long long p);

// Cover of size 2q-1: every point of the first line of the first parallel
// class plus the least-index point of each remaining line in that class.
std::vector<int> canonical_affine_cover(const IncidencePlane& plane);

// Plane as a hypergraph with singleton vertex classes (for files/solving).
hg::PartiteHypergraph plane_to_hypergraph(const IncidencePlane& plane);

}  // namespace ryserlab::planes
