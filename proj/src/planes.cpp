#include "ryserlab/planes.hpp"

#include <algorithm>
#include <array>
#include <map>

#include "ryserlab/gf.hpp"

namespace ryserlab::planes {

namespace {

using gf::Field;
using gf::FieldElement;

using Triple = std::array<FieldElement, 3>;

// Normalized triples (leftmost nonzero coordinate 1), in lexicographic order
// of coordinate values: (0,0,1), then (0,1,c), then (1,b,c).
std::vector<Triple> normalized_triples(const Field& f) {
    auto elems = gf::elements(f);
    auto z = gf::zero(f), o = gf::one(f);
    std::vector<Triple> out;
    out.push_back({z, z, o});
    for (const auto& c : elems) out.push_back({z, o, c});
    for (const auto& b : elems)
        for (const auto& c : elems) out.push_back({o, b, c});
    return out;
}

bool incident(const Triple& pt, const Triple& dual) {
    auto s = gf::add(gf::add(gf::mul(pt[0], dual[0]), gf::mul(pt[1], dual[1])),
                     gf::mul(pt[2], dual[2]));
    return gf::is_zero(s);
}

struct ProjectiveGeometry {
    Field f;
    long long q;
    std::vector<Triple> pts;
    std::vector<Triple> duals;
    std::vector<std::vector<int>> lines;  // point indices per dual
};

ProjectiveGeometry projective_geometry(long long q) {
    ProjectiveGeometry g;
    g.f = gf::make_field(q);
    g.q = q;
    g.pts = normalized_triples(g.f);
    g.duals = g.pts;
    g.lines.resize(g.duals.size());
    for (size_t j = 0; j < g.duals.size(); j++)
        for (size_t i = 0; i < g.pts.size(); i++)
            if (incident(g.pts[i], g.duals[j])) g.lines[j].push_back((int)i);
    return g;
}

std::string triple_label(const Triple& t) {
    return "(" + std::to_string(t[0].value()) + ":" + std::to_string(t[1].value()) +
           ":" + std::to_string(t[2].value()) + ")";
}

std::string pair_label(long long u, long long v) {
    return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

struct AffineGeometry {
    long long q;
    std::vector<std::pair<long long, long long>> pts;  // (u,v) values, sorted
    std::vector<std::vector<int>> lines;               // class-major order
    std::vector<std::vector<int>> classes;             // line indices per slope, vertical last
};

// Deletes the line at infinity from PG(2,q) and groups the remaining lines
// into parallel classes by their deleted point.
AffineGeometry affine_geometry(long long q) {
    ProjectiveGeometry g = projective_geometry(q);
    AffineGeometry a;
    a.q = q;

    // line at infinity = dual (0,0,1) = index 0 in the canonical order
    const std::vector<int>& linf = g.lines[0];
    std::vector<char> at_infinity(g.pts.size(), 0);
    for (int i : linf) at_infinity[i] = 1;

    // affine points sorted by (u,v) = (a/c, b/c)
    std::vector<int> affine_of(g.pts.size(), -1);
    std::vector<std::pair<std::pair<long long, long long>, int>> coords;
    for (size_t i = 0; i < g.pts.size(); i++) {
        if (at_infinity[i]) continue;
        auto cinv = gf::inv(g.pts[i][2]);
        coords.push_back({{gf::mul(g.pts[i][0], cinv).value(),
                           gf::mul(g.pts[i][1], cinv).value()},
                          (int)i});
    }
    std::sort(coords.begin(), coords.end());
    for (size_t k = 0; k < coords.size(); k++) {
        a.pts.push_back(coords[k].first);
        affine_of[coords[k].second] = (int)k;
    }

    // slope of a surviving line = its unique point on the line at infinity:
    // (1,s,0) has slope s, (0,1,0) is vertical
    struct LineRec {
        long long intercept;
        std::vector<int> pts;
    };
    std::map<long long, std::vector<LineRec>> by_slope;  // slope value, -1 = vertical
    for (size_t j = 1; j < g.lines.size(); j++) {
        std::vector<int> apts;
        long long slope = -2;
        for (int i : g.lines[j]) {
            if (at_infinity[i])
                slope = gf::is_zero(g.pts[i][0]) ? -1 : g.pts[i][1].value();
            else
                apts.push_back(affine_of[i]);
        }
        std::sort(apts.begin(), apts.end());
        long long intercept = -1;
        for (int pi : apts) {
            if (slope == -1) {
                intercept = a.pts[pi].first;  // vertical line u = const
                break;
            }
            if (a.pts[pi].first == 0) {
                intercept = a.pts[pi].second;  // v-intercept at u = 0
                break;
            }
        }
        by_slope[slope].push_back({intercept, std::move(apts)});
    }

    // classes: slope 0..q-1 in order, vertical last; within a class by intercept
    std::vector<long long> slope_order;
    for (long long s = 0; s < q; s++) slope_order.push_back(s);
    slope_order.push_back(-1);
    for (long long s : slope_order) {
        auto& recs = by_slope[s];
        std::sort(recs.begin(), recs.end(),
                  [](const LineRec& x, const LineRec& y) {
                      return x.intercept < y.intercept;
                  });
        std::vector<int> cls;
        for (auto& rec : recs) {
            cls.push_back((int)a.lines.size());
            a.lines.push_back(std::move(rec.pts));
        }
        a.classes.push_back(std::move(cls));
    }
    return a;
}

// Canonical indices of a set of edges in a freshly created hypergraph,
// sorted ascending.
std::vector<int> canonical_indices(const hg::PartiteHypergraph& h,
                                   const std::vector<std::vector<int>>& edges) {
    std::vector<int> idx;
    idx.reserve(edges.size());
    for (const auto& e : edges) idx.push_back(h.edge_index(e));
    std::sort(idx.begin(), idx.end());
    return idx;
}

}  // namespace

IncidencePlane build_projective(long long q) {
    ProjectiveGeometry g = projective_geometry(q);
    IncidencePlane plane;
    plane.kind = PlaneKind::projective;
    plane.q = q;
    for (const auto& t : g.pts) plane.points.push_back(triple_label(t));
    plane.lines = std::move(g.lines);
    return plane;
}

IncidencePlane build_affine(long long q) {
    AffineGeometry a = affine_geometry(q);
    IncidencePlane plane;
    plane.kind = PlaneKind::affine;
    plane.q = q;
    for (auto [u, v] : a.pts) plane.points.push_back(pair_label(u, v));
    plane.lines = std::move(a.lines);
    plane.parallel_classes = std::move(a.classes);
    return plane;
}

TruncatedStructure truncate_projective(long long q) {
    ProjectiveGeometry g = projective_geometry(q);
    const int removed = 0;  // least point, (0:0:1)

    std::vector<int> new_id(g.pts.size(), -1);
    int next = 0;
    for (size_t i = 0; i < g.pts.size(); i++)
        if ((int)i != removed) new_id[i] = next++;

    std::vector<std::vector<int>> classes;
    std::vector<std::vector<int>> edges;
    for (size_t j = 0; j < g.lines.size(); j++) {
        bool through = std::find(g.lines[j].begin(), g.lines[j].end(), removed) !=
                       g.lines[j].end();
        std::vector<int> ids;
        for (int i : g.lines[j])
            if (i != removed) ids.push_back(new_id[i]);
        if (through)
            classes.push_back(std::move(ids));
        else
            edges.push_back(std::move(ids));
    }

    std::map<int, std::string> labels;
    for (size_t i = 0; i < g.pts.size(); i++)
        if ((int)i != removed) labels[new_id[i]] = triple_label(g.pts[i]);

    std::map<std::string, std::string> meta{
        {"construction", "trunc-pg"},
        {"q", std::to_string(q)},
        {"tau_guarantee", std::to_string(q)},
        {"claim_uniform", std::to_string(q + 1)},
        {"claim_intersecting", "1"},
    };

    TruncatedStructure t;
    t.base = hg::PartiteHypergraph::create(std::move(classes), std::move(edges),
                                           std::move(labels), std::move(meta));
    t.deleted.point = triple_label(g.pts[removed]);
    return t;
}

TruncatedStructure build_Ap(long long p) {
    AffineGeometry a = affine_geometry(p);
    const int origin = 0;  // (0,0) sorts first

    std::vector<int> new_id((size_t)(p * p), -1);
    int next = 0;
    for (size_t i = 0; i < a.pts.size(); i++)
        if ((int)i != origin) new_id[i] = next++;

    auto renumber = [&](const std::vector<int>& pts) {
        std::vector<int> out;
        for (int i : pts)
            if (i != origin) out.push_back(new_id[i]);
        return out;
    };

    std::vector<std::vector<int>> classes;               // V_i
    std::vector<std::vector<std::vector<int>>> edge_cls;  // surviving lines per class
    for (const auto& cls : a.classes) {
        std::vector<std::vector<int>> surviving;
        std::vector<int> v_class;
        for (int li : cls) {
            const auto& line = a.lines[li];
            if (std::find(line.begin(), line.end(), origin) != line.end())
                v_class = renumber(line);
            else
                surviving.push_back(renumber(line));
        }
        classes.push_back(std::move(v_class));
        edge_cls.push_back(std::move(surviving));
    }

    std::vector<std::vector<int>> edges;
    for (const auto& group : edge_cls)
        for (const auto& e : group) edges.push_back(e);

    std::map<int, std::string> labels;
    for (size_t i = 0; i < a.pts.size(); i++)
        if ((int)i != origin)
            labels[new_id[i]] = pair_label(a.pts[i].first, a.pts[i].second);

    std::map<std::string, std::string> meta{
        {"construction", "ap"},
        {"p", std::to_string(p)},
        {"claim_uniform", std::to_string(p)},
        {"claim_intersecting", p == 2 ? "1" : "0"},
    };
    if (p == 2) meta["degenerate"] = "1";

    TruncatedStructure t;
    t.base = hg::PartiteHypergraph::create(std::move(classes), std::move(edges),
                                           std::move(labels), std::move(meta));
    for (const auto& group : edge_cls)
        t.parallel_classes.push_back(canonical_indices(t.base, group));
    t.deleted.point = "(0,0)";
    return t;
}

TruncatedStructure build_J_gadget(long long p) {
    gf::make_field(p);  // NotAPrimePower when p is not one
    AffineGeometry a = affine_geometry(p - 1);

    // vertical class becomes the vertex partition; its lines partition pts
    std::vector<std::vector<int>> classes;
    for (int li : a.classes.back()) classes.push_back(a.lines[li]);

    std::vector<std::vector<std::vector<int>>> edge_cls;
    for (size_t ci = 0; ci + 1 < a.classes.size(); ci++) {
        std::vector<std::vector<int>> group;
        for (int li : a.classes[ci]) group.push_back(a.lines[li]);
        edge_cls.push_back(std::move(group));
    }
    std::vector<std::vector<int>> edges;
    for (const auto& group : edge_cls)
        for (const auto& e : group) edges.push_back(e);

    std::map<int, std::string> labels;
    for (size_t i = 0; i < a.pts.size(); i++)
        labels[(int)i] = pair_label(a.pts[i].first, a.pts[i].second);

    std::map<std::string, std::string> meta{
        {"construction", "gadget-j"},
        {"p", std::to_string(p)},
        {"claim_uniform", std::to_string(p - 1)},
        {"claim_intersecting", "0"},
    };

    TruncatedStructure t;
    t.base = hg::PartiteHypergraph::create(std::move(classes), std::move(edges),
                                           std::move(labels), std::move(meta));
    for (const auto& group : edge_cls)
        t.parallel_classes.push_back(canonical_indices(t.base, group));
    t.deleted.line = "vertical parallel class";
    return t;
}

std::vector<int> canonical_affine_cover(const IncidencePlane& plane) {
    if (plane.kind != PlaneKind::affine || plane.parallel_classes.empty())
        throw PreconditionViolated("canonical_affine_cover needs an affine plane");
    const auto& cls = plane.parallel_classes[0];
    std::vector<int> cover = plane.lines[cls[0]];
    for (size_t i = 1; i < cls.size(); i++)
        cover.push_back(*std::min_element(plane.lines[cls[i]].begin(),
                                          plane.lines[cls[i]].end()));
    std::sort(cover.begin(), cover.end());
    return cover;
}

hg::PartiteHypergraph plane_to_hypergraph(const IncidencePlane& plane) {
    std::vector<std::vector<int>> classes;
    for (size_t i = 0; i < plane.points.size(); i++)
        classes.push_back({(int)i});
    std::map<int, std::string> labels;
    for (size_t i = 0; i < plane.points.size(); i++)
        labels[(int)i] = plane.points[i];

    bool projective = plane.kind == PlaneKind::projective;
    std::map<std::string, std::string> meta{
        {"construction", projective ? "pg" : "ag"},
        {"q", std::to_string(plane.q)},
        {"claim_uniform", std::to_string(projective ? plane.q + 1 : plane.q)},
        {"claim_intersecting", projective ? "1" : "0"},
    };
    if (!projective) meta["tau_guarantee"] = std::to_string(2 * plane.q - 1);

    return hg::PartiteHypergraph::create(std::move(classes), plane.lines,
                                         std::move(labels), std::move(meta));
}

}  // namespace ryserlab::planes
