#include "ryserlab/cover.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cstdio>
#include <mutex>
#include <numeric>
#include <thread>

#include "ryserlab/bitset.hpp"

namespace ryserlab::cover {

namespace {

using Clock = std::chrono::steady_clock;

constexpr int kInfinity = 1 << 29;

struct Instance {
    int n = 0;
    int m = 0;
    std::vector<Bitset> edge_verts;  // per edge, over vertices
    std::vector<Bitset> vert_edges;  // per vertex, over edges
    std::vector<int> edge_size;

    explicit Instance(const hg::PartiteHypergraph& h)
        : n(h.vertex_count()), m(h.edge_count()) {
        edge_verts.assign(m, Bitset(n));
        vert_edges.assign(n, Bitset(m));
        edge_size.resize(m);
        for (int e = 0; e < m; e++) {
            for (int v : h.edges[e]) {
                edge_verts[e].set(v);
                vert_edges[v].set(e);
            }
            edge_size[e] = (int)h.edges[e].size();
        }
    }
};

// Shared incumbent. In canonical mode a plain single-thread store; in
// parallel mode guarded so root branches can race.
struct Incumbent {
    std::mutex mu;
    std::atomic<int> size{kInfinity};
    std::vector<int> cover;

    void offer(const std::vector<int>& candidate) {
        std::lock_guard<std::mutex> lock(mu);
        if ((int)candidate.size() < size.load()) {
            size.store((int)candidate.size());
            cover = candidate;
            std::sort(cover.begin(), cover.end());
        }
    }
};

struct SearchStats {
    long long nodes = 0;
    bool timed_out = false;
    int abandoned_lb = kInfinity;  // min over abandoned nodes of size + lb
};

class Search {
public:
    Search(const Instance& inst, Incumbent& incumbent, Clock::time_point deadline)
        : inst_(inst),
          incumbent_(incumbent),
          deadline_(deadline),
          covered_(inst.m),
          excluded_(inst.n) {}

    SearchStats run(const std::vector<int>& preselected,
                    const std::vector<int>& preexcluded) {
        for (int v : preexcluded) excluded_.set(v);
        for (int v : preselected) include(v);
        recurse();
        return stats_;
    }

private:
    const Instance& inst_;
    Incumbent& incumbent_;
    Clock::time_point deadline_;
    Bitset covered_;
    Bitset excluded_;
    std::vector<int> current_;
    SearchStats stats_;

    void include(int v) {
        current_.push_back(v);
        covered_ |= inst_.vert_edges[v];
    }

    bool time_up() {
        if (stats_.timed_out) return true;
        if ((stats_.nodes & 63) == 1 && Clock::now() >= deadline_)
            stats_.timed_out = true;
        return stats_.timed_out;
    }

    int residual_degree(int v) const {
        return count_andnot(inst_.vert_edges[v], covered_);
    }

    // max(ceil(uncovered / max available degree), greedy packing); kInfinity
    // when some uncovered edge has no available vertex left.
    int lower_bound(int uncovered) const {
        int maxdeg = 0;
        for (int v = 0; v < inst_.n; v++) {
            if (excluded_.test(v)) continue;
            maxdeg = std::max(maxdeg, residual_degree(v));
        }
        if (maxdeg == 0) return kInfinity;
        int degree_bound = (uncovered + maxdeg - 1) / maxdeg;

        int packing = 0;
        Bitset used(inst_.n);
        bool infeasible = false;
        for (int e = 0; e < inst_.m; e++) {
            if (covered_.test(e)) continue;
            if (count_andnot(inst_.edge_verts[e], excluded_) == 0) infeasible = true;
            if (!inst_.edge_verts[e].intersects(used)) {
                packing++;
                used |= inst_.edge_verts[e];
            }
        }
        if (infeasible) return kInfinity;
        return std::max(degree_bound, packing);
    }

    int pick_edge() const {
        int best = -1;
        for (int e = 0; e < inst_.m; e++) {
            if (covered_.test(e)) continue;
            if (best == -1 || inst_.edge_size[e] < inst_.edge_size[best]) best = e;
        }
        return best;
    }

    // returns false when this subtree was abandoned by the timeout
    bool recurse() {
        stats_.nodes++;
        int uncovered = inst_.m - covered_.count();
        if (uncovered == 0) {
            incumbent_.offer(current_);
            return true;
        }
        int lb = lower_bound(uncovered);
        if ((int)current_.size() + lb >= incumbent_.size.load()) return true;
        if (time_up()) {
            abandon(lb);
            return false;
        }

        int e = pick_edge();
        std::vector<int> branch_verts;
        for (int v = 0; v < inst_.n; v++)
            if (inst_.edge_verts[e].test(v) && !excluded_.test(v))
                branch_verts.push_back(v);
        // residual degree descending, least id on ties
        std::stable_sort(branch_verts.begin(), branch_verts.end(),
                         [&](int a, int b) {
                             return residual_degree(a) > residual_degree(b);
                         });

        bool complete = true;
        Bitset saved_covered = covered_;
        size_t depth = current_.size();
        std::vector<int> newly_excluded;
        for (int v : branch_verts) {
            include(v);
            if (!recurse()) complete = false;
            current_.resize(depth);
            covered_ = saved_covered;
            if (stats_.timed_out) break;
            // later branches look for covers avoiding v
            excluded_.set(v);
            newly_excluded.push_back(v);
        }
        for (int v : newly_excluded) excluded_.reset(v);
        if (!complete) abandon(lb);
        return complete;
    }

    void abandon(int lb) {
        int bound = lb >= kInfinity ? kInfinity : (int)current_.size() + lb;
        stats_.abandoned_lb = std::min(stats_.abandoned_lb, bound);
    }
};

std::vector<int> greedy_cover_impl(const Instance& inst) {
    std::vector<int> cover;
    Bitset covered(inst.m);
    int left = inst.m;
    while (left > 0) {
        int best = -1, best_deg = 0;
        for (int v = 0; v < inst.n; v++) {
            int d = count_andnot(inst.vert_edges[v], covered);
            if (d > best_deg) {
                best_deg = d;
                best = v;
            }
        }
        cover.push_back(best);
        covered |= inst.vert_edges[best];
        left = inst.m - covered.count();
    }
    std::sort(cover.begin(), cover.end());
    return cover;
}

std::string format_seconds(double s) {
    char buf[32];
    snprintf(buf, sizeof buf, "%.6f", s);
    return buf;
}

}  // namespace

std::vector<int> greedy_cover(const hg::PartiteHypergraph& h) {
    return greedy_cover_impl(Instance(h));
}

VerifyResult verify_cover(const hg::PartiteHypergraph& h,
                          const std::vector<int>& cover) {
    int n = h.vertex_count();
    std::vector<char> in(n, 0);
    for (int v : cover)
        if (v >= 0 && v < n) in[v] = 1;
    for (int e = 0; e < h.edge_count(); e++) {
        bool hit = false;
        for (int v : h.edges[e])
            if (in[v]) {
                hit = true;
                break;
            }
        if (!hit) return {false, e};
    }
    return {true, std::nullopt};
}

CoverCertificate solve_exact(const hg::PartiteHypergraph& h,
                             const SolveOptions& options) {
    auto start = Clock::now();
    auto deadline = start + std::chrono::duration_cast<Clock::duration>(
                                std::chrono::duration<double>(options.budget_seconds));
    Instance inst(h);
    CoverCertificate cert;

    if (inst.m == 0) {
        cert.optimal = true;
        cert.lb_method = "exhausted-search";
        cert.ub_method = "greedy";
        return cert;
    }

    Incumbent incumbent;
    std::vector<int> greedy = greedy_cover_impl(inst);
    cert.ub_method = "greedy";
    if (options.seed_cover) {
        if (!verify_cover(h, *options.seed_cover).ok)
            throw PreconditionViolated("seed cover does not hit every edge");
        std::vector<int> seed = *options.seed_cover;
        std::sort(seed.begin(), seed.end());
        seed.erase(std::unique(seed.begin(), seed.end()), seed.end());
        if (seed.size() <= greedy.size()) {
            incumbent.offer(seed);
            cert.ub_method = "seeded";
        } else {
            incumbent.offer(greedy);
        }
    } else {
        incumbent.offer(greedy);
    }
    int incumbent_at_start = incumbent.size.load();

    // root bounds, reported when a timeout leaves nothing stronger
    int root_degree_bound, root_packing;
    {
        int maxdeg = 0;
        for (int v = 0; v < inst.n; v++)
            maxdeg = std::max(maxdeg, inst.vert_edges[v].count());
        root_degree_bound = (inst.m + maxdeg - 1) / maxdeg;
        Bitset used(inst.n);
        root_packing = 0;
        for (int e = 0; e < inst.m; e++) {
            if (!inst.edge_verts[e].intersects(used)) {
                root_packing++;
                used |= inst.edge_verts[e];
            }
        }
    }

    SearchStats stats;
    if (!options.parallel) {
        Search search(inst, incumbent, deadline);
        stats = search.run({}, {});
    } else {
        // split the root branching; each branch excludes its predecessors,
        // exactly like the sequential loop
        std::vector<int> root_edge_verts;
        {
            int e0 = 0;
            for (int e = 0; e < inst.m; e++)
                if (inst.edge_size[e] < inst.edge_size[e0]) e0 = e;
            for (int v = 0; v < inst.n; v++)
                if (inst.edge_verts[e0].test(v)) root_edge_verts.push_back(v);
            std::stable_sort(root_edge_verts.begin(), root_edge_verts.end(),
                             [&](int a, int b) {
                                 return inst.vert_edges[a].count() >
                                        inst.vert_edges[b].count();
                             });
        }
        std::vector<SearchStats> branch_stats(root_edge_verts.size());
        std::vector<std::thread> threads;
        for (size_t b = 0; b < root_edge_verts.size(); b++) {
            threads.emplace_back([&, b] {
                std::vector<int> pre{root_edge_verts[b]};
                std::vector<int> excl(root_edge_verts.begin(),
                                      root_edge_verts.begin() + b);
                Search search(inst, incumbent, deadline);
                branch_stats[b] = search.run(pre, excl);
            });
        }
        for (auto& t : threads) t.join();
        for (const auto& s : branch_stats) {
            stats.nodes += s.nodes;
            stats.timed_out = stats.timed_out || s.timed_out;
            stats.abandoned_lb = std::min(stats.abandoned_lb, s.abandoned_lb);
        }
        stats.nodes++;  // the root itself
    }

    cert.cover = incumbent.cover;
    cert.size = (int)cert.cover.size();
    if (cert.size < incumbent_at_start) cert.ub_method = "branch-and-bound";
    cert.nodes_explored = stats.nodes;
    cert.timed_out = stats.timed_out;
    if (!stats.timed_out) {
        cert.optimal = true;
        cert.lower_bound = cert.size;
        cert.lb_method = "exhausted-search";
    } else {
        cert.optimal = false;
        cert.lower_bound = std::min(cert.size, stats.abandoned_lb);
        cert.lower_bound = std::max(
            cert.lower_bound, std::max(root_degree_bound, root_packing));
        if (cert.lower_bound == root_packing && root_packing >= root_degree_bound)
            cert.lb_method = "packing";
        else if (cert.lower_bound == root_degree_bound)
            cert.lb_method = "edge-degree-bound";
        else
            cert.lb_method = "exhausted-search";
    }
    cert.elapsed_seconds =
        std::chrono::duration<double>(Clock::now() - start).count();

    if (cert.optimal) {
        if (auto guarantee = hg::meta_int(h, "tau_guarantee");
            guarantee && cert.size < *guarantee)
            throw GuaranteeViolation(
                "certified optimum " + std::to_string(cert.size) +
                " is below the recorded guarantee " + std::to_string(*guarantee) +
                "; the solver or the construction is wrong");
    }
    return cert;
}

namespace {

struct MatchingSearch {
    const Instance& inst;
    std::vector<int> current, best;
    Bitset used;

    explicit MatchingSearch(const Instance& i) : inst(i), used(i.n) {}

    // count of edges from `from` onward still disjoint from `used`
    int compatible_from(int from) const {
        int c = 0;
        for (int e = from; e < inst.m; e++)
            if (!inst.edge_verts[e].intersects(used)) c++;
        return c;
    }

    void recurse(int from) {
        if ((int)current.size() > (int)best.size()) best = current;
        if ((int)current.size() + compatible_from(from) <= (int)best.size())
            return;
        for (int e = from; e < inst.m; e++) {
            if (inst.edge_verts[e].intersects(used)) continue;
            Bitset saved = used;
            used |= inst.edge_verts[e];
            current.push_back(e);
            recurse(e + 1);
            current.pop_back();
            used = saved;
        }
    }
};

}  // namespace

MatchingCertificate matching_number(const hg::PartiteHypergraph& h) {
    MatchingCertificate cert;
    if (h.edge_count() == 0) {
        cert.optimal = true;
        return cert;
    }
    if (is_intersecting(h)) {
        cert.matching = {0};
        cert.size = 1;
        cert.optimal = true;
        return cert;
    }
    Instance inst(h);
    MatchingSearch search(inst);
    search.recurse(0);
    cert.matching = search.best;
    cert.size = (int)search.best.size();
    cert.optimal = true;
    return cert;
}

Rational ryser_ratio(const hg::PartiteHypergraph& h, const CoverCertificate& tau,
                     const MatchingCertificate& nu) {
    if (!tau.optimal || tau.timed_out || !nu.optimal)
        throw RequiresExactCertificates("ryser_ratio needs optimal certificates");
    long long num = tau.size;
    long long den = (long long)(h.r - 1) * nu.size;
    if (den <= 0) throw PreconditionViolated("ryser_ratio needs r >= 2 and nu >= 1");
    long long g = std::gcd(num, den);
    if (g > 0) {
        num /= g;
        den /= g;
    }
    return {num, den};
}

std::string serialize_certificate(const CoverCertificate& cert) {
    std::string out = "cover-certificate 1\n";
    out += "size " + std::to_string(cert.size) + "\n";
    out += "optimal " + std::to_string(cert.optimal ? 1 : 0) + "\n";
    out += "lower_bound " + std::to_string(cert.lower_bound) + "\n";
    out += "lb_method " + cert.lb_method + "\n";
    out += "ub_method " + cert.ub_method + "\n";
    out += "nodes_explored " + std::to_string(cert.nodes_explored) + "\n";
    out += "elapsed_seconds " + format_seconds(cert.elapsed_seconds) + "\n";
    out += "timed_out " + std::to_string(cert.timed_out ? 1 : 0) + "\n";
    out += "cover";
    for (int v : cert.cover) out += " " + std::to_string(v);
    out += "\n";
    return out;
}

namespace {

std::pair<std::string, std::string> split_directive(std::string_view line,
                                                    int line_no) {
    size_t sp = line.find(' ');
    if (sp == std::string_view::npos)
        throw ParseError(line_no, "expected '<key> <value>'");
    return {std::string(line.substr(0, sp)), std::string(line.substr(sp + 1))};
}

}  // namespace

CoverCertificate parse_certificate(std::string_view text) {
    CoverCertificate cert;
    int line_no = 0;
    size_t pos = 0;
    std::vector<std::pair<std::string, std::string>> fields;
    while (pos < text.size()) {
        size_t end = text.find('\n', pos);
        if (end == std::string_view::npos)
            throw ParseError(line_no + 1, "missing trailing newline");
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        line_no++;
        if (line_no == 1) {
            if (line != "cover-certificate 1")
                throw ParseError(1, "unknown header");
            continue;
        }
        if (line == "cover") continue;  // empty cover (m = 0 instance)
        fields.push_back(split_directive(line, line_no));
    }
    auto to_ll = [&](const std::string& s) {
        long long v = 0;
        auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc() || p != s.data() + s.size())
            throw ParseError(0, "bad integer '" + s + "'");
        return v;
    };
    for (auto& [key, value] : fields) {
        if (key == "size") cert.size = (int)to_ll(value);
        else if (key == "optimal") cert.optimal = to_ll(value) != 0;
        else if (key == "lower_bound") cert.lower_bound = (int)to_ll(value);
        else if (key == "lb_method") cert.lb_method = value;
        else if (key == "ub_method") cert.ub_method = value;
        else if (key == "nodes_explored") cert.nodes_explored = to_ll(value);
        else if (key == "elapsed_seconds") cert.elapsed_seconds = std::stod(value);
        else if (key == "timed_out") cert.timed_out = to_ll(value) != 0;
        else if (key == "cover") {
            size_t i = 0;
            while (i < value.size()) {
                if (value[i] == ' ') {
                    i++;
                    continue;
                }
                size_t j = value.find(' ', i);
                if (j == std::string::npos) j = value.size();
                cert.cover.push_back((int)to_ll(value.substr(i, j - i)));
                i = j;
            }
        } else {
            throw ParseError(0, "unknown certificate field '" + key + "'");
        }
    }
    return cert;
}

}  // namespace ryserlab::cover
