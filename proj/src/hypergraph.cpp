#include "ryserlab/hypergraph.hpp"

#include <algorithm>
#include <charconv>

#include "ryserlab/bitset.hpp"

namespace ryserlab::hg {

int PartiteHypergraph::vertex_count() const {
    size_t n = 0;
    for (const auto& c : classes) n += c.size();
    return (int)n;
}

int PartiteHypergraph::edge_index(std::vector<int> edge) const {
    std::sort(edge.begin(), edge.end());
    auto it = std::lower_bound(edges.begin(), edges.end(), edge);
    if (it == edges.end() || *it != edge)
        throw ValidationError("edge not present in hypergraph");
    return (int)(it - edges.begin());
}

PartiteHypergraph PartiteHypergraph::create(
    std::vector<std::vector<int>> classes, std::vector<std::vector<int>> edges,
    std::map<int, std::string> labels, std::map<std::string, std::string> meta) {
    PartiteHypergraph h;
    h.r = (int)classes.size();
    h.classes = std::move(classes);
    h.edges = std::move(edges);
    h.labels = std::move(labels);
    h.meta = std::move(meta);

    for (auto& c : h.classes) std::sort(c.begin(), c.end());
    for (auto& e : h.edges) std::sort(e.begin(), e.end());
    std::sort(h.edges.begin(), h.edges.end());

    int n = h.vertex_count();
    std::vector<int> cls_of(n, -1);
    for (int ci = 0; ci < h.r; ci++) {
        for (int v : h.classes[ci]) {
            if (v < 0 || v >= n)
                throw ValidationError("vertex id out of range: " + std::to_string(v));
            if (cls_of[v] != -1)
                throw ValidationError("vertex in two classes: " + std::to_string(v));
            cls_of[v] = ci;
        }
    }
    // disjoint classes whose sizes sum to n cover 0..n-1 exactly

    for (size_t i = 0; i < h.edges.size(); i++) {
        const auto& e = h.edges[i];
        if (e.empty()) throw ValidationError("empty edge");
        std::vector<char> seen(h.r, 0);
        for (int v : e) {
            if (v < 0 || v >= n)
                throw ValidationError("edge vertex out of range: " + std::to_string(v));
            if (seen[cls_of[v]])
                throw ValidationError("edge has two vertices in one class");
            seen[cls_of[v]] = 1;
        }
        if (i > 0 && h.edges[i] == h.edges[i - 1])
            throw ValidationError("duplicate edge");
    }
    for (const auto& [v, text] : h.labels) {
        if (v < 0 || v >= n)
            throw ValidationError("label for unknown vertex " + std::to_string(v));
        if (text.empty() || text.find('\n') != std::string::npos)
            throw ValidationError("label text must be one nonempty line");
    }
    for (const auto& [key, value] : h.meta) {
        if (key.empty() || key.find(' ') != std::string::npos ||
            key.find('\n') != std::string::npos)
            throw ValidationError("meta key must be one space-free token");
        if (value.empty() || value.find('\n') != std::string::npos)
            throw ValidationError("meta value must be one nonempty line");
    }
    return h;
}

bool is_r_partite(const PartiteHypergraph& h) {
    if ((int)h.classes.size() != h.r) return false;
    int n = h.vertex_count();
    std::vector<int> cls_of(n, -1);
    for (int ci = 0; ci < h.r; ci++) {
        for (int v : h.classes[ci]) {
            if (v < 0 || v >= n || cls_of[v] != -1) return false;
            cls_of[v] = ci;
        }
    }
    for (const auto& e : h.edges) {
        std::vector<char> seen(h.r, 0);
        for (int v : e) {
            if (v < 0 || v >= n || cls_of[v] == -1) return false;
            if (seen[cls_of[v]]) return false;
            seen[cls_of[v]] = 1;
        }
    }
    return true;
}

bool is_uniform(const PartiteHypergraph& h, int k) {
    for (const auto& e : h.edges)
        if ((int)e.size() != k) return false;
    return true;
}

namespace {

std::vector<Bitset> edge_bitsets(const PartiteHypergraph& h) {
    int n = h.vertex_count();
    std::vector<Bitset> bs(h.edges.size(), Bitset(n));
    for (size_t i = 0; i < h.edges.size(); i++)
        for (int v : h.edges[i]) bs[i].set(v);
    return bs;
}

}  // namespace

bool is_intersecting(const PartiteHypergraph& h, WitnessPair* witness) {
    auto bs = edge_bitsets(h);
    for (size_t i = 0; i < bs.size(); i++) {
        for (size_t j = i + 1; j < bs.size(); j++) {
            if (!bs[i].intersects(bs[j])) {
                if (witness) *witness = {(int)i, (int)j};
                return false;
            }
        }
    }
    return true;
}

IntersectionProfile intersection_profile(const PartiteHypergraph& h) {
    auto bs = edge_bitsets(h);
    IntersectionProfile prof;
    for (size_t i = 0; i < bs.size(); i++) {
        for (size_t j = i + 1; j < bs.size(); j++) {
            int s = count_and(bs[i], bs[j]);
            prof.histogram[s]++;
            if (prof.min == -1 || s < prof.min) prof.min = s;
            if (s > prof.max) prof.max = s;
        }
    }
    return prof;
}

std::string serialize(const PartiteHypergraph& h) {
    std::string out = "rhg 1\n";
    out += "r " + std::to_string(h.r) + "\n";
    out += "n " + std::to_string(h.vertex_count()) + "\n";
    out += "m " + std::to_string(h.edge_count()) + "\n";
    for (const auto& c : h.classes) {
        out += "class";
        for (int v : c) out += " " + std::to_string(v);
        out += "\n";
    }
    for (const auto& e : h.edges) {
        out += "edge";
        for (int v : e) out += " " + std::to_string(v);
        out += "\n";
    }
    for (const auto& [v, text] : h.labels)
        out += "label " + std::to_string(v) + " " + text + "\n";
    for (const auto& [key, value] : h.meta)
        out += "meta " + key + " " + value + "\n";
    return out;
}

namespace {

struct LineReader {
    std::string_view text;
    size_t pos = 0;
    int line_no = 0;

    std::optional<std::string_view> next() {
        if (pos >= text.size()) return std::nullopt;
        size_t end = text.find('\n', pos);
        if (end == std::string_view::npos)
            throw ParseError(line_no + 1, "missing trailing newline");
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        line_no++;
        return line;
    }
};

long long parse_int(std::string_view tok, int line_no) {
    long long v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw ParseError(line_no, "bad integer '" + std::string(tok) + "'");
    return v;
}

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> toks;
    size_t i = 0;
    while (i < line.size()) {
        if (line[i] == ' ') {
            i++;
            continue;
        }
        size_t j = line.find(' ', i);
        if (j == std::string_view::npos) j = line.size();
        toks.push_back(line.substr(i, j - i));
        i = j;
    }
    return toks;
}

// keyword + exactly one integer
long long parse_scalar_line(LineReader& in, const std::string& keyword) {
    auto line = in.next();
    if (!line) throw ParseError(in.line_no + 1, "unexpected end of input");
    auto toks = split_ws(*line);
    if (toks.size() != 2 || toks[0] != keyword)
        throw ParseError(in.line_no, "expected '" + keyword + " <int>'");
    return parse_int(toks[1], in.line_no);
}

}  // namespace

PartiteHypergraph parse(std::string_view text) {
    LineReader in{text};
    auto header = in.next();
    if (!header || *header != "rhg 1")
        throw ParseError(1, "unknown header, expected 'rhg 1'");

    long long r = parse_scalar_line(in, "r");
    long long n = parse_scalar_line(in, "n");
    long long m = parse_scalar_line(in, "m");
    if (r < 0 || n < 0 || m < 0) throw ParseError(in.line_no, "negative count");

    std::vector<std::vector<int>> classes;
    for (long long i = 0; i < r; i++) {
        auto line = in.next();
        if (!line) throw ParseError(in.line_no + 1, "missing class line");
        auto toks = split_ws(*line);
        if (toks.empty() || toks[0] != "class")
            throw ParseError(in.line_no, "expected class line");
        std::vector<int> c;
        for (size_t t = 1; t < toks.size(); t++)
            c.push_back((int)parse_int(toks[t], in.line_no));
        classes.push_back(std::move(c));
    }
    std::vector<std::vector<int>> edges;
    for (long long i = 0; i < m; i++) {
        auto line = in.next();
        if (!line) throw ParseError(in.line_no + 1, "missing edge line");
        auto toks = split_ws(*line);
        if (toks.empty() || toks[0] != "edge")
            throw ParseError(in.line_no, "expected edge line");
        std::vector<int> e;
        for (size_t t = 1; t < toks.size(); t++)
            e.push_back((int)parse_int(toks[t], in.line_no));
        edges.push_back(std::move(e));
    }

    std::map<int, std::string> labels;
    std::map<std::string, std::string> meta;
    bool in_meta = false;
    while (auto line = in.next()) {
        // directive, one token, then free text to end of line
        size_t s1 = line->find(' ');
        size_t s2 = s1 == std::string_view::npos ? s1 : line->find(' ', s1 + 1);
        if (s1 == std::string_view::npos || s2 == std::string_view::npos ||
            s2 + 1 >= line->size())
            throw ParseError(in.line_no, "malformed trailer line");
        std::string_view directive = line->substr(0, s1);
        std::string_view arg = line->substr(s1 + 1, s2 - s1 - 1);
        std::string_view rest = line->substr(s2 + 1);
        if (directive == "label" && !in_meta) {
            int v = (int)parse_int(arg, in.line_no);
            if (labels.count(v)) throw ParseError(in.line_no, "duplicate label");
            labels[v] = std::string(rest);
        } else if (directive == "meta") {
            in_meta = true;
            std::string key(arg);
            if (meta.count(key)) throw ParseError(in.line_no, "duplicate meta key");
            meta[key] = std::string(rest);
        } else {
            throw ParseError(in.line_no,
                             "unknown directive '" + std::string(directive) + "'");
        }
    }

    PartiteHypergraph h =
        PartiteHypergraph::create(std::move(classes), std::move(edges),
                                  std::move(labels), std::move(meta));
    if (h.vertex_count() != (int)n)
        throw ValidationError("n does not match class contents");
    return h;
}

PartiteHypergraph extend_universal(const PartiteHypergraph& h) {
    if (!is_r_partite(h) || !is_uniform(h, h.r))
        throw PreconditionViolated("extend_universal needs an r-partite r-uniform input");
    // every edge gets its own fresh vertex, all in one new class; a cover of
    // the result restricted to the old vertices covers what its new vertices
    // did not, one edge per vertex, so the cover number is unchanged
    int base = h.vertex_count();
    auto classes = h.classes;
    classes.emplace_back();
    auto edges = h.edges;
    auto labels = h.labels;
    for (int e = 0; e < h.edge_count(); e++) {
        classes.back().push_back(base + e);
        edges[e].push_back(base + e);
        if (!labels.empty()) labels[base + e] = "u" + std::to_string(e);
    }
    auto meta = h.meta;
    if (auto it = meta.find("construction"); it != meta.end()) {
        meta["extends"] = it->second;
        it->second = "extend";
    } else {
        meta["construction"] = "extend";
    }
    if (auto u = meta_int(h, "claim_uniform"))
        meta["claim_uniform"] = std::to_string(*u + 1);
    return PartiteHypergraph::create(std::move(classes), std::move(edges),
                                     std::move(labels), std::move(meta));
}

std::optional<long long> meta_int(const PartiteHypergraph& h,
                                  const std::string& key) {
    auto it = h.meta.find(key);
    if (it == h.meta.end()) return std::nullopt;
    try {
        size_t used = 0;
        long long v = std::stoll(it->second, &used);
        if (used != it->second.size()) return std::nullopt;
        return v;
    } catch (...) {
        return std::nullopt;
    }
}

}  // namespace ryserlab::hg
