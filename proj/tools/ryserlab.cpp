// ryserlab command line: build plane-based hypergraph constructions, verify
// their structure, solve exact cover numbers, and search prime-sum chains.
//
// Exit codes: 0 success/optimal, 1 domain failure, 2 parse failure, 3 timeout.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ryserlab/compose.hpp"
#include "ryserlab/cover.hpp"
#include "ryserlab/gf.hpp"
#include "ryserlab/hypergraph.hpp"
#include "ryserlab/planes.hpp"
#include "ryserlab/primes.hpp"

namespace {

namespace fs = std::filesystem;
using nlohmann::json;
using namespace ryserlab;

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitParse = 2;
constexpr int kExitTimeout = 3;

// write-temp-then-rename so a crash never leaves a half file
void atomic_write(const fs::path& path, const std::string& content) {
    fs::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary);
        if (!out) throw Error("cannot open " + tmp.string() + " for writing");
        out << content;
        if (!out.flush()) throw Error("write failed: " + tmp.string());
    }
    fs::rename(tmp, path);
}

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot read " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

double default_budget() {
    if (const char* env = std::getenv("RYSERLAB_BUDGET")) {
        try {
            return std::stod(env);
        } catch (...) {
            throw PreconditionViolated("RYSERLAB_BUDGET is not a number");
        }
    }
    return 60.0;
}

std::vector<long long> parse_ll_list(const std::string& text) {
    std::vector<long long> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw PreconditionViolated("empty list entry");
        out.push_back(std::stoll(item));
    }
    return out;
}

struct BuildArgs {
    std::string kind;
    long long q = 0;
    long long p = 0;
    std::string primes;
    std::string input;
    std::string out;
    bool random_placement = false;
    uint64_t seed = 0;
};

std::string summary_line(const hg::PartiteHypergraph& h) {
    std::string s = "r=" + std::to_string(h.r) +
                    " n=" + std::to_string(h.vertex_count()) +
                    " m=" + std::to_string(h.edge_count());
    if (auto g = hg::meta_int(h, "tau_guarantee"))
        s += " guarantee tau>=" + std::to_string(*g);
    return s;
}

json summary_json(const hg::PartiteHypergraph& h) {
    json j{{"r", h.r}, {"n", h.vertex_count()}, {"m", h.edge_count()}};
    if (auto g = hg::meta_int(h, "tau_guarantee")) j["tau_guarantee"] = *g;
    if (auto it = h.meta.find("construction"); it != h.meta.end())
        j["construction"] = it->second;
    return j;
}

int run_build(const BuildArgs& args, bool json_mode) {
    hg::PartiteHypergraph h;
    std::string default_name;
    if (args.kind == "pg") {
        h = planes::plane_to_hypergraph(planes::build_projective(args.q));
        default_name = "pg" + std::to_string(args.q);
    } else if (args.kind == "ag") {
        h = planes::plane_to_hypergraph(planes::build_affine(args.q));
        default_name = "ag" + std::to_string(args.q);
    } else if (args.kind == "trunc-pg") {
        h = planes::truncate_projective(args.q).base;
        default_name = "tpg" + std::to_string(args.q);
    } else if (args.kind == "ap") {
        h = planes::build_Ap(args.p).base;
        default_name = "ap" + std::to_string(args.p);
    } else if (args.kind == "gadget-j") {
        h = planes::build_J_gadget(args.p).base;
        default_name = "j" + std::to_string(args.p);
    } else if (args.kind == "hr-chain") {
        auto ps = parse_ll_list(args.primes);
        h = args.random_placement
                ? compose::build_chain_randomized(ps, args.seed)
                : compose::build_chain(ps);
        default_name = "h" + std::to_string(1 + [&] {
                           long long s = 0;
                           for (long long x : ps) s += x;
                           return s;
                       }());
    } else if (args.kind == "gr") {
        h = compose::compose_extremal(args.p);
        default_name = "g" + std::to_string(2 * args.p - 1);
    } else if (args.kind == "extend") {
        h = hg::extend_universal(hg::parse(read_file(args.input)));
        default_name = fs::path(args.input).stem().string() + "x";
    } else {
        throw PreconditionViolated("unknown build kind '" + args.kind + "'");
    }

    fs::path out = args.out.empty() ? fs::path(default_name + ".rhg")
                                    : fs::path(args.out);
    atomic_write(out, hg::serialize(h));
    if (json_mode) {
        json j = summary_json(h);
        j["file"] = out.string();
        std::cout << j.dump() << "\n";
    } else {
        std::cout << summary_line(h) << " -> " << out.string() << "\n";
    }
    return kExitOk;
}

int run_verify(const std::string& file, bool json_mode, bool verbose) {
    hg::PartiteHypergraph h = hg::parse(read_file(file));
    bool partite = hg::is_r_partite(h);
    hg::WitnessPair witness;
    bool intersecting = hg::is_intersecting(h, &witness);
    hg::IntersectionProfile prof = hg::intersection_profile(h);

    bool claims_ok = partite;
    std::string failure;
    if (!partite) failure = "not r-partite";
    if (auto uniform = hg::meta_int(h, "claim_uniform")) {
        if (!hg::is_uniform(h, (int)*uniform)) {
            claims_ok = false;
            failure = "claimed uniformity " + std::to_string(*uniform) + " fails";
        }
    }
    if (auto ci = hg::meta_int(h, "claim_intersecting"); ci) {
        if ((*ci != 0) != intersecting) {
            claims_ok = false;
            failure = *ci ? "claimed intersecting but edges " +
                                std::to_string(witness.edge_a) + " and " +
                                std::to_string(witness.edge_b) + " are disjoint"
                          : "claimed non-intersecting but is intersecting";
        }
    }

    if (json_mode) {
        json j = summary_json(h);
        j["partite"] = partite;
        j["intersecting"] = intersecting;
        if (!intersecting)
            j["disjoint_pair"] = {witness.edge_a, witness.edge_b};
        j["profile_min"] = prof.min;
        j["profile_max"] = prof.max;
        j["claims_ok"] = claims_ok;
        if (!claims_ok) j["failure"] = failure;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << summary_line(h) << "\n";
        std::cout << "partite: " << (partite ? "yes" : "no") << "\n";
        std::cout << "intersecting: " << (intersecting ? "yes" : "no");
        if (!intersecting)
            std::cout << " (edges " << witness.edge_a << ", " << witness.edge_b
                      << " disjoint)";
        std::cout << "\n";
        std::cout << "profile: min=" << prof.min << " max=" << prof.max << "\n";
        if (verbose)
            for (const auto& [size, count] : prof.histogram)
                std::cout << "  pairs sharing " << size << " vertices: " << count
                          << "\n";
        std::cout << (claims_ok ? "claims: ok" : "claims: FAILED " + failure)
                  << "\n";
    }
    return claims_ok ? kExitOk : kExitDomain;
}

int run_cover(const std::string& file, double budget, bool parallel,
              const std::string& seed_cover, const std::string& out,
              bool json_mode, bool verbose) {
    hg::PartiteHypergraph h = hg::parse(read_file(file));
    cover::SolveOptions options;
    options.budget_seconds = budget;
    options.parallel = parallel;
    if (!seed_cover.empty()) {
        std::vector<int> seed;
        for (long long v : parse_ll_list(seed_cover)) seed.push_back((int)v);
        options.seed_cover = std::move(seed);
    }
    cover::CoverCertificate cert = cover::solve_exact(h, options);
    if (!cover::verify_cover(h, cert.cover).ok)
        throw GuaranteeViolation("certificate fails its own cover check");

    fs::path out_path = out.empty() ? fs::path(file).replace_extension(".cert")
                                    : fs::path(out);
    atomic_write(out_path, cover::serialize_certificate(cert));
    if (json_mode) {
        json j{{"size", cert.size},
               {"optimal", cert.optimal},
               {"lower_bound", cert.lower_bound},
               {"lb_method", cert.lb_method},
               {"ub_method", cert.ub_method},
               {"nodes_explored", cert.nodes_explored},
               {"timed_out", cert.timed_out},
               {"file", out_path.string()}};
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "tau" << (cert.optimal ? "=" : "<=") << cert.size
                  << " lower_bound=" << cert.lower_bound
                  << " optimal=" << (cert.optimal ? "yes" : "no")
                  << " nodes=" << cert.nodes_explored << " -> "
                  << out_path.string() << "\n";
        if (verbose) std::cout << cover::serialize_certificate(cert);
    }
    return cert.timed_out ? kExitTimeout : kExitOk;
}

int run_verify_cover(const std::string& hg_file, const std::string& cert_file) {
    hg::PartiteHypergraph h = hg::parse(read_file(hg_file));
    cover::CoverCertificate cert = cover::parse_certificate(read_file(cert_file));
    if ((int)cert.cover.size() != cert.size) {
        std::cout << "certificate size field does not match its cover\n";
        return kExitDomain;
    }
    cover::VerifyResult res = cover::verify_cover(h, cert.cover);
    if (res.ok) {
        std::cout << "cover of size " << cert.size << " hits all "
                  << h.edge_count() << " edges\n";
        return kExitOk;
    }
    std::cout << "cover misses edge " << *res.first_missed_edge << "\n";
    return kExitDomain;
}

int run_decompose(long long r, std::optional<int> k, bool primes_only,
                  bool json_mode) {
    std::optional<primes::ChainDecomposition> chain;
    std::string note;
    if (k) {
        chain = primes::find_chain(r, *k, !primes_only);
    } else if (r % 2 == 0) {
        chain = primes::decompose_even_r(r);
    } else {
        // odd r: decompose r-1 and extend by a universal vertex
        chain = primes::decompose_even_r(r - 1);
        note = "universal extension of r-1";
    }
    if (json_mode) {
        json j{{"r", r}, {"found", chain.has_value()}};
        if (chain) {
            j["primes"] = chain->primes;
            j["guarantee"] = chain->guarantee();
            if (!note.empty()) j["note"] = note;
        }
        std::cout << j.dump() << "\n";
        return kExitOk;
    }
    if (!chain) {
        std::cout << "r=" << r << " NotFound\n";
        return kExitOk;
    }
    std::cout << "r=" << r << " primes=";
    for (size_t i = 0; i < chain->primes.size(); i++)
        std::cout << (i ? "," : "") << chain->primes[i];
    std::cout << " guarantee tau>=" << chain->guarantee();
    if (!note.empty()) std::cout << " (" << note << ")";
    std::cout << "\n";
    return kExitOk;
}

int run_census(long long t_min, long long t_max, bool json_mode) {
    if (t_min < 5) throw PreconditionViolated("census needs t-min >= 5");
    if (t_min % 2 == 0) t_min++;
    for (long long t = t_min; t <= t_max; t += 2) {
        primes::GoodIntegerCensus c = primes::good_census(t);
        if (json_mode) {
            json j{{"t", c.t},     {"w", c.w},
                   {"y", c.y},     {"z", c.z},
                   {"good", c.good.size()}};
            if (c.witness)
                j["witness"] = {(*c.witness)[0], (*c.witness)[1], (*c.witness)[2]};
            std::cout << j.dump() << "\n";
        } else {
            std::cout << primes::census_row(c) << "\n";
        }
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"constructions, exact covers and prime chains for r-partite "
                 "intersecting hypergraphs"};
    app.require_subcommand(1);
    bool json_mode = false;
    bool verbose = false;
    app.add_flag("--json", json_mode, "machine-readable summaries");
    app.add_flag("-v,--verbose", verbose, "extra detail on verify and cover");

    BuildArgs build_args;
    auto* build = app.add_subcommand("build", "construct and write a .rhg file");
    build->add_option("kind", build_args.kind,
                      "pg | ag | trunc-pg | ap | gadget-j | hr-chain | gr | extend")
        ->required();
    build->add_option("--q", build_args.q, "plane order");
    build->add_option("--p", build_args.p, "prime power parameter");
    build->add_option("--primes", build_args.primes, "chain, e.g. 2,3,7");
    build->add_option("--input", build_args.input, "input .rhg (extend)");
    build->add_option("--out", build_args.out, "output path");
    build->add_flag("--random-placement", build_args.random_placement,
                    "exploration mode: seed-controlled gadget placements");
    build->add_option("--seed", build_args.seed, "seed for --random-placement");

    std::string verify_file;
    auto* verify = app.add_subcommand("verify", "check structure and metadata claims");
    verify->add_option("file", verify_file)->required();

    std::string cover_file, seed_cover, cover_out;
    double budget = default_budget();
    bool parallel = false, canonical = true;
    auto* cover_cmd = app.add_subcommand("cover", "exact cover number with certificate");
    cover_cmd->add_option("file", cover_file)->required();
    cover_cmd->add_option("--budget", budget, "time budget in seconds");
    cover_cmd->add_option("--seed-cover", seed_cover, "comma-separated vertex ids");
    cover_cmd->add_option("--out", cover_out, "certificate path");
    auto* parallel_opt =
        cover_cmd->add_flag("--parallel", parallel, "split the root branching");
    cover_cmd->add_flag("--canonical", canonical,
                        "strictly sequential, deterministic (default)")
        ->excludes(parallel_opt);

    std::string vc_hg, vc_cert;
    auto* vc = app.add_subcommand("verify-cover", "check a certificate against a file");
    vc->add_option("hypergraph", vc_hg)->required();
    vc->add_option("certificate", vc_cert)->required();

    long long decompose_r = 0;
    std::optional<int> decompose_k;
    int k_value = 0;
    bool primes_only = false;
    auto* decompose = app.add_subcommand("decompose", "prime chain for a given r");
    decompose->add_option("r", decompose_r)->required();
    auto* k_opt = decompose->add_option("--k", k_value, "chain length");
    decompose->add_flag("--primes-only", primes_only, "disallow proper prime powers");

    long long t_min = 5, t_max = 5;
    auto* census = app.add_subcommand("census", "good-integer census over odd t");
    census->add_option("--t-min", t_min)->required();
    census->add_option("--t-max", t_max)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);  // prints usage; --help lands here with code 0
        return code == 0 ? kExitOk : kExitDomain;
    }

    try {
        if (*build) return run_build(build_args, json_mode);
        if (*verify) return run_verify(verify_file, json_mode, verbose);
        if (*cover_cmd)
            return run_cover(cover_file, budget, parallel, seed_cover, cover_out,
                             json_mode, verbose);
        if (*vc) return run_verify_cover(vc_hg, vc_cert);
        if (*decompose) {
            if (k_opt->count()) decompose_k = k_value;
            return run_decompose(decompose_r, decompose_k, primes_only, json_mode);
        }
        if (*census) return run_census(t_min, t_max, json_mode);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitDomain;
    }
    return kExitOk;
}
