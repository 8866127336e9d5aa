// Command-line front end: counting, listing, sequences, structure reports,
// and the verification harness.  Exit codes: 0 success, 1 verification
// failure, 2 usage error, 3 capacity guard.

#include <cstdio>
#include <iostream>

#include "CLI11.hpp"
#include "rdl/analysis.hpp"
#include "rdl/cache.hpp"
#include "rdl/core.hpp"
#include "rdl/enumeration.hpp"
#include "rdl/json_io.hpp"
#include "rdl/tableaux.hpp"
#include "rdl/verify.hpp"
#include "rdl/viennot.hpp"

namespace {

struct CountArgs {
    std::string pattern;
    int n = 0;
    int max_n = 12;
    std::string cache_dir;
    bool no_cache = false;
    bool recompute = false;
};

struct ListArgs {
    std::string pattern;
    int n = 0;
    int max_n = 12;
    long long max_items = 1000000;
};

struct SequenceArgs {
    std::string pattern;
    int from = 1;
    int to = 0;
    int max_n = 12;
    std::string format = "csv";
};

int run_count(const CountArgs& a) {
    rdl::Permutation rho = rdl::parse_permutation(a.pattern);
    rdl::Capacity cap;
    cap.max_n = a.max_n;
    const std::string key = rdl::canonical_pattern_key(rho);
    std::optional<rdl::CountCache> cache;
    if (!a.no_cache) cache.emplace(rdl::CountCache::resolve_dir(a.cache_dir));
    if (cache && !a.recompute) {
        if (auto hit = cache->lookup(key, a.n)) {
            std::cout << hit->count << "\n";
            return 0;
        }
    }
    rdl::AvoidanceCount result = rdl::count_avoiders(rho, a.n, cap);
    std::cout << result.count.str() << "\n";
    if (cache)
        cache->store({key, a.n, result.count.str(), rdl::to_string(result.method),
                      rdl::kToolVersion, rdl::utc_timestamp()});
    return 0;
}

int run_list(const ListArgs& a) {
    rdl::Permutation rho = rdl::parse_permutation(a.pattern);
    rdl::Capacity cap;
    cap.max_n = a.max_n;
    cap.max_items = a.max_items;
    for (const auto& sigma : rdl::list_avoiders(rho, a.n, cap))
        std::cout << rdl::to_string(sigma.word()) << "\n";
    return 0;
}

int run_sequence(const SequenceArgs& a) {
    rdl::Permutation rho = rdl::parse_permutation(a.pattern);
    rdl::Capacity cap;
    cap.max_n = a.max_n;
    if (a.from < 0 || a.to < a.from)
        throw std::invalid_argument("sequence: need 0 <= --from <= --to");
    std::vector<std::pair<int, rdl::BigInt>> rows;
    for (int n = a.from; n <= a.to; ++n)
        rows.emplace_back(n, rdl::count_avoiders(rho, n, cap).count);
    if (a.format == "csv") {
        std::cout << "n,count\n";
        for (const auto& [n, c] : rows) std::cout << n << "," << c.str() << "\n";
    } else if (a.format == "json") {
        nlohmann::json out = nlohmann::json::array();
        for (const auto& [n, c] : rows) out.push_back({{"n", n}, {"count", c.str()}});
        std::cout << out.dump() << "\n";
    } else if (a.format == "bfile") {
        for (const auto& [n, c] : rows) std::cout << n << " " << c.str() << "\n";
    } else {
        throw std::invalid_argument("sequence: unknown format " + a.format);
    }
    return 0;
}

int run_classify(int k, int n_probe, const std::string& format) {
    rdl::WilfClassReport report = rdl::wilf_classify(k, n_probe);
    if (format == "json") {
        std::cout << rdl::to_json(report).dump() << "\n";
        return 0;
    }
    std::cout << "trivial orbits: " << report.trivial_orbit_count << "\n";
    std::cout << "counting classes: " << report.classes.size() << "\n";
    int idx = 0;
    for (const auto& cls : report.classes) {
        std::cout << "class " << ++idx << ": patterns";
        for (const auto& p : cls.patterns) std::cout << " " << rdl::to_string(p);
        std::cout << " | orbits " << cls.orbits.size() << " | sequence ";
        for (size_t i = 0; i < cls.sequence.size(); ++i) {
            if (i) std::cout << ",";
            std::cout << cls.sequence[i].str();
        }
        if (cls.merged) std::cout << " | merged";
        std::cout << "\n";
    }
    return 0;
}

int run_growth(const std::string& pattern, const std::string& format) {
    rdl::Permutation rho = rdl::parse_permutation(pattern);
    rdl::GrowthVerdict verdict = rdl::polynomial_growth(rho);
    auto spec = rdl::recurrence_spec_for(rho);
    std::optional<double> rate;
    if (spec) {
        try {
            rate = rdl::growth_rate(*spec);
        } catch (const std::domain_error&) {
            // eventually-zero classes have no positive characteristic root
        }
    }
    if (format == "json") {
        nlohmann::json out{{"pattern", rdl::to_string(rho)},
                           {"polynomial", verdict.polynomial},
                           {"witness", verdict.witness}};
        if (spec) out["recurrence"] = rdl::to_json(*spec);
        if (auto gf = rdl::gf_for(rho)) out["gf"] = rdl::to_json(*gf);
        if (rate) out["growth_rate"] = *rate;
        std::cout << out.dump() << "\n";
        return 0;
    }
    if (verdict.polynomial)
        std::cout << "polynomial (" << verdict.witness << ")\n";
    else
        std::cout << "not polynomial (shuffle basis misses " << verdict.witness << ")\n";
    if (rate) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "growth rate: %.9f (\u2248 %.2f)", *rate, *rate);
        std::cout << buf << "\n";
    }
    return 0;
}

int run_shuffles(const std::string& pattern, const std::string& format) {
    rdl::PatternBasis basis = rdl::shuffle_set(rdl::parse_permutation(pattern));
    if (format == "json") {
        nlohmann::json out = nlohmann::json::array();
        for (const auto& p : basis.patterns()) out.push_back(rdl::to_string(p));
        std::cout << out.dump() << "\n";
        return 0;
    }
    for (const auto& p : basis.patterns()) std::cout << rdl::to_string(p) << "\n";
    return 0;
}

int run_rsk(const std::string& perm, const std::string& format) {
    rdl::Permutation p = rdl::parse_permutation(perm);
    auto [P, Q] = rdl::rsk(p);
    if (format == "json") {
        nlohmann::json out{{"P", rdl::to_json(P)}, {"Q", rdl::to_json(Q)}};
        std::cout << out.dump() << "\n";
        return 0;
    }
    std::cout << "P:\n" << rdl::to_string(P) << "\nQ:\n" << rdl::to_string(Q) << "\n";
    return 0;
}

int run_shadow(const std::string& perm, bool svg, const std::string& format) {
    rdl::Permutation p = rdl::parse_permutation(perm);
    if (svg || format == "svg") {
        std::cout << rdl::to_svg(p);
        return 0;
    }
    rdl::ShadowDiagram d = rdl::shadow_lines(p);
    if (format == "json") {
        std::cout << rdl::to_json(d).dump() << "\n";
        return 0;
    }
    std::cout << rdl::to_string(d) << "\n";
    return 0;
}

int run_maximal(int k, const std::string& format) {
    rdl::BigInt count = rdl::maximal_monotone_avoider_count(k);
    if (format == "json") {
        nlohmann::json out{{"k", k},
                           {"n", k * (k - 1) / 2},
                           {"count", count.str()},
                           {"tableau_factor", rdl::count_increasing_diagonal_staircase(k).str()},
                           {"recording_factor",
                            rdl::hook_length_count(rdl::Shape::staircase(k)).str()}};
        std::cout << out.dump() << "\n";
        return 0;
    }
    std::cout << count.str() << "\n";
    return 0;
}

int run_verify(const std::string& suite, const std::string& format) {
    rdl::VerifySuiteResult result = [&] {
        try {
            return rdl::run_verify_suite(suite);
        } catch (const std::invalid_argument&) {
            throw;  // unknown suite: usage error
        }
    }();
    if (format == "json") {
        std::cout << rdl::to_json(result).dump() << "\n";
        return result.all_pass() ? 0 : 1;
    }
    std::cout << "suite: " << result.suite << "\n";
    size_t failures = 0;
    for (const auto& c : result.checks) {
        if (c.pass) continue;
        ++failures;
        std::cout << "FAIL " << c.description << ": expected " << c.expected << ", got "
                  << c.actual << "\n";
    }
    std::cout << result.checks.size() << " checks, "
              << (failures == 0 ? std::string("all pass")
                                : std::to_string(failures) + " failures")
              << "\n";
    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"pattern-avoiding reverse double lists: counts, structure, verification"};
    app.set_version_flag("--version", std::string("rdl ") + rdl::kToolVersion);
    app.require_subcommand(1);

    CountArgs count_args;
    auto* cmd_count = app.add_subcommand("count", "count avoiders of a pattern at one length");
    cmd_count->add_option("--pattern,-p", count_args.pattern, "pattern permutation")->required();
    cmd_count->add_option("--n,-n", count_args.n, "half length n")->required();
    cmd_count->add_option("--max-n", count_args.max_n, "capacity guard");
    cmd_count->add_option("--cache-dir", count_args.cache_dir, "cache directory");
    cmd_count->add_flag("--no-cache", count_args.no_cache, "skip cache read and write");
    cmd_count->add_flag("--recompute", count_args.recompute, "ignore cached value, then store");

    ListArgs list_args;
    auto* cmd_list = app.add_subcommand("list", "list the avoiding reverse double lists");
    cmd_list->add_option("--pattern,-p", list_args.pattern, "pattern permutation")->required();
    cmd_list->add_option("--n,-n", list_args.n, "half length n")->required();
    cmd_list->add_option("--max-n", list_args.max_n, "capacity guard");
    cmd_list->add_option("--max-items", list_args.max_items, "listing size guard");

    SequenceArgs seq_args;
    auto* cmd_seq = app.add_subcommand("sequence", "counting sequence over a range of n");
    cmd_seq->add_option("--pattern,-p", seq_args.pattern, "pattern permutation")->required();
    cmd_seq->add_option("--to", seq_args.to, "last n")->required();
    cmd_seq->add_option("--from", seq_args.from, "first n (default 1)");
    cmd_seq->add_option("--max-n", seq_args.max_n, "capacity guard");
    cmd_seq->add_option("--format", seq_args.format, "csv | json | bfile");

    int classify_k = 0, classify_probe = 9;
    std::string classify_format = "text";
    auto* cmd_classify = app.add_subcommand("classify", "group S_k patterns by counting sequence");
    cmd_classify->add_option("--k", classify_k, "pattern length")->required();
    cmd_classify->add_option("--n-probe", classify_probe, "sequence prefix length");
    cmd_classify->add_option("--format", classify_format, "text | json");

    std::string growth_pattern, growth_format = "text";
    auto* cmd_growth = app.add_subcommand("growth", "polynomial-growth verdict and growth rate");
    cmd_growth->add_option("--pattern,-p", growth_pattern, "pattern permutation")->required();
    cmd_growth->add_option("--format", growth_format, "text | json");

    std::string shuffles_pattern, shuffles_format = "text";
    auto* cmd_shuffles = app.add_subcommand("shuffles", "shuffle set of a pattern");
    cmd_shuffles->add_option("--pattern,-p", shuffles_pattern, "pattern permutation")->required();
    cmd_shuffles->add_option("--format", shuffles_format, "text | json");

    std::string rsk_perm, rsk_format = "text";
    auto* cmd_rsk = app.add_subcommand("rsk", "insertion and recording tableaux");
    cmd_rsk->add_option("--perm", rsk_perm, "permutation")->required();
    cmd_rsk->add_option("--format", rsk_format, "text | json");

    std::string shadow_perm, shadow_format = "text";
    bool shadow_svg = false;
    auto* cmd_shadow = app.add_subcommand("shadow", "iterated shadow-line diagram");
    cmd_shadow->add_option("--perm", shadow_perm, "permutation")->required();
    cmd_shadow->add_flag("--svg", shadow_svg, "render as SVG");
    cmd_shadow->add_option("--format", shadow_format, "text | json | svg");

    int maximal_k = 0;
    std::string maximal_format = "text";
    auto* cmd_maximal = app.add_subcommand("maximal", "count of longest monotone-avoiding lists");
    cmd_maximal->add_option("--k", maximal_k, "monotone pattern length")->required();
    cmd_maximal->add_option("--format", maximal_format, "text | json");

    std::string verify_suite, verify_format = "text";
    auto* cmd_verify = app.add_subcommand("verify", "run a verification suite");
    cmd_verify->add_option("suite", verify_suite, "suite name")->required();
    cmd_verify->add_option("--format", verify_format, "text | json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;  // help/version exit clean; bad usage is 2
    }

    try {
        if (app.got_subcommand(cmd_count)) return run_count(count_args);
        if (app.got_subcommand(cmd_list)) return run_list(list_args);
        if (app.got_subcommand(cmd_seq)) return run_sequence(seq_args);
        if (app.got_subcommand(cmd_classify))
            return run_classify(classify_k, classify_probe, classify_format);
        if (app.got_subcommand(cmd_growth)) return run_growth(growth_pattern, growth_format);
        if (app.got_subcommand(cmd_shuffles)) return run_shuffles(shuffles_pattern, shuffles_format);
        if (app.got_subcommand(cmd_rsk)) return run_rsk(rsk_perm, rsk_format);
        if (app.got_subcommand(cmd_shadow)) return run_shadow(shadow_perm, shadow_svg, shadow_format);
        if (app.got_subcommand(cmd_maximal)) return run_maximal(maximal_k, maximal_format);
        if (app.got_subcommand(cmd_verify)) return run_verify(verify_suite, verify_format);
    } catch (const rdl::CapacityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const rdl::UnsupportedPatternError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;  // unreachable with require_subcommand(1)
}
