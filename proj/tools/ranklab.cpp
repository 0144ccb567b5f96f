// ranklab: exact Dyson-rank statistics of integer partitions.
//
//   ranklab <count|histogram|nplus|search|verify|tail> [args] [--format ...]
//
// Exit codes: 0 success / all-pass, 1 mathematical failure or resource
// guard, 2 usage error.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "ranklab/errors.hpp"
#include "ranklab/identities.hpp"
#include "ranklab/partition_count.hpp"
#include "ranklab/rank_stats.hpp"
#include "ranklab/serialization.hpp"

using nlohmann::ordered_json;

namespace {

std::string fmt_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9g", x);
    return buf;
}

// RANKLAB_BRUTE_MAX overrides the default enumeration limit; an explicit
// --brute-max flag wins over both. Malformed values are usage errors.
long long env_brute_max() {
    const char* env = std::getenv("RANKLAB_BRUTE_MAX");
    if (env == nullptr) return ranklab::kDefaultBruteMax;
    std::string s(env);
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
        throw CLI::ValidationError("RANKLAB_BRUTE_MAX", "must be a positive integer, got '" + s + "'");
    }
    long long v = std::stoll(s);
    if (v < 1) {
        throw CLI::ValidationError("RANKLAB_BRUTE_MAX", "must be a positive integer, got '" + s + "'");
    }
    return v;
}

ranklab::VerifyMethod parse_method(const std::string& name) {
    if (name == "brute") return ranklab::VerifyMethod::brute;
    if (name == "fast") return ranklab::VerifyMethod::fast;
    return ranklab::VerifyMethod::both;
}

int run_count(long long n, const std::string& format) {
    ranklab::ExactCount c = ranklab::partition_count(n);
    if (format == "csv") {
        std::cout << "n,count\n" << n << ',' << c.get_str() << '\n';
    } else if (format == "json") {
        std::cout << ordered_json{{"n", n}, {"count", c.get_str()}} << '\n';
    } else {
        std::cout << c.get_str() << '\n';
    }
    return 0;
}

int run_histogram(long long n, const std::string& format, std::optional<long long> min_rank,
                  std::optional<long long> max_rank, long long brute_max) {
    ranklab::RankHistogram hist = ranklab::rank_histogram(n, brute_max);
    long long lo = min_rank.value_or(-(n - 1));
    long long hi = max_rank.value_or(n - 1);
    if (format == "csv") std::cout << "rank,count\n";
    for (long long r = lo; r <= hi; ++r) {
        ranklab::ExactCount c = hist.at(r);
        if (format == "json") {
            std::cout << ordered_json{{"rank", r}, {"count", c.get_str()}} << '\n';
        } else {
            std::cout << r << ',' << c.get_str() << '\n';
        }
    }
    return 0;
}

int run_nplus(long long r, long long m, long long n, const std::string& method,
              const std::string& format, long long brute_max) {
    ranklab::LargeRankQuery q{r, m, n};
    if (method == "both") {
        ranklab::ExactCount fast = ranklab::nplus_fast(q);
        ranklab::ExactCount brute = ranklab::nplus_brute(q, brute_max);
        bool match = fast == brute;
        if (format == "json") {
            std::cout << ordered_json{{"fast", fast.get_str()},
                                      {"brute", brute.get_str()},
                                      {"match", match}}
                      << '\n';
        } else {
            std::cout << "fast=" << fast.get_str() << '\n'
                      << "brute=" << brute.get_str() << '\n';
        }
        if (!match) {
            std::cerr << "nplus: formula and enumeration disagree\n";
            return 1;
        }
        return 0;
    }
    ranklab::ExactCount v =
        method == "brute" ? ranklab::nplus_brute(q, brute_max) : ranklab::nplus_fast(q);
    if (format == "json") {
        std::cout << ordered_json{{"r", r}, {"m", m}, {"n", n}, {"count", v.get_str()}} << '\n';
    } else if (format == "csv") {
        std::cout << "r,m,n,count\n" << r << ',' << m << ',' << n << ',' << v.get_str() << '\n';
    } else {
        std::cout << v.get_str() << '\n';
    }
    return 0;
}

int run_search(long long m, long long a_max, long long r_window, long long max_cells,
               const std::string& format) {
    auto tuples = ranklab::search_identities(m, a_max, r_window, max_cells);
    if (format == "csv") {
        std::cout << "m,a1,a2,a3,a4,r1,r2,r3,r4\n";
        for (const auto& t : tuples) {
            std::cout << t.m;
            for (long long a : t.a) std::cout << ',' << a;
            for (long long r : t.r) std::cout << ',' << r;
            std::cout << '\n';
        }
    } else { // json and plain: one object per line, streamable
        for (const auto& t : tuples) {
            ordered_json j;
            to_json(j, t);
            std::cout << j << '\n';
        }
    }
    return 0;
}

int run_verify(const std::string& tuple_json, const std::string& preset, long long n_max,
               const std::string& method, const std::string& format, long long brute_max) {
    ranklab::VerificationReport report;
    if (!preset.empty()) {
        if (preset == "ramanujan5") {
            report = ranklab::verify_dyson_congruence(5, n_max, brute_max);
        } else if (preset == "ramanujan7") {
            report = ranklab::verify_dyson_congruence(7, n_max, brute_max);
        } else { // dyson7
            auto [lhs, rhs] = ranklab::dyson_relation_terms();
            report = ranklab::verify_residue_relation(lhs, rhs, n_max, brute_max);
        }
    } else {
        ranklab::IdentityTuple t = nlohmann::json::parse(tuple_json).get<ranklab::IdentityTuple>();
        report = ranklab::verify_identity(t, n_max, parse_method(method), brute_max);
    }

    if (format == "csv") {
        std::cout << "n,lhs,rhs,method,pass\n";
        for (const auto& row : report.rows) {
            std::cout << row.n << ',' << row.lhs.get_str() << ',' << row.rhs.get_str() << ','
                      << row.method << ',' << (row.pass ? "true" : "false") << '\n';
        }
    } else if (format == "plain") {
        for (const auto& row : report.rows) {
            std::cout << "n=" << row.n << " lhs=" << row.lhs.get_str()
                      << " rhs=" << row.rhs.get_str() << " method=" << row.method
                      << (row.pass ? " pass" : " FAIL");
            if (!row.note.empty()) std::cout << " (" << row.note << ')';
            std::cout << '\n';
        }
        std::cout << "verdict: " << report.verdict();
        if (auto n = report.counterexample_n()) std::cout << " at n=" << *n;
        std::cout << '\n';
        if (!report.note.empty()) std::cout << report.note << '\n';
    } else {
        std::cout << ranklab::report_to_json(report) << '\n';
    }
    return report.all_pass() ? 0 : 1;
}

int run_tail(long long n_start, long long n_end, long long step, const std::string& format) {
    if (step < 1 || n_start < 2 || n_end < n_start) {
        throw std::invalid_argument("tail: need 2 <= n-start <= n-end and step >= 1");
    }
    if (format == "csv") std::cout << "n,exact_num,exact_den,exact_float,asymptote,ratio\n";
    for (long long n = n_start; n <= n_end; n += step) {
        ranklab::TailFraction t = ranklab::tail_fraction(n);
        if (format == "json") {
            std::cout << ordered_json{{"n", n},
                                      {"exact_num", t.num.get_str()},
                                      {"exact_den", t.den.get_str()},
                                      {"exact_float", t.exact_value()},
                                      {"asymptote", t.asymptote},
                                      {"ratio", t.ratio()}}
                      << '\n';
        } else {
            std::cout << n << ',' << t.num.get_str() << ',' << t.den.get_str() << ','
                      << fmt_double(t.exact_value()) << ',' << fmt_double(t.asymptote) << ','
                      << fmt_double(t.ratio()) << '\n';
        }
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Dyson-rank statistics of integer partitions"};
    app.require_subcommand(1);

    std::string nplus_method = "fast";
    std::string verify_method = "both";
    long long brute_max = -1; // resolved against the env var after parsing
    long long n = 0, r = 0, m = 1;
    std::optional<long long> min_rank, max_rank;
    long long a_max = 1, r_window = -1, max_cells = ranklab::kDefaultSearchCells;
    std::string tuple_json, preset;
    long long n_max = 25;
    long long n_start = 2, n_end = 2, step = 1;

    auto add_format = [](CLI::App* cmd, std::string& fmt) {
        cmd->add_option("--format", fmt, "output format")
            ->check(CLI::IsMember({"plain", "csv", "json"}));
    };
    auto add_brute_max = [&](CLI::App* cmd) {
        cmd->add_option("--brute-max", brute_max, "enumeration limit (default RANKLAB_BRUTE_MAX or 50)");
    };

    std::string count_fmt = "plain", hist_fmt = "plain", nplus_fmt = "plain";
    std::string search_fmt = "json", verify_fmt = "json", tail_fmt = "csv";

    CLI::App* count = app.add_subcommand("count", "partition count p(n)");
    count->add_option("n", n, "weight")->required();
    add_format(count, count_fmt);

    CLI::App* histogram = app.add_subcommand("histogram", "rank tally over all partitions of n");
    histogram->add_option("n", n, "weight")->required();
    histogram->add_option("--min-rank", min_rank, "lowest rank row (default -(n-1))");
    histogram->add_option("--max-rank", max_rank, "highest rank row (default n-1)");
    add_brute_max(histogram);
    add_format(histogram, hist_fmt);

    CLI::App* nplus = app.add_subcommand("nplus", "large-rank count N+(r, m, n)");
    nplus->add_option("r", r, "rank residue")->required();
    nplus->add_option("m", m, "modulus")->required();
    nplus->add_option("n", n, "weight")->required();
    nplus->add_option("--method", nplus_method, "fast | brute | both (default fast)")
        ->check(CLI::IsMember({"fast", "brute", "both"}));
    add_brute_max(nplus);
    add_format(nplus, nplus_fmt);

    CLI::App* search = app.add_subcommand("search", "enumerate identity tuples for modulus m");
    search->add_option("m", m, "modulus")->required();
    search->add_option("--a-max", a_max, "largest a_i")->required();
    search->add_option("--r-window", r_window, "largest |r_i| (default: full residue window)");
    search->add_option("--max-cells", max_cells, "search-space guard");
    add_format(search, search_fmt);

    CLI::App* verify = app.add_subcommand("verify", "check an identity tuple or a preset relation");
    verify->add_option("--tuple", tuple_json, "identity tuple as JSON {\"m\":..,\"a\":[..],\"r\":[..]}");
    verify->add_option("--preset", preset, "ramanujan5 | ramanujan7 | dyson7")
        ->check(CLI::IsMember({"ramanujan5", "ramanujan7", "dyson7"}));
    verify->add_option("--n-max", n_max, "verify n = 0..n_max (default 25)");
    verify->add_option("--method", verify_method, "fast | brute | both (default both)")
        ->check(CLI::IsMember({"fast", "brute", "both"}));
    add_brute_max(verify);
    add_format(verify, verify_fmt);

    CLI::App* tail = app.add_subcommand("tail", "exact large-rank share next to its decay curve");
    tail->add_option("--n-start", n_start, "first weight")->required();
    tail->add_option("--n-end", n_end, "last weight")->required();
    tail->add_option("--step", step, "weight stride");
    add_format(tail, tail_fmt);

    try {
        app.parse(argc, argv);
        if (brute_max < 0) brute_max = env_brute_max();
        if (verify->parsed() && tuple_json.empty() == preset.empty()) {
            throw CLI::ValidationError("verify", "exactly one of --tuple and --preset is required");
        }
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (count->parsed()) return run_count(n, count_fmt);
        if (histogram->parsed()) return run_histogram(n, hist_fmt, min_rank, max_rank, brute_max);
        if (nplus->parsed()) return run_nplus(r, m, n, nplus_method, nplus_fmt, brute_max);
        if (search->parsed()) {
            if (r_window < 0) r_window = m; // covers the whole normalized window
            return run_search(m, a_max, r_window, max_cells, search_fmt);
        }
        if (verify->parsed())
            return run_verify(tuple_json, preset, n_max, verify_method, verify_fmt, brute_max);
        if (tail->parsed()) return run_tail(n_start, n_end, step, tail_fmt);
    } catch (const ranklab::brute_bound_error& e) {
        std::cerr << "ranklab: " << e.what() << '\n';
        return 1;
    } catch (const ranklab::search_limit_error& e) {
        std::cerr << "ranklab: " << e.what() << '\n';
        return 1;
    } catch (const ranklab::formula_domain_error& e) {
        std::cerr << "ranklab: " << e.what() << '\n';
        return 1;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "ranklab: malformed tuple JSON: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "ranklab: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
