#include "cli.hpp"

#include <chrono>
#include <iomanip>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "multisieve/applications.hpp"
#include "multisieve/brute.hpp"
#include "multisieve/identities.hpp"
#include "multisieve/json_io.hpp"
#include "multisieve/sieve.hpp"

namespace multisieve::cli {

namespace {

struct CountOptions {
    std::string input;
    std::optional<unsigned> bound;
    std::optional<unsigned> distinct;
    bool all_distinct = false;
    bool as_json = false;
    bool compare_oracle = false;
    std::string dump_canonical;
};

int run_count(const CountOptions& opt, std::ostream& out) {
    int modes = (opt.bound ? 1 : 0) + (opt.distinct ? 1 : 0) + (opt.all_distinct ? 1 : 0);
    if (modes > 1)
        throw validation_error("count: --bound, --distinct and --all-distinct are exclusive");
    if (opt.as_json && opt.compare_oracle)
        throw validation_error("count: --json cannot be combined with --compare-oracle");

    ExplicitSet X = load_explicit_set_file(opt.input);
    if (!opt.dump_canonical.empty()) dump_explicit_set_file(X, opt.dump_canonical);
    SymmetricSetSpec spec = SymmetricSetSpec::from_explicit(X);

    Int sieve;
    if (opt.bound)
        sieve = count_multisets_bounded(spec, *opt.bound);
    else if (opt.distinct)
        sieve = count_multisets_distinct(spec, *opt.distinct);
    else if (opt.all_distinct)
        sieve = count_distinct_tuples(spec);
    else
        sieve = count_multisets(spec);

    if (opt.compare_oracle) {
        Int brute;
        if (opt.bound)
            brute = brute_count_bounded(X, *opt.bound);
        else if (opt.distinct)
            brute = brute_count_distinct(X, *opt.distinct);
        else if (opt.all_distinct)
            brute = brute_count_distinct_tuples(X);
        else
            brute = brute_count_multisets(X);
        return report_comparison(sieve, brute, out);
    }

    if (opt.as_json) {
        nlohmann::json doc;
        doc["count"] = sieve.get_str();
        doc["k"] = X.k();
        doc["terms"] = sieve_term_count(X.k());
        out << doc.dump() << "\n";
    } else {
        out << sieve.get_str() << "\n";
    }
    return kExitOk;
}

struct FfOptions {
    unsigned p = 0;
    unsigned a = 1;
    unsigned k = 0;
    std::string b;
    std::string method = "closed";
};

int run_ffpartitions(const FfOptions& opt, std::ostream& out) {
    FieldSpec F = FieldSpec::make(opt.p, opt.a);
    std::vector<std::string> methods;
    if (opt.method == "all")
        methods = {"closed", "sieve", "brute"};
    else if (opt.method == "closed" || opt.method == "sieve" || opt.method == "brute")
        methods = {opt.method};
    else
        throw validation_error("ffpartitions: unknown method '" + opt.method + "'");

    auto evaluate = [&](const std::string& method, const FqElement& b) {
        if (method == "closed") return partition_count_closed(F, opt.k, b);
        if (method == "sieve") return partition_count_sieve(F, opt.k, b);
        return partition_count_brute(F, opt.k, b);
    };

    if (!opt.b.empty()) {
        FqElement b = F.parse(opt.b);
        for (const auto& method : methods) out << evaluate(method, b).get_str() << "\n";
        return kExitOk;
    }
    out << "# b";
    for (const auto& method : methods) out << " " << method;
    out << "\n";
    for (const FqElement& b : F.enumerate_elements()) {
        out << F.render(b);
        for (const auto& method : methods) out << " " << evaluate(method, b).get_str();
        out << "\n";
    }
    return kExitOk;
}

int run_identities(unsigned k_max, std::ostream& out) {
    auto reports = run_identity_suites(k_max);
    size_t width = 0;
    for (const auto& r : reports) width = std::max(width, r.name.size());
    bool all_ok = true;
    for (const auto& r : reports) {
        out << std::left << std::setw(static_cast<int>(width) + 2) << r.name
            << (r.passed() ? "PASS" : "FAIL") << "  checks=" << r.checks;
        if (!r.passed()) {
            out << "  failures=" << r.failures << "  first: " << r.first_failure;
            all_ok = false;
        }
        out << "\n";
    }
    out << std::left << std::setw(static_cast<int>(width) + 2) << "TOTAL"
        << (all_ok ? "PASS" : "FAIL") << "\n";
    return all_ok ? kExitOk : kExitIntegrity;
}

int run_bench(unsigned k, unsigned ground_size, std::ostream& out) {
    if (ground_size < 1) throw validation_error("bench: --ground-size must be at least 1");
    std::vector<std::string> labels(ground_size);
    for (unsigned i = 0; i < ground_size; ++i) labels[i] = std::to_string(i);
    ExplicitSet X = ExplicitSet::full(std::move(labels), k);
    SymmetricSetSpec spec = SymmetricSetSpec::from_explicit(X);

    using clock = std::chrono::steady_clock;
    auto ms_since = [](clock::time_point start) {
        return std::chrono::duration<double, std::milli>(clock::now() - start).count();
    };

    auto t0 = clock::now();
    Int sieve_value = count_distinct_tuples(spec);
    double sieve_ms = ms_since(t0);
    out << "cycle-type sieve: terms=" << sieve_term_count(k) << " value=" << sieve_value.get_str()
        << " time-ms=" << std::fixed << std::setprecision(3) << sieve_ms << "\n";

    const unsigned pair_count = k * (k - 1) / 2;
    if (k <= 5) {
        auto t1 = clock::now();
        InclusionExclusionResult ie = inclusion_exclusion_distinct(X);
        double ie_ms = ms_since(t1);
        out << "inclusion-exclusion: terms=" << ie.terms << " value=" << ie.value.get_str()
            << " time-ms=" << std::fixed << std::setprecision(3) << ie_ms << "\n";
        if (ie.value != sieve_value)
            throw integrity_error("bench: inclusion-exclusion and sieve values disagree");
    } else {
        out << "inclusion-exclusion: terms=2^" << pair_count << " (refused beyond k=5)\n";
    }
    return kExitOk;
}

} // namespace

int report_comparison(const Int& sieve_value, const Int& brute_value, std::ostream& out) {
    out << "sieve: " << sieve_value.get_str() << "\n";
    out << "brute: " << brute_value.get_str() << "\n";
    if (sieve_value == brute_value) {
        out << "MATCH\n";
        return kExitOk;
    }
    out << "MISMATCH\n";
    return kExitMismatch;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact counting of restricted multisets by the cycle-type sieve"};
    app.require_subcommand(1);

    CountOptions count_opt;
    auto* count = app.add_subcommand("count", "Count multisets satisfying an explicit symmetric set");
    count->add_option("--input", count_opt.input, "Explicit set JSON file")->required();
    auto* bound_opt = count->add_option("--bound", count_opt.bound,
                                        "Count multisets with every multiplicity <= J");
    auto* distinct_opt = count->add_option("--distinct", count_opt.distinct,
                                           "Count multisets with exactly D distinct elements");
    auto* alldist_opt = count->add_flag("--all-distinct", count_opt.all_distinct,
                                        "Count tuples with pairwise distinct coordinates");
    bound_opt->excludes(distinct_opt)->excludes(alldist_opt);
    distinct_opt->excludes(alldist_opt);
    count->add_flag("--json", count_opt.as_json, "Emit {\"count\",\"k\",\"terms\"} JSON");
    count->add_flag("--compare-oracle", count_opt.compare_oracle,
                    "Also run the brute-force oracle and report MATCH/MISMATCH");
    count->add_option("--dump-canonical", count_opt.dump_canonical,
                      "Write the canonical (symmetrized, sorted) set to this file");

    FfOptions ff_opt;
    auto* ff = app.add_subcommand("ffpartitions", "Partitions of b into k nonzero parts over F_q");
    ff->add_option("--p", ff_opt.p, "Field characteristic (prime)")->required();
    ff->add_option("--a", ff_opt.a, "Extension degree (q = p^a)")->capture_default_str();
    ff->add_option("--k", ff_opt.k, "Number of parts")->required();
    ff->add_option("--b", ff_opt.b,
                   "Target element as comma-separated residues, low degree first; "
                   "omitted: tabulate all of F_q");
    ff->add_option("--method", ff_opt.method, "closed|sieve|brute|all")->capture_default_str();

    unsigned neck_n = 0, neck_q = 0;
    bool neck_brute = false;
    auto* neck = app.add_subcommand("necklaces", "Necklaces of length n over q colors");
    neck->add_option("--n", neck_n, "Necklace length")->required();
    neck->add_option("--q", neck_q, "Number of colors")->required();
    neck->add_flag("--brute", neck_brute, "Count by direct orbit enumeration");

    unsigned zs_n = 0, zs_q = 0;
    std::optional<unsigned> zs_k;
    bool zs_brute = false;
    auto* zs = app.add_subcommand("zerosum",
                                  "Zero-sum multisets over Z/nZ with multiplicities < q");
    zs->add_option("--n", zs_n, "Modulus")->required();
    zs->add_option("--q", zs_q, "Multiplicity bound (each multiplicity <= q-1)")->required();
    zs->add_option("--k", zs_k, "Restrict to multisets of size exactly K");
    zs->add_flag("--brute", zs_brute, "Count by direct enumeration");

    unsigned id_kmax = 8;
    auto* ident = app.add_subcommand("identities", "Run the internal identity suites");
    ident->add_option("--k-max", id_kmax, "Largest degree to sweep")->capture_default_str();

    unsigned bench_k = 0, bench_m = 0;
    auto* bench = app.add_subcommand("bench",
                                     "Term counts and wall times for the distinct-tuple count "
                                     "on the full cube D^k");
    bench->add_option("--k", bench_k, "Tuple length")->required();
    bench->add_option("--ground-size", bench_m, "Size of D")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitValidation;
    }

    try {
        if (*count) return run_count(count_opt, out);
        if (*ff) return run_ffpartitions(ff_opt, out);
        if (*neck) {
            out << (neck_brute ? necklace_count_brute(neck_n, neck_q)
                               : necklace_count(neck_n, neck_q))
                       .get_str()
                << "\n";
            return kExitOk;
        }
        if (*zs) {
            Int value;
            if (zs_k)
                value = zs_brute ? zerosum_brute_bounded(zs_n, zs_q, *zs_k)
                                 : zerosum_bounded_count(zs_n, zs_q, *zs_k);
            else {
                if (zs_n >= 1 && zs_q >= 1 && std::gcd(zs_n, zs_q) != 1)
                    err << "note: gcd(n, q) != 1; the count is the coprime-divisor sum and the "
                           "necklace equality does not apply\n";
                value = zs_brute ? zerosum_brute(zs_n, zs_q) : zerosum_total(zs_n, zs_q);
            }
            out << value.get_str() << "\n";
            return kExitOk;
        }
        if (*ident) return run_identities(id_kmax, out);
        if (*bench) return run_bench(bench_k, bench_m, out);
    } catch (const integrity_error& e) {
        err << "integrity error: " << e.what() << "\n";
        return kExitIntegrity;
    } catch (const validation_error& e) {
        err << "input error: " << e.what() << "\n";
        return kExitValidation;
    }
    return kExitValidation; // unreachable with require_subcommand(1)
}

} // namespace multisieve::cli
