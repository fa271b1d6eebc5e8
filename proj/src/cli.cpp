#include "ptpc/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include "ptpc/bounds.hpp"
#include "ptpc/enumerator.hpp"
#include "ptpc/oracle.hpp"
#include "ptpc/polysearch.hpp"
#include "ptpc/report.hpp"
#include "ptpc/transform_io.hpp"

namespace ptpc {
namespace {

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct Args {
    std::vector<int> rm;
    std::string profile_file;
    bool identity = false;
    std::string pac;
    std::optional<std::uint64_t> random_seed;
    std::string transform_file;

    std::string json_path;
    std::string csv_path;
    bool per_coset = false;
    bool no_shortcircuit = false;
    unsigned threads = 0;

    std::vector<double> ebn0_db;
    std::string spectrum_file;
    int max_degree = -1;
    std::size_t keep = 10;
    std::size_t trials = 0;
    std::uint64_t seed = 1;
    std::size_t oracle_limit = kDefaultOracleDimensionLimit;
};

struct Code {
    CodeSpec spec;
    std::string origin;
    std::optional<int> rm_order;
};

struct Transform {
    PreTransform t;
    std::string kind;
    std::string value;
};

void add_profile_options(CLI::App* cmd, Args& a) {
    cmd->add_option("--rm", a.rm, "Reed-Muller profile RM(r, n)")->expected(2)->type_name("R N");
    cmd->add_option("--profile", a.profile_file, "Rate-profile file");
}

void add_transform_options(CLI::App* cmd, Args& a) {
    cmd->add_flag("--identity", a.identity, "No pre-transform (plain polar code)");
    cmd->add_option("--pac", a.pac, "PAC convolution polynomial in octal");
    cmd->add_option_function<std::uint64_t>(
        "--random-seed", [&a](std::uint64_t seed) { a.random_seed = seed; }, "Random upper-triangular pre-transform");
    cmd->add_option("--transform", a.transform_file, "Pre-transform matrix file");
}

void add_output_options(CLI::App* cmd, Args& a) {
    cmd->add_option("--json", a.json_path, "Write the run report as JSON");
    cmd->add_option("--csv", a.csv_path, "Write the tabular output as CSV");
    cmd->add_option("--threads", a.threads, "Worker threads (0 = all cores)");
}

void add_count_options(CLI::App* cmd, Args& a) {
    cmd->add_flag("--per-coset", a.per_coset, "Print the count of every coset");
    cmd->add_flag("--no-shortcircuit", a.no_shortcircuit, "Traverse cosets no pre-transform can thin");
}

Code load_code(const Args& a) {
    const bool has_rm = !a.rm.empty();
    const bool has_file = !a.profile_file.empty();
    if (has_rm == has_file) throw UsageError("exactly one of --rm or --profile is required");
    if (has_rm) {
        const int r = a.rm[0], n = a.rm[1];
        if (n < 1 || n > kMaxLog2Length) throw UsageError("--rm: n must lie in [1, " + std::to_string(kMaxLog2Length) + "]");
        if (r < 0 || r > n) throw UsageError("--rm: r must lie in [0, n]");
        return {rm_profile(r, n), "rm(" + std::to_string(r) + "," + std::to_string(n) + ")", r};
    }
    return {load_profile(a.profile_file), "file:" + a.profile_file, std::nullopt};
}

Transform load_transform_source(const Args& a, const CodeSpec& spec) {
    const int given = int(a.identity) + int(!a.pac.empty()) + int(a.random_seed.has_value()) +
                      int(!a.transform_file.empty());
    if (given > 1) throw UsageError("at most one of --identity, --pac, --random-seed, --transform is allowed");
    if (!a.pac.empty()) {
        PacPolynomial p(1);
        try {
            p = PacPolynomial::from_octal(a.pac);
        } catch (const std::invalid_argument& e) {
            throw UsageError(std::string("--pac: ") + e.what());
        }
        if (static_cast<std::size_t>(p.degree()) >= spec.length())
            throw UsageError("--pac: degree " + std::to_string(p.degree()) + " must be below N");
        return {pac_transform(spec, p), "pac", p.octal()};
    }
    if (a.random_seed) return {random_transform(spec, *a.random_seed), "random", std::to_string(*a.random_seed)};
    if (!a.transform_file.empty()) {
        auto t = load_transform(a.transform_file);
        if (t.n() != spec.n()) throw FormatError("transform: n=" + std::to_string(t.n()) + " does not match the profile");
        try {
            t.validate_for(spec);
        } catch (const std::invalid_argument& e) {
            throw FormatError(std::string("transform: ") + e.what());
        }
        return {std::move(t), "file", a.transform_file};
    }
    return {PreTransform::identity(spec.n()), "identity", ""};
}

WeightSpectrum load_spectrum(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open '" + path + "'");
    std::vector<std::pair<std::uint64_t, BigCount>> entries;
    std::string line;
    for (int number = 1; std::getline(in, line); ++number) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::string w, count, extra;
        if (!(fields >> w)) continue;
        auto fail = [&](const std::string& what) {
            return FormatError(path + ": line " + std::to_string(number) + ": " + what);
        };
        if (!(fields >> count) || (fields >> extra)) throw fail("expected '<weight> <count>'");
        if (!std::all_of(w.begin(), w.end(), ::isdigit) || !std::all_of(count.begin(), count.end(), ::isdigit))
            throw fail("weight and count must be non-negative integers");
        entries.emplace_back(std::stoull(w), BigCount(count));
    }
    try {
        return WeightSpectrum(std::move(entries));
    } catch (const std::invalid_argument& e) {
        throw FormatError(path + ": " + e.what());
    }
}

void describe_code(RunReport& report, const Code& code) {
    report.n = code.spec.n();
    report.dimension = code.spec.dimension();
    report.rate = code.spec.rate();
    report.profile_origin = code.origin;
}

void print_code(std::ostream& out, const RunReport& r) {
    out << "code: n=" << r.n << " N=" << (std::uint64_t{1} << r.n) << " K=" << r.dimension << " R=" << r.rate
        << " profile=" << r.profile_origin << '\n';
}

void print_transform(std::ostream& out, const RunReport& r) {
    out << "transform: " << r.transform_kind;
    if (!r.transform_value.empty()) out << ' ' << r.transform_value;
    out << '\n';
}

void print_stats(std::ostream& out, const EnumerationStats& s) {
    out << "visited_subtrees: " << s.visited_subtrees << '\n'
        << "message_updates: " << s.message_updates << '\n'
        << "pretransform_checks: " << s.pretransform_checks << '\n';
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

EnumerationOptions enumeration_options(const Args& a) {
    EnumerationOptions eo;
    eo.short_circuit = !a.no_shortcircuit;
    eo.threads = a.threads;
    return eo;
}

// Each command fills the report, writes human output to `out` and CSV rows
// to `csv`; the caller publishes everything once the command has finished.
int cmd_count(const Args& a, RunReport& report, std::ostream& out, std::ostream& csv) {
    const auto code = load_code(a);
    const auto tr = load_transform_source(a, code.spec);
    describe_code(report, code);
    report.transform_kind = tr.kind;
    report.transform_value = tr.value;

    const auto start = std::chrono::steady_clock::now();
    const auto result = count_min_weight(code.spec, tr.t, enumeration_options(a));
    report.wall_seconds = seconds_since(start);
    report.wmin = result.wmin;
    report.awmin = result.count;
    report.dmin_exceeds_wmin = result.dmin_exceeds_wmin;
    report.stats = result.stats;
    if (a.per_coset) report.per_coset.assign(result.per_coset.begin(), result.per_coset.end());

    print_code(out, report);
    print_transform(out, report);
    out << "wmin: " << result.wmin << '\n' << "Awmin: " << result.count << '\n';
    out << "dmin > wmin: " << (result.dmin_exceeds_wmin ? "yes" : "no") << '\n';
    print_stats(out, result.stats);
    out << "time: " << std::fixed << std::setprecision(6) << report.wall_seconds << " s\n";
    out.unsetf(std::ios::floatfield);
    if (a.per_coset) {
        out << "leader count\n";
        for (const auto& [leader, count] : report.per_coset) out << leader << ' ' << count << '\n';
    }
    csv << "leader,count\n";
    for (const auto& [leader, count] : result.per_coset) csv << leader << ',' << count << '\n';
    return kExitOk;
}

int cmd_bounds(const Args& a, RunReport& report, std::ostream& out, std::ostream& csv) {
    const auto code = load_code(a);
    describe_code(report, code);
    const auto start = std::chrono::steady_clock::now();

    const auto statement = dmin_statement(code.spec);
    const auto classes = classify_cosets(code.spec);
    const auto lb = lb_non_pretransformable(code.spec);
    report.wmin = statement.wmin;
    report.results = {
        {"decreasing", statement.guaranteed_exact ? "yes" : "no"},
        {"pretransformable_cosets", std::to_string(classes.pretransformable.size())},
        {"non_pretransformable_cosets", std::to_string(classes.non_pretransformable.size())},
        {"lb_non_pretransformable", lb.str()},
    };
    if (code.rm_order && code.spec.n() >= 2 && *code.rm_order <= code.spec.n() - 2)
        report.results.emplace_back("lb_rm_closed_form", lb_rm_closed_form(*code.rm_order).str());

    print_code(out, report);
    out << "wmin: " << statement.wmin << '\n';
    out << "dmin = wmin for every pre-transform: " << (statement.guaranteed_exact ? "yes" : "not guaranteed") << '\n';
    for (const auto& [key, value] : report.results)
        if (key != "decreasing") out << key << ": " << value << '\n';

    if (!a.ebn0_db.empty() || !a.spectrum_file.empty()) {
        WeightSpectrum spectrum;
        if (!a.spectrum_file.empty()) {
            spectrum = load_spectrum(a.spectrum_file);
        } else {
            const auto tr = load_transform_source(a, code.spec);
            report.transform_kind = tr.kind;
            report.transform_value = tr.value;
            const auto result = count_min_weight(code.spec, tr.t, enumeration_options(a));
            report.awmin = result.count;
            report.stats = result.stats;
            if (result.count == 0) throw UsageError("bounds: no weight-wmin codewords; supply --spectrum");
            spectrum = WeightSpectrum({{result.wmin, result.count}});
            print_transform(out, report);
            out << "Awmin: " << result.count << '\n';
        }
        auto sweep = a.ebn0_db;
        if (sweep.empty())
            for (int db = 0; db <= 6; ++db) sweep.push_back(db);
        std::ostringstream table;
        table << "ebn0_db,fer_bound\n";
        for (double db : sweep) {
            table << db << ',' << std::setprecision(6) << std::scientific
                  << union_bound_fer(spectrum, code.spec.rate(), db) << '\n';
            table.unsetf(std::ios::floatfield);
        }
        out << table.str();
        csv << table.str();
        for (double db : sweep) {
            std::ostringstream v;
            v << std::setprecision(17) << union_bound_fer(spectrum, code.spec.rate(), db);
            std::ostringstream k;
            k << "fer_bound@" << db;
            report.results.emplace_back(k.str(), v.str());
        }
    }
    report.wall_seconds = seconds_since(start);
    return kExitOk;
}

int cmd_verify(const Args& a, RunReport& report, std::ostream& out, std::ostream& csv) {
    const auto code = load_code(a);
    const auto tr = load_transform_source(a, code.spec);
    describe_code(report, code);
    report.transform_kind = tr.kind;
    report.transform_value = tr.value;

    const auto start = std::chrono::steady_clock::now();
    const auto result = count_min_weight(code.spec, tr.t, enumeration_options(a));
    SpectrumResult oracle;
    try {
        oracle = brute_force_spectrum(code.spec, tr.t, a.oracle_limit, a.threads);
    } catch (const OracleSizeError& e) {
        throw UsageError(e.what());
    }
    report.wall_seconds = seconds_since(start);
    const BigCount oracle_count = oracle.spectrum.count_at(result.wmin);
    const bool oracle_exceeds = oracle.dmin > result.wmin || oracle.spectrum.empty();
    const bool agree = oracle_count == result.count && oracle_exceeds == result.dmin_exceeds_wmin;

    report.wmin = result.wmin;
    report.awmin = result.count;
    report.dmin_exceeds_wmin = result.dmin_exceeds_wmin;
    report.stats = result.stats;
    report.results = {{"oracle_count", oracle_count.str()},
                      {"oracle_dmin", std::to_string(oracle.dmin)},
                      {"agree", agree ? "yes" : "no"}};

    print_code(out, report);
    print_transform(out, report);
    out << "wmin: " << result.wmin << '\n'
        << "enumerator Awmin: " << result.count << '\n'
        << "oracle A_wmin: " << oracle_count << '\n'
        << "oracle dmin: " << oracle.dmin << '\n'
        << "dmin > wmin: enumerator " << (result.dmin_exceeds_wmin ? "yes" : "no") << ", oracle "
        << (oracle_exceeds ? "yes" : "no") << '\n'
        << (agree ? "agree" : "MISMATCH") << '\n';
    csv << "weight,count\n";
    for (const auto& [w, c] : oracle.spectrum.entries()) csv << w << ',' << c << '\n';
    return agree ? kExitOk : kExitMismatch;
}

int cmd_search(const Args& a, RunReport& report, std::ostream& out, std::ostream& csv) {
    const auto code = load_code(a);
    if (a.max_degree < 0) throw UsageError("--max-degree is required and must be >= 0");
    if (a.keep == 0) throw UsageError("--keep must be >= 1");
    describe_code(report, code);
    report.transform_kind = "pac";

    SearchOptions so;
    so.keep = a.keep;
    so.threads = a.threads;
    const auto start = std::chrono::steady_clock::now();
    const auto s = search_optimal_polynomial(code.spec, a.max_degree, so);
    report.wall_seconds = seconds_since(start);
    report.transform_value = s.best.octal();
    report.wmin = s.wmin;
    report.awmin = s.best_count;
    report.results = {{"best_polynomial", s.best.octal()},
                      {"best_degree", std::to_string(s.best.degree())},
                      {"min_degree", std::to_string(s.min_degree)},
                      {"max_degree", std::to_string(s.max_degree)},
                      {"candidates", std::to_string(s.candidates)},
                      {"ties_considered", std::to_string(s.ties_considered)},
                      {"aborted", std::to_string(s.aborted)}};

    std::ostringstream table;
    table << "polynomial,degree,awmin\n";
    for (const auto& e : s.ranking) table << e.polynomial.octal() << ',' << e.polynomial.degree() << ',' << e.count << '\n';

    print_code(out, report);
    out << "wmin: " << s.wmin << '\n'
        << "best: " << s.best.octal() << " (degree " << s.best.degree() << ") Awmin " << s.best_count << '\n'
        << "candidates: " << s.candidates << " (degrees " << s.min_degree << ".." << s.max_degree
        << "), ties: " << s.ties_considered << ", aborted early: " << s.aborted << '\n'
        << table.str();
    csv << table.str();
    return kExitOk;
}

int cmd_random_ensemble(const Args& a, RunReport& report, std::ostream& out, std::ostream& csv) {
    const auto code = load_code(a);
    if (a.trials == 0) throw UsageError("--trials is required and must be >= 1");
    describe_code(report, code);
    report.transform_kind = "random";
    report.transform_value = std::to_string(a.seed) + "+t";

    auto eo = enumeration_options(a);
    const auto start = std::chrono::steady_clock::now();
    std::optional<BigCount> lo, hi;
    BigCount sum = 0;
    csv << "trial,seed,awmin\n";
    for (std::size_t t = 0; t < a.trials; ++t) {
        const std::uint64_t seed = a.seed + t;
        const auto result = count_min_weight(code.spec, random_transform(code.spec, seed), eo);
        report.wmin = result.wmin;
        sum += result.count;
        if (!lo || result.count < *lo) lo = result.count;
        if (!hi || result.count > *hi) hi = result.count;
        csv << t << ',' << seed << ',' << result.count << '\n';
    }
    report.wall_seconds = seconds_since(start);
    using Rational = boost::multiprecision::cpp_rational;
    const double mean = Rational(sum, BigCount(a.trials)).convert_to<double>();
    std::ostringstream mean_text;
    mean_text << std::setprecision(17) << mean;
    report.results = {{"trials", std::to_string(a.trials)},
                      {"min", lo->str()},
                      {"max", hi->str()},
                      {"sum", sum.str()},
                      {"mean", mean_text.str()}};

    print_code(out, report);
    out << "transform: random, seeds " << a.seed << ".." << a.seed + a.trials - 1 << '\n'
        << "wmin: " << report.wmin << '\n'
        << "trials: " << a.trials << '\n'
        << "min Awmin: " << *lo << '\n'
        << "mean Awmin: " << std::fixed << std::setprecision(2) << mean << '\n'
        << "max Awmin: " << *hi << '\n';
    out.unsetf(std::ios::floatfield);
    return kExitOk;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw UsageError("cannot write '" + path + "'");
    f << content;
    if (!f) throw UsageError("failed writing '" + path + "'");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Minimum-weight codeword counts of pre-transformed polar codes", "ptpc"};
    app.set_version_flag("--version", std::string(PTPC_VERSION));
    app.require_subcommand(1);
    Args a;

    auto* count = app.add_subcommand("count", "Count the minimum-weight codewords");
    add_profile_options(count, a);
    add_transform_options(count, a);
    add_output_options(count, a);
    add_count_options(count, a);

    auto* bounds = app.add_subcommand("bounds", "Lower bounds on Awmin and the union bound on FER");
    add_profile_options(bounds, a);
    add_transform_options(bounds, a);
    add_output_options(bounds, a);
    bounds->add_option("--ebn0-db", a.ebn0_db, "Eb/N0 points in dB for the union bound");
    bounds->add_option("--spectrum", a.spectrum_file, "Weight spectrum slice file ('<w> <A_w>' lines)");

    auto* verify = app.add_subcommand("verify", "Check the enumerator against brute force");
    add_profile_options(verify, a);
    add_transform_options(verify, a);
    add_output_options(verify, a);
    add_count_options(verify, a);
    verify->add_option("--oracle-limit", a.oracle_limit, "Largest dimension K the oracle accepts");

    auto* search = app.add_subcommand("search", "Search PAC polynomials minimizing Awmin");
    add_profile_options(search, a);
    add_output_options(search, a);
    search->add_option("--max-degree", a.max_degree, "Largest polynomial degree")->required();
    search->add_option("--keep", a.keep, "Length of the ranking");

    auto* ensemble = app.add_subcommand("random-ensemble", "Awmin statistics over random pre-transforms");
    add_profile_options(ensemble, a);
    add_output_options(ensemble, a);
    add_count_options(ensemble, a);
    ensemble->add_option("--trials", a.trials, "Number of random transforms")->required();
    ensemble->add_option("--seed", a.seed, "First seed; trial t uses seed + t");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            std::ostringstream help;
            app.exit(e, help, help);
            out << help.str();
            return kExitOk;
        }
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    RunReport report;
    report.command = args;
    std::ostringstream text, csv;
    int code = kExitOk;
    try {
        if (count->parsed())
            code = cmd_count(a, report, text, csv);
        else if (bounds->parsed())
            code = cmd_bounds(a, report, text, csv);
        else if (verify->parsed())
            code = cmd_verify(a, report, text, csv);
        else if (search->parsed())
            code = cmd_search(a, report, text, csv);
        else
            code = cmd_random_ensemble(a, report, text, csv);
        if (!a.json_path.empty()) write_file(a.json_path, to_json(report) + "\n");
        if (!a.csv_path.empty()) write_file(a.csv_path, csv.str());
    } catch (const FormatError& e) {
        err << "error: " << e.what() << '\n';
        return kExitFormat;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    out << text.str();
    return code;
}

}  // namespace ptpc
