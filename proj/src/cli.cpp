#include "fairsum/cli.hpp"

#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "fairsum/fairness.hpp"
#include "fairsum/frontier.hpp"
#include "fairsum/instance.hpp"
#include "fairsum/oracle.hpp"
#include "fairsum/pof.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fairsum::cli {

namespace {

using nlohmann::json;

json rational_json(const Rational& r) { return json{{"num", r.num()}, {"den", r.den()}}; }

json record_json(const PofRecord& r) {
    return json{{"label", r.label},
                {"scenario", kind_name(r.kind)},
                {"criterion", criterion_name(r.criterion)},
                {"alpha", rational_json(r.alpha)},
                {"zstar", r.zstar},
                {"zfair", r.zfair},
                {"pf_exists", r.pf_exists},
                {"pof", rational_json(r.pof)},
                {"lower", rational_json(r.bounds.lower)},
                {"upper", rational_json(r.bounds.upper)},
                {"within", r.within}};
}

json report_json(const Instance& inst, const FairnessReport& rep,
                 const std::vector<PofRecord>& records) {
    json mm{{"set", rep.mm.set},
            {"representative", rep.mm.representative},
            {"min_total", rep.mm.min_total}};
    json ks{{"set", rep.ks.set},
            {"representative", rep.ks.representative},
            {"min_total", rep.ks.min_total}};
    json pf{{"exists", rep.pf.has_value()}};
    if (rep.pf) pf["utilities"] = *rep.pf;
    json pofs = json::array();
    for (const auto& r : records) pofs.push_back(record_json(r));
    return json{{"instance", json::parse(emit_instance(inst))},
                {"trivial", inst.trivial},
                {"alpha", rational_json(alpha_of(inst))},
                {"system_optimum", json{{"utilities", rep.system_opt}, {"zstar", rep.zstar}}},
                {"bests", rep.bests},
                {"mm", mm},
                {"ks", ks},
                {"pf", pf},
                {"nash", json{{"set", rep.nash_set}, {"product", rep.nash_product}}},
                {"pof", pofs}};
}

std::string join_indices(const std::vector<int>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ";" : "") << v[i];
    return os.str();
}

void write_frontier_csv(std::ostream& os, const ParetoFrontier& f) {
    os << "uA,uB,witnessA,witnessB\n";
    for (const auto& e : f.entries) {
        os << e.utils[0] << ',' << e.utils[1] << ',';
        if (e.witness.picks.size() == 2)
            os << join_indices(e.witness.picks[0]) << ',' << join_indices(e.witness.picks[1]);
        else
            os << ',';
        os << '\n';
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::vector<Rational> parse_rational_list(const std::string& text) {
    std::vector<Rational> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) out.push_back(parse_rational(tok));
    return out;
}

// "h=1..3" / "r=2,4" / "D=100,eps=1/100,alpha=3/4" style key-value pairs.
std::vector<std::pair<std::string, std::string>> parse_kv(const std::string& text) {
    std::vector<std::pair<std::string, std::string>> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        auto eq = tok.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("bad parameter: " + tok);
        out.emplace_back(tok.substr(0, eq), tok.substr(eq + 1));
    }
    return out;
}

std::vector<int> parse_int_range(const std::string& value) {
    auto dots = value.find("..");
    if (dots == std::string::npos) return {std::stoi(value)};
    int lo = std::stoi(value.substr(0, dots));
    int hi = std::stoi(value.substr(dots + 2));
    std::vector<int> out;
    for (int v = lo; v <= hi; ++v) out.push_back(v);
    return out;
}

void configure_workers(int workers) {
#ifdef _OPENMP
    if (workers <= 0)
        if (const char* env = std::getenv("FAIRSUM_WORKERS")) workers = std::atoi(env);
    if (workers > 0) omp_set_num_threads(workers);
#else
    (void)workers;
#endif
}

void emit(const std::string& out_path, const std::string& content, std::ostream& fallback) {
    if (out_path.empty()) {
        fallback << content;
        return;
    }
    std::ofstream f(out_path);
    if (!f) throw std::runtime_error("cannot write " + out_path);
    f << content;
}

struct Options {
    // solve
    std::string solve_file, criterion = "all", out_dir;
    bool serial = false;
    // sweep / check shared
    std::string family, alpha_grid, eps_schedule, params, out_file, kind_str = "separate";
    bool random = false;
    int count = 0, n = 6;
    long long c = 50;
    std::string alpha_cap = "1";
    std::uint64_t seed = 1;
    int k = 2;
    int workers = 0;
};

int do_solve(const Options& opt, std::ostream& out) {
    Instance inst = parse_instance(read_file(opt.solve_file));
    ParetoFrontier frontier = inst.agent_count == 2
                                  ? solve_frontier(inst, opt.serial ? Exec::Serial : Exec::Parallel)
                                  : oracle_frontier(inst);
    FairnessReport rep = analyze(inst, frontier);
    std::vector<PofRecord> records;
    auto want = [&](Criterion c) {
        return opt.criterion == "all" || opt.criterion == criterion_name(c);
    };
    if (want(Criterion::MM)) records.push_back(pof_of(inst, rep, Criterion::MM));
    if (want(Criterion::KS)) records.push_back(pof_of(inst, rep, Criterion::KS));
    if (want(Criterion::PF)) records.push_back(pof_of(inst, rep, Criterion::PF));

    json doc = report_json(inst, rep, records);
    out << doc.dump(2) << '\n';
    if (!opt.out_dir.empty()) {
        std::filesystem::create_directories(opt.out_dir);
        auto stem = std::filesystem::path(opt.solve_file).stem().string();
        std::ofstream rj(std::filesystem::path(opt.out_dir) / (stem + ".report.json"));
        rj << doc.dump(2) << '\n';
        std::ofstream fc(std::filesystem::path(opt.out_dir) / (stem + ".frontier.csv"));
        write_frontier_csv(fc, frontier);
        std::ofstream pc(std::filesystem::path(opt.out_dir) / (stem + ".pof.csv"));
        write_records_csv(pc, records);
    }
    return 0;
}

int do_sweep(const Options& opt, std::ostream& out) {
    configure_workers(opt.workers);
    std::vector<PofRecord> records;
    if (opt.random) {
        Kind kind = opt.kind_str == "shared" ? Kind::Shared : Kind::Separate;
        records = sweep_random(opt.count > 0 ? opt.count : 100, opt.n, opt.c,
                               parse_rational(opt.alpha_cap), kind, opt.seed);
    } else {
        if (opt.family.empty())
            throw std::invalid_argument("sweep: need --family or --random");
        std::vector<Rational> alphas = parse_rational_list(opt.alpha_grid);
        std::vector<Rational> eps = opt.eps_schedule.empty()
                                        ? std::vector<Rational>{Rational(1, 10), Rational(1, 100),
                                                                Rational(1, 1000)}
                                        : parse_rational_list(opt.eps_schedule);
        std::vector<int> ints;
        for (const auto& [key, value] : parse_kv(opt.params)) {
            if (key == "h" || key == "r" || key == "k") {
                auto range = parse_int_range(value);
                ints.insert(ints.end(), range.begin(), range.end());
            } else {
                throw std::invalid_argument("sweep: unsupported grid parameter " + key);
            }
        }
        records = sweep_family(opt.family, alphas, eps, ints);
    }
    std::ostringstream csv;
    write_records_csv(csv, records);
    emit(opt.out_file, csv.str(), out);
    return 0;
}

int do_gen(const Options& opt, std::ostream& out) {
    FamilyParams p;
    for (const auto& [key, value] : parse_kv(opt.params)) {
        if (key == "D") p.scale = std::stoll(value);
        else if (key == "eps") p.eps = parse_rational(value);
        else if (key == "eps2") p.eps2 = parse_rational(value);
        else if (key == "alpha") p.alpha = parse_rational(value);
        else if (key == "r") p.r = std::stoi(value);
        else if (key == "h") p.h = std::stoi(value);
        else if (key == "k") p.k = std::stoi(value);
        else throw std::invalid_argument("gen: unknown parameter " + key);
    }
    Instance inst = gen_family(opt.family, p);
    emit(opt.out_file, emit_instance(inst) + "\n", out);
    return 0;
}

json check_report_json(const OracleReport& rep) {
    json checks = json::array();
    for (const auto& c : rep.checks)
        checks.push_back(json{{"name", c.name},
                              {"applicable", c.applicable},
                              {"passed", c.passed},
                              {"detail", c.detail}});
    json front = json::array();
    for (const auto& e : rep.frontier.entries) front.push_back(e.utils);
    return json{{"frontier", front}, {"checks", checks}, {"all_passed", rep.all_passed}};
}

int do_check(const Options& opt, std::ostream& out) {
    configure_workers(opt.workers);
    json result;
    bool failed = false;
    json failures = json::array();
    if (opt.random) {
        Kind kind = opt.kind_str == "shared" ? Kind::Shared : Kind::Separate;
        int count = opt.count > 0 ? opt.count : 100;
        std::vector<OracleReport> reports(static_cast<std::size_t>(count));
        std::vector<std::string> docs(static_cast<std::size_t>(count));
        std::exception_ptr error;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
        for (int i = 0; i < count; ++i) {
            // Exceptions must not escape the parallel region.
            try {
                Instance inst = gen_random(opt.n, opt.c, parse_rational(opt.alpha_cap), kind,
                                           opt.k, opt.seed + static_cast<std::uint64_t>(i));
                docs[static_cast<std::size_t>(i)] = emit_instance(inst);
                reports[static_cast<std::size_t>(i)] = check_theorems(inst);
            } catch (...) {
#ifdef _OPENMP
#pragma omp critical
#endif
                if (!error) error = std::current_exception();
            }
        }
        if (error) std::rethrow_exception(error);
        for (int i = 0; i < count; ++i) {
            if (!reports[static_cast<std::size_t>(i)].all_passed) {
                failed = true;
                failures.push_back(json{{"instance", json::parse(docs[static_cast<std::size_t>(i)])},
                                        {"report", check_report_json(reports[static_cast<std::size_t>(i)])}});
            }
        }
        result = json{{"checked", count}, {"all_passed", !failed}, {"failures", failures}};
    } else {
        Instance inst = parse_instance(read_file(opt.solve_file));
        OracleReport rep = check_theorems(inst);
        failed = !rep.all_passed;
        result = check_report_json(rep);
        if (failed) failures.push_back(json{{"instance", json::parse(emit_instance(inst))},
                                            {"report", check_report_json(rep)}});
    }
    out << result.dump(2) << '\n';
    if (failed && !opt.out_file.empty()) {
        std::ofstream f(opt.out_file);
        f << failures.dump(2) << '\n';
    }
    return failed ? 1 : 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact solver and price-of-fairness analysis for the fair subset sum problem"};
    app.require_subcommand(1);
    Options opt;

    auto* solve = app.add_subcommand("solve", "Solve one instance file");
    solve->add_option("file", opt.solve_file, "canonical instance document")->required();
    solve->add_option("--criterion", opt.criterion)
        ->check(CLI::IsMember({"mm", "ks", "pf", "all"}));
    solve->add_option("--out", opt.out_dir, "directory for report/frontier/pof artifacts");
    solve->add_flag("--serial", opt.serial, "force the serial shared-items kernel");

    auto* sweep = app.add_subcommand("sweep", "Family or random batch sweep, CSV output");
    sweep->add_option("--family", opt.family);
    sweep->add_option("--alpha-grid", opt.alpha_grid, "comma-separated rationals");
    sweep->add_option("--eps-schedule", opt.eps_schedule, "comma-separated rationals");
    sweep->add_option("--params", opt.params, "grid parameter, e.g. h=1..3");
    sweep->add_flag("--random", opt.random);
    sweep->add_option("--alpha-cap", opt.alpha_cap);
    sweep->add_option("--count", opt.count);
    sweep->add_option("--n", opt.n);
    sweep->add_option("--c", opt.c);
    sweep->add_option("--seed", opt.seed);
    sweep->add_option("--kind", opt.kind_str)->check(CLI::IsMember({"separate", "shared"}));
    sweep->add_option("--workers", opt.workers);
    sweep->add_option("--out", opt.out_file);

    auto* gen = app.add_subcommand("gen", "Generate a worst-case family instance");
    gen->add_option("--family", opt.family)->required();
    gen->add_option("--params", opt.params, "D=..,eps=..,alpha=..,r=..,h=..,k=..");
    gen->add_option("--out", opt.out_file);

    auto* check = app.add_subcommand("check", "Oracle theorem checks");
    check->add_option("file", opt.solve_file);
    check->add_flag("--random", opt.random);
    check->add_option("--count", opt.count);
    check->add_option("--n", opt.n);
    check->add_option("--c", opt.c);
    check->add_option("--alpha-cap", opt.alpha_cap);
    check->add_option("--seed", opt.seed);
    check->add_option("--k", opt.k);
    check->add_option("--kind", opt.kind_str)->check(CLI::IsMember({"separate", "shared"}));
    check->add_option("--workers", opt.workers);
    check->add_option("--out", opt.out_file, "counterexample file on failure");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << e.what() << '\n';
        return 2;
    }

    try {
        if (solve->parsed()) return do_solve(opt, out);
        if (sweep->parsed()) return do_sweep(opt, out);
        if (gen->parsed()) return do_gen(opt, out);
        if (check->parsed()) {
            if (!opt.random && opt.solve_file.empty())
                throw std::invalid_argument("check: need an instance file or --random");
            return do_check(opt, out);
        }
    } catch (const std::invalid_argument& e) {
        err << json{{"error", e.what()}, {"kind", "usage"}}.dump() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << json{{"error", e.what()}, {"kind", "failure"}}.dump() << '\n';
        return 1;
    }
    return 2;
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args, out, err);
}

}  // namespace fairsum::cli
