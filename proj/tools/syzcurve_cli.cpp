// Command-line front end: classify a curve, add or delete a line with full
// case analysis, sweep the built-in families, or run the conjecture scans.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "syzcurve/syzcurve.hpp"

namespace {

using nlohmann::ordered_json;
using namespace syzcurve;

struct CommonOptions {
    std::string format = "json";  // json | csv | table
    std::optional<long> bound;
    std::optional<long> kmax;
    unsigned jobs = 0;  // 0 = all hardware threads
    bool timing = false;
};

void add_common(CLI::App* cmd, CommonOptions& opt, bool with_tables = true) {
    cmd->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "table"}))
        ->capture_default_str();
    if (with_tables) {
        cmd->add_option("--bound", opt.bound, "initial degree bound for the generator scan");
        cmd->add_option("--kmax", opt.kmax, "extend the dimension tables to k = kmax");
    }
    cmd->add_option("--jobs", opt.jobs, "worker thread limit (0 = hardware)");
    cmd->add_flag("--timing", opt.timing, "append wall-clock timing to the output");
}

ordered_json engine_header() {
    return ordered_json{{"name", engine_name}, {"version", engine_version}};
}

std::string join_longs(const std::vector<long>& v, const char* sep = " ") {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << sep;
        os << v[i];
    }
    return os.str();
}

ordered_json document_json(const AnalysisDocument& doc) {
    ordered_json j;
    j["input"] = doc.input;
    j["degree"] = doc.degree;
    j["classification"] = doc.cl.kind;
    j["exponents"] = doc.cl.exponents;
    if (doc.cl.level) j["level"] = *doc.cl.level;
    j["m"] = doc.cl.m;
    j["mdr"] = doc.cl.mdr;
    j["complete"] = doc.cl.complete;
    j["scan_bound"] = doc.cl.bound;
    j["tau"] = doc.tau;
    j["nu"] = doc.nu;
    if (doc.sigma)
        j["sigma"] = *doc.sigma;
    else
        j["sigma"] = nullptr;
    j["T"] = doc.T;
    j["kmax"] = doc.kmax;
    j["tables"] = ordered_json{
        {"dims_M", doc.dims_M}, {"dims_N", doc.dims_N}, {"dims_D0", doc.dims_D0}};
    return j;
}

void document_csv(std::ostream& os, const AnalysisDocument& doc) {
    os << "field,value\n";
    os << "input," << doc.input << "\n";
    os << "degree," << doc.degree << "\n";
    os << "classification," << doc.cl.kind << "\n";
    os << "exponents," << join_longs(doc.cl.exponents) << "\n";
    if (doc.cl.level) os << "level," << *doc.cl.level << "\n";
    os << "m," << doc.cl.m << "\n";
    os << "mdr," << doc.cl.mdr << "\n";
    os << "complete," << (doc.cl.complete ? "true" : "false") << "\n";
    os << "scan_bound," << doc.cl.bound << "\n";
    os << "tau," << doc.tau << "\n";
    os << "nu," << doc.nu << "\n";
    os << "sigma," << (doc.sigma ? std::to_string(*doc.sigma) : "") << "\n";
    os << "T," << doc.T << "\n";
    os << "\nk,dim_M,dim_N,dim_D0\n";
    for (long k = 0; k <= doc.kmax; ++k) {
        const auto i = static_cast<std::size_t>(k);
        os << k << "," << doc.dims_M[i] << "," << doc.dims_N[i] << "," << doc.dims_D0[i] << "\n";
    }
}

void document_table(std::ostream& os, const AnalysisDocument& doc) {
    os << "curve: " << doc.input << "\n";
    os << "degree: " << doc.degree << "\n";
    os << "classification: " << doc.cl.kind << " (exponents " << join_longs(doc.cl.exponents, ", ")
       << ")\n";
    if (doc.cl.level) os << "level: " << *doc.cl.level << "\n";
    os << "mdr: " << doc.cl.mdr << "   tau: " << doc.tau << "   nu: " << doc.nu << "   sigma: "
       << (doc.sigma ? std::to_string(*doc.sigma) : "-") << "\n";
    os << "T: " << doc.T << "   scan bound: " << doc.cl.bound
       << (doc.cl.complete ? " (complete)" : " (incomplete)") << "\n";
    os << "k      : ";
    for (long k = 0; k <= doc.kmax; ++k) os << k << " ";
    os << "\ndim M  : " << join_longs(doc.dims_M) << "\ndim N  : " << join_longs(doc.dims_N)
       << "\ndim D0 : " << join_longs(doc.dims_D0) << "\n";
}

ordered_json case_json(int case_id, const std::vector<long>& pred_exps,
                       const std::string& pred_kind, const std::vector<long>& obs_exps,
                       const std::string& obs_kind, bool exps_ok, bool kind_ok, bool r_ok) {
    ordered_json j;
    j["case"] = case_id;
    j["predicted_kind"] = pred_kind;
    j["predicted_exponents"] = pred_exps;
    j["observed_kind"] = obs_kind;
    j["observed_exponents"] = obs_exps;
    j["exponents_ok"] = exps_ok;
    j["kind_ok"] = kind_ok;
    j["r_formula_ok"] = r_ok;
    j["consistent"] = exps_ok && kind_ok && r_ok;
    return j;
}

ordered_json scan_json(const SequenceScanReport& s) {
    ordered_json j;
    j["identity"] = s.identity;
    j["k_max"] = s.k_hi;
    j["all_hold"] = s.all_hold;
    j["failing_k"] = s.failing_k;
    return j;
}

ordered_json bicond_json(const BiconditionalReport& b) {
    ordered_json j;
    j["direction"] = b.direction;
    j["premise"] = b.premise;
    if (b.premise) {
        j["other_curve_free"] = b.lhs;
        j["criterion_met"] = b.rhs;
        j["threshold"] = b.threshold;
    }
    j["holds"] = b.holds;
    return j;
}

ordered_json pair_json(const PairDocument& doc) {
    ordered_json j;
    j["engine"] = engine_header();
    j["direction"] = doc.direction;
    j["line"] = doc.line;
    j["r"] = doc.r;
    j["epsilon"] = doc.eps;
    if (!doc.notice.empty()) j["notice"] = doc.notice;
    j["curve"] = document_json(doc.curve);
    j["union"] = document_json(doc.curve_union);
    if (doc.addition) {
        const auto& a = *doc.addition;
        j["addition_case"] = case_json(a.case_id, a.predicted_exponents, a.predicted_kind,
                                       a.observed_exponents, a.observed_kind, a.exponents_ok,
                                       a.kind_ok, a.r_formula_ok);
    }
    if (doc.deletion) {
        const auto& d = *doc.deletion;
        j["deletion_case"] = case_json(d.case_id, d.predicted_exponents, d.predicted_kind,
                                       d.observed_exponents, d.observed_kind, d.exponents_ok,
                                       d.kind_ok, d.r_formula_ok);
    }
    ordered_json scans = ordered_json::array();
    if (doc.union_scan) scans.push_back(scan_json(*doc.union_scan));
    if (doc.curve_scan) scans.push_back(scan_json(*doc.curve_scan));
    j["dimension_scans"] = scans;
    j["biconditionals"] =
        ordered_json::array({bicond_json(doc.bicond_add), bicond_json(doc.bicond_del)});
    j["mdr_step"] = ordered_json{{"curve", doc.mdr_step.mdr_curve},
                                 {"union", doc.mdr_step.mdr_union},
                                 {"holds", doc.mdr_step.holds}};
    return j;
}

void pair_csv(std::ostream& os, const PairDocument& doc) {
    os << "field,value\n";
    os << "direction," << doc.direction << "\n";
    os << "line," << doc.line << "\n";
    os << "r," << doc.r << "\n";
    os << "epsilon," << doc.eps << "\n";
    if (!doc.notice.empty()) os << "notice," << doc.notice << "\n";
    os << "curve," << doc.curve.input << "\n";
    os << "curve_classification," << doc.curve.cl.kind << "\n";
    os << "curve_exponents," << join_longs(doc.curve.cl.exponents) << "\n";
    os << "curve_tau," << doc.curve.tau << "\n";
    os << "union," << doc.curve_union.input << "\n";
    os << "union_classification," << doc.curve_union.cl.kind << "\n";
    os << "union_exponents," << join_longs(doc.curve_union.cl.exponents) << "\n";
    os << "union_tau," << doc.curve_union.tau << "\n";
    if (doc.addition) {
        os << "addition_case," << doc.addition->case_id << "\n";
        os << "addition_consistent," << (doc.addition->ok() ? "true" : "false") << "\n";
    }
    if (doc.deletion) {
        os << "deletion_case," << doc.deletion->case_id << "\n";
        os << "deletion_consistent," << (doc.deletion->ok() ? "true" : "false") << "\n";
    }
    if (doc.union_scan)
        os << "union_scan_holds," << (doc.union_scan->all_hold ? "true" : "false") << "\n";
    if (doc.curve_scan)
        os << "curve_scan_holds," << (doc.curve_scan->all_hold ? "true" : "false") << "\n";
    os << "biconditional_addition," << (doc.bicond_add.holds ? "true" : "false") << "\n";
    os << "biconditional_deletion," << (doc.bicond_del.holds ? "true" : "false") << "\n";
    os << "mdr_step_holds," << (doc.mdr_step.holds ? "true" : "false") << "\n";
}

void pair_table(std::ostream& os, const PairDocument& doc) {
    os << doc.direction << " with L: " << doc.line << "\n";
    os << "r: " << doc.r << "   epsilon: " << doc.eps << "\n";
    if (!doc.notice.empty()) os << "note: " << doc.notice << "\n";
    os << "\n--- curve C ---\n";
    document_table(os, doc.curve);
    os << "\n--- union C u L ---\n";
    document_table(os, doc.curve_union);
    auto show_case = [&os](const char* name, int case_id, const std::vector<long>& pred,
                           const std::string& pred_kind, bool ok) {
        os << name << ": case " << case_id << " -> " << pred_kind << " (" << join_longs(pred, ", ")
           << ")" << (ok ? " [consistent]" : " [MISMATCH]") << "\n";
    };
    os << "\n";
    if (doc.addition)
        show_case("addition", doc.addition->case_id, doc.addition->predicted_exponents,
                  doc.addition->predicted_kind, doc.addition->ok());
    if (doc.deletion)
        show_case("deletion", doc.deletion->case_id, doc.deletion->predicted_exponents,
                  doc.deletion->predicted_kind, doc.deletion->ok());
    if (doc.union_scan)
        os << doc.union_scan->identity << ": "
           << (doc.union_scan->all_hold ? "holds" : "FAILS") << " for k <= "
           << doc.union_scan->k_hi << "\n";
    if (doc.curve_scan)
        os << doc.curve_scan->identity << ": "
           << (doc.curve_scan->all_hold ? "holds" : "FAILS") << " for k <= "
           << doc.curve_scan->k_hi << "\n";
    os << "addition biconditional: " << (doc.bicond_add.holds ? "holds" : "FAILS")
       << (doc.bicond_add.premise ? "" : " (vacuous)") << "\n";
    os << "deletion biconditional: " << (doc.bicond_del.holds ? "holds" : "FAILS")
       << (doc.bicond_del.premise ? "" : " (vacuous)") << "\n";
    os << "mdr step: " << doc.mdr_step.mdr_curve << " -> " << doc.mdr_step.mdr_union
       << (doc.mdr_step.holds ? " [within one]" : " [VIOLATION]") << "\n";
}

ordered_json conjecture_json(const ConjectureScanResult& r) {
    ordered_json j;
    j["pairs"] = r.pairs;
    j["points_checked"] = r.checked;
    j["conj1_violations"] = r.conj1_violations;
    j["conj2_violations"] = r.conj2_violations;
    j["mu_identity_failures"] = r.mu_identity_failures;
    j["skipped_points"] = r.skipped_points;
    j["violations"] = r.violation_notes;
    return j;
}

void print_json(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

long timed_ms(const std::chrono::steady_clock::time_point& start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                                 start)
        .count();
}

int run(int argc, char** argv) {
    CLI::App app{"exact Jacobian syzygy analysis of reduced plane curves"};
    app.require_subcommand(1);

    std::string poly_arg, line_arg, family_arg;
    long from = 3, to = 5;
    std::uint64_t seed = 1;
    long count = 500;
    CommonOptions opt;

    CLI::App* analyze = app.add_subcommand("analyze", "classify one curve");
    analyze->add_option("poly", poly_arg, "defining polynomial in x, y, z")->required();
    add_common(analyze, opt);

    CLI::App* addl = app.add_subcommand("add-line", "analyze C and C u L");
    addl->add_option("poly", poly_arg, "defining polynomial of C")->required();
    addl->add_option("line", line_arg, "linear form L")->required();
    add_common(addl, opt);

    CLI::App* dell = app.add_subcommand("delete-line", "analyze C' and C' \\ L");
    dell->add_option("poly", poly_arg, "defining polynomial of C', divisible by L")->required();
    dell->add_option("line", line_arg, "linear form L")->required();
    add_common(dell, opt);

    CLI::App* scan = app.add_subcommand("scan", "sweep a built-in family");
    scan->add_option("family", family_arg, "conic-line | cuspidal | free-rkC")->required();
    scan->add_option("--from", from, "first parameter value")->capture_default_str();
    scan->add_option("--to", to, "last parameter value")->capture_default_str();
    add_common(scan, opt, false);

    CLI::App* conj = app.add_subcommand("conjectures", "scan the corpus and random branch pairs");
    conj->add_option("--seed", seed, "seed for the random branch pairs")->capture_default_str();
    conj->add_option("--count", count, "number of random branch pairs")->capture_default_str();
    add_common(conj, opt, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    if (opt.jobs > 0) set_job_limit(opt.jobs);
    const auto start = std::chrono::steady_clock::now();
    const AnalyzeOptions aopt{opt.bound, opt.kmax};

    if (analyze->parsed()) {
        AnalysisDocument doc = analyze_curve(parse_curve(poly_arg), aopt);
        if (opt.format == "json") {
            ordered_json j;
            j["engine"] = engine_header();
            const ordered_json body = document_json(doc);
            for (const auto& [k, v] : body.items()) j[k] = v;
            if (opt.timing) j["timing_ms"] = timed_ms(start);
            print_json(j);
        } else if (opt.format == "csv") {
            document_csv(std::cout, doc);
        } else {
            document_table(std::cout, doc);
            if (opt.timing) std::cout << "timing: " << timed_ms(start) << " ms\n";
        }
        return 0;
    }

    if (addl->parsed() || dell->parsed()) {
        const bool adding = addl->parsed();
        const HomogeneousPoly f = parse_curve(poly_arg);
        const LinearForm ell = parse_line(line_arg);
        CurveLinePair pair = adding ? make_union_pair(f, ell) : delete_line(f, ell);
        PairDocument doc = analyze_pair(std::move(pair), adding ? "add-line" : "delete-line",
                                        aopt);
        if (opt.format == "json") {
            ordered_json j = pair_json(doc);
            if (opt.timing) j["timing_ms"] = timed_ms(start);
            print_json(j);
        } else if (opt.format == "csv") {
            pair_csv(std::cout, doc);
        } else {
            pair_table(std::cout, doc);
            if (opt.timing) std::cout << "timing: " << timed_ms(start) << " ms\n";
        }
        return 0;
    }

    if (scan->parsed()) {
        const auto rows = family_scan(family_arg, from, to);
        if (opt.format == "json") {
            ordered_json j;
            j["engine"] = engine_header();
            j["family"] = family_arg;
            ordered_json rj = ordered_json::array();
            for (const auto& row : rows) {
                ordered_json r;
                r["id"] = row.id;
                r["param"] = row.param;
                r["degree"] = row.degree;
                r["classification"] = row.kind;
                r["exponents"] = row.exponents;
                r["tau"] = row.tau;
                if (row.mu_at_point) r["mu_at_point"] = *row.mu_at_point;
                if (row.tau_at_point) r["tau_at_point"] = *row.tau_at_point;
                rj.push_back(std::move(r));
            }
            j["rows"] = std::move(rj);
            if (opt.timing) j["timing_ms"] = timed_ms(start);
            print_json(j);
        } else {
            std::cout << "id,param,degree,classification,exponents,tau,mu_at_point,tau_at_point\n";
            for (const auto& row : rows) {
                std::cout << row.id << "," << row.param << "," << row.degree << "," << row.kind
                          << "," << join_longs(row.exponents) << "," << row.tau << ","
                          << (row.mu_at_point ? std::to_string(*row.mu_at_point) : "") << ","
                          << (row.tau_at_point ? std::to_string(*row.tau_at_point) : "") << "\n";
            }
            if (opt.timing) std::cout << "# timing_ms," << timed_ms(start) << "\n";
        }
        return 0;
    }

    // conjectures
    const ConjectureScanResult corpus = conjecture_scan_corpus();
    const ConjectureScanResult random = conjecture_scan_random({seed, count, 12});
    if (opt.format == "json") {
        ordered_json j;
        j["engine"] = engine_header();
        j["corpus"] = conjecture_json(corpus);
        ordered_json rj = conjecture_json(random);
        rj["seed"] = seed;
        j["random"] = std::move(rj);
        if (opt.timing) j["timing_ms"] = timed_ms(start);
        print_json(j);
    } else {
        auto line = [](const char* name, const ConjectureScanResult& r) {
            std::cout << name << ": pairs " << r.pairs << ", points " << r.checked
                      << ", defect-drop violations " << r.conj1_violations
                      << ", Tjurina-bound violations " << r.conj2_violations
                      << ", Milnor-additivity failures " << r.mu_identity_failures
                      << ", skipped points " << r.skipped_points << "\n";
        };
        line("corpus", corpus);
        line("random", random);
        for (const auto& note : corpus.violation_notes) std::cout << "  corpus " << note << "\n";
        for (const auto& note : random.violation_notes) std::cout << "  random " << note << "\n";
        if (opt.timing) std::cout << "timing: " << timed_ms(start) << " ms\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const BadParameters& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const NotHomogeneous& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const NotReduced& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const LineIsComponent& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 5;
    } catch (const NotDivisible& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 5;
    } catch (const ZeroRestriction& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 5;
    } catch (const UnknownFamily& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 6;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
