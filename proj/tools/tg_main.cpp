// Workbench CLI: file I/O, subcommand dispatch, and DOT export over the
// transition-graph library. Exit codes: 0 success, 1 property or check
// failure, 2 usage or format error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "tg/classes.hpp"
#include "tg/closure.hpp"
#include "tg/core.hpp"
#include "tg/generators.hpp"
#include "tg/io.hpp"
#include "tg/randgen.hpp"
#include "tg/search.hpp"
#include "tg/transform.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

std::string read_text(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw tg::ParseError("cannot open '" + path + "'", 1);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw tg::Error("cannot write '" + path + "'");
    out << text;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::string join_indices(const std::vector<std::size_t>& v) {
    std::string out;
    for (std::size_t i : v) {
        if (!out.empty()) out += ' ';
        out += std::to_string(i);
    }
    return out;
}

std::set<std::size_t> parse_count_list(const std::string& csv) {
    std::set<std::size_t> counts;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
            throw tg::Error("bad count list '" + csv + "' (expected e.g. 0,2,4)");
        counts.insert(std::stoull(item));
    }
    return counts;
}

std::string format_row(const tg::UpperBoundRow& row) {
    std::string out = row.family;
    out.resize(std::max<std::size_t>(out.size(), 12), ' ');
    auto col = [&](const std::string& s, std::size_t width) {
        std::string c = s;
        c.resize(std::max(c.size(), width), ' ');
        out += c;
    };
    col(std::to_string(row.n), 5);
    col(std::to_string(row.construction_size), 10);
    col(std::to_string(row.accepted_count), 12);
    col(yes_no(row.streaming), 11);
    col(yes_no(row.adaptive), 10);
    out += yes_no(row.write_once);
    return out;
}

struct Options {
    std::string input = "-";
    std::string output = "-";
    std::string bits;
    std::uint64_t budget = tg::Budget{}.max_states;
    std::uint64_t seed = 0;
};

int run(int argc, char** argv) {
    CLI::App app{"transition-graph workbench: build, transform, classify, and "
                 "minimize set-labeled graphs representing Boolean functions"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand
    Options opt;
    app.add_option("--seed", opt.seed, "seed for the random generators")
        ->capture_default_str();

    std::string check_family, mindc_function, witness_out, report_family;
    std::size_t gen_n = 0, gen_k = 0, report_n = 0;
    std::size_t max_edges = 0, label_cap = 3;
    unsigned jobs = 1;
    std::string count_csv;
    bool force_write_once = false;
    std::optional<std::size_t> dot_pairs;
    std::optional<std::size_t> report_k;

    auto add_input = [&](CLI::App* cmd) {
        cmd->add_option("file", opt.input, "input file, or - for stdin");
    };
    auto add_output = [&](CLI::App* cmd) {
        cmd->add_option("-o,--output", opt.output, "output file, default stdout");
    };
    auto add_budget = [&](CLI::App* cmd) {
        cmd->add_option("--budget", opt.budget, "state budget for path searches")
            ->capture_default_str();
    };

    CLI::App* validate_cmd = app.add_subcommand("validate", "check file invariants");
    add_input(validate_cmd);

    CLI::App* eval_cmd = app.add_subcommand("eval", "evaluate a graph on an assignment");
    add_input(eval_cmd);
    eval_cmd->add_option("--input", opt.bits, "assignment bits, index 0 leftmost")
        ->required();
    eval_cmd->add_flag("--write-once", force_write_once,
                       "use the polynomial write-once evaluator");
    add_budget(eval_cmd);

    CLI::App* enum_cmd = app.add_subcommand("enumerate", "accepted family as tt 1");
    add_input(enum_cmd);
    add_output(enum_cmd);
    add_budget(enum_cmd);

    CLI::App* trim_cmd = app.add_subcommand("trim", "drop vertices off all (s,t)-walks");
    add_input(trim_cmd);
    add_output(trim_cmd);
    CLI::App* norm_cmd = app.add_subcommand("normalize", "split labels into singletons");
    add_input(norm_cmd);
    add_output(norm_cmd);
    CLI::App* dag_cmd = app.add_subcommand("to-dag", "unroll cycles into a DAG");
    add_input(dag_cmd);
    add_output(dag_cmd);
    CLI::App* closure_cmd = app.add_subcommand("closure", "close the labeling function");
    add_input(closure_cmd);
    add_output(closure_cmd);

    CLI::App* classify_cmd =
        app.add_subcommand("classify", "streaming / adaptive / write-once flags");
    add_input(classify_cmd);

    CLI::App* check_cmd = app.add_subcommand(
        "check-structure", "verify the closed-label shape facts for a family");
    check_cmd->add_option("--family", check_family, "p3f or clique")->required();
    add_input(check_cmd);
    add_budget(check_cmd);

    CLI::App* gen_cmd = app.add_subcommand("gen", "named constructions");
    gen_cmd->require_subcommand(1);
    CLI::App* gen_xor = gen_cmd->add_subcommand("xor", "parity of n bits");
    gen_xor->add_option("n", gen_n)->required();
    CLI::App* gen_thr = gen_cmd->add_subcommand("thr", "at least k of n bits");
    gen_thr->add_option("n", gen_n)->required();
    gen_thr->add_option("k", gen_k)->required();
    CLI::App* gen_slice = gen_cmd->add_subcommand("slice", "exactly k of n bits");
    gen_slice->add_option("n", gen_n)->required();
    gen_slice->add_option("k", gen_k)->required();
    CLI::App* gen_sym = gen_cmd->add_subcommand("sym", "symmetric function by counts");
    gen_sym->add_option("n", gen_n)->required();
    gen_sym->add_option("counts", count_csv, "accepted 1-counts, e.g. 1,3,5")->required();
    CLI::App* gen_eq = gen_cmd->add_subcommand("eq", "weight-n equality over 4n bits");
    gen_eq->add_option("n", gen_n)->required();
    CLI::App* gen_clique = gen_cmd->add_subcommand("clique", "clique-graph indicator");
    gen_clique->add_option("n", gen_n)->required();
    CLI::App* gen_notp3f =
        gen_cmd->add_subcommand("not-p3f", "complement of the P3-free indicator");
    gen_notp3f->add_option("n", gen_n)->required();
    CLI::App* gen_p3fbp =
        gen_cmd->add_subcommand("p3f-bp", "branching program for the P3-free indicator");
    gen_p3fbp->add_option("n", gen_n)->required();
    CLI::App* gen_cnf = gen_cmd->add_subcommand("from-cnf", "satisfiability reduction");
    gen_cnf->add_option("dimacs", opt.input, "DIMACS CNF file, or - for stdin");
    std::size_t rnd_vertices = 6, rnd_edges = 10, rnd_universe = 4, rnd_card = 2;
    bool rnd_cyclic = false, rnd_monotone = false;
    CLI::App* gen_rtg = gen_cmd->add_subcommand("random-tg", "seeded random graph");
    gen_rtg->add_option("--universe", rnd_universe)->capture_default_str();
    gen_rtg->add_option("--vertices", rnd_vertices)->capture_default_str();
    gen_rtg->add_option("--edges", rnd_edges)->capture_default_str();
    gen_rtg->add_option("--label-cap", rnd_card)->capture_default_str();
    gen_rtg->add_flag("--cyclic", rnd_cyclic, "allow loops and back edges");
    CLI::App* gen_rbp = gen_cmd->add_subcommand("random-bp", "seeded random program");
    gen_rbp->add_option("--vars", rnd_universe)->capture_default_str();
    gen_rbp->add_option("--vertices", rnd_vertices)->capture_default_str();
    gen_rbp->add_option("--edges", rnd_edges)->capture_default_str();
    gen_rbp->add_flag("--monotone", rnd_monotone, "positive literals only");
    CLI::App* gen_rcnf = gen_cmd->add_subcommand("random-cnf", "seeded random formula");
    gen_rcnf->add_option("--vars", rnd_universe)->capture_default_str();
    gen_rcnf->add_option("--clauses", rnd_edges)->capture_default_str();
    for (CLI::App* c : {gen_xor, gen_thr, gen_slice, gen_sym, gen_eq, gen_clique,
                        gen_notp3f, gen_p3fbp, gen_cnf, gen_rtg, gen_rbp, gen_rcnf})
        add_output(c);

    CLI::App* bp_cmd = app.add_subcommand("bp", "branching-program operations");
    bp_cmd->require_subcommand(1);
    CLI::App* bp_eval_cmd = bp_cmd->add_subcommand("eval", "evaluate on an assignment");
    add_input(bp_eval_cmd);
    bp_eval_cmd->add_option("--input", opt.bits, "assignment bits")->required();
    CLI::App* bp_totg_cmd =
        bp_cmd->add_subcommand("to-tg", "simulate a monotone program as a graph");
    add_input(bp_totg_cmd);
    add_output(bp_totg_cmd);
    CLI::App* bp_gen_cmd = bp_cmd->add_subcommand("gen", "named programs");
    bp_gen_cmd->require_subcommand(1);
    CLI::App* bp_gen_p3f = bp_gen_cmd->add_subcommand("p3f", "P3-free indicator");
    bp_gen_p3f->add_option("n", gen_n)->required();
    add_output(bp_gen_p3f);

    CLI::App* dot_cmd = app.add_subcommand("dot", "GraphViz export");
    add_input(dot_cmd);
    add_output(dot_cmd);
    dot_cmd->add_option("--pairs", dot_pairs,
                        "decode labels as pairs over n vertices (universe C(n,2))");

    CLI::App* mindc_cmd =
        app.add_subcommand("mindc", "exhaustive minimal representation size");
    mindc_cmd->add_option("--function", mindc_function, "target family, tt 1 file")
        ->required();
    mindc_cmd->add_option("--max-edges", max_edges, "largest size to try")->required();
    mindc_cmd->add_option("--label-cap", label_cap)->capture_default_str();
    mindc_cmd->add_option("--jobs", jobs, "parallel search workers")->capture_default_str();
    mindc_cmd->add_option("--witness-out", witness_out, "write a witness tg 1 file");

    CLI::App* uniform_cmd = app.add_subcommand(
        "verify-uniform", "check minimal size = family size for every subfamily");
    uniform_cmd->add_option("--function", mindc_function, "family, tt 1 file")->required();
    uniform_cmd->add_option("--max-edges", max_edges,
                            "cap per subfamily (default: the subfamily size)");
    uniform_cmd->add_option("--label-cap", label_cap)->capture_default_str();
    uniform_cmd->add_option("--jobs", jobs)->capture_default_str();

    CLI::App* report_cmd =
        app.add_subcommand("report", "construction size against family size");
    report_cmd->add_option("family", report_family, "xor|thr|slice|eq|clique|all")
        ->required();
    report_cmd->add_option("n", report_n);
    report_cmd->add_option("k", report_k);

    app.parse(argc, argv);

    auto load_graph = [&]() { return tg::parse_transition_graph(read_text(opt.input)); };
    auto emit_graph = [&](const tg::TransitionGraph& g) {
        write_text(opt.output, tg::print_transition_graph(g));
    };

    if (*validate_cmd) {
        std::string text = read_text(opt.input);
        std::vector<std::string> violations;
        switch (tg::sniff_kind(text)) {
            case tg::FileKind::TransitionGraph:
                violations = tg::validate(tg::parse_transition_graph(text));
                break;
            case tg::FileKind::BranchingProgram:
                violations = tg::validate(tg::parse_branching_program(text));
                break;
            case tg::FileKind::TruthTable: {
                tg::AcceptedFamily f = tg::parse_truth_table(text);
                for (const tg::LabelSet& s : f.accepted)
                    if (!s.empty() && s.max_index() >= f.universe_size)
                        violations.push_back("assignment index out of range");
                break;
            }
        }
        for (const std::string& v : violations) std::cout << v << "\n";
        if (violations.empty()) std::cout << "ok\n";
        return violations.empty() ? kExitOk : kExitCheckFailed;
    }
    if (*eval_cmd) {
        tg::TransitionGraph g = load_graph();
        tg::Assignment x = tg::Assignment::from_string(opt.bits);
        bool value = force_write_once ? tg::evaluate_write_once(g, x)
                                      : tg::evaluate(g, x, tg::Budget{opt.budget});
        std::cout << (value ? "1" : "0") << "\n";
        return kExitOk;
    }
    if (*enum_cmd) {
        write_text(opt.output, tg::print_truth_table(tg::enumerate_accepted(
                                   load_graph(), tg::Budget{opt.budget})));
        return kExitOk;
    }
    if (*trim_cmd) {
        emit_graph(tg::trim(load_graph()));
        return kExitOk;
    }
    if (*norm_cmd) {
        emit_graph(tg::normalize_singletons(load_graph()));
        return kExitOk;
    }
    if (*dag_cmd) {
        emit_graph(tg::to_dag(load_graph()));
        return kExitOk;
    }
    if (*closure_cmd) {
        emit_graph(tg::closure(load_graph()));
        return kExitOk;
    }
    if (*classify_cmd) {
        tg::ClassificationReport r = tg::classify(load_graph());
        std::cout << "streaming_identity " << yes_no(r.is_streaming_under_identity_order)
                  << "\n";
        std::cout << "adaptive " << yes_no(r.adaptive_order.has_value()) << "\n";
        if (r.adaptive_order)
            std::cout << "adaptive_order " << join_indices(*r.adaptive_order) << "\n";
        std::cout << "write_once " << yes_no(r.is_write_once) << "\n";
        return kExitOk;
    }
    if (*check_cmd) {
        tg::TransitionGraph g = load_graph();
        if (!tg::is_closed(g)) {
            std::cout << "labeling is not closed; run closure first\n";
            return kExitCheckFailed;
        }
        tg::StructureReport report;
        if (check_family == "p3f")
            report = tg::check_p3free_structure(g, tg::Budget{opt.budget});
        else if (check_family == "clique")
            report = tg::check_clique_structure(g, tg::Budget{opt.budget});
        else
            throw CLI::ValidationError("--family", "expected p3f or clique");
        for (const tg::StructureViolation& v : report.violations) {
            std::cout << "violation: " << v.detail;
            if (!v.path_edges.empty())
                std::cout << " [path edges " << join_indices(v.path_edges) << "]";
            std::cout << "\n";
        }
        std::cout << (report.passed() ? "pass" : "fail") << " (" << report.states_visited
                  << " path states checked)\n";
        return report.passed() ? kExitOk : kExitCheckFailed;
    }
    if (*gen_cmd) {
        tg::Rng rng(opt.seed);
        if (*gen_xor) emit_graph(tg::xor_graph(gen_n));
        if (*gen_thr) emit_graph(tg::threshold_graph(gen_n, gen_k));
        if (*gen_slice) emit_graph(tg::slice_graph(gen_n, gen_k));
        if (*gen_sym) emit_graph(tg::symmetric_graph(gen_n, parse_count_list(count_csv)));
        if (*gen_eq) emit_graph(tg::eq_graph(gen_n));
        if (*gen_clique) emit_graph(tg::clique_indicator_graph(gen_n));
        if (*gen_notp3f) emit_graph(tg::not_p3f_graph(gen_n));
        if (*gen_p3fbp)
            write_text(opt.output,
                       tg::print_branching_program(tg::p3f_branching_program(gen_n)));
        if (*gen_cnf) {
            tg::SatReduction r = tg::sat_reduction(tg::parse_dimacs(read_text(opt.input)));
            write_text(opt.output, tg::print_transition_graph(r.graph) +
                                       "# target " + r.target.to_string() + "\n");
        }
        if (*gen_rtg)
            emit_graph(tg::random_transition_graph(
                rng, {rnd_universe, rnd_vertices, rnd_edges, rnd_card, rnd_cyclic}));
        if (*gen_rbp)
            write_text(opt.output,
                       tg::print_branching_program(tg::random_branching_program(
                           rng, {rnd_universe, rnd_vertices, rnd_edges, rnd_monotone})));
        if (*gen_rcnf)
            write_text(opt.output,
                       tg::print_dimacs(tg::random_cnf(rng, rnd_universe, rnd_edges)));
        return kExitOk;
    }
    if (*bp_cmd) {
        if (*bp_eval_cmd) {
            tg::BranchingProgram b = tg::parse_branching_program(read_text(opt.input));
            bool value = tg::bp_evaluate(b, tg::Assignment::from_string(opt.bits));
            std::cout << (value ? "1" : "0") << "\n";
        }
        if (*bp_totg_cmd) {
            tg::BranchingProgram b = tg::parse_branching_program(read_text(opt.input));
            emit_graph(tg::from_monotone_bp(b));
        }
        if (*bp_gen_p3f)
            write_text(opt.output,
                       tg::print_branching_program(tg::p3f_branching_program(gen_n)));
        return kExitOk;
    }
    if (*dot_cmd) {
        std::string text = read_text(opt.input);
        switch (tg::sniff_kind(text)) {
            case tg::FileKind::TransitionGraph:
                write_text(opt.output,
                           tg::export_dot(tg::parse_transition_graph(text), dot_pairs));
                break;
            case tg::FileKind::BranchingProgram:
                write_text(opt.output, tg::export_dot(tg::parse_branching_program(text)));
                break;
            case tg::FileKind::TruthTable:
                throw tg::Error("dot export needs a tg 1 or nbp 1 file");
        }
        return kExitOk;
    }
    if (*mindc_cmd) {
        tg::AcceptedFamily target = tg::parse_truth_table(read_text(mindc_function));
        tg::MinDcOptions opts;
        opts.label_cap = label_cap;
        opts.jobs = jobs;
        tg::MinSearchResult r = tg::min_dc(target, max_edges, opts);
        std::cout << "family_size " << target.accepted.size() << "\n";
        std::cout << "minimal_size "
                  << (r.minimal_size ? std::to_string(*r.minimal_size) : "unknown") << "\n";
        std::cout << "exhausted_up_to " << r.exhausted_up_to << "\n";
        std::cout << "label_cap " << r.label_cap << "\n";
        std::cout << "budget_exhausted " << yes_no(r.budget_exhausted) << "\n";
        std::cout << "candidates " << r.stats.candidates << "\n";
        std::cout << "pruned " << r.stats.pruned << "\n";
        if (!witness_out.empty() && r.witness)
            write_text(witness_out, tg::print_transition_graph(*r.witness));
        return r.minimal_size ? kExitOk : kExitCheckFailed;
    }
    if (*uniform_cmd) {
        tg::AcceptedFamily f = tg::parse_truth_table(read_text(mindc_function));
        if (!uniform_cmd->count("--max-edges")) max_edges = f.accepted.size();
        tg::MinDcOptions opts;
        opts.label_cap = label_cap;
        opts.jobs = jobs;
        tg::UniformHardnessReport report = tg::verify_uniform_hardness(f, max_edges, opts);
        std::size_t verified = 0;
        for (const tg::SubfamilyResult& sub : report.subfamilies) {
            if (sub.verified) ++verified;
            if (!sub.hard)
                std::cout << "not hard: subfamily of size " << sub.family_size
                          << " (member mask " << sub.member_mask << ") has minimal size "
                          << (sub.minimal_size ? std::to_string(*sub.minimal_size)
                                               : "unknown")
                          << "\n";
        }
        std::cout << "subfamilies " << report.subfamilies.size() << "\n";
        std::cout << "verified " << verified << "\n";
        std::cout << "uniformly_hard " << yes_no(report.uniformly_hard) << "\n";
        return report.uniformly_hard ? kExitOk : kExitCheckFailed;
    }
    if (*report_cmd) {
        std::cout << "family      n    size      accepted    streaming  adaptive  "
                     "write_once\n";
        if (report_family == "all") {
            std::cout << format_row(tg::upper_bound_report("xor", 10)) << "\n";
            std::cout << format_row(tg::upper_bound_report("thr", 10, 5)) << "\n";
            std::cout << format_row(tg::upper_bound_report("slice", 10, 5)) << "\n";
            std::cout << format_row(tg::upper_bound_report("eq", 8)) << "\n";
            std::cout << format_row(tg::upper_bound_report("clique", 4)) << "\n";
        } else {
            if (!report_cmd->count("n"))
                throw CLI::ValidationError("report", "family reports need n");
            std::cout << format_row(tg::upper_bound_report(report_family, report_n,
                                                           report_k))
                      << "\n";
        }
        return kExitOk;
    }
    return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const CLI::ParseError& e) {
        CLI::App dummy;
        int code = dummy.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    } catch (const tg::ParseError& e) {
        std::cerr << "format error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const tg::BudgetExceeded& e) {
        std::cerr << "budget error: " << e.what() << "\n";
        return kExitCheckFailed;
    } catch (const tg::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailed;
    }
}
