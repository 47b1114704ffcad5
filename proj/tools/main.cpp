#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "ccs/coordination.hpp"
#include "ccs/io.hpp"
#include "ccs/report.hpp"

namespace {

using nlohmann::json;

constexpr int kExitHolds = 0;
constexpr int kExitFails = 1;
constexpr int kExitUsage = 2;

struct CommonOpts {
    std::string problem;
    bool machine = false;
};

ccs::LoadedProblem load(const CommonOpts& opts) {
    return ccs::load_problem(std::filesystem::path(opts.problem));
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

int run_check_cd(const CommonOpts& opts) {
    ccs::LoadedProblem lp = load(opts);
    ccs::CdResult on_spec =
        ccs::check_cd(lp.spec, lp.g1.alphabet(), lp.g2.alphabet(), lp.sigma_k);
    ccs::CdResult on_closure = ccs::check_cd(ccs::prefix_closure(lp.spec), lp.g1.alphabet(),
                                             lp.g2.alphabet(), lp.sigma_k);
    bool holds = on_spec.holds && on_closure.holds;
    if (opts.machine) {
        json out;
        out["specification"] = ccs::cd_result_to_json(on_spec, *lp.table);
        out["closure"] = ccs::cd_result_to_json(on_closure, *lp.table);
        out["holds"] = holds;
        std::cout << out.dump(2) << '\n';
    } else {
        auto line = [&](const char* what, const ccs::CdResult& r) {
            std::cout << what << ": " << (r.holds ? "conditionally decomposable" : "NOT decomposable");
            if (r.counterexample)
                std::cout << " (counterexample: " << ccs::format_word(*lp.table, *r.counterexample)
                          << ")";
            std::cout << '\n';
        };
        line("specification", on_spec);
        line("prefix-closure", on_closure);
    }
    return holds ? kExitHolds : kExitFails;
}

int run_extend_sigma_k(const CommonOpts& opts) {
    ccs::LoadedProblem lp = load(opts);
    ccs::Generator closure = ccs::prefix_closure(lp.spec);
    ccs::EventSet sk = lp.sigma_k;
    for (;;) {
        if (!ccs::check_cd(lp.spec, lp.g1.alphabet(), lp.g2.alphabet(), sk).holds) {
            sk = ccs::extend_sigma_k(lp.spec, lp.g1.alphabet(), lp.g2.alphabet(), sk);
            continue;
        }
        if (!ccs::check_cd(closure, lp.g1.alphabet(), lp.g2.alphabet(), sk).holds) {
            sk = ccs::extend_sigma_k(closure, lp.g1.alphabet(), lp.g2.alphabet(), sk);
            continue;
        }
        break;
    }
    if (opts.machine) {
        json names = json::array();
        for (ccs::EventId e : sk) names.push_back(lp.table->name(e));
        json out;
        out["sigma_k"] = std::move(names);
        std::cout << out.dump(2) << '\n';
    } else {
        std::cout << "sigma_k=";
        bool first = true;
        for (ccs::EventId e : sk) {
            if (!first) std::cout << ',';
            std::cout << lp.table->name(e);
            first = false;
        }
        std::cout << '\n';
    }
    return kExitHolds;
}

int run_coordinator(const CommonOpts& opts, const std::string& output) {
    ccs::LoadedProblem lp = load(opts);
    ccs::Generator gk = lp.coordinator ? *lp.coordinator
                                       : ccs::build_coordinator(lp.g1, lp.g2, lp.sigma_k);
    std::string text =
        opts.machine ? ccs::generator_to_json(gk).dump(2) + "\n" : ccs::print_generator(gk);
    if (output.empty())
        std::cout << text;
    else
        write_file(output, text);
    return kExitHolds;
}

int run_synthesis(const CommonOpts& opts, const std::string& report_path, bool with_observation) {
    ccs::LoadedProblem lp = load(opts);
    ccs::CoordinationProblem p = ccs::to_problem(lp);
    ccs::SynthesisReport r = with_observation
                                 ? ccs::synth_supccn(p, ccs::observation_model(lp))
                                 : ccs::synth_supcc(p);
    std::cout << ccs::emit_report(r, *lp.table,
                                  opts.machine ? ccs::ReportMode::machine
                                               : ccs::ReportMode::human);
    if (!report_path.empty())
        write_file(report_path, ccs::emit_report(r, *lp.table, ccs::ReportMode::machine));
    return r.justified() ? kExitHolds : kExitFails;
}

int run_check_conditions(const CommonOpts& opts, const std::vector<std::string>& which) {
    ccs::LoadedProblem lp = load(opts);
    ccs::CoordinationProblem p = ccs::to_problem(lp);
    ccs::ObservationModel obs = ccs::observation_model(lp);

    auto wanted = [&](const std::string& name) {
        if (which.empty()) return true;
        for (const auto& w : which)
            if (w == "all" || w == name) return true;
        return false;
    };

    bool all_hold = true;
    json machine;
    std::ostringstream human;

    auto render_cond = [&](const char* name, const ccs::CondCheck& c) {
        all_hold = all_hold && c.holds;
        machine[name] = ccs::cond_check_to_json(c, *lp.table);
        human << "  " << (c.holds ? "[pass] " : "[FAIL] ") << name;
        if (const ccs::Verdict* f = c.first_failure()) human << " (fails at level " << f->level << ")";
        human << '\n';
    };
    if (wanted("cond-controllable")) render_cond("cond-controllable", ccs::is_cond_controllable(p));
    if (wanted("cond-closed")) render_cond("cond-closed", ccs::is_cond_closed(p));
    if (wanted("cond-observable"))
        render_cond("cond-observable", ccs::is_cond_observable(p, obs));
    if (wanted("cond-normal")) render_cond("cond-normal", ccs::is_cond_normal(p, obs));

    bool needs_synth = wanted("observer") || wanted("occ") || wanted("lcc") ||
                       wanted("nonconflicting") || wanted("coordinator-inclusion");
    if (needs_synth) {
        ccs::SynthesisReport r = ccs::synth_supcc(p);
        json verdicts = json::array();
        for (const ccs::Verdict& v : r.verdicts) {
            if (!wanted(v.name)) continue;
            all_hold = all_hold && v.holds;
            verdicts.push_back(ccs::verdict_to_json(*lp.table, v));
            human << "  " << (v.holds ? "[pass] " : "[FAIL] ") << v.name;
            if (!v.level.empty()) human << " [" << v.level << "]";
            human << '\n';
        }
        machine["verdicts"] = std::move(verdicts);
    }
    machine["holds"] = all_hold;
    if (opts.machine)
        std::cout << machine.dump(2) << '\n';
    else
        std::cout << "condition checks:\n" << human.str()
                  << (all_hold ? "all hold\n" : "some fail\n");
    return all_hold ? kExitHolds : kExitFails;
}

int run_verify(const CommonOpts& opts, const std::string& s1_path, const std::string& s2_path,
               const std::string& sk_path, const std::string& target_path) {
    ccs::LoadedProblem lp = load(opts);
    ccs::CoordinationProblem p = ccs::to_problem(lp);
    ccs::Generator s1 = ccs::load_generator_file(s1_path, lp.table);
    ccs::Generator s2 = ccs::load_generator_file(s2_path, lp.table);
    ccs::Generator sk = ccs::load_generator_file(sk_path, lp.table);
    std::optional<ccs::Generator> target;
    if (!target_path.empty()) target = ccs::load_generator_file(target_path, lp.table);
    ccs::ClosedLoopReport r = ccs::verify_closed_loop(p, s1, s2, sk, std::move(target));
    std::cout << ccs::emit_closed_loop(r, *lp.table,
                                       opts.machine ? ccs::ReportMode::machine
                                                    : ccs::ReportMode::human);
    return r.all() ? kExitHolds : kExitFails;
}

ccs::LanguageKind parse_kind(const std::string& kind) {
    if (kind == "marked") return ccs::LanguageKind::marked;
    if (kind == "generated") return ccs::LanguageKind::generated;
    throw std::invalid_argument("kind must be marked or generated");
}

int run_lang_equal(const std::string& a_path, const std::string& b_path, const std::string& kind,
                   bool machine, bool inclusion) {
    auto table = std::make_shared<ccs::EventTable>();
    ccs::Generator a = ccs::load_generator_file(a_path, table);
    ccs::Generator b = ccs::load_generator_file(b_path, table);
    ccs::LanguageKind k = parse_kind(kind);
    bool holds;
    std::optional<ccs::Word> witness;
    if (inclusion) {
        witness = ccs::word_in_difference(b, a, k);
        holds = !witness.has_value();
    } else {
        holds = ccs::lang_equal(a, b, k);
        if (!holds) {
            witness = ccs::word_in_difference(a, b, k);
            if (!witness) witness = ccs::word_in_difference(b, a, k);
        }
    }
    if (machine) {
        json out;
        out["holds"] = holds;
        out["witness"] = nullptr;
        if (witness) {
            json w = json::array();
            for (ccs::EventId e : *witness) w.push_back(table->name(e));
            out["witness"] = std::move(w);
        }
        std::cout << out.dump(2) << '\n';
    } else {
        std::cout << (inclusion ? "includes: " : "equal: ") << (holds ? "true" : "false");
        if (witness) std::cout << " (witness: " << ccs::format_word(*table, *witness) << ")";
        std::cout << '\n';
    }
    return holds ? kExitHolds : kExitFails;
}

int run_lang_enumerate(const std::string& path, std::size_t max_len, const std::string& kind,
                       bool machine) {
    auto table = std::make_shared<ccs::EventTable>();
    ccs::Generator g = ccs::load_generator_file(path, table);
    auto words = ccs::enumerate_words(g, max_len, parse_kind(kind));
    if (machine) {
        json out = json::array();
        for (const ccs::Word& w : words) {
            json jw = json::array();
            for (ccs::EventId e : w) jw.push_back(table->name(e));
            out.push_back(std::move(jw));
        }
        std::cout << out.dump(2) << '\n';
    } else {
        for (const ccs::Word& w : words) std::cout << ccs::format_word(*table, w) << '\n';
    }
    return kExitHolds;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"coordination control synthesis for modular discrete-event systems"};
    app.require_subcommand(1);

    CommonOpts opts;
    std::string output, report_path, s1_path, s2_path, sk_path, target_path;
    std::vector<std::string> which;
    std::string a_path, b_path, gen_path, kind = "marked";
    std::size_t max_len = 8;

    auto add_common = [&](CLI::App* cmd, bool with_problem = true) {
        if (with_problem)
            cmd->add_option("--problem", opts.problem, "problem manifest file")->required();
        cmd->add_flag("--json", opts.machine, "machine-readable JSON output");
    };

    CLI::App* check_cd = app.add_subcommand(
        "check-cd", "conditional decomposability of the specification and its closure");
    add_common(check_cd);

    CLI::App* extend = app.add_subcommand(
        "extend-sigma-k", "extend the coordinator alphabet until decomposability holds");
    add_common(extend);

    CLI::App* coordinator =
        app.add_subcommand("coordinator", "build and print the coordinator generator");
    add_common(coordinator);
    coordinator->add_option("-o,--output", output, "write to file instead of stdout");

    CLI::App* supcc = app.add_subcommand(
        "supcc", "distributed supremal conditionally controllable sublanguage");
    add_common(supcc);
    supcc->add_option("--report", report_path, "also write the machine report to this file");

    CLI::App* supccn = app.add_subcommand(
        "supccn",
        "distributed supremal conditionally controllable and conditionally normal sublanguage");
    add_common(supccn);
    supccn->add_option("--report", report_path, "also write the machine report to this file");

    CLI::App* conditions =
        app.add_subcommand("check-conditions", "evaluate the sufficient-condition checks");
    add_common(conditions);
    conditions->add_option("--which", which,
                           "subset of: cond-controllable cond-closed cond-observable "
                           "cond-normal observer occ lcc nonconflicting "
                           "coordinator-inclusion all");

    CLI::App* verify = app.add_subcommand("verify", "closed-loop verification of supervisors");
    add_common(verify);
    verify->add_option("--s1", s1_path, "subsystem-1 supervisor file")->required();
    verify->add_option("--s2", s2_path, "subsystem-2 supervisor file")->required();
    verify->add_option("--sk", sk_path, "coordinator supervisor file")->required();
    verify->add_option("--target", target_path, "target language (defaults to the specification)");

    CLI::App* lang = app.add_subcommand("lang", "language queries on generator files");
    lang->require_subcommand(1);
    CLI::App* lang_equal = lang->add_subcommand("equal", "language equality");
    CLI::App* lang_includes = lang->add_subcommand("includes", "language of a includes b");
    for (CLI::App* cmd : {lang_equal, lang_includes}) {
        cmd->add_option("--a", a_path, "first generator file")->required();
        cmd->add_option("--b", b_path, "second generator file")->required();
        cmd->add_option("--kind", kind, "marked (default) or generated");
        cmd->add_flag("--json", opts.machine, "machine-readable JSON output");
    }
    CLI::App* lang_enum = lang->add_subcommand("enumerate", "list words up to a length bound");
    lang_enum->add_option("--gen", gen_path, "generator file")->required();
    lang_enum->add_option("--max-len", max_len, "length bound (default 8)");
    lang_enum->add_option("--kind", kind, "marked (default) or generated");
    lang_enum->add_flag("--json", opts.machine, "machine-readable JSON output");

    CLI11_PARSE(app, argc, argv);

    try {
        if (check_cd->parsed()) return run_check_cd(opts);
        if (extend->parsed()) return run_extend_sigma_k(opts);
        if (coordinator->parsed()) return run_coordinator(opts, output);
        if (supcc->parsed()) return run_synthesis(opts, report_path, false);
        if (supccn->parsed()) return run_synthesis(opts, report_path, true);
        if (conditions->parsed()) return run_check_conditions(opts, which);
        if (verify->parsed())
            return run_verify(opts, s1_path, s2_path, sk_path, target_path);
        if (lang->parsed()) {
            if (lang_equal->parsed()) return run_lang_equal(a_path, b_path, kind, opts.machine, false);
            if (lang_includes->parsed())
                return run_lang_equal(a_path, b_path, kind, opts.machine, true);
            if (lang_enum->parsed())
                return run_lang_enumerate(gen_path, max_len, kind, opts.machine);
        }
    } catch (const ccs::ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ccs::ProblemError& e) {
        std::cerr << "problem invariant violated: " << e.what() << '\n';
        return kExitFails;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
