#include "ccs/coordination.hpp"

#include <algorithm>
#include <stdexcept>

namespace ccs {

namespace {

EventSet level_uncontrollable(const EventTable& table, const EventSet& alphabet) {
    return set_intersection(alphabet, table.uncontrollable_events());
}

void check_tables(const CoordinationProblem& p, const Generator& g) {
    if (g.shared_table() != p.table)
        throw std::invalid_argument("generator uses a different event table than the problem");
}

Generator level_projection(const Generator& lang, const EventSet& target) {
    return project(lang, ProjectionSpec(lang.alphabet(), target));
}

}  // namespace

ObservationModel ObservationModel::full(const EventTable& table) {
    return ObservationModel{table.universe()};
}

ObservationModel ObservationModel::from_flags(const EventTable& table) {
    return ObservationModel{table.observable_events()};
}

Generator build_coordinator(const Generator& g1, const Generator& g2, const EventSet& sigma_k) {
    if (g1.shared_table() != g2.shared_table())
        throw std::invalid_argument("subsystems use different event tables");
    if (!set_intersection(g1.alphabet(), g2.alphabet()).subset_of(sigma_k))
        throw std::invalid_argument("shared events must lie in the coordinator alphabet");
    return sync_product(project_onto(g1, sigma_k), project_onto(g2, sigma_k));
}

CoordinationProblem make_problem(Generator g1, Generator g2, EventSet sigma_k, Generator spec,
                                 std::optional<Generator> coordinator) {
    if (g1.shared_table() != g2.shared_table() || g1.shared_table() != spec.shared_table())
        throw ProblemError("problem parts use different event tables");
    EventSet whole = set_union(g1.alphabet(), g2.alphabet());
    if (!(spec.alphabet() == whole))
        throw ProblemError("specification alphabet must equal the joint subsystem alphabet");
    if (!set_intersection(g1.alphabet(), g2.alphabet()).subset_of(sigma_k))
        throw ProblemError("shared subsystem events must lie in the coordinator alphabet");
    if (!sigma_k.subset_of(whole))
        throw ProblemError("coordinator alphabet must lie in the joint subsystem alphabet");

    Generator gk = coordinator ? std::move(*coordinator) : build_coordinator(g1, g2, sigma_k);
    if (coordinator && gk.shared_table() != g1.shared_table())
        throw ProblemError("coordinator uses a different event table");
    if (!(gk.alphabet() == sigma_k))
        throw ProblemError("coordinator alphabet must equal sigma_k");

    Generator plant = sync_product(sync_product(g1, g2), gk);
    if (auto outside = word_in_difference(spec, plant, LanguageKind::marked))
        throw ProblemError("specification is not contained in Lm(G1 || G2 || Gk); stray word: " +
                           format_word(*spec.shared_table(), *outside));

    CdResult cd = check_cd(spec, g1.alphabet(), g2.alphabet(), sigma_k);
    if (!cd.holds)
        throw ProblemError("specification is not conditionally decomposable; counterexample: " +
                           format_word(*spec.shared_table(), *cd.counterexample));
    CdResult cd_closure = check_cd(prefix_closure(spec), g1.alphabet(), g2.alphabet(), sigma_k);
    if (!cd_closure.holds)
        throw ProblemError(
            "closure of the specification is not conditionally decomposable; counterexample: " +
            format_word(*spec.shared_table(), *cd_closure.counterexample));

    return CoordinationProblem{spec.shared_table(), std::move(g1), std::move(g2),
                               std::move(sigma_k), std::move(spec), std::move(gk)};
}

const Verdict* CondCheck::first_failure() const {
    for (const auto& v : items)
        if (!v.holds) return &v;
    return nullptr;
}

CondCheck is_cond_controllable(const CoordinationProblem& p, const Generator& lang) {
    check_tables(p, lang);
    const EventTable& table = *p.table;
    Generator pk = level_projection(lang, p.sigma_k);
    Generator p1k = level_projection(lang, p.sigma_1k());
    Generator p2k = level_projection(lang, p.sigma_2k());
    Generator closure_k = prefix_closure(pk);

    CondCheck out;
    auto add = [&](const std::string& level, Decision d) {
        out.items.push_back(Verdict{"controllable", level, d.holds, std::move(d.witness)});
    };
    add("k", is_controllable(pk, ControlContext(p.gk, level_uncontrollable(table, p.sigma_k))));
    add("1+k", is_controllable(p1k, ControlContext(sync_product(p.g1, closure_k),
                                                   level_uncontrollable(table, p.sigma_1k()))));
    add("2+k", is_controllable(p2k, ControlContext(sync_product(p.g2, closure_k),
                                                   level_uncontrollable(table, p.sigma_2k()))));
    out.holds = std::all_of(out.items.begin(), out.items.end(),
                            [](const Verdict& v) { return v.holds; });
    return out;
}

CondCheck is_cond_controllable(const CoordinationProblem& p) {
    return is_cond_controllable(p, p.spec);
}

CondCheck is_cond_closed(const CoordinationProblem& p, const Generator& lang) {
    check_tables(p, lang);
    Generator pk = level_projection(lang, p.sigma_k);
    Generator p1k = level_projection(lang, p.sigma_1k());
    Generator p2k = level_projection(lang, p.sigma_2k());

    CondCheck out;
    auto add = [&](const std::string& level, bool holds) {
        out.items.push_back(Verdict{"closed", level, holds, std::nullopt});
    };
    add("k", is_lm_closed(pk, p.gk));
    add("1+k", is_lm_closed(p1k, sync_product(p.g1, pk)));
    add("2+k", is_lm_closed(p2k, sync_product(p.g2, pk)));
    out.holds = std::all_of(out.items.begin(), out.items.end(),
                            [](const Verdict& v) { return v.holds; });
    return out;
}

CondCheck is_cond_closed(const CoordinationProblem& p) { return is_cond_closed(p, p.spec); }

CondCheck is_cond_observable(const CoordinationProblem& p, const Generator& lang,
                             const EventSet& controllable, const ObservationModel& obs) {
    check_tables(p, lang);
    const EventTable& table = *p.table;
    Generator pk = level_projection(lang, p.sigma_k);
    Generator p1k = level_projection(lang, p.sigma_1k());
    Generator p2k = level_projection(lang, p.sigma_2k());
    Generator closure_k = prefix_closure(pk);

    CondCheck out;
    auto add = [&](const std::string& level, Decision d) {
        out.items.push_back(Verdict{"observable", level, d.holds, std::move(d.witness)});
    };
    add("k", is_observable(pk,
                           ControlContext(p.gk, level_uncontrollable(table, p.sigma_k),
                                          obs.observable),
                           set_intersection(controllable, p.sigma_k)));
    add("1+k", is_observable(p1k,
                             ControlContext(sync_product(p.g1, closure_k),
                                            level_uncontrollable(table, p.sigma_1k()),
                                            obs.observable),
                             set_intersection(controllable, p.sigma_1k())));
    add("2+k", is_observable(p2k,
                             ControlContext(sync_product(p.g2, closure_k),
                                            level_uncontrollable(table, p.sigma_2k()),
                                            obs.observable),
                             set_intersection(controllable, p.sigma_2k())));
    out.holds = std::all_of(out.items.begin(), out.items.end(),
                            [](const Verdict& v) { return v.holds; });
    return out;
}

CondCheck is_cond_observable(const CoordinationProblem& p, const ObservationModel& obs) {
    return is_cond_observable(p, p.spec, p.table->controllable_events(), obs);
}

CondCheck is_cond_normal(const CoordinationProblem& p, const Generator& lang,
                         const ObservationModel& obs) {
    check_tables(p, lang);
    const EventTable& table = *p.table;
    Generator pk = level_projection(lang, p.sigma_k);
    Generator p1k = level_projection(lang, p.sigma_1k());
    Generator p2k = level_projection(lang, p.sigma_2k());
    Generator closure_k = prefix_closure(pk);

    CondCheck out;
    auto add = [&](const std::string& level, Decision d) {
        out.items.push_back(Verdict{"normal", level, d.holds, std::move(d.witness)});
    };
    add("k", is_normal(pk, ControlContext(p.gk, level_uncontrollable(table, p.sigma_k),
                                          obs.observable)));
    add("1+k", is_normal(p1k, ControlContext(sync_product(p.g1, closure_k),
                                             level_uncontrollable(table, p.sigma_1k()),
                                             obs.observable)));
    add("2+k", is_normal(p2k, ControlContext(sync_product(p.g2, closure_k),
                                             level_uncontrollable(table, p.sigma_2k()),
                                             obs.observable)));
    out.holds = std::all_of(out.items.begin(), out.items.end(),
                            [](const Verdict& v) { return v.holds; });
    return out;
}

CondCheck is_cond_normal(const CoordinationProblem& p, const ObservationModel& obs) {
    return is_cond_normal(p, p.spec, obs);
}

const Verdict* SynthesisReport::find(const std::string& name, const std::string& level) const {
    for (const auto& v : verdicts)
        if (v.name == name && (level.empty() || v.level == level)) return &v;
    return nullptr;
}

namespace {

struct LevelLanguages {
    Generator sup_k, sup_1k, sup_2k;
    Generator pk_1, pk_2;
    Generator intersection;
    Generator candidate;
};

/// Runs the three-level synthesis of the distributed scheme with the given
/// supremal-sublanguage operator.
template <typename SupOp>
LevelLanguages run_levels(const CoordinationProblem& p, const ObservationModel& obs, SupOp sup) {
    const EventTable& table = *p.table;
    Generator sup_k = sup(level_projection(p.spec, p.sigma_k),
                          ControlContext(p.gk, level_uncontrollable(table, p.sigma_k),
                                         obs.observable));
    Generator closure_k = prefix_closure(sup_k);
    Generator sup_1k = sup(level_projection(p.spec, p.sigma_1k()),
                           ControlContext(sync_product(p.g1, closure_k),
                                          level_uncontrollable(table, p.sigma_1k()),
                                          obs.observable));
    Generator sup_2k = sup(level_projection(p.spec, p.sigma_2k()),
                           ControlContext(sync_product(p.g2, closure_k),
                                          level_uncontrollable(table, p.sigma_2k()),
                                          obs.observable));
    Generator pk_1 = project(sup_1k, ProjectionSpec(p.sigma_1k(), p.sigma_k));
    Generator pk_2 = project(sup_2k, ProjectionSpec(p.sigma_2k(), p.sigma_k));
    // Pk(sup_{i+k}) is a sublanguage of sup_k in both schemes; anything else
    // is an internal error.
    if (!lang_includes(sup_k, pk_1) || !lang_includes(sup_k, pk_2))
        throw std::logic_error("level projection escaped the coordinator-level language");
    Generator intersection = trim(sync_product(pk_1, pk_2));
    Generator candidate = trim(sync_product(sup_1k, sup_2k));
    return LevelLanguages{std::move(sup_k),        std::move(sup_1k), std::move(sup_2k),
                          std::move(pk_1),         std::move(pk_2),   std::move(intersection),
                          std::move(candidate)};
}

void add_verdict(std::vector<Verdict>& verdicts, std::string name, std::string level,
                 Decision d) {
    verdicts.push_back(Verdict{std::move(name), std::move(level), d.holds, std::move(d.witness)});
}

void add_verdict(std::vector<Verdict>& verdicts, std::string name, std::string level, bool holds,
                 std::optional<Word> counterexample = std::nullopt) {
    std::optional<Witness> w;
    if (counterexample) w = Witness{std::move(*counterexample), std::nullopt, std::nullopt};
    verdicts.push_back(Verdict{std::move(name), std::move(level), holds, std::move(w)});
}

struct StructuralVerdicts {
    Decision coordinator_inclusion;
    Decision observer[2], occ[2], lcc[2];

    bool observer_route(int i) const {
        return observer[i].holds && (occ[i].holds || lcc[i].holds);
    }
};

StructuralVerdicts structural_conditions(const CoordinationProblem& p) {
    StructuralVerdicts out;
    Generator joint = sync_product(project_onto(generated_recognizer(p.g1), p.sigma_k),
                                   project_onto(generated_recognizer(p.g2), p.sigma_k));
    auto cex = word_in_difference(generated_recognizer(p.gk), joint, LanguageKind::marked);
    out.coordinator_inclusion.holds = !cex.has_value();
    if (cex) out.coordinator_inclusion.witness = Witness{*cex, std::nullopt, std::nullopt};

    const EventSet levels[2] = {p.sigma_1k(), p.sigma_2k()};
    const Generator* gens[2] = {&p.g1, &p.g2};
    for (int i = 0; i < 2; ++i) {
        Generator lifted = lift(generated_recognizer(*gens[i]), levels[i]);
        ProjectionSpec to_k(levels[i], p.sigma_k);
        EventSet unc = level_uncontrollable(*p.table, levels[i]);
        out.observer[i] = is_observer(to_k, lifted);
        out.occ[i] = is_occ(to_k, lifted, unc);
        out.lcc[i] = is_lcc(to_k, lifted, unc);
    }
    return out;
}

void finish_report(SynthesisReport& r, bool justified, std::string justification) {
    if (!justified) {
        r.result_kind = ResultKind::withheld;
        r.justification.clear();
        r.result = std::nullopt;
        return;
    }
    r.justification = std::move(justification);
    r.result = r.candidate;
    r.result_kind =
        r.result->has_initial() ? ResultKind::language : ResultKind::empty_language;
}

}  // namespace

SynthesisReport synth_supcc(const CoordinationProblem& p) {
    const EventTable& table = *p.table;
    ObservationModel full = ObservationModel::full(table);
    LevelLanguages ll =
        run_levels(p, full, [](const Generator& k, const ControlContext& ctx) {
            return sup_c(k, ctx);
        });

    SynthesisReport r{"supcc",         std::move(ll.sup_k), std::move(ll.sup_1k),
                      std::move(ll.sup_2k), std::move(ll.pk_1), std::move(ll.pk_2),
                      std::move(ll.intersection), std::move(ll.candidate),
                      {},              {},                  ResultKind::withheld,
                      std::nullopt};

    bool strong1 = lang_includes(r.pk_sup_1k, r.sup_k);
    bool strong2 = lang_includes(r.pk_sup_2k, r.sup_k);
    add_verdict(r.verdicts, "strong-inclusion", "1", strong1,
                strong1 ? std::nullopt : word_in_difference(r.sup_k, r.pk_sup_1k));
    add_verdict(r.verdicts, "strong-inclusion", "2", strong2,
                strong2 ? std::nullopt : word_in_difference(r.sup_k, r.pk_sup_2k));

    Decision nonconf = nonconflicting(r.sup_1k, r.sup_2k);
    bool nonconf_holds = nonconf.holds;
    add_verdict(r.verdicts, "nonconflicting", "", std::move(nonconf));

    ControlContext ctx_k(p.gk, level_uncontrollable(table, p.sigma_k));
    Decision inter_ctrl = is_controllable(r.intersection, ctx_k);
    bool inter_ctrl_holds = inter_ctrl.holds;
    add_verdict(r.verdicts, "intersection-controllable", "k", std::move(inter_ctrl));

    // Same check against the joint plant Pk(L(G1)) || Pk(L(G2)) || L(Gk);
    // coincides with the one above whenever coordinator-inclusion holds.
    Generator joint_plant =
        sync_product(sync_product(project_onto(generated_recognizer(p.g1), p.sigma_k),
                                  project_onto(generated_recognizer(p.g2), p.sigma_k)),
                     generated_recognizer(p.gk));
    add_verdict(r.verdicts, "intersection-controllable-joint-plant", "k",
                is_controllable(r.intersection,
                                ControlContext(joint_plant,
                                               level_uncontrollable(table, p.sigma_k))));

    StructuralVerdicts sv = structural_conditions(p);
    bool structural_route = sv.coordinator_inclusion.holds && nonconf_holds &&
                            sv.observer_route(0) && sv.observer_route(1);
    add_verdict(r.verdicts, "coordinator-inclusion", "", std::move(sv.coordinator_inclusion));
    for (int i = 0; i < 2; ++i) {
        std::string level = i == 0 ? "1" : "2";
        add_verdict(r.verdicts, "observer", level, std::move(sv.observer[i]));
        add_verdict(r.verdicts, "occ", level, std::move(sv.occ[i]));
        add_verdict(r.verdicts, "lcc", level, std::move(sv.lcc[i]));
    }

    if (strong1 && strong2)
        finish_report(r, true, "strong-inclusion");
    else if (nonconf_holds && inter_ctrl_holds)
        finish_report(r, true, "nonconflicting-intersection-controllable");
    else if (structural_route)
        finish_report(r, true, "observer-control-consistency");
    else
        finish_report(r, false, "");
    return r;
}

SynthesisReport synth_supccn(const CoordinationProblem& p, const ObservationModel& obs) {
    const EventTable& table = *p.table;
    LevelLanguages ll = run_levels(p, obs, [](const Generator& k, const ControlContext& ctx) {
        return sup_cn(k, ctx);
    });

    SynthesisReport r{"supccn",        std::move(ll.sup_k), std::move(ll.sup_1k),
                      std::move(ll.sup_2k), std::move(ll.pk_1), std::move(ll.pk_2),
                      std::move(ll.intersection), std::move(ll.candidate),
                      {},              {},                  ResultKind::withheld,
                      std::nullopt};

    bool strong1 = lang_includes(r.pk_sup_1k, r.sup_k);
    bool strong2 = lang_includes(r.pk_sup_2k, r.sup_k);
    add_verdict(r.verdicts, "strong-inclusion", "1", strong1,
                strong1 ? std::nullopt : word_in_difference(r.sup_k, r.pk_sup_1k));
    add_verdict(r.verdicts, "strong-inclusion", "2", strong2,
                strong2 ? std::nullopt : word_in_difference(r.sup_k, r.pk_sup_2k));

    Decision nonconf = nonconflicting(r.sup_1k, r.sup_2k);
    bool nonconf_holds = nonconf.holds;
    add_verdict(r.verdicts, "nonconflicting", "", std::move(nonconf));

    ControlContext ctx_k(p.gk, level_uncontrollable(table, p.sigma_k), obs.observable);
    Decision inter_ctrl = is_controllable(r.intersection, ctx_k);
    Decision inter_norm = is_normal(r.intersection, ctx_k);
    bool inter_ctrl_holds = inter_ctrl.holds;
    bool inter_norm_holds = inter_norm.holds;
    add_verdict(r.verdicts, "intersection-controllable", "k", std::move(inter_ctrl));
    add_verdict(r.verdicts, "intersection-normal", "k", std::move(inter_norm));

    bool spec_closed = lang_equal(p.spec, prefix_closure(p.spec), LanguageKind::marked);
    add_verdict(r.verdicts, "specification-prefix-closed", "", spec_closed);

    StructuralVerdicts sv = structural_conditions(p);
    bool structural_route =
        spec_closed && inter_norm_holds && sv.observer_route(0) && sv.observer_route(1);
    add_verdict(r.verdicts, "coordinator-inclusion", "", std::move(sv.coordinator_inclusion));
    for (int i = 0; i < 2; ++i) {
        std::string level = i == 0 ? "1" : "2";
        add_verdict(r.verdicts, "observer", level, std::move(sv.observer[i]));
        add_verdict(r.verdicts, "occ", level, std::move(sv.occ[i]));
        add_verdict(r.verdicts, "lcc", level, std::move(sv.lcc[i]));
    }

    if (strong1 && strong2)
        finish_report(r, true, "strong-inclusion");
    else if (nonconf_holds && inter_ctrl_holds && inter_norm_holds)
        finish_report(r, true, "nonconflicting-intersection-controllable-normal");
    else if (structural_route)
        finish_report(r, true, "structural-normal-intersection");
    else
        finish_report(r, false, "");
    return r;
}

bool ClosedLoopReport::all() const {
    for (const Verdict* v : checks())
        if (!v->holds) return false;
    return true;
}

std::vector<const Verdict*> ClosedLoopReport::checks() const {
    return {&coordinator_inclusion, &inclusion_1, &inclusion_2,
            &nonblocking_k,         &nonblocking_1, &nonblocking_2,
            &equality};
}

ClosedLoopReport verify_closed_loop(const CoordinationProblem& p, const Generator& s1,
                                    const Generator& s2, const Generator& sk,
                                    std::optional<Generator> target) {
    check_tables(p, s1);
    check_tables(p, s2);
    check_tables(p, sk);
    if (!(sk.alphabet() == p.sigma_k))
        throw std::invalid_argument("coordinator supervisor must be over sigma_k");
    if (!(s1.alphabet() == p.sigma_1k()))
        throw std::invalid_argument("subsystem-1 supervisor must be over sigma_1 u sigma_k");
    if (!(s2.alphabet() == p.sigma_2k()))
        throw std::invalid_argument("subsystem-2 supervisor must be over sigma_2 u sigma_k");
    Generator tgt = target ? std::move(*target) : p.spec;
    if (!(tgt.alphabet() == p.sigma_union()))
        throw std::invalid_argument("target language must be over the joint alphabet");

    Generator loop_k = sync_product(sk, p.gk);
    Generator loop_1 = sync_product(sync_product(p.g1, loop_k), s1);
    Generator loop_2 = sync_product(sync_product(p.g2, loop_k), s2);

    Generator pkK = level_projection(p.spec, p.sigma_k);
    Generator p1kK = level_projection(p.spec, p.sigma_1k());
    Generator p2kK = level_projection(p.spec, p.sigma_2k());

    ClosedLoopReport r;
    auto inclusion = [](std::string name, const Generator& small, const Generator& big) {
        auto cex = word_in_difference(small, big, LanguageKind::marked);
        std::optional<Witness> w;
        if (cex) w = Witness{*cex, std::nullopt, std::nullopt};
        return Verdict{std::move(name), "", !w.has_value(), std::move(w)};
    };
    auto nonblocking_check = [](std::string name, const Generator& g) {
        auto cex = blocking_witness(g);
        std::optional<Witness> w;
        if (cex) w = Witness{*cex, std::nullopt, std::nullopt};
        return Verdict{std::move(name), "", !w.has_value(), std::move(w)};
    };
    r.coordinator_inclusion = inclusion("loop-k-within-pk-spec", loop_k, pkK);
    r.inclusion_1 = inclusion("loop-1-within-p1k-spec", loop_1, p1kK);
    r.inclusion_2 = inclusion("loop-2-within-p2k-spec", loop_2, p2kK);
    r.nonblocking_k = nonblocking_check("loop-k-nonblocking", loop_k);
    r.nonblocking_1 = nonblocking_check("loop-1-nonblocking", loop_1);
    r.nonblocking_2 = nonblocking_check("loop-2-nonblocking", loop_2);

    Generator joint = trim(sync_product(loop_1, loop_2));
    std::optional<Word> cex = word_in_difference(joint, tgt, LanguageKind::marked);
    if (!cex) cex = word_in_difference(tgt, joint, LanguageKind::marked);
    std::optional<Witness> w;
    if (cex) w = Witness{*cex, std::nullopt, std::nullopt};
    r.equality = Verdict{"closed-loop-equals-target", "", !w.has_value(), std::move(w)};
    return r;
}

}  // namespace ccs
