#include "ccs/projection.hpp"

#include <stdexcept>

namespace ccs {

ProjectionSpec::ProjectionSpec(EventSet src, EventSet tgt)
    : source(std::move(src)), target(std::move(tgt)) {
    if (!target.subset_of(source))
        throw std::invalid_argument("projection target must be a subset of its source");
}

Word ProjectionSpec::apply(const Word& w) const {
    Word out;
    for (EventId e : w)
        if (target.contains(e)) out.push_back(e);
    return out;
}

Generator project(const Generator& g, const ProjectionSpec& spec) {
    if (!(g.alphabet() == spec.source))
        throw std::invalid_argument("projection source must equal the generator alphabet");
    NondetAutomaton nfa(g.shared_table(), spec.target);
    for (StateId s = 0; s < g.num_states(); ++s) {
        nfa.add_state(g.label(s));
        if (g.is_marked(s)) nfa.mark(s);
    }
    for (StateId s = 0; s < g.num_states(); ++s)
        for (auto [e, t] : g.transitions_from(s))
            nfa.add_transition(s, spec.target.contains(e) ? e : NondetAutomaton::kSilent, t);
    if (g.has_initial()) nfa.add_initial(g.initial());
    return determinize(nfa);
}

Generator project_onto(const Generator& g, const EventSet& target) {
    return project(g, ProjectionSpec(g.alphabet(), set_intersection(g.alphabet(), target)));
}

Generator lift(const Generator& g, const EventSet& bigger) {
    if (!g.alphabet().subset_of(bigger))
        throw std::invalid_argument("lift target must contain the generator alphabet");
    EventSet fresh = set_difference(bigger, g.alphabet());
    Generator out(g.shared_table(), bigger);
    for (StateId s = 0; s < g.num_states(); ++s) {
        out.add_state(g.label(s));
        if (g.is_marked(s)) out.mark(s);
    }
    for (StateId s = 0; s < g.num_states(); ++s) {
        for (auto [e, t] : g.transitions_from(s)) out.add_transition(s, e, t);
        for (EventId e : fresh) out.add_transition(s, e, s);
    }
    if (g.has_initial()) out.set_initial(g.initial());
    return out;
}

CdResult check_cd(const Generator& k, const EventSet& s1, const EventSet& s2,
                  const EventSet& sk) {
    EventSet whole = set_union(s1, s2);
    if (!(k.alphabet() == whole))
        throw std::invalid_argument("specification alphabet must equal s1 u s2");
    if (!set_intersection(s1, s2).subset_of(sk))
        throw std::invalid_argument("shared events must lie in the coordinator alphabet");

    Generator p1k = project_onto(k, set_union(s1, sk));
    Generator p2k = project_onto(k, set_union(s2, sk));
    Generator composed = trim(sync_product(p1k, p2k));
    Generator kt = trim(k);

    CdResult r;
    r.counterexample = word_in_difference(composed, kt, LanguageKind::marked);
    r.holds = !r.counterexample.has_value();
    return r;
}

EventSet extend_sigma_k(const Generator& k, const EventSet& s1, const EventSet& s2,
                        const EventSet& sk0) {
    EventSet sk = set_union(sk0, set_intersection(s1, s2));
    if (check_cd(k, s1, s2, sk).holds) return sk;
    for (EventId e : set_difference(set_union(s1, s2), sk)) {
        sk.insert(e);
        if (check_cd(k, s1, s2, sk).holds) return sk;
    }
    return sk;  // = s1 u s2, identity projections
}

}  // namespace ccs
