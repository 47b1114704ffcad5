#include "ccs/structural.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

#include "automata_internal.hpp"

namespace ccs {

namespace {

void check_operand(const ProjectionSpec& spec, const Generator& lang) {
    if (!(lang.alphabet() == spec.source))
        throw std::invalid_argument("projection source must equal the language alphabet");
}

void check_prefix_closed(const Generator& lang) {
    if (!lang_equal(lang, prefix_closure(lang), LanguageKind::marked))
        throw std::invalid_argument("input language must be prefix-closed");
}

}  // namespace

ConditionVerdict is_observer(const ProjectionSpec& spec, const Generator& lang) {
    check_operand(spec, lang);
    Generator t = trim(lang);
    ConditionVerdict out;
    out.holds = true;
    if (!t.has_initial()) return out;

    // Projected continuation language from each state.
    std::vector<Generator> cont;
    cont.reserve(t.num_states());
    for (StateId q = 0; q < t.num_states(); ++q) {
        Generator from_q(t.shared_table(), t.alphabet());
        for (StateId s = 0; s < t.num_states(); ++s) {
            from_q.add_state();
            if (t.is_marked(s)) from_q.mark(s);
        }
        for (StateId s = 0; s < t.num_states(); ++s)
            for (auto [e, d] : t.transitions_from(s)) from_q.add_transition(s, e, d);
        from_q.set_initial(q);
        cont.push_back(project(from_q, spec));
    }
    // includes[p][q]: projected continuations from p included in those from q
    std::vector<std::vector<char>> included(t.num_states(), std::vector<char>(t.num_states(), 0));
    for (StateId pstate = 0; pstate < t.num_states(); ++pstate)
        for (StateId q = 0; q < t.num_states(); ++q)
            included[pstate][q] =
                pstate == q || lang_includes(cont[q], cont[pstate], LanguageKind::marked);

    // Observer subsets of the projected automaton, walked jointly with t.
    NondetAutomaton proj_nfa(t.shared_table(), spec.target);
    for (StateId s = 0; s < t.num_states(); ++s) {
        proj_nfa.add_state();
        if (t.is_marked(s)) proj_nfa.mark(s);
    }
    for (StateId s = 0; s < t.num_states(); ++s)
        for (auto [e, d] : t.transitions_from(s))
            proj_nfa.add_transition(s, spec.target.contains(e) ? e : NondetAutomaton::kSilent, d);
    proj_nfa.add_initial(t.initial());
    Generator obs = determinize(proj_nfa);

    // Subset membership per observer state, recovered from the labels is
    // fragile; rebuild the subsets by replaying the construction instead.
    std::map<std::vector<StateId>, StateId> subset_id;
    std::vector<std::vector<StateId>> subsets;
    {
        auto closure = [&](std::vector<StateId> s) {
            std::deque<StateId> queue(s.begin(), s.end());
            std::vector<char> in(t.num_states(), 0);
            for (StateId q : s) in[q] = 1;
            while (!queue.empty()) {
                StateId q = queue.front();
                queue.pop_front();
                for (auto [e, d] : t.transitions_from(q))
                    if (!spec.target.contains(e) && !in[d]) {
                        in[d] = 1;
                        queue.push_back(d);
                    }
            }
            std::vector<StateId> set;
            for (StateId q = 0; q < t.num_states(); ++q)
                if (in[q]) set.push_back(q);
            return set;
        };
        std::deque<std::vector<StateId>> queue;
        auto intern = [&](std::vector<StateId> s) {
            auto [it, fresh] = subset_id.try_emplace(s, static_cast<StateId>(subset_id.size()));
            if (fresh) {
                subsets.push_back(it->first);
                queue.push_back(it->first);
            }
            return it->second;
        };
        intern(closure({t.initial()}));
        while (!queue.empty()) {
            auto s = queue.front();
            queue.pop_front();
            for (EventId e : spec.target) {
                std::vector<StateId> next;
                for (StateId q : s)
                    if (auto d = t.target(q, e)) next.push_back(*d);
                if (next.empty()) continue;
                std::sort(next.begin(), next.end());
                next.erase(std::unique(next.begin(), next.end()), next.end());
                intern(closure(std::move(next)));
            }
        }
    }
    auto subset_step = [&](const std::vector<StateId>& s, EventId e) -> const std::vector<StateId>* {
        std::vector<StateId> next;
        for (StateId q : s)
            if (auto d = t.target(q, e)) next.push_back(*d);
        if (next.empty()) return nullptr;
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        // re-closure
        std::deque<StateId> queue(next.begin(), next.end());
        std::vector<char> in(t.num_states(), 0);
        for (StateId q : next) in[q] = 1;
        while (!queue.empty()) {
            StateId q = queue.front();
            queue.pop_front();
            for (auto [f, d] : t.transitions_from(q))
                if (!spec.target.contains(f) && !in[d]) {
                    in[d] = 1;
                    queue.push_back(d);
                }
        }
        std::vector<StateId> closed;
        for (StateId q = 0; q < t.num_states(); ++q)
            if (in[q]) closed.push_back(q);
        auto it = subset_id.find(closed);
        if (it == subset_id.end()) return nullptr;
        return &subsets[it->second];
    };

    // Walk reachable (state, subset) pairs of t x observer.
    struct Key {
        StateId q;
        StateId subset;
        auto operator<=>(const Key&) const = default;
    };
    std::map<Key, Word> word_to;
    std::deque<Key> queue;
    Key init{t.initial(), subset_id.at(subsets.front())};
    // subsets.front() is the interned initial subset by construction order
    word_to[init] = Word{};
    queue.push_back(init);
    while (!queue.empty()) {
        Key cur = queue.front();
        queue.pop_front();
        const auto& subset = subsets[cur.subset];
        for (StateId member : subset) {
            if (!included[member][cur.q]) {
                // Some projected continuation from the class is not realizable
                // from the concrete state: extract it.
                auto extra = word_in_difference(cont[member], cont[cur.q], LanguageKind::marked);
                Word s = word_to[cur];
                Word tword = spec.apply(s);
                if (extra) tword.insert(tword.end(), extra->begin(), extra->end());
                out.holds = false;
                out.witness = Witness{s, std::nullopt, tword};
                return out;
            }
        }
        for (EventId e : t.alphabet()) {
            auto nq = t.target(cur.q, e);
            if (!nq) continue;
            const std::vector<StateId>* nsubset = &subset;
            if (spec.target.contains(e)) {
                nsubset = subset_step(subset, e);
                if (!nsubset) continue;  // cannot happen for reachable strings
            }
            Key next{*nq, subset_id.at(*nsubset)};
            if (word_to.count(next)) continue;
            Word w = word_to[cur];
            w.push_back(e);
            word_to[next] = std::move(w);
            queue.push_back(next);
        }
    }
    return out;
}

ConditionVerdict is_occ(const ProjectionSpec& spec, const Generator& lang,
                        const EventSet& uncontrollable) {
    check_operand(spec, lang);
    check_prefix_closed(lang);
    Generator t = trim(lang);
    ConditionVerdict out;
    out.holds = true;
    if (!t.has_initial()) return out;

    // BFS over (state, interior-has-controllable) pairs; the flag resets on
    // every target event.
    struct Key {
        StateId q;
        bool dirty;
        auto operator<=>(const Key&) const = default;
    };
    std::map<Key, Word> word_to;
    std::deque<Key> queue;
    Key init{t.initial(), false};
    word_to[init] = Word{};
    queue.push_back(init);
    while (!queue.empty()) {
        Key cur = queue.front();
        queue.pop_front();
        for (auto [e, d] : t.transitions_from(cur.q)) {
            if (spec.target.contains(e)) {
                if (uncontrollable.contains(e) && cur.dirty) {
                    Word w = word_to[cur];
                    w.push_back(e);
                    out.holds = false;
                    out.witness = Witness{std::move(w), e, std::nullopt};
                    return out;
                }
                Key next{d, false};
                if (!word_to.count(next)) {
                    Word w = word_to[cur];
                    w.push_back(e);
                    word_to[next] = std::move(w);
                    queue.push_back(next);
                }
            } else {
                Key next{d, cur.dirty || !uncontrollable.contains(e)};
                if (!word_to.count(next)) {
                    Word w = word_to[cur];
                    w.push_back(e);
                    word_to[next] = std::move(w);
                    queue.push_back(next);
                }
            }
        }
    }
    return out;
}

ConditionVerdict is_lcc(const ProjectionSpec& spec, const Generator& lang,
                        const EventSet& uncontrollable) {
    check_operand(spec, lang);
    check_prefix_closed(lang);
    Generator t = trim(lang);
    ConditionVerdict out;
    out.holds = true;
    if (!t.has_initial()) return out;

    EventSet watched = set_intersection(spec.target, uncontrollable);
    std::size_t n = t.num_states();
    // can_any[q] / can_unc[q]: watched events reachable from q through
    // non-target paths (arbitrary resp. purely uncontrollable interiors).
    std::vector<EventSet> can_any(n), can_unc(n);
    auto propagate = [&](std::vector<EventSet>& can, bool unc_only) {
        bool changed = true;
        while (changed) {
            changed = false;
            for (StateId q = 0; q < n; ++q) {
                for (auto [e, d] : t.transitions_from(q)) {
                    if (watched.contains(e) && !can[q].contains(e)) {
                        can[q].insert(e);
                        changed = true;
                    }
                    if (spec.target.contains(e)) continue;
                    if (unc_only && !uncontrollable.contains(e)) continue;
                    for (EventId u : can[d])
                        if (!can[q].contains(u)) {
                            can[q].insert(u);
                            changed = true;
                        }
                }
            }
        }
    };
    propagate(can_any, false);
    propagate(can_unc, true);

    auto words = internal::shortest_words(t);
    std::optional<std::pair<Word, EventId>> best;
    for (StateId q = 0; q < n; ++q) {
        if (!words[q]) continue;
        for (EventId u : can_any[q]) {
            if (can_unc[q].contains(u)) continue;
            std::pair<Word, EventId> cand{*words[q], u};
            if (!best || cand.first.size() < best->first.size() ||
                (cand.first.size() == best->first.size() && cand < *best))
                best = std::move(cand);
        }
    }
    if (best) {
        out.holds = false;
        out.witness = Witness{best->first, best->second, std::nullopt};
    }
    return out;
}

}  // namespace ccs
