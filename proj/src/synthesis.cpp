#include "ccs/synthesis.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

#include "automata_internal.hpp"

namespace ccs {

namespace {

constexpr int kMaxFixpointRounds = 10000;

void check_control_operands(const Generator& k, const ControlContext& ctx) {
    if (k.shared_table() != ctx.plant.shared_table())
        throw std::invalid_argument("specification and plant use different event tables");
    if (!(k.alphabet() == ctx.plant.alphabet()))
        throw std::invalid_argument("alphabet mismatch between specification and plant");
}

/// Reachable product of the closure recognizer of k (trim; generated
/// semantics) with the plant. Tracks component states so plant-enabled
/// events can be queried per product state.
struct ClosurePlantProduct {
    std::vector<std::pair<StateId, StateId>> component;  // (k-state, plant-state)
    std::vector<std::vector<std::pair<EventId, StateId>>> transitions;
    std::vector<char> marked;  // both components marked
    std::vector<Word> word;    // shortest word per state
};

ClosurePlantProduct closure_plant_product(const Generator& kt, const Generator& plant) {
    ClosurePlantProduct p;
    if (!kt.has_initial() || !plant.has_initial()) return p;
    std::map<std::pair<StateId, StateId>, StateId> ids;
    std::deque<StateId> queue;
    auto intern = [&](StateId x, StateId y) {
        auto [it, fresh] = ids.try_emplace({x, y}, static_cast<StateId>(ids.size()));
        if (fresh) {
            p.component.emplace_back(x, y);
            p.transitions.emplace_back();
            p.marked.push_back(kt.is_marked(x) && plant.is_marked(y));
            p.word.emplace_back();
            queue.push_back(it->second);
        }
        return it->second;
    };
    intern(kt.initial(), plant.initial());
    while (!queue.empty()) {
        StateId s = queue.front();
        queue.pop_front();
        auto [x, y] = p.component[s];
        for (auto [e, nx] : kt.transitions_from(x)) {
            auto ny = plant.target(y, e);
            if (!ny) continue;
            StateId t = intern(nx, *ny);  // may grow p.transitions
            p.transitions[s].emplace_back(e, t);
        }
    }
    // shortest words by BFS over the explored product
    std::vector<char> seen(p.component.size(), 0);
    std::deque<StateId> bfs{0};
    seen[0] = 1;
    while (!bfs.empty()) {
        StateId s = bfs.front();
        bfs.pop_front();
        for (auto [e, t] : p.transitions[s]) {
            if (seen[t]) continue;
            seen[t] = 1;
            p.word[t] = p.word[s];
            p.word[t].push_back(e);
            bfs.push_back(t);
        }
    }
    return p;
}

}  // namespace

ControlContext::ControlContext(Generator plant_, EventSet uncontrollable_)
    : plant(std::move(plant_)),
      uncontrollable(std::move(uncontrollable_)),
      observation(plant.alphabet(), plant.alphabet()) {
    if (!uncontrollable.subset_of(plant.alphabet()))
        throw std::invalid_argument("uncontrollable events must lie in the plant alphabet");
}

ControlContext::ControlContext(Generator plant_, EventSet uncontrollable_, EventSet observable)
    : plant(std::move(plant_)),
      uncontrollable(std::move(uncontrollable_)),
      observation(plant.alphabet(), set_intersection(plant.alphabet(), observable)) {
    if (!uncontrollable.subset_of(plant.alphabet()))
        throw std::invalid_argument("uncontrollable events must lie in the plant alphabet");
}

Decision is_controllable(const Generator& k, const ControlContext& ctx) {
    check_control_operands(k, ctx);
    Generator kt = trim(k);
    ClosurePlantProduct p = closure_plant_product(kt, ctx.plant);

    Decision best;
    best.holds = true;
    auto better = [](const Word& w, EventId u, const Witness& old) {
        if (w.size() != old.word.size()) return w.size() < old.word.size();
        if (w != old.word) return w < old.word;
        return u < *old.event;
    };
    for (StateId s = 0; s < p.component.size(); ++s) {
        auto [x, y] = p.component[s];
        for (EventId u : ctx.uncontrollable) {
            if (!ctx.plant.target(y, u)) continue;
            if (kt.target(x, u)) continue;
            if (best.holds || better(p.word[s], u, *best.witness)) {
                best.holds = false;
                best.witness = Witness{p.word[s], u, std::nullopt};
            }
        }
    }
    return best;
}

Generator sup_c(const Generator& k, const ControlContext& ctx) {
    check_control_operands(k, ctx);
    Generator kt = trim(k);
    ClosurePlantProduct p = closure_plant_product(kt, ctx.plant);
    std::size_t n = p.component.size();
    std::vector<char> alive(n, 1);

    auto restrict_trim = [&]() {
        bool changed = false;
        // reachable within alive
        std::vector<char> reach(n, 0);
        if (n && alive[0]) {
            std::deque<StateId> queue{0};
            reach[0] = 1;
            while (!queue.empty()) {
                StateId s = queue.front();
                queue.pop_front();
                for (auto [e, t] : p.transitions[s]) {
                    (void)e;
                    if (alive[t] && !reach[t]) {
                        reach[t] = 1;
                        queue.push_back(t);
                    }
                }
            }
        }
        // co-reachable within alive
        std::vector<std::vector<StateId>> rev(n);
        for (StateId s = 0; s < n; ++s)
            if (alive[s])
                for (auto [e, t] : p.transitions[s]) {
                    (void)e;
                    if (alive[t]) rev[t].push_back(s);
                }
        std::vector<char> coreach(n, 0);
        std::deque<StateId> queue;
        for (StateId s = 0; s < n; ++s)
            if (alive[s] && p.marked[s]) {
                coreach[s] = 1;
                queue.push_back(s);
            }
        while (!queue.empty()) {
            StateId s = queue.front();
            queue.pop_front();
            for (StateId q : rev[s])
                if (!coreach[q]) {
                    coreach[q] = 1;
                    queue.push_back(q);
                }
        }
        for (StateId s = 0; s < n; ++s)
            if (alive[s] && (!reach[s] || !coreach[s])) {
                alive[s] = 0;
                changed = true;
            }
        return changed;
    };

    bool changed = n > 0;
    while (changed) {
        changed = restrict_trim();
        for (StateId s = 0; s < n; ++s) {
            if (!alive[s]) continue;
            auto [x, y] = p.component[s];
            (void)x;
            for (EventId u : ctx.uncontrollable) {
                if (!ctx.plant.target(y, u)) continue;
                auto it = std::find_if(p.transitions[s].begin(), p.transitions[s].end(),
                                       [&](const auto& tr) { return tr.first == u; });
                if (it == p.transitions[s].end() || !alive[it->second]) {
                    alive[s] = 0;
                    changed = true;
                    break;
                }
            }
        }
    }

    Generator out(k.shared_table(), k.alphabet());
    std::vector<StateId> remap(n, kNoState);
    for (StateId s = 0; s < n; ++s)
        if (alive[s]) {
            auto [x, y] = p.component[s];
            remap[s] = out.add_state("(" + std::to_string(x) + "," + std::to_string(y) + ")");
            if (p.marked[s]) out.mark(remap[s]);
        }
    for (StateId s = 0; s < n; ++s) {
        if (!alive[s]) continue;
        for (auto [e, t] : p.transitions[s])
            if (alive[t]) out.add_transition(remap[s], e, remap[t]);
    }
    if (n && alive[0]) out.set_initial(remap[0]);
    Generator result = trim(out);
    if (!is_controllable(result, ctx).holds)
        throw std::logic_error("sup_c produced an uncontrollable result");
    return result;
}

Decision is_observable(const Generator& k, const ControlContext& ctx,
                       const EventSet& controllable) {
    check_control_operands(k, ctx);
    if (!controllable.subset_of(ctx.plant.alphabet()))
        throw std::invalid_argument("controllable events must lie in the plant alphabet");
    Generator kt = trim(k);
    Decision out;
    out.holds = true;
    if (!kt.has_initial() || !ctx.plant.has_initial()) return out;

    const EventSet& observable = ctx.observation.target;
    // Pair states ((x, y), x'): x tracks s in the closure, y the plant state
    // of s, x' a second string s' in the closure with Q(s) = Q(s').
    struct Key {
        StateId x, y, x2;
        auto operator<=>(const Key&) const = default;
    };
    struct Trace {
        Key parent;
        EventId event;
        bool moves_s;
        bool moves_s2;
    };
    std::map<Key, Trace> parent;
    std::deque<Key> queue;
    Key init{kt.initial(), ctx.plant.initial(), kt.initial()};
    std::map<Key, char> seen;
    seen[init] = 1;
    queue.push_back(init);

    auto reconstruct = [&](Key at) {
        Word s, s2;
        while (at != init) {
            const Trace& tr = parent.at(at);
            if (tr.moves_s) s.push_back(tr.event);
            if (tr.moves_s2) s2.push_back(tr.event);
            at = tr.parent;
        }
        std::reverse(s.begin(), s.end());
        std::reverse(s2.begin(), s2.end());
        return std::make_pair(s, s2);
    };

    while (!queue.empty()) {
        Key cur = queue.front();
        queue.pop_front();
        for (EventId sigma : controllable) {
            bool plant_allows = ctx.plant.target(cur.y, sigma).has_value();
            bool closure_s = kt.target(cur.x, sigma).has_value();
            bool closure_s2 = kt.target(cur.x2, sigma).has_value();
            if (plant_allows && !closure_s && closure_s2) {
                auto [s, s2] = reconstruct(cur);
                out.holds = false;
                out.witness = Witness{s, sigma, s2};
                return out;
            }
        }
        auto push = [&](Key next, EventId e, bool ms, bool ms2) {
            if (seen.emplace(next, 1).second) {
                parent[next] = Trace{cur, e, ms, ms2};
                queue.push_back(next);
            }
        };
        for (EventId e : kt.alphabet()) {
            auto nx = kt.target(cur.x, e);
            auto ny = ctx.plant.target(cur.y, e);
            auto nx2 = kt.target(cur.x2, e);
            if (observable.contains(e)) {
                if (nx && ny && nx2) push({*nx, *ny, *nx2}, e, true, true);
            } else {
                if (nx && ny) push({*nx, *ny, cur.x2}, e, true, false);
                if (nx2) push({cur.x, cur.y, *nx2}, e, false, true);
            }
        }
    }
    return out;
}

Decision is_normal(const Generator& k, const ControlContext& ctx) {
    check_control_operands(k, ctx);
    Generator closure = prefix_closure(k);
    Generator qinvq = lift(project(closure, ctx.observation), ctx.plant.alphabet());
    Generator rhs = sync_product(qinvq, generated_recognizer(ctx.plant));

    Decision out;
    if (auto w = word_in_difference(rhs, closure, LanguageKind::marked)) {
        out.holds = false;
        out.witness = Witness{*w, std::nullopt, std::nullopt};
    } else if (auto w2 = word_in_difference(closure, rhs, LanguageKind::marked)) {
        out.holds = false;
        out.witness = Witness{*w2, std::nullopt, std::nullopt};
    } else {
        out.holds = true;
    }
    return out;
}

namespace {

/// Supremal prefix-closed normal sublanguage of the closed language
/// recognized by m_closure (trim, all states marked): removes every string
/// observation-equivalent to an escape of L(plant) out of the candidate,
/// together with all its extensions.
Generator sup_closed_normal(const Generator& m_closure, const ControlContext& ctx) {
    Generator not_m = internal::invert_marks(internal::complete(m_closure));
    Generator escapes = sync_product(generated_recognizer(ctx.plant), not_m);
    Generator spread = lift(project(escapes, ctx.observation), ctx.plant.alphabet());
    Generator bad = internal::suffix_saturate(spread);
    Generator not_bad = internal::invert_marks(internal::complete(bad));
    return trim(sync_product(m_closure, not_bad));
}

Generator sup_n_impl(const Generator& k, const ControlContext& ctx, bool with_control) {
    Generator m = trim(sync_product(k, ctx.plant));
    for (int round = 0; round < kMaxFixpointRounds; ++round) {
        if (!m.has_initial()) return m;
        Generator n = sup_closed_normal(prefix_closure(m), ctx);
        Generator next = trim(sync_product(m, n));
        if (with_control) next = sup_c(next, ctx);
        if (lang_equal(next, m, LanguageKind::marked)) return next;
        m = std::move(next);
    }
    throw std::logic_error("normality fixpoint did not converge");
}

}  // namespace

Generator sup_n(const Generator& k, const ControlContext& ctx) {
    Generator result = sup_n_impl(k, ctx, false);
    if (!is_normal(result, ctx).holds) throw std::logic_error("sup_n produced a non-normal result");
    return result;
}

Generator sup_cn(const Generator& k, const ControlContext& ctx) {
    Generator result = sup_n_impl(k, ctx, true);
    if (!is_normal(result, ctx).holds || !is_controllable(result, ctx).holds)
        throw std::logic_error("sup_cn self-check failed");
    return result;
}

bool is_lm_closed(const Generator& k, const Generator& plant) {
    if (k.shared_table() != plant.shared_table())
        throw std::invalid_argument("operands use different event tables");
    if (!(k.alphabet() == plant.alphabet())) throw std::invalid_argument("alphabet mismatch");
    Generator closure_in_plant = sync_product(prefix_closure(k), plant);
    return lang_equal(closure_in_plant, trim(k), LanguageKind::marked);
}

Decision nonconflicting(const Generator& a, const Generator& b) {
    Generator joint = sync_product(trim(a), trim(b));
    Decision out;
    if (auto w = blocking_witness(joint)) {
        out.holds = false;
        out.witness = Witness{*w, std::nullopt, std::nullopt};
    } else {
        out.holds = true;
    }
    return out;
}

}  // namespace ccs
