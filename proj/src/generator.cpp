#include "ccs/generator.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <stdexcept>

#include "automata_internal.hpp"

namespace ccs {

namespace {

void check_same_world(const Generator& a, const Generator& b) {
    if (a.shared_table() != b.shared_table())
        throw std::invalid_argument("generators belong to different event tables");
}

void check_same_alphabet(const Generator& a, const Generator& b) {
    check_same_world(a, b);
    if (!(a.alphabet() == b.alphabet()))
        throw std::invalid_argument("alphabet mismatch");
}

std::string state_name(const Generator& g, StateId s) {
    const std::string& l = g.label(s);
    return l.empty() ? std::to_string(s) : l;
}

}  // namespace

Generator::Generator(std::shared_ptr<const EventTable> table, EventSet alphabet)
    : table_(std::move(table)), alphabet_(std::move(alphabet)) {
    if (!table_) throw std::invalid_argument("null event table");
    for (EventId e : alphabet_)
        if (e >= table_->size()) throw std::invalid_argument("alphabet event not in table");
}

Generator Generator::empty_language(std::shared_ptr<const EventTable> table, EventSet alphabet) {
    return Generator(std::move(table), std::move(alphabet));
}

StateId Generator::add_state(std::string label) {
    transitions_.emplace_back();
    marked_.push_back(0);
    labels_.push_back(std::move(label));
    return static_cast<StateId>(transitions_.size() - 1);
}

void Generator::set_initial(StateId s) {
    if (s >= num_states()) throw std::invalid_argument("initial state out of range");
    initial_ = s;
}

void Generator::mark(StateId s) { marked_.at(s) = 1; }

void Generator::add_transition(StateId src, EventId e, StateId dst) {
    if (src >= num_states() || dst >= num_states())
        throw std::invalid_argument("transition state out of range");
    if (!alphabet_.contains(e))
        throw std::invalid_argument("transition event not in alphabet: " + table_->name(e));
    auto& row = transitions_[src];
    auto it = std::lower_bound(row.begin(), row.end(), std::make_pair(e, StateId{0}),
                               [](const auto& a, const auto& b) { return a.first < b.first; });
    if (it != row.end() && it->first == e)
        throw std::invalid_argument("nondeterministic transition on event " + table_->name(e));
    row.insert(it, {e, dst});
}

std::size_t Generator::num_transitions() const {
    std::size_t n = 0;
    for (const auto& row : transitions_) n += row.size();
    return n;
}

std::vector<StateId> Generator::marked_states() const {
    std::vector<StateId> out;
    for (StateId s = 0; s < marked_.size(); ++s)
        if (marked_[s]) out.push_back(s);
    return out;
}

std::optional<StateId> Generator::target(StateId src, EventId e) const {
    const auto& row = transitions_.at(src);
    auto it = std::lower_bound(row.begin(), row.end(), std::make_pair(e, StateId{0}),
                               [](const auto& a, const auto& b) { return a.first < b.first; });
    if (it != row.end() && it->first == e) return it->second;
    return std::nullopt;
}

std::span<const std::pair<EventId, StateId>> Generator::transitions_from(StateId s) const {
    const auto& row = transitions_.at(s);
    return {row.data(), row.size()};
}

bool Generator::accepts(const Word& w, LanguageKind kind) const {
    if (!has_initial()) return false;
    StateId s = initial_;
    for (EventId e : w) {
        auto t = target(s, e);
        if (!t) return false;
        s = *t;
    }
    return kind == LanguageKind::generated || is_marked(s);
}

NondetAutomaton::NondetAutomaton(std::shared_ptr<const EventTable> table, EventSet alphabet)
    : table_(std::move(table)), alphabet_(std::move(alphabet)) {
    if (!table_) throw std::invalid_argument("null event table");
}

StateId NondetAutomaton::add_state(std::string label) {
    transitions_.emplace_back();
    marked_.push_back(0);
    labels_.push_back(std::move(label));
    return static_cast<StateId>(transitions_.size() - 1);
}

void NondetAutomaton::add_initial(StateId s) {
    if (s >= num_states()) throw std::invalid_argument("initial state out of range");
    if (std::find(initial_.begin(), initial_.end(), s) == initial_.end()) initial_.push_back(s);
}

void NondetAutomaton::mark(StateId s) { marked_.at(s) = 1; }

void NondetAutomaton::add_transition(StateId src, EventId e, StateId dst) {
    if (src >= num_states() || dst >= num_states())
        throw std::invalid_argument("transition state out of range");
    if (e != kSilent && !alphabet_.contains(e))
        throw std::invalid_argument("transition event not in alphabet");
    auto& row = transitions_[src];
    if (std::find(row.begin(), row.end(), std::make_pair(e, dst)) == row.end())
        row.emplace_back(e, dst);
}

std::span<const std::pair<EventId, StateId>> NondetAutomaton::transitions_from(StateId s) const {
    const auto& row = transitions_.at(s);
    return {row.data(), row.size()};
}

namespace internal {

std::vector<char> reachable_states(const Generator& g) {
    std::vector<char> seen(g.num_states(), 0);
    if (!g.has_initial()) return seen;
    std::deque<StateId> queue{g.initial()};
    seen[g.initial()] = 1;
    while (!queue.empty()) {
        StateId s = queue.front();
        queue.pop_front();
        for (auto [e, t] : g.transitions_from(s)) {
            (void)e;
            if (!seen[t]) {
                seen[t] = 1;
                queue.push_back(t);
            }
        }
    }
    return seen;
}

std::vector<char> coreachable_states(const Generator& g) {
    std::vector<std::vector<StateId>> rev(g.num_states());
    for (StateId s = 0; s < g.num_states(); ++s)
        for (auto [e, t] : g.transitions_from(s)) {
            (void)e;
            rev[t].push_back(s);
        }
    std::vector<char> seen(g.num_states(), 0);
    std::deque<StateId> queue;
    for (StateId s = 0; s < g.num_states(); ++s)
        if (g.is_marked(s)) {
            seen[s] = 1;
            queue.push_back(s);
        }
    while (!queue.empty()) {
        StateId s = queue.front();
        queue.pop_front();
        for (StateId p : rev[s])
            if (!seen[p]) {
                seen[p] = 1;
                queue.push_back(p);
            }
    }
    return seen;
}

std::vector<std::optional<Word>> shortest_words(const Generator& g) {
    std::vector<std::optional<Word>> words(g.num_states());
    if (!g.has_initial()) return words;
    std::deque<StateId> queue{g.initial()};
    words[g.initial()] = Word{};
    while (!queue.empty()) {
        StateId s = queue.front();
        queue.pop_front();
        for (auto [e, t] : g.transitions_from(s)) {
            if (!words[t]) {
                Word w = *words[s];
                w.push_back(e);
                words[t] = std::move(w);
                queue.push_back(t);
            }
        }
    }
    return words;
}

Generator complete(const Generator& g) {
    Generator out(g.shared_table(), g.alphabet());
    for (StateId s = 0; s < g.num_states(); ++s) out.add_state(g.label(s));
    StateId sink = out.add_state("sink");
    for (StateId s = 0; s < g.num_states(); ++s) {
        if (g.is_marked(s)) out.mark(s);
        for (EventId e : g.alphabet()) {
            auto t = g.target(s, e);
            out.add_transition(s, e, t ? *t : sink);
        }
    }
    for (EventId e : g.alphabet()) out.add_transition(sink, e, sink);
    out.set_initial(g.has_initial() ? g.initial() : sink);
    return out;
}

Generator invert_marks(const Generator& g) {
    Generator out(g.shared_table(), g.alphabet());
    for (StateId s = 0; s < g.num_states(); ++s) out.add_state(g.label(s));
    for (StateId s = 0; s < g.num_states(); ++s) {
        if (!g.is_marked(s)) out.mark(s);
        for (auto [e, t] : g.transitions_from(s)) out.add_transition(s, e, t);
    }
    if (g.has_initial()) out.set_initial(g.initial());
    return out;
}

Generator suffix_saturate(const Generator& g) {
    Generator out(g.shared_table(), g.alphabet());
    for (StateId s = 0; s < g.num_states(); ++s) out.add_state(g.label(s));
    StateId sink = out.add_state("accept-sink");
    out.mark(sink);
    for (EventId e : g.alphabet()) out.add_transition(sink, e, sink);
    for (StateId s = 0; s < g.num_states(); ++s) {
        if (g.is_marked(s)) {
            out.mark(s);
            for (EventId e : g.alphabet()) out.add_transition(s, e, sink);
        } else {
            for (auto [e, t] : g.transitions_from(s)) out.add_transition(s, e, t);
        }
    }
    if (g.has_initial()) out.set_initial(g.initial());
    return out;
}

}  // namespace internal

Generator trim(const Generator& g) {
    auto reach = internal::reachable_states(g);
    auto coreach = internal::coreachable_states(g);
    std::vector<StateId> remap(g.num_states(), kNoState);
    Generator out(g.shared_table(), g.alphabet());
    for (StateId s = 0; s < g.num_states(); ++s)
        if (reach[s] && coreach[s]) remap[s] = out.add_state(g.label(s));
    for (StateId s = 0; s < g.num_states(); ++s) {
        if (remap[s] == kNoState) continue;
        if (g.is_marked(s)) out.mark(remap[s]);
        for (auto [e, t] : g.transitions_from(s))
            if (remap[t] != kNoState) out.add_transition(remap[s], e, remap[t]);
    }
    if (g.has_initial() && remap[g.initial()] != kNoState) out.set_initial(remap[g.initial()]);
    return out;
}

Generator sync_product(const Generator& a, const Generator& b) {
    check_same_world(a, b);
    EventSet alphabet = set_union(a.alphabet(), b.alphabet());
    Generator out(a.shared_table(), alphabet);
    if (!a.has_initial() || !b.has_initial()) return out;

    std::map<std::pair<StateId, StateId>, StateId> ids;
    std::deque<std::pair<StateId, StateId>> queue;
    auto intern = [&](StateId x, StateId y) {
        auto [it, fresh] = ids.try_emplace({x, y}, static_cast<StateId>(ids.size()));
        if (fresh) {
            StateId s = out.add_state("(" + state_name(a, x) + "," + state_name(b, y) + ")");
            if (a.is_marked(x) && b.is_marked(y)) out.mark(s);
            queue.emplace_back(x, y);
        }
        return it->second;
    };
    StateId init = intern(a.initial(), b.initial());
    out.set_initial(init);
    while (!queue.empty()) {
        auto [x, y] = queue.front();
        queue.pop_front();
        StateId src = ids.at({x, y});
        for (EventId e : alphabet) {
            bool in_a = a.alphabet().contains(e);
            bool in_b = b.alphabet().contains(e);
            std::optional<StateId> nx = in_a ? a.target(x, e) : std::optional<StateId>(x);
            std::optional<StateId> ny = in_b ? b.target(y, e) : std::optional<StateId>(y);
            if (nx && ny) out.add_transition(src, e, intern(*nx, *ny));
        }
    }
    return out;
}

Generator determinize(const NondetAutomaton& n) {
    using Subset = std::vector<StateId>;
    auto closure = [&](Subset s) {
        std::deque<StateId> queue(s.begin(), s.end());
        std::vector<char> in(n.num_states(), 0);
        for (StateId q : s) in[q] = 1;
        while (!queue.empty()) {
            StateId q = queue.front();
            queue.pop_front();
            for (auto [e, t] : n.transitions_from(q))
                if (e == NondetAutomaton::kSilent && !in[t]) {
                    in[t] = 1;
                    queue.push_back(t);
                }
        }
        Subset out;
        for (StateId q = 0; q < n.num_states(); ++q)
            if (in[q]) out.push_back(q);
        return out;
    };
    auto subset_label = [&](const Subset& s) {
        std::string l = "{";
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (i) l += ',';
            const std::string& sl = n.label(s[i]);
            l += sl.empty() ? std::to_string(s[i]) : sl;
        }
        return l + "}";
    };

    Generator out(n.shared_table(), n.alphabet());
    Subset init = closure(n.initial_states());
    if (init.empty()) return out;

    std::map<Subset, StateId> ids;
    std::deque<Subset> queue;
    auto intern = [&](const Subset& s) {
        auto [it, fresh] = ids.try_emplace(s, static_cast<StateId>(ids.size()));
        if (fresh) {
            StateId q = out.add_state(subset_label(s));
            for (StateId m : s)
                if (n.is_marked(m)) {
                    out.mark(q);
                    break;
                }
            queue.push_back(s);
        }
        return it->second;
    };
    out.set_initial(intern(init));
    while (!queue.empty()) {
        Subset s = queue.front();
        queue.pop_front();
        StateId src = ids.at(s);
        for (EventId e : n.alphabet()) {
            Subset next;
            for (StateId q : s)
                for (auto [f, t] : n.transitions_from(q))
                    if (f == e) next.push_back(t);
            if (next.empty()) continue;
            std::sort(next.begin(), next.end());
            next.erase(std::unique(next.begin(), next.end()), next.end());
            next = closure(std::move(next));
            out.add_transition(src, e, intern(next));
        }
    }
    return out;
}

namespace {

bool accepting(const Generator& g, StateId s, LanguageKind kind) {
    return kind == LanguageKind::generated || g.is_marked(s);
}

struct UnionFind {
    std::vector<StateId> parent;
    explicit UnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    StateId find(StateId x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(StateId x, StateId y) {
        x = find(x);
        y = find(y);
        if (x == y) return false;
        parent[x] = y;
        return true;
    }
};

}  // namespace

bool lang_equal(const Generator& a, const Generator& b, LanguageKind kind) {
    check_same_alphabet(a, b);
    // Dead states na resp. nb stand in for missing transitions.
    StateId na = static_cast<StateId>(a.num_states());
    StateId nb = static_cast<StateId>(b.num_states());
    auto accept_a = [&](StateId s) { return s != na && accepting(a, s, kind); };
    auto accept_b = [&](StateId s) { return s != nb && accepting(b, s, kind); };

    UnionFind uf(static_cast<std::size_t>(na) + 1 + nb + 1);
    auto bid = [&](StateId s) { return static_cast<StateId>(na + 1 + s); };
    std::deque<std::pair<StateId, StateId>> queue;
    StateId ia = a.has_initial() ? a.initial() : na;
    StateId ib = b.has_initial() ? b.initial() : nb;
    if (accept_a(ia) != accept_b(ib)) return false;
    uf.unite(ia, bid(ib));
    queue.emplace_back(ia, ib);
    while (!queue.empty()) {
        auto [x, y] = queue.front();
        queue.pop_front();
        for (EventId e : a.alphabet()) {
            StateId nx = na, ny = nb;
            if (x != na)
                if (auto t = a.target(x, e)) nx = *t;
            if (y != nb)
                if (auto t = b.target(y, e)) ny = *t;
            if (accept_a(nx) != accept_b(ny)) return false;
            if (uf.unite(nx, bid(ny))) queue.emplace_back(nx, ny);
        }
    }
    return true;
}

std::optional<Word> word_in_difference(const Generator& a, const Generator& b,
                                       LanguageKind kind) {
    check_same_alphabet(a, b);
    if (!a.has_initial()) return std::nullopt;
    StateId nb = static_cast<StateId>(b.num_states());
    StateId ib = b.has_initial() ? b.initial() : nb;
    auto accept_b = [&](StateId s) { return s != nb && accepting(b, s, kind); };

    std::map<std::pair<StateId, StateId>, std::pair<std::pair<StateId, StateId>, EventId>> parent;
    std::deque<std::pair<StateId, StateId>> queue;
    auto reconstruct = [&](std::pair<StateId, StateId> at) {
        Word w;
        std::pair<StateId, StateId> start{a.initial(), ib};
        while (at != start) {
            auto [prev, e] = parent.at(at);
            w.push_back(e);
            at = prev;
        }
        std::reverse(w.begin(), w.end());
        return w;
    };

    std::pair<StateId, StateId> init{a.initial(), ib};
    if (accepting(a, init.first, kind) && !accept_b(init.second)) return Word{};
    std::vector<std::vector<char>> seen(a.num_states(), std::vector<char>(nb + 1, 0));
    seen[init.first][init.second] = 1;
    queue.push_back(init);
    while (!queue.empty()) {
        auto cur = queue.front();
        queue.pop_front();
        for (auto [e, nx] : a.transitions_from(cur.first)) {
            StateId ny = nb;
            if (cur.second != nb)
                if (auto t = b.target(cur.second, e)) ny = *t;
            std::pair<StateId, StateId> next{nx, ny};
            if (seen[nx][ny]) continue;
            seen[nx][ny] = 1;
            parent[next] = {cur, e};
            if (accepting(a, nx, kind) && !accept_b(ny)) return reconstruct(next);
            queue.push_back(next);
        }
    }
    return std::nullopt;
}

bool lang_includes(const Generator& a, const Generator& b, LanguageKind kind) {
    return !word_in_difference(b, a, kind).has_value();
}

Generator prefix_closure(const Generator& g) {
    Generator t = trim(g);
    Generator out(t.shared_table(), t.alphabet());
    for (StateId s = 0; s < t.num_states(); ++s) {
        out.add_state(t.label(s));
        out.mark(s);
    }
    for (StateId s = 0; s < t.num_states(); ++s)
        for (auto [e, q] : t.transitions_from(s)) out.add_transition(s, e, q);
    if (t.has_initial()) out.set_initial(t.initial());
    return out;
}

Generator generated_recognizer(const Generator& g) {
    auto reach = internal::reachable_states(g);
    std::vector<StateId> remap(g.num_states(), kNoState);
    Generator out(g.shared_table(), g.alphabet());
    for (StateId s = 0; s < g.num_states(); ++s)
        if (reach[s]) {
            remap[s] = out.add_state(g.label(s));
            out.mark(remap[s]);
        }
    for (StateId s = 0; s < g.num_states(); ++s) {
        if (remap[s] == kNoState) continue;
        for (auto [e, t] : g.transitions_from(s)) out.add_transition(remap[s], e, remap[t]);
    }
    if (g.has_initial()) out.set_initial(remap[g.initial()]);
    return out;
}

bool is_nonblocking(const Generator& g) { return !blocking_witness(g).has_value(); }

std::optional<Word> blocking_witness(const Generator& g) {
    auto coreach = internal::coreachable_states(g);
    auto words = internal::shortest_words(g);
    std::optional<Word> best;
    for (StateId s = 0; s < g.num_states(); ++s) {
        if (!words[s] || coreach[s]) continue;
        if (!best || words[s]->size() < best->size() ||
            (words[s]->size() == best->size() && *words[s] < *best))
            best = words[s];
    }
    return best;
}

namespace {

void enumerate_rec(const Generator& g, StateId s, std::size_t left, LanguageKind kind,
                   Word& current, std::vector<Word>& out) {
    if (accepting(g, s, kind)) out.push_back(current);
    if (left == 0) return;
    for (auto [e, t] : g.transitions_from(s)) {
        current.push_back(e);
        enumerate_rec(g, t, left - 1, kind, current, out);
        current.pop_back();
    }
}

}  // namespace

std::vector<Word> enumerate_words(const Generator& g, std::size_t max_len, LanguageKind kind) {
    std::vector<Word> out;
    if (!g.has_initial()) return out;
    Word current;
    enumerate_rec(g, g.initial(), max_len, kind, current, out);
    return out;
}

}  // namespace ccs
