#ifndef CCS_GENERATOR_HPP
#define CCS_GENERATOR_HPP

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ccs/events.hpp"

namespace ccs {

enum class LanguageKind { marked, generated };

/// Deterministic finite automaton with marked states. Represents the pair
/// (generated language, marked language) of a plant, specification or
/// supervisor. States are dense integers; a side table of labels records
/// provenance (original names, subset contents) for diagnostics.
///
/// The empty language is a generator with zero states and no initial state;
/// every operation accepts it.
class Generator {
public:
    Generator(std::shared_ptr<const EventTable> table, EventSet alphabet);

    static Generator empty_language(std::shared_ptr<const EventTable> table, EventSet alphabet);

    StateId add_state(std::string label = {});
    void set_initial(StateId s);
    void mark(StateId s);
    /// Adds src --e--> dst. Throws if e is outside the alphabet or a
    /// transition on (src, e) already exists (determinism).
    void add_transition(StateId src, EventId e, StateId dst);

    const EventTable& table() const { return *table_; }
    const std::shared_ptr<const EventTable>& shared_table() const { return table_; }
    const EventSet& alphabet() const { return alphabet_; }

    std::size_t num_states() const { return transitions_.size(); }
    std::size_t num_transitions() const;
    bool has_initial() const { return initial_ != kNoState; }
    StateId initial() const { return initial_; }
    bool is_marked(StateId s) const { return marked_.at(s) != 0; }
    std::vector<StateId> marked_states() const;
    std::optional<StateId> target(StateId src, EventId e) const;
    std::span<const std::pair<EventId, StateId>> transitions_from(StateId s) const;
    const std::string& label(StateId s) const { return labels_.at(s); }

    /// True for the zero-state representation of the empty language, and for
    /// any generator whose language of the given kind is empty.
    bool accepts(const Word& w, LanguageKind kind = LanguageKind::marked) const;

private:
    std::shared_ptr<const EventTable> table_;
    EventSet alphabet_;
    std::vector<std::vector<std::pair<EventId, StateId>>> transitions_;  // sorted by event
    std::vector<char> marked_;
    std::vector<std::string> labels_;
    StateId initial_ = kNoState;
};

/// Nondeterministic intermediate form produced by projection and lifting.
/// kSilent marks an erased event; it is never part of the alphabet.
class NondetAutomaton {
public:
    static constexpr EventId kSilent = std::numeric_limits<EventId>::max();

    NondetAutomaton(std::shared_ptr<const EventTable> table, EventSet alphabet);

    StateId add_state(std::string label = {});
    void add_initial(StateId s);
    void mark(StateId s);
    /// e may be kSilent; parallel edges are deduplicated.
    void add_transition(StateId src, EventId e, StateId dst);

    const EventTable& table() const { return *table_; }
    const std::shared_ptr<const EventTable>& shared_table() const { return table_; }
    const EventSet& alphabet() const { return alphabet_; }
    std::size_t num_states() const { return transitions_.size(); }
    const std::vector<StateId>& initial_states() const { return initial_; }
    bool is_marked(StateId s) const { return marked_.at(s) != 0; }
    std::span<const std::pair<EventId, StateId>> transitions_from(StateId s) const;
    const std::string& label(StateId s) const { return labels_.at(s); }

private:
    std::shared_ptr<const EventTable> table_;
    EventSet alphabet_;
    std::vector<std::vector<std::pair<EventId, StateId>>> transitions_;
    std::vector<char> marked_;
    std::vector<std::string> labels_;
    std::vector<StateId> initial_;
};

/// Restricts to states reachable from the initial state and co-reachable to a
/// marked state. Preserves the marked language; the generated language of the
/// result is the prefix closure of the marked language.
Generator trim(const Generator& g);

/// Synchronous composition: shared events synchronize, private events
/// interleave. L(a || b) = L(a) || L(b), and likewise for marked languages.
Generator sync_product(const Generator& a, const Generator& b);

/// Subset construction with silent-closure. Preserves both the generated and
/// the marked language; a subset state is marked iff it contains a marked
/// state.
Generator determinize(const NondetAutomaton& n);

/// Exact language equality via simultaneous reachability with union-find
/// (Hopcroft-Karp style; no minimization). Requires equal alphabets.
bool lang_equal(const Generator& a, const Generator& b, LanguageKind kind = LanguageKind::marked);

/// True iff the language of a includes the language of b. Requires equal
/// alphabets.
bool lang_includes(const Generator& a, const Generator& b, LanguageKind kind = LanguageKind::marked);

/// Shortest word (BFS, event-registration tie-break) accepted by a but not by
/// b, or nullopt when the language of a is included in that of b.
std::optional<Word> word_in_difference(const Generator& a, const Generator& b,
                                       LanguageKind kind = LanguageKind::marked);

/// Recognizer of the prefix closure of the marked language: trim, then mark
/// every state.
Generator prefix_closure(const Generator& g);

/// Recognizer whose marked language is the generated language of g (every
/// reachable state marked; no co-reachability pruning).
Generator generated_recognizer(const Generator& g);

/// True iff every reachable state is co-reachable.
bool is_nonblocking(const Generator& g);

/// Shortest word reaching a reachable, non-co-reachable state; nullopt when
/// nonblocking.
std::optional<Word> blocking_witness(const Generator& g);

/// All words of the language with length <= max_len, in lexicographic order
/// by event registration.
std::vector<Word> enumerate_words(const Generator& g, std::size_t max_len,
                                  LanguageKind kind = LanguageKind::marked);

}  // namespace ccs

#endif
