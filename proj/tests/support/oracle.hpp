#ifndef CCS_TESTS_ORACLE_HPP
#define CCS_TESTS_ORACLE_HPP

#include <functional>
#include <optional>
#include <vector>

#include "ccs/coordination.hpp"
#include "ccs/generator.hpp"

// Definition-level reference computations used to cross-check the library.
// Everything here works on explicit word sets, membership walks and bounded
// searches; none of it reuses the library's fixpoint or product machinery.
namespace ccs::test::oracle {

/// All words of the language up to the length bound, by direct walk over the
/// transition structure.
std::vector<Word> dfa_words(const Generator& g, std::size_t max_len,
                            LanguageKind kind = LanguageKind::marked);

/// NFA acceptance by subset simulation with silent closure.
bool nfa_accepts(const NondetAutomaton& n, const Word& w, LanguageKind kind);

/// Deterministic walker over some prefix-closed language; -1 initial means
/// the empty language.
struct Walker {
    EventSet alphabet;
    int initial = -1;
    std::function<std::optional<int>(int, EventId)> step;

    bool member(const Word& w) const;
};

/// Walker over the generated language L(g).
Walker generated_walker(const Generator& g);

/// Walker over a finite prefix-closed word set (given as its member words).
Walker closed_set_walker(const std::vector<Word>& closed_words, const EventSet& alphabet);

/// Walker over the synchronous product of two walkers' languages.
Walker product_walker(const Walker& a, const Walker& b);

/// Controllability of the finite language with marked words `words` w.r.t.
/// the walker's prefix-closed language and uncontrollable events:
/// closure(words) . u  n  L  <=  closure(words).
bool controllable(const std::vector<Word>& words, const Walker& plant,
                  const EventSet& uncontrollable);

/// Normality of the finite language w.r.t. the walker's language and the
/// observable events: closure == Q^-1 Q(closure) n L. Exact: the unbounded
/// side is searched with a saturating-length BFS over walker states.
bool normal(const std::vector<Word>& words, const Walker& plant, const EventSet& observable);

/// Observability of the finite language (enumerative definition check).
bool observable(const std::vector<Word>& words, const Walker& plant,
                const EventSet& controllable_events, const EventSet& observable_events);

/// Union of all subsets of `words` passing the respective definitional check
/// against Lm(plant) (the supremal sublanguage for union-closed properties).
std::vector<Word> sup_c_words(const std::vector<Word>& words, const Generator& plant,
                              const EventSet& uncontrollable);
std::vector<Word> sup_n_words(const std::vector<Word>& words, const Generator& plant,
                              const EventSet& observable);
std::vector<Word> sup_cn_words(const std::vector<Word>& words, const Generator& plant,
                               const EventSet& uncontrollable, const EventSet& observable);

/// Conditional controllability / normality of a finite sublanguage of the
/// problem's specification, straight from the three-part definitions.
bool cond_controllable(const std::vector<Word>& words, const CoordinationProblem& p);
bool cond_normal(const std::vector<Word>& words, const CoordinationProblem& p,
                 const EventSet& observable);

/// Union of all conditionally controllable (and conditionally normal)
/// subsets of the specification's marked words.
std::vector<Word> supcc_words(const std::vector<Word>& spec_words, const CoordinationProblem& p);
std::vector<Word> supccn_words(const std::vector<Word>& spec_words, const CoordinationProblem& p,
                               const EventSet& observable);

/// Synchronous product of two finite word sets, by recursive interleaving
/// with synchronization on shared events.
std::vector<Word> sync_words(const std::vector<Word>& a, const EventSet& alphabet_a,
                             const std::vector<Word>& b, const EventSet& alphabet_b);

/// Bounded-quantifier search for an observer violation: closure words s up
/// to word_bound against observations t up to observation_bound, with exact
/// realizability checks. Any violation found is real; absence proves nothing
/// beyond the bounds.
bool observer_violation_within(const Generator& lang, const EventSet& target,
                               std::size_t word_bound, std::size_t observation_bound);

/// Replay helpers for structural-condition witnesses (bounded enumeration of
/// the defining quantifiers; bound applies to continuation search).
bool replay_observer_violation(const Generator& lang, const EventSet& target, const Word& s,
                               const Word& t, std::size_t bound = 8);
bool replay_occ_violation(const Generator& lang, const EventSet& target,
                          const EventSet& uncontrollable, const Word& violating);
bool replay_lcc_violation(const Generator& lang, const EventSet& target,
                          const EventSet& uncontrollable, const Word& s, EventId sigma_u,
                          std::size_t bound = 8);

}  // namespace ccs::test::oracle

#endif
