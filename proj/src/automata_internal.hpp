#ifndef CCS_AUTOMATA_INTERNAL_HPP
#define CCS_AUTOMATA_INTERNAL_HPP

#include <optional>
#include <vector>

#include "ccs/generator.hpp"

namespace ccs::internal {

/// Totalizes the transition function by routing missing edges to an unmarked
/// sink. A generator without initial state gains a sink initial.
Generator complete(const Generator& g);

/// Flips the marking of every state. Meaningful on completed automata, where
/// the result recognizes the complement of the marked language.
Generator invert_marks(const Generator& g);

/// Recognizer of the marked language followed by anything: once an accepting
/// state is visited, every extension is accepted.
Generator suffix_saturate(const Generator& g);

/// Shortest word from the initial state to each state (BFS in event order);
/// entry is nullopt for unreachable states.
std::vector<std::optional<Word>> shortest_words(const Generator& g);

std::vector<char> reachable_states(const Generator& g);
std::vector<char> coreachable_states(const Generator& g);

}  // namespace ccs::internal

#endif
