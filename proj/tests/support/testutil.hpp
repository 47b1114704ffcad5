#ifndef CCS_TESTS_TESTUTIL_HPP
#define CCS_TESTS_TESTUTIL_HPP

#include <memory>
#include <random>
#include <vector>

#include "ccs/coordination.hpp"
#include "ccs/generator.hpp"

namespace ccs::test {

struct Rng {
    std::mt19937 eng;

    explicit Rng(std::uint32_t seed) : eng(seed) {}

    std::size_t below(std::size_t n) {
        return std::uniform_int_distribution<std::size_t>(0, n - 1)(eng);
    }
    bool chance(double p) { return std::uniform_real_distribution<>(0.0, 1.0)(eng) < p; }
    template <typename T>
    const T& pick(const std::vector<T>& v) {
        return v[below(v.size())];
    }
};

/// Fresh table of n events named e0..e(n-1) with random attribute flags.
std::shared_ptr<EventTable> random_table(Rng& rng, std::size_t n_events,
                                         double controllable_prob = 0.5,
                                         double observable_prob = 0.7);

std::shared_ptr<EventTable> named_table(
    const std::vector<std::tuple<std::string, bool, bool>>& events);

EventSet random_subset(Rng& rng, const EventSet& from, bool nonempty);

struct RandomGenOptions {
    std::size_t max_states = 6;
    double density = 0.5;
    double marked_prob = 0.5;
    bool trim_result = true;
};

Generator random_generator(Rng& rng, std::shared_ptr<const EventTable> table,
                           const EventSet& alphabet, const RandomGenOptions& opts = {});

NondetAutomaton random_nfa(Rng& rng, std::shared_ptr<const EventTable> table,
                           const EventSet& alphabet, std::size_t max_states = 6);

/// Trie recognizer marking exactly the given words.
Generator recognizer_from_words(std::shared_ptr<const EventTable> table, const EventSet& alphabet,
                                const std::vector<Word>& words);

/// Trie recognizer of the prefix closure of the given words (all states marked).
Generator closure_recognizer_from_words(std::shared_ptr<const EventTable> table,
                                        const EventSet& alphabet,
                                        const std::vector<Word>& words);

/// Sorted, deduplicated word set helpers.
std::vector<Word> sorted_unique(std::vector<Word> words);
std::vector<Word> prefix_set(const std::vector<Word>& words);
std::vector<Word> project_words(const std::vector<Word>& words, const EventSet& target);
bool contains_word(const std::vector<Word>& sorted_words, const Word& w);

/// Random coordination instance with a finite specification, conditionally
/// decomposable by construction (the coordinator alphabet is extended until
/// both the specification and its closure decompose).
struct CoordInstance {
    std::shared_ptr<EventTable> table;
    CoordinationProblem problem;
    std::vector<Word> spec_words;
};

std::optional<CoordInstance> random_coord_instance(Rng& rng, bool all_controllable = false,
                                                   bool all_observable = false);

/// The two desk examples: two four-state subsystems sharing c/u resp. a/b,
/// with a six- resp. five-state specification over the joint alphabet (all
/// states marked).
struct ExampleFixture {
    std::shared_ptr<EventTable> table;
    Generator g1, g2, spec;
    EventSet sigma_k;

    EventId id(const std::string& name) const { return table->require(name); }
    Word word(std::initializer_list<const char*> names) const;
    CoordinationProblem problem() const { return make_problem(g1, g2, sigma_k, spec); }
};

ExampleFixture make_example1();
ExampleFixture make_example2();

}  // namespace ccs::test

#endif
