#ifndef CCS_PROJECTION_HPP
#define CCS_PROJECTION_HPP

#include "ccs/generator.hpp"

namespace ccs {

/// Natural projection P: source* -> target*, erasing events outside target.
struct ProjectionSpec {
    EventSet source;
    EventSet target;

    ProjectionSpec(EventSet src, EventSet tgt);

    bool is_identity() const { return source == target; }

    Word apply(const Word& w) const;
};

/// Projects both languages of g: L(result) = P(L(g)), Lm(result) = P(Lm(g)).
/// Requires g's alphabet to equal spec.source.
Generator project(const Generator& g, const ProjectionSpec& spec);

/// Convenience: projects onto target intersected with g's alphabet, so a
/// wider event set can be named without violating target <= source.
Generator project_onto(const Generator& g, const EventSet& target);

/// Inverse projection: self-loops every event of bigger outside g's alphabet
/// at every state, so both languages become the full preimages.
Generator lift(const Generator& g, const EventSet& bigger);

struct CdResult {
    bool holds = false;
    /// Word in P1k(K) || P2k(K) but not in K.
    std::optional<Word> counterexample;

    explicit operator bool() const { return holds; }
};

/// Conditional decomposability: Lm(k) == P_{1+k}(Lm(k)) || P_{2+k}(Lm(k))
/// for the alphabets s1, s2, sk with s1 n s2 <= sk. Only the inclusion from
/// the composition into K is checked; the converse always holds.
CdResult check_cd(const Generator& k, const EventSet& s1, const EventSet& s2,
                  const EventSet& sk);

/// Greedy coordinator-alphabet extension: starting from sk0 (united with
/// s1 n s2), adds events of (s1 u s2) \ sk0 in registration order until
/// check_cd holds. Worst case returns s1 u s2, which always decomposes.
EventSet extend_sigma_k(const Generator& k, const EventSet& s1, const EventSet& s2,
                        const EventSet& sk0);

}  // namespace ccs

#endif
