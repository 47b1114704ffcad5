#ifndef CCS_STRUCTURAL_HPP
#define CCS_STRUCTURAL_HPP

#include "ccs/generator.hpp"
#include "ccs/projection.hpp"

namespace ccs {

/// Verdict of a structural-condition check. The witness, when present, is
/// replayable against the input generator.
using ConditionVerdict = Decision;

/// L-observer property of the projection for L = Lm(lang): every projected
/// continuation of an observed string is realizable by a concrete
/// continuation with that exact observation. Witness: word = s, aux_word = t.
ConditionVerdict is_observer(const ProjectionSpec& spec, const Generator& lang);

/// Output control consistency of the projection for the prefix-closed
/// language of lang: on any path segment between consecutive target events
/// that ends with an uncontrollable target event, every interior event is
/// uncontrollable. Witness: word = the violating string, event = its last
/// event. Rejects non-prefix-closed input.
ConditionVerdict is_occ(const ProjectionSpec& spec, const Generator& lang,
                        const EventSet& uncontrollable);

/// Local control consistency: whenever an uncontrollable target event is
/// reachable from a string via non-target events, it is also reachable via
/// uncontrollable non-target events. Witness: (word, event) = (s, sigma_u).
/// Rejects non-prefix-closed input.
ConditionVerdict is_lcc(const ProjectionSpec& spec, const Generator& lang,
                        const EventSet& uncontrollable);

}  // namespace ccs

#endif
