#ifndef CCS_SYNTHESIS_HPP
#define CCS_SYNTHESIS_HPP

#include "ccs/generator.hpp"
#include "ccs/projection.hpp"

namespace ccs {

/// Plant plus control and observation structure: the uncontrollable events
/// and the observation projection Q: Sigma* -> Sigma_o*.
struct ControlContext {
    Generator plant;
    EventSet uncontrollable;
    ProjectionSpec observation;

    /// Full observation.
    ControlContext(Generator plant_, EventSet uncontrollable_);
    ControlContext(Generator plant_, EventSet uncontrollable_, EventSet observable);
};

/// Controllability of Lm(k) w.r.t. L(plant): no uncontrollable plant event
/// may leave the closure. Witness is (word, event) on failure.
Decision is_controllable(const Generator& k, const ControlContext& ctx);

/// Supremal controllable sublanguage of Lm(k) n Lm(plant) w.r.t. L(plant)
/// and the uncontrollable events. May be the empty language.
Generator sup_c(const Generator& k, const ControlContext& ctx);

/// Observability w.r.t. L(plant), the given controllable events and the
/// context observation, decided exactly by a pair-tracking construction.
/// Witness is (word, aux_word, event) = (s, s', sigma) with Q(s) = Q(s'),
/// s'sigma in the closure and s sigma in L \ closure.
Decision is_observable(const Generator& k, const ControlContext& ctx,
                       const EventSet& controllable);

/// Normality: closure(Lm(k)) == Q^{-1}Q(closure) n L(plant).
Decision is_normal(const Generator& k, const ControlContext& ctx);

/// Supremal normal sublanguage of Lm(k) n Lm(plant).
Generator sup_n(const Generator& k, const ControlContext& ctx);

/// Supremal controllable-and-normal sublanguage of Lm(k) n Lm(plant).
Generator sup_cn(const Generator& k, const ControlContext& ctx);

/// Lm(plant)-closedness: Lm(k) == closure(Lm(k)) n Lm(plant).
bool is_lm_closed(const Generator& k, const Generator& plant);

/// Nonconflictingness: closure(Lm(a) || Lm(b)) == closure(Lm(a)) || closure(Lm(b)).
/// Witness is a word of the joint closure that cannot reach joint marking.
Decision nonconflicting(const Generator& a, const Generator& b);

}  // namespace ccs

#endif
