#ifndef CCS_COORDINATION_HPP
#define CCS_COORDINATION_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "ccs/generator.hpp"
#include "ccs/projection.hpp"
#include "ccs/structural.hpp"
#include "ccs/synthesis.hpp"

namespace ccs {

/// Raised when a coordination problem violates a structural invariant
/// (alphabets, specification containment, conditional decomposability).
class ProblemError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Which events each supervisor observes.
struct ObservationModel {
    EventSet observable;

    static ObservationModel full(const EventTable& table);
    static ObservationModel from_flags(const EventTable& table);
};

/// Two subsystems, a coordinator alphabet and a specification over the joint
/// alphabet, plus the (default-constructed) coordinator.
struct CoordinationProblem {
    std::shared_ptr<const EventTable> table;
    Generator g1, g2;
    EventSet sigma_k;
    Generator spec;  // K over sigma1 u sigma2
    Generator gk;    // coordinator over sigma_k

    const EventSet& sigma1() const { return g1.alphabet(); }
    const EventSet& sigma2() const { return g2.alphabet(); }
    EventSet sigma_union() const { return spec.alphabet(); }
    EventSet sigma_1k() const { return set_union(g1.alphabet(), sigma_k); }
    EventSet sigma_2k() const { return set_union(g2.alphabet(), sigma_k); }
};

/// Coordinator Gk = Pk(G1) || Pk(G2), each projection onto its subsystem's
/// share of the coordinator alphabet.
Generator build_coordinator(const Generator& g1, const Generator& g2, const EventSet& sigma_k);

/// Validates all Problem invariants (shared events inside sigma_k, sigma_k
/// inside the joint alphabet, K inside Lm(G1 || G2 || Gk), K and its closure
/// conditionally decomposable) and builds the coordinator when none is given.
/// Throws ProblemError with a diagnostic otherwise.
CoordinationProblem make_problem(Generator g1, Generator g2, EventSet sigma_k, Generator spec,
                                 std::optional<Generator> coordinator = std::nullopt);

/// One named check outcome, tagged with the level (k, 1+k, 2+k) or the
/// subsystem index it belongs to.
struct Verdict {
    std::string name;
    std::string level;
    bool holds = false;
    std::optional<Witness> witness;
};

/// Outcome of a three-level conditional check.
struct CondCheck {
    bool holds = false;
    std::vector<Verdict> items;

    const Verdict* first_failure() const;
    explicit operator bool() const { return holds; }
};

/// Conditional controllability of Lm(lang) (by default the specification)
/// w.r.t. the problem's generators and uncontrollable sets.
CondCheck is_cond_controllable(const CoordinationProblem& p, const Generator& lang);
CondCheck is_cond_controllable(const CoordinationProblem& p);

/// Conditionally closed: every level's projection is closed w.r.t. that
/// level's marked plant language.
CondCheck is_cond_closed(const CoordinationProblem& p, const Generator& lang);
CondCheck is_cond_closed(const CoordinationProblem& p);

CondCheck is_cond_observable(const CoordinationProblem& p, const Generator& lang,
                             const EventSet& controllable, const ObservationModel& obs);
CondCheck is_cond_observable(const CoordinationProblem& p, const ObservationModel& obs);

CondCheck is_cond_normal(const CoordinationProblem& p, const Generator& lang,
                         const ObservationModel& obs);
CondCheck is_cond_normal(const CoordinationProblem& p, const ObservationModel& obs);

enum class ResultKind { language, empty_language, withheld };

/// Everything a synthesis run produces: the three level languages, every
/// sufficient-condition verdict with witnesses, and the composed result when
/// some condition justified it. The candidate composition is reported even
/// when unjustified, flagged by result_kind == withheld.
struct SynthesisReport {
    std::string kind;  // "supcc" or "supccn"
    Generator sup_k, sup_1k, sup_2k;
    Generator pk_sup_1k, pk_sup_2k;  // coordinator-alphabet projections
    Generator intersection;          // pk_sup_1k n pk_sup_2k
    Generator candidate;             // sup_1k || sup_2k
    std::vector<Verdict> verdicts;
    std::string justification;  // empty when withheld
    ResultKind result_kind = ResultKind::withheld;
    std::optional<Generator> result;

    bool justified() const { return result_kind != ResultKind::withheld; }
    const Verdict* find(const std::string& name, const std::string& level = "") const;
};

/// Distributed synthesis of the supremal conditionally controllable
/// sublanguage. Justification routes, cheapest first: strong inclusion of
/// the coordinator language in both projections; nonconflicting levels with
/// a controllable intersection; coordinator-inclusion with observer and
/// OCC-or-LCC structure.
SynthesisReport synth_supcc(const CoordinationProblem& p);

/// Distributed synthesis of the supremal conditionally controllable and
/// conditionally normal sublanguage under the given observation model.
SynthesisReport synth_supccn(const CoordinationProblem& p, const ObservationModel& obs);

/// Per-check outcome of composing supervisors with the problem plants.
struct ClosedLoopReport {
    Verdict coordinator_inclusion;  // Lm(Sk || Gk) within Pk(K)
    Verdict inclusion_1, inclusion_2;
    Verdict nonblocking_k, nonblocking_1, nonblocking_2;
    Verdict equality;  // Lm(loop1) || Lm(loop2) equals the target

    bool all() const;
    std::vector<const Verdict*> checks() const;
};

/// Verifies the closed loop of supervisors sk (over sigma_k), s1 (over
/// sigma_1k) and s2 (over sigma_2k) against the target language (the
/// specification when omitted).
ClosedLoopReport verify_closed_loop(const CoordinationProblem& p, const Generator& s1,
                                    const Generator& s2, const Generator& sk,
                                    std::optional<Generator> target = std::nullopt);

}  // namespace ccs

#endif
