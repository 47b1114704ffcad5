#ifndef CCS_REPORT_HPP
#define CCS_REPORT_HPP

#include <string>

#include <json.hpp>

#include "ccs/coordination.hpp"
#include "ccs/projection.hpp"

namespace ccs {

enum class ReportMode { human, machine };

nlohmann::json generator_to_json(const Generator& g);
nlohmann::json witness_to_json(const EventTable& table, const Witness& w);
nlohmann::json verdict_to_json(const EventTable& table, const Verdict& v);
nlohmann::json report_to_json(const SynthesisReport& r, const EventTable& table);
nlohmann::json closed_loop_to_json(const ClosedLoopReport& r, const EventTable& table);
nlohmann::json cond_check_to_json(const CondCheck& c, const EventTable& table);
nlohmann::json cd_result_to_json(const CdResult& r, const EventTable& table);

/// Synthesis report as text: aligned verdict table plus marked-word samples
/// (length <= 8) in human mode, one stable JSON document in machine mode.
std::string emit_report(const SynthesisReport& r, const EventTable& table, ReportMode mode);

std::string emit_closed_loop(const ClosedLoopReport& r, const EventTable& table, ReportMode mode);

/// Word sample helper shared by the human renderers.
std::string language_sample(const Generator& g, std::size_t max_len = 8,
                            std::size_t max_words = 24);

}  // namespace ccs

#endif
