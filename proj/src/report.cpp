#include "ccs/report.hpp"

#include <iomanip>
#include <sstream>

namespace ccs {

using nlohmann::json;

json generator_to_json(const Generator& g) {
    const EventTable& table = g.table();
    json alphabet = json::array();
    for (EventId e : g.alphabet()) alphabet.push_back(table.name(e));
    json marked = json::array();
    for (StateId s : g.marked_states()) marked.push_back(s);
    json transitions = json::array();
    for (StateId s = 0; s < g.num_states(); ++s)
        for (auto [e, t] : g.transitions_from(s))
            transitions.push_back(json::array({s, table.name(e), t}));
    json out;
    out["alphabet"] = std::move(alphabet);
    out["states"] = g.num_states();
    if (g.has_initial())
        out["initial"] = g.initial();
    else
        out["initial"] = nullptr;
    out["marked"] = std::move(marked);
    out["transitions"] = std::move(transitions);
    return out;
}

namespace {

json word_to_json(const EventTable& table, const Word& w) {
    json out = json::array();
    for (EventId e : w) out.push_back(table.name(e));
    return out;
}

}  // namespace

json witness_to_json(const EventTable& table, const Witness& w) {
    json out;
    out["word"] = word_to_json(table, w.word);
    out["event"] = w.event ? json(table.name(*w.event)) : json(nullptr);
    out["aux_word"] = w.aux_word ? word_to_json(table, *w.aux_word) : json(nullptr);
    return out;
}

json verdict_to_json(const EventTable& table, const Verdict& v) {
    json out;
    out["name"] = v.name;
    out["level"] = v.level;
    out["holds"] = v.holds;
    out["witness"] = v.witness ? witness_to_json(table, *v.witness) : json(nullptr);
    return out;
}

json report_to_json(const SynthesisReport& r, const EventTable& table) {
    json out;
    out["kind"] = r.kind;
    json langs;
    langs["sup_k"] = generator_to_json(r.sup_k);
    langs["sup_1k"] = generator_to_json(r.sup_1k);
    langs["sup_2k"] = generator_to_json(r.sup_2k);
    langs["pk_sup_1k"] = generator_to_json(r.pk_sup_1k);
    langs["pk_sup_2k"] = generator_to_json(r.pk_sup_2k);
    langs["intersection"] = generator_to_json(r.intersection);
    out["languages"] = std::move(langs);
    json verdicts = json::array();
    for (const Verdict& v : r.verdicts) verdicts.push_back(verdict_to_json(table, v));
    out["verdicts"] = std::move(verdicts);
    out["candidate"] = generator_to_json(r.candidate);
    switch (r.result_kind) {
        case ResultKind::language: out["result_kind"] = "language"; break;
        case ResultKind::empty_language: out["result_kind"] = "empty_language"; break;
        case ResultKind::withheld: out["result_kind"] = "withheld"; break;
    }
    out["justification"] = r.justification.empty() ? json(nullptr) : json(r.justification);
    out["result"] = r.result ? generator_to_json(*r.result) : json(nullptr);
    return out;
}

json cond_check_to_json(const CondCheck& c, const EventTable& table) {
    json out;
    out["holds"] = c.holds;
    json items = json::array();
    for (const Verdict& v : c.items) items.push_back(verdict_to_json(table, v));
    out["items"] = std::move(items);
    return out;
}

json cd_result_to_json(const CdResult& r, const EventTable& table) {
    json out;
    out["holds"] = r.holds;
    out["counterexample"] =
        r.counterexample ? word_to_json(table, *r.counterexample) : json(nullptr);
    return out;
}

json closed_loop_to_json(const ClosedLoopReport& r, const EventTable& table) {
    json out;
    out["holds"] = r.all();
    json checks = json::array();
    for (const Verdict* v : r.checks()) checks.push_back(verdict_to_json(table, *v));
    out["checks"] = std::move(checks);
    return out;
}

std::string language_sample(const Generator& g, std::size_t max_len, std::size_t max_words) {
    std::vector<Word> words = enumerate_words(g, max_len, LanguageKind::marked);
    std::string out;
    std::size_t shown = std::min(words.size(), max_words);
    for (std::size_t i = 0; i < shown; ++i) {
        if (i) out += ", ";
        out += format_word(g.table(), words[i]);
    }
    if (words.size() > shown) out += ", ...";
    if (words.empty()) out = "(empty language)";
    return out;
}

namespace {

std::string witness_text(const EventTable& table, const Witness& w) {
    std::string out = "word=" + format_word(table, w.word);
    if (w.event) out += ", event=" + table.name(*w.event);
    if (w.aux_word) out += ", aux=" + format_word(table, *w.aux_word);
    return out;
}

}  // namespace

std::string emit_report(const SynthesisReport& r, const EventTable& table, ReportMode mode) {
    if (mode == ReportMode::machine) return report_to_json(r, table).dump(2) + "\n";

    std::ostringstream out;
    out << "=== " << r.kind << " synthesis report ===\n";
    out << "languages (marked words up to length 8):\n";
    auto lang_row = [&](const char* name, const Generator& g) {
        out << "  " << std::left << std::setw(14) << name << language_sample(g) << '\n';
    };
    lang_row("sup_k", r.sup_k);
    lang_row("sup_1k", r.sup_1k);
    lang_row("sup_2k", r.sup_2k);
    lang_row("intersection", r.intersection);
    lang_row("candidate", r.candidate);
    out << "verdicts:\n";
    for (const Verdict& v : r.verdicts) {
        std::string name = v.name + (v.level.empty() ? "" : " [" + v.level + "]");
        out << "  " << (v.holds ? "[pass] " : "[FAIL] ") << std::left << std::setw(44) << name;
        if (v.witness) out << ' ' << witness_text(table, *v.witness);
        out << '\n';
    }
    switch (r.result_kind) {
        case ResultKind::language:
            out << "result: " << language_sample(*r.result) << '\n';
            out << "justified by: " << r.justification << '\n';
            break;
        case ResultKind::empty_language:
            out << "result: empty language\n";
            out << "justified by: " << r.justification << '\n';
            break;
        case ResultKind::withheld:
            out << "result: withheld (no sufficient condition satisfied)\n";
            out << "unjustified candidate (possibly neither supremal nor conditionally "
                   "controllable): "
                << language_sample(r.candidate) << '\n';
            break;
    }
    return out.str();
}

std::string emit_closed_loop(const ClosedLoopReport& r, const EventTable& table,
                             ReportMode mode) {
    if (mode == ReportMode::machine) return closed_loop_to_json(r, table).dump(2) + "\n";
    std::ostringstream out;
    out << "=== closed-loop verification ===\n";
    for (const Verdict* v : r.checks()) {
        out << "  " << (v->holds ? "[pass] " : "[FAIL] ") << std::left << std::setw(30)
            << v->name;
        if (v->witness) out << ' ' << witness_text(table, *v->witness);
        out << '\n';
    }
    out << (r.all() ? "all checks passed\n" : "some checks failed\n");
    return out.str();
}

}  // namespace ccs
