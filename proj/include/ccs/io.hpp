#ifndef CCS_IO_HPP
#define CCS_IO_HPP

#include <filesystem>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "ccs/coordination.hpp"
#include "ccs/generator.hpp"

namespace ccs {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& message);

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Result of parsing one generator file: the events it declared (in file
/// order) and the automaton itself.
struct GeneratorFile {
    std::vector<EventId> declared_events;
    Generator generator;
};

/// Parses the line-oriented generator format:
///
///   EVENTS            one `name c|u o|uo` per line
///   STATES n
///   INITIAL id        `-` for the empty language
///   MARKED id...      possibly empty
///   TRANSITIONS       one `src event dst` per line
///
/// `#` starts a comment. Events merge into the shared table; re-declaring an
/// event with different flags is an error.
GeneratorFile parse_generator(std::string_view text, const std::shared_ptr<EventTable>& table);

/// Canonical printer: events in registration order, marked states ascending,
/// transitions by (source, event order). print -> parse -> print is
/// byte-identical.
std::string print_generator(const Generator& g);

enum class ObservationMode { full, from_flags };

/// Parsed problem manifest (`key=value` lines): file paths are resolved
/// against the manifest directory.
struct ProblemManifest {
    std::filesystem::path g1, g2, spec;
    std::vector<std::string> sigma_k_names;
    std::optional<std::filesystem::path> coordinator;  // absent = auto
    ObservationMode observation = ObservationMode::from_flags;
};

ProblemManifest parse_manifest(std::string_view text, const std::filesystem::path& base_dir);

/// All parts of a problem loaded from disk, before Problem-invariant checks.
struct LoadedProblem {
    std::shared_ptr<EventTable> table;
    Generator g1, g2, spec;
    EventSet sigma_k;
    std::optional<Generator> coordinator;
    ObservationMode observation = ObservationMode::from_flags;
};

LoadedProblem load_problem(const std::filesystem::path& manifest_path);

Generator load_generator_file(const std::filesystem::path& path,
                              const std::shared_ptr<EventTable>& table);

/// Builds and validates the CoordinationProblem from loaded parts.
CoordinationProblem to_problem(const LoadedProblem& lp);

ObservationModel observation_model(const LoadedProblem& lp);

}  // namespace ccs

#endif
