#include "ccs/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace ccs {

namespace {

struct Line {
    std::size_t number;
    std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
    std::vector<Line> lines;
    std::size_t number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view raw = text.substr(pos, end - pos);
        ++number;
        if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
        std::istringstream ss{std::string(raw)};
        Line line{number, {}};
        std::string tok;
        while (ss >> tok) line.tokens.push_back(tok);
        if (!line.tokens.empty()) lines.push_back(std::move(line));
        if (end == text.size()) break;
        pos = end + 1;
    }
    return lines;
}

StateId parse_state_id(const Line& line, const std::string& tok, std::size_t num_states) {
    std::size_t idx = 0;
    unsigned long v = 0;
    try {
        v = std::stoul(tok, &idx);
    } catch (const std::exception&) {
        throw ParseError(line.number, "expected a state id, got '" + tok + "'");
    }
    if (idx != tok.size()) throw ParseError(line.number, "expected a state id, got '" + tok + "'");
    if (v >= num_states)
        throw ParseError(line.number, "state id " + tok + " out of range (STATES " +
                                          std::to_string(num_states) + ")");
    return static_cast<StateId>(v);
}

}  // namespace

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

GeneratorFile parse_generator(std::string_view text, const std::shared_ptr<EventTable>& table) {
    if (!table) throw std::invalid_argument("null event table");
    auto lines = tokenize(text);
    std::size_t i = 0;
    auto expect_section = [&](const char* name) {
        if (i >= lines.size())
            throw ParseError(lines.empty() ? 1 : lines.back().number,
                             std::string("missing ") + name + " section");
        if (lines[i].tokens[0] != name)
            throw ParseError(lines[i].number,
                             std::string("expected ") + name + ", got '" + lines[i].tokens[0] + "'");
    };

    expect_section("EVENTS");
    if (lines[i].tokens.size() != 1)
        throw ParseError(lines[i].number, "EVENTS takes no arguments");
    ++i;
    std::vector<EventId> declared;
    while (i < lines.size() && lines[i].tokens[0] != "STATES") {
        const Line& line = lines[i];
        if (line.tokens.size() != 3)
            throw ParseError(line.number, "event line must be: name c|u o|uo");
        const std::string& name = line.tokens[0];
        bool controllable;
        if (line.tokens[1] == "c")
            controllable = true;
        else if (line.tokens[1] == "u")
            controllable = false;
        else
            throw ParseError(line.number, "controllability flag must be c or u");
        bool observable;
        if (line.tokens[2] == "o")
            observable = true;
        else if (line.tokens[2] == "uo")
            observable = false;
        else
            throw ParseError(line.number, "observability flag must be o or uo");
        if (auto existing = table->find(name)) {
            if (table->controllable(*existing) != controllable ||
                table->observable(*existing) != observable)
                throw ParseError(line.number,
                                 "event '" + name + "' re-declared with different attributes");
            if (std::find(declared.begin(), declared.end(), *existing) != declared.end())
                throw ParseError(line.number, "event '" + name + "' declared twice");
            declared.push_back(*existing);
        } else {
            declared.push_back(table->add(name, controllable, observable));
        }
        ++i;
    }

    expect_section("STATES");
    if (lines[i].tokens.size() != 2) throw ParseError(lines[i].number, "STATES takes one count");
    std::size_t num_states = 0;
    try {
        num_states = std::stoul(lines[i].tokens[1]);
    } catch (const std::exception&) {
        throw ParseError(lines[i].number, "invalid state count '" + lines[i].tokens[1] + "'");
    }
    ++i;

    Generator g(table, EventSet(declared));
    for (std::size_t s = 0; s < num_states; ++s) g.add_state();

    expect_section("INITIAL");
    if (lines[i].tokens.size() != 2)
        throw ParseError(lines[i].number, "INITIAL takes one state id or -");
    if (lines[i].tokens[1] != "-") {
        if (num_states == 0)
            throw ParseError(lines[i].number, "INITIAL must be - when STATES is 0");
        g.set_initial(parse_state_id(lines[i], lines[i].tokens[1], num_states));
    }
    ++i;

    expect_section("MARKED");
    for (std::size_t t = 1; t < lines[i].tokens.size(); ++t)
        g.mark(parse_state_id(lines[i], lines[i].tokens[t], num_states));
    ++i;

    expect_section("TRANSITIONS");
    if (lines[i].tokens.size() != 1)
        throw ParseError(lines[i].number, "TRANSITIONS takes no arguments");
    ++i;
    for (; i < lines.size(); ++i) {
        const Line& line = lines[i];
        if (line.tokens.size() != 3)
            throw ParseError(line.number, "transition line must be: src event dst");
        StateId src = parse_state_id(line, line.tokens[0], num_states);
        StateId dst = parse_state_id(line, line.tokens[2], num_states);
        auto event = table->find(line.tokens[1]);
        if (!event || std::find(declared.begin(), declared.end(), *event) == declared.end())
            throw ParseError(line.number, "unknown event '" + line.tokens[1] + "'");
        if (g.target(src, *event))
            throw ParseError(line.number, "duplicate transition from state " + line.tokens[0] +
                                              " on event '" + line.tokens[1] +
                                              "' (generator must be deterministic)");
        g.add_transition(src, *event, dst);
    }

    return GeneratorFile{std::move(declared), std::move(g)};
}

std::string print_generator(const Generator& g) {
    const EventTable& table = g.table();
    std::ostringstream out;
    out << "EVENTS\n";
    for (EventId e : g.alphabet())
        out << table.name(e) << ' ' << (table.controllable(e) ? "c" : "u") << ' '
            << (table.observable(e) ? "o" : "uo") << '\n';
    out << "STATES " << g.num_states() << '\n';
    if (g.has_initial())
        out << "INITIAL " << g.initial() << '\n';
    else
        out << "INITIAL -\n";
    out << "MARKED";
    for (StateId s : g.marked_states()) out << ' ' << s;
    out << '\n';
    out << "TRANSITIONS\n";
    for (StateId s = 0; s < g.num_states(); ++s)
        for (auto [e, t] : g.transitions_from(s))
            out << s << ' ' << table.name(e) << ' ' << t << '\n';
    return out.str();
}

ProblemManifest parse_manifest(std::string_view text, const std::filesystem::path& base_dir) {
    ProblemManifest m;
    bool saw_g1 = false, saw_g2 = false, saw_spec = false, saw_sigma = false;
    std::size_t number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string raw{text.substr(pos, end - pos)};
        ++number;
        std::size_t advance = end == text.size() ? text.size() + 1 : end + 1;
        pos = advance;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw = raw.substr(0, hash);
        // trim
        auto first = raw.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        auto last = raw.find_last_not_of(" \t\r");
        raw = raw.substr(first, last - first + 1);
        auto eq = raw.find('=');
        if (eq == std::string::npos)
            throw ParseError(number, "manifest lines must be key=value");
        std::string key = raw.substr(0, eq);
        std::string value = raw.substr(eq + 1);
        if (key == "g1") {
            m.g1 = base_dir / value;
            saw_g1 = true;
        } else if (key == "g2") {
            m.g2 = base_dir / value;
            saw_g2 = true;
        } else if (key == "spec") {
            m.spec = base_dir / value;
            saw_spec = true;
        } else if (key == "sigma_k") {
            std::string item;
            std::istringstream ss(value);
            while (std::getline(ss, item, ',')) {
                auto b = item.find_first_not_of(" \t");
                if (b == std::string::npos) continue;
                auto e = item.find_last_not_of(" \t");
                m.sigma_k_names.push_back(item.substr(b, e - b + 1));
            }
            saw_sigma = true;
        } else if (key == "coordinator") {
            if (value != "auto") m.coordinator = base_dir / value;
        } else if (key == "observation") {
            if (value == "full")
                m.observation = ObservationMode::full;
            else if (value == "from-flags")
                m.observation = ObservationMode::from_flags;
            else
                throw ParseError(number, "observation must be full or from-flags");
        } else {
            throw ParseError(number, "unknown manifest key '" + key + "'");
        }
    }
    if (!saw_g1 || !saw_g2 || !saw_spec || !saw_sigma)
        throw ParseError(number, "manifest must set g1, g2, spec and sigma_k");
    return m;
}

Generator load_generator_file(const std::filesystem::path& path,
                              const std::shared_ptr<EventTable>& table) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_generator(buf.str(), table).generator;
    } catch (const ParseError& e) {
        throw ParseError(e.line(), path.string() + ": " + e.what());
    }
}

LoadedProblem load_problem(const std::filesystem::path& manifest_path) {
    std::ifstream in(manifest_path);
    if (!in) throw std::runtime_error("cannot open " + manifest_path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    ProblemManifest m = parse_manifest(buf.str(), manifest_path.parent_path());

    auto table = std::make_shared<EventTable>();
    Generator g1 = load_generator_file(m.g1, table);
    Generator g2 = load_generator_file(m.g2, table);
    Generator spec = load_generator_file(m.spec, table);
    std::optional<Generator> coordinator;
    if (m.coordinator) coordinator = load_generator_file(*m.coordinator, table);

    std::vector<EventId> sigma_k;
    for (const std::string& name : m.sigma_k_names) {
        auto e = table->find(name);
        if (!e) throw std::runtime_error("sigma_k names unknown event '" + name + "'");
        sigma_k.push_back(*e);
    }
    return LoadedProblem{table,
                         std::move(g1),
                         std::move(g2),
                         std::move(spec),
                         EventSet(std::move(sigma_k)),
                         std::move(coordinator),
                         m.observation};
}

CoordinationProblem to_problem(const LoadedProblem& lp) {
    return make_problem(lp.g1, lp.g2, lp.sigma_k, lp.spec, lp.coordinator);
}

ObservationModel observation_model(const LoadedProblem& lp) {
    return lp.observation == ObservationMode::full ? ObservationModel::full(*lp.table)
                                                   : ObservationModel::from_flags(*lp.table);
}

}  // namespace ccs
