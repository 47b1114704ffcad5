#ifndef CCS_EVENTS_HPP
#define CCS_EVENTS_HPP

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace ccs {

using EventId = std::uint32_t;
using StateId = std::uint32_t;

inline constexpr StateId kNoState = std::numeric_limits<StateId>::max();

/// A string over the event alphabet; empty vector is the empty word.
using Word = std::vector<EventId>;

/// A sorted set of event ids. Ordering follows EventTable registration order,
/// which is the canonical order for all iteration and output.
class EventSet {
public:
    EventSet() = default;
    explicit EventSet(std::vector<EventId> ids);

    bool contains(EventId e) const;
    void insert(EventId e);

    bool empty() const { return ids_.empty(); }
    std::size_t size() const { return ids_.size(); }
    const std::vector<EventId>& ids() const { return ids_; }
    auto begin() const { return ids_.begin(); }
    auto end() const { return ids_.end(); }

    bool subset_of(const EventSet& other) const;
    bool operator==(const EventSet&) const = default;

private:
    std::vector<EventId> ids_;
};

EventSet set_union(const EventSet& a, const EventSet& b);
EventSet set_intersection(const EventSet& a, const EventSet& b);
EventSet set_difference(const EventSet& a, const EventSet& b);

/// Registry of all events of a problem with their control/observation
/// attributes. Append-only: ids and flags never change once registered.
class EventTable {
public:
    EventId add(std::string name, bool controllable, bool observable);

    std::optional<EventId> find(std::string_view name) const;
    EventId require(std::string_view name) const;

    const std::string& name(EventId e) const { return entries_.at(e).name; }
    bool controllable(EventId e) const { return entries_.at(e).controllable; }
    bool observable(EventId e) const { return entries_.at(e).observable; }
    std::size_t size() const { return entries_.size(); }

    EventSet universe() const;
    EventSet controllable_events() const;
    EventSet uncontrollable_events() const;
    EventSet observable_events() const;

private:
    struct Entry {
        std::string name;
        bool controllable;
        bool observable;
    };
    std::vector<Entry> entries_;
    std::unordered_map<std::string, EventId> by_name_;
};

/// Diagnostic attached to a failed check: the shortest word exhibiting the
/// violation, plus an event and/or a second word where the check calls for it.
struct Witness {
    Word word;
    std::optional<EventId> event;
    std::optional<Word> aux_word;
};

/// Outcome of a yes/no check with an optional counterexample.
struct Decision {
    bool holds = false;
    std::optional<Witness> witness;

    explicit operator bool() const { return holds; }
};

std::string format_word(const EventTable& table, const Word& w);

}  // namespace ccs

#endif
