#include "ccs/events.hpp"

#include <algorithm>
#include <stdexcept>

namespace ccs {

EventSet::EventSet(std::vector<EventId> ids) : ids_(std::move(ids)) {
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

bool EventSet::contains(EventId e) const {
    return std::binary_search(ids_.begin(), ids_.end(), e);
}

void EventSet::insert(EventId e) {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), e);
    if (it == ids_.end() || *it != e) ids_.insert(it, e);
}

bool EventSet::subset_of(const EventSet& other) const {
    return std::includes(other.ids_.begin(), other.ids_.end(), ids_.begin(), ids_.end());
}

EventSet set_union(const EventSet& a, const EventSet& b) {
    std::vector<EventId> out;
    std::set_union(a.ids().begin(), a.ids().end(), b.ids().begin(), b.ids().end(),
                   std::back_inserter(out));
    return EventSet(std::move(out));
}

EventSet set_intersection(const EventSet& a, const EventSet& b) {
    std::vector<EventId> out;
    std::set_intersection(a.ids().begin(), a.ids().end(), b.ids().begin(), b.ids().end(),
                          std::back_inserter(out));
    return EventSet(std::move(out));
}

EventSet set_difference(const EventSet& a, const EventSet& b) {
    std::vector<EventId> out;
    std::set_difference(a.ids().begin(), a.ids().end(), b.ids().begin(), b.ids().end(),
                        std::back_inserter(out));
    return EventSet(std::move(out));
}

EventId EventTable::add(std::string name, bool controllable, bool observable) {
    if (name.empty()) throw std::invalid_argument("event name must not be empty");
    if (by_name_.count(name)) throw std::invalid_argument("duplicate event name: " + name);
    EventId id = static_cast<EventId>(entries_.size());
    by_name_.emplace(name, id);
    entries_.push_back(Entry{std::move(name), controllable, observable});
    return id;
}

std::optional<EventId> EventTable::find(std::string_view name) const {
    auto it = by_name_.find(std::string(name));
    if (it == by_name_.end()) return std::nullopt;
    return it->second;
}

EventId EventTable::require(std::string_view name) const {
    auto id = find(name);
    if (!id) throw std::invalid_argument("unknown event: " + std::string(name));
    return *id;
}

EventSet EventTable::universe() const {
    std::vector<EventId> ids(entries_.size());
    for (EventId i = 0; i < ids.size(); ++i) ids[i] = i;
    return EventSet(std::move(ids));
}

EventSet EventTable::controllable_events() const {
    std::vector<EventId> ids;
    for (EventId i = 0; i < entries_.size(); ++i)
        if (entries_[i].controllable) ids.push_back(i);
    return EventSet(std::move(ids));
}

EventSet EventTable::uncontrollable_events() const {
    std::vector<EventId> ids;
    for (EventId i = 0; i < entries_.size(); ++i)
        if (!entries_[i].controllable) ids.push_back(i);
    return EventSet(std::move(ids));
}

EventSet EventTable::observable_events() const {
    std::vector<EventId> ids;
    for (EventId i = 0; i < entries_.size(); ++i)
        if (entries_[i].observable) ids.push_back(i);
    return EventSet(std::move(ids));
}

std::string format_word(const EventTable& table, const Word& w) {
    if (w.empty()) return "<eps>";
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += ' ';
        out += table.name(w[i]);
    }
    return out;
}

}  // namespace ccs
