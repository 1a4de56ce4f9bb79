#pragma once

#include <algorithm>
#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "comtrace/error.hpp"

namespace comtrace {

using EventSymbol = std::string;
using EventPair = std::pair<EventSymbol, EventSymbol>;

/// A step is a nonempty set of pairwise-simultaneous events.
using Step = std::set<EventSymbol>;

inline constexpr std::size_t kDefaultMaxEvents = 20;

inline bool is_valid_event_name(const EventSymbol& name) {
  if (name.empty()) return false;
  auto alpha = [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
  };
  auto alnum = [&](char c) { return alpha(c) || (c >= '0' && c <= '9') || c == '_'; };
  if (!alpha(name.front())) return false;
  return std::all_of(name.begin() + 1, name.end(), alnum);
}

/// An alphabet of events with simultaneity and serializability relations.
/// Simultaneity is stored symmetrically closed, as unordered pairs with
/// first < second; serializability keeps the input orientation.
/// Immutable after construction.
class ComtraceAlphabet {
 public:
  static ComtraceAlphabet build(std::vector<EventSymbol> events,
                                const std::vector<EventPair>& sim_pairs,
                                const std::vector<EventPair>& ser_pairs) {
    ComtraceAlphabet theta;
    for (const auto& e : events) {
      if (!is_valid_event_name(e))
        fail(ErrorKind::InvalidStructure, "invalid event name '" + e + "'");
    }
    std::sort(events.begin(), events.end());
    if (std::adjacent_find(events.begin(), events.end()) != events.end())
      fail(ErrorKind::InvalidStructure, "duplicate event in alphabet");
    theta.events_ = std::move(events);

    auto require_event = [&](const EventSymbol& e) {
      if (!theta.has_event(e))
        fail(ErrorKind::UnknownEvent, "event '" + e + "' not in alphabet");
    };
    for (const auto& [a, b] : sim_pairs) {
      require_event(a);
      require_event(b);
      if (a == b)
        fail(ErrorKind::ReflexivePair, "sim contains reflexive pair (" + a + "," + b + ")");
      theta.sim_.emplace(std::min(a, b), std::max(a, b));
    }
    for (const auto& [a, b] : ser_pairs) {
      require_event(a);
      require_event(b);
      if (a == b)
        fail(ErrorKind::ReflexivePair, "ser contains reflexive pair (" + a + "," + b + ")");
      if (!theta.sim_.count({std::min(a, b), std::max(a, b)}))
        fail(ErrorKind::SerNotInSim, "ser pair (" + a + "," + b + ") not covered by sim");
      theta.ser_.emplace(a, b);
    }
    // Dense index tables back the relation queries.
    const std::size_t n = theta.events_.size();
    theta.sim_table_.assign(n * n, 0);
    theta.ser_table_.assign(n * n, 0);
    for (const auto& [a, b] : theta.sim_) {
      const auto ia = theta.event_index(a), ib = theta.event_index(b);
      theta.sim_table_[ia * n + ib] = 1;
      theta.sim_table_[ib * n + ia] = 1;
    }
    for (const auto& [a, b] : theta.ser_)
      theta.ser_table_[theta.event_index(a) * n + theta.event_index(b)] = 1;
    return theta;
  }

  const std::vector<EventSymbol>& events() const { return events_; }

  std::size_t event_index(const EventSymbol& e) const {
    return static_cast<std::size_t>(
        std::lower_bound(events_.begin(), events_.end(), e) - events_.begin());
  }

  bool has_event(const EventSymbol& e) const {
    return std::binary_search(events_.begin(), events_.end(), e);
  }

  bool sim_related(const EventSymbol& a, const EventSymbol& b) const {
    const auto ia = checked_index(a), ib = checked_index(b);
    if (ia == npos || ib == npos) return false;
    return sim_table_[ia * events_.size() + ib] != 0;
  }

  bool ser_related(const EventSymbol& a, const EventSymbol& b) const {
    const auto ia = checked_index(a), ib = checked_index(b);
    if (ia == npos || ib == npos) return false;
    return ser_table_[ia * events_.size() + ib] != 0;
  }

  /// Unordered sim pairs, canonically first < second.
  const std::set<EventPair>& sim() const { return sim_; }
  /// Ordered ser pairs.
  const std::set<EventPair>& ser() const { return ser_; }

  bool operator==(const ComtraceAlphabet&) const = default;

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  std::size_t checked_index(const EventSymbol& e) const {
    const auto i = event_index(e);
    return (i < events_.size() && events_[i] == e) ? i : npos;
  }

  std::vector<EventSymbol> events_;
  std::set<EventPair> sim_;
  std::set<EventPair> ser_;
  std::vector<char> sim_table_;
  std::vector<char> ser_table_;
};

/// Membership test for the induced step set: true iff members are pairwise
/// sim-related.
inline bool is_step(const ComtraceAlphabet& theta, const Step& candidate) {
  if (candidate.empty()) return false;
  for (const auto& e : candidate) {
    if (!theta.has_event(e))
      fail(ErrorKind::UnknownEvent, "event '" + e + "' not in alphabet");
  }
  for (auto i = candidate.begin(); i != candidate.end(); ++i) {
    for (auto j = std::next(i); j != candidate.end(); ++j) {
      if (!theta.sim_related(*i, *j)) return false;
    }
  }
  return true;
}

namespace detail {

inline void extend_clique(const ComtraceAlphabet& theta,
                          const std::vector<EventSymbol>& events,
                          std::vector<EventSymbol>& clique, std::size_t next,
                          std::vector<Step>& out) {
  for (std::size_t i = next; i < events.size(); ++i) {
    bool compatible = true;
    for (const auto& member : clique) {
      if (!theta.sim_related(member, events[i])) {
        compatible = false;
        break;
      }
    }
    if (!compatible) continue;
    clique.push_back(events[i]);
    out.emplace_back(clique.begin(), clique.end());
    extend_clique(theta, events, clique, i + 1, out);
    clique.pop_back();
  }
}

}  // namespace detail

/// All steps induced by the alphabet: the nonempty cliques of (E, sim),
/// ordered by size, then lexicographically by member list.
inline std::vector<Step> all_steps(const ComtraceAlphabet& theta,
                                   std::size_t max_events = kDefaultMaxEvents) {
  if (theta.events().size() > max_events)
    fail(ErrorKind::TooManyEvents,
         "alphabet has " + std::to_string(theta.events().size()) +
             " events; clique enumeration bounded at " + std::to_string(max_events));
  std::vector<Step> out;
  std::vector<EventSymbol> clique;
  detail::extend_clique(theta, theta.events(), clique, 0, out);
  std::sort(out.begin(), out.end(), [](const Step& lhs, const Step& rhs) {
    if (lhs.size() != rhs.size()) return lhs.size() < rhs.size();
    return lhs < rhs;
  });
  return out;
}

}  // namespace comtrace
