#pragma once

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <deque>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "comtrace/alphabet.hpp"
#include "comtrace/error.hpp"
#include "comtrace/stepseq.hpp"

namespace comtrace {

inline constexpr std::size_t kDefaultMaxClass = 1'000'000;

/// A full congruence class of step sequences. The members set is closed
/// under single split and join moves, so equality of classes is set
/// equality of members.
struct Comtrace {
  std::set<StepSequence> members;

  bool operator==(const Comtrace&) const = default;

  const StepSequence& least() const {
    if (members.empty())
      fail(ErrorKind::InvalidStructure, "comtrace has no members");
    return *members.begin();
  }
};

namespace detail {

template <class Emit>
void each_split_join(const ComtraceAlphabet& theta, const StepSequence& t,
                     Emit&& emit) {
  // Splits: replace step A by B C for every ordered partition with
  // B x C inside ser.
  for (std::size_t at = 0; at < t.size(); ++at) {
    const std::vector<EventSymbol> members(t[at].begin(), t[at].end());
    const std::size_t m = members.size();
    if (m < 2) continue;
    for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << m); ++mask) {
      Step left, right;
      for (std::size_t i = 0; i < m; ++i)
        (mask >> i & 1 ? left : right).insert(members[i]);
      bool serializable = true;
      for (const auto& b : left) {
        for (const auto& c : right) {
          if (!theta.ser_related(b, c)) {
            serializable = false;
            break;
          }
        }
        if (!serializable) break;
      }
      if (!serializable) continue;
      StepSequence u;
      u.reserve(t.size() + 1);
      u.insert(u.end(), t.begin(), t.begin() + static_cast<std::ptrdiff_t>(at));
      u.push_back(left);
      u.push_back(right);
      u.insert(u.end(), t.begin() + static_cast<std::ptrdiff_t>(at) + 1, t.end());
      emit(std::move(u));
    }
  }
  // Joins: replace adjacent B C by their union when B x C inside ser.
  for (std::size_t at = 0; at + 1 < t.size(); ++at) {
    const Step& left = t[at];
    const Step& right = t[at + 1];
    bool serializable = true;
    for (const auto& b : left) {
      for (const auto& c : right) {
        if (!theta.ser_related(b, c)) {
          serializable = false;
          break;
        }
      }
      if (!serializable) break;
    }
    if (!serializable) continue;
    Step joined = left;
    joined.insert(right.begin(), right.end());
    assert(joined.size() == left.size() + right.size() && is_step(theta, joined));
    StepSequence u;
    u.reserve(t.size() - 1);
    u.insert(u.end(), t.begin(), t.begin() + static_cast<std::ptrdiff_t>(at));
    u.push_back(std::move(joined));
    u.insert(u.end(), t.begin() + static_cast<std::ptrdiff_t>(at) + 2, t.end());
    emit(std::move(u));
  }
}

}  // namespace detail

/// All step sequences one split or join move away from t, in either
/// direction of the generating relation.
inline std::set<StepSequence> split_neighbors(const ComtraceAlphabet& theta,
                                              const StepSequence& t) {
  validate_step_sequence(theta, t);
  std::set<StepSequence> out;
  detail::each_split_join(theta, t, [&](StepSequence u) { out.insert(std::move(u)); });
  return out;
}

/// The congruence class of t: breadth-first closure under split and join
/// moves. Classes are finite; the bound only fails fast on pathological
/// alphabets.
inline Comtrace comtrace_of(const ComtraceAlphabet& theta, const StepSequence& t,
                            std::size_t max_class = kDefaultMaxClass) {
  validate_step_sequence(theta, t);
  Comtrace result;
  std::deque<const StepSequence*> frontier;
  auto [first, inserted] = result.members.insert(t);
  (void)inserted;
  frontier.push_back(&*first);
  while (!frontier.empty()) {
    const StepSequence* current = frontier.front();
    frontier.pop_front();
    detail::each_split_join(theta, *current, [&](StepSequence u) {
      auto [it, fresh] = result.members.insert(std::move(u));
      if (fresh) {
        if (result.members.size() > max_class)
          fail(ErrorKind::ClassSizeExceeded,
               "congruence class exceeds " + std::to_string(max_class) +
                   " members");
        frontier.push_back(&*it);
      }
    });
  }
  return result;
}

/// True iff t and u generate the same class. Short-circuits when the
/// occurrence multisets differ.
inline bool equivalent(const ComtraceAlphabet& theta, const StepSequence& t,
                       const StepSequence& u,
                       std::size_t max_class = kDefaultMaxClass) {
  validate_step_sequence(theta, t);
  validate_step_sequence(theta, u);
  std::map<EventSymbol, int> count_t, count_u;
  for (const auto& step : t)
    for (const auto& e : step) ++count_t[e];
  for (const auto& step : u)
    for (const auto& e : step) ++count_u[e];
  if (count_t != count_u) return false;
  return comtrace_of(theta, t, max_class).members.count(u) != 0;
}

/// Concatenation of classes: the class of any representative product.
inline Comtrace concat(const ComtraceAlphabet& theta, const Comtrace& lhs,
                       const Comtrace& rhs,
                       std::size_t max_class = kDefaultMaxClass) {
  StepSequence product = lhs.least();
  const StepSequence& tail = rhs.least();
  product.insert(product.end(), tail.begin(), tail.end());
  return comtrace_of(theta, product, max_class);
}

inline Comtrace comtrace_identity() { return Comtrace{{StepSequence{}}}; }

}  // namespace comtrace
