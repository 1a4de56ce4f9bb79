#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "comtrace/alphabet.hpp"
#include "comtrace/error.hpp"

namespace comtrace {

/// The i-th occurrence of an event, written e#i in text.
struct EventOccurrence {
  EventSymbol event;
  int index = 1;

  auto operator<=>(const EventOccurrence&) const = default;
};

using Occ = EventOccurrence;
using OccSet = std::set<Occ>;
using OccPair = std::pair<Occ, Occ>;
using OccRelation = std::set<OccPair>;

inline EventSymbol label_of(const Occ& alpha) { return alpha.event; }

inline std::string to_text(const Occ& alpha) {
  return alpha.event + "#" + std::to_string(alpha.index);
}

/// A finite (possibly empty) sequence of steps. The empty sequence is the
/// monoid identity and renders as the literal epsilon.
using StepSequence = std::vector<Step>;

/// Blocks of event occurrences; the i-th occurrence of e lives in the step
/// where e appears for the i-th time.
struct EnumeratedStepSequence {
  std::vector<OccSet> blocks;

  bool operator==(const EnumeratedStepSequence&) const = default;
};

/// A stratified order stored as its ordered partition. The partition itself
/// carries the invariant (incomparability is an equivalence); the relation
/// view is derived on demand.
struct StratifiedOrder {
  std::vector<OccSet> blocks;

  bool operator==(const StratifiedOrder&) const = default;
  auto operator<=>(const StratifiedOrder&) const = default;

  OccSet ground() const {
    OccSet all;
    for (const auto& block : blocks) all.insert(block.begin(), block.end());
    return all;
  }

  bool empty() const { return blocks.empty(); }
};

/// Relation view of the stratified order: alpha before beta iff alpha's
/// block is strictly earlier.
inline OccRelation order_pairs(const StratifiedOrder& omega) {
  OccRelation rel;
  for (std::size_t i = 0; i < omega.blocks.size(); ++i) {
    for (std::size_t j = i + 1; j < omega.blocks.size(); ++j) {
      for (const auto& a : omega.blocks[i])
        for (const auto& b : omega.blocks[j]) rel.emplace(a, b);
    }
  }
  return rel;
}

/// The not-later-than view: strictly-before pairs plus distinct same-block
/// pairs.
inline OccRelation weak_order_pairs(const StratifiedOrder& omega) {
  OccRelation rel = order_pairs(omega);
  for (const auto& block : omega.blocks) {
    for (const auto& a : block)
      for (const auto& b : block)
        if (a != b) rel.emplace(a, b);
  }
  return rel;
}

inline void validate_step_sequence(const ComtraceAlphabet& theta,
                                   const StepSequence& t) {
  for (const auto& step : t) {
    if (step.empty())
      fail(ErrorKind::InvalidStep, "steps must be nonempty");
    if (!is_step(theta, step)) {
      std::string members;
      for (const auto& e : step) members += (members.empty() ? "" : ",") + e;
      fail(ErrorKind::InvalidStep, "{" + members + "} is not a sim-clique");
    }
  }
}

/// Number of steps of t containing e.
inline int occ_count(const ComtraceAlphabet& theta, const StepSequence& t,
                     const EventSymbol& e) {
  if (!theta.has_event(e))
    fail(ErrorKind::UnknownEvent, "event '" + e + "' not in alphabet");
  int count = 0;
  for (const auto& step : t) count += step.count(e) ? 1 : 0;
  return count;
}

inline EnumeratedStepSequence enumerate_occurrences(const StepSequence& t) {
  EnumeratedStepSequence result;
  std::map<EventSymbol, int> seen;
  for (const auto& step : t) {
    OccSet block;
    for (const auto& e : step) block.insert({e, ++seen[e]});
    result.blocks.push_back(std::move(block));
  }
  return result;
}

/// All event occurrences of t.
inline OccSet occurrences(const StepSequence& t) {
  OccSet all;
  for (const auto& block : enumerate_occurrences(t).blocks)
    all.insert(block.begin(), block.end());
  return all;
}

/// 1-based index of the step containing the occurrence.
inline int position(const StepSequence& t, const Occ& alpha) {
  const auto enumerated = enumerate_occurrences(t);
  for (std::size_t i = 0; i < enumerated.blocks.size(); ++i) {
    if (enumerated.blocks[i].count(alpha)) return static_cast<int>(i) + 1;
  }
  fail(ErrorKind::NotAnOccurrence, to_text(alpha) + " does not occur");
}

inline StratifiedOrder to_stratified_order(const StepSequence& t) {
  StratifiedOrder omega;
  omega.blocks = enumerate_occurrences(t).blocks;
  return omega;
}

using LabelFn = std::function<EventSymbol(const Occ&)>;

/// Blockwise label image of an ordered partition. Requires each block's
/// image to keep the block's cardinality and to be a valid step.
inline StepSequence from_stratified_order(const ComtraceAlphabet& theta,
                                          const StratifiedOrder& omega,
                                          const LabelFn& label = label_of) {
  StepSequence t;
  for (const auto& block : omega.blocks) {
    Step image;
    for (const auto& alpha : block) {
      if (!image.insert(label(alpha)).second)
        fail(ErrorKind::LabelCollision,
             "two members of a block map to label '" + label(alpha) + "'");
    }
    if (!is_step(theta, image)) {
      std::string members;
      for (const auto& e : image) members += (members.empty() ? "" : ",") + e;
      fail(ErrorKind::InvalidStep,
           "block image {" + members + "} is not a sim-clique");
    }
    t.push_back(std::move(image));
  }
  return t;
}

inline const char* kEpsilonText = "\xce\xb5";  // UTF-8 epsilon

inline std::string to_text(const StepSequence& t) {
  if (t.empty()) return kEpsilonText;
  std::string out;
  for (const auto& step : t) {
    out += '{';
    bool first = true;
    for (const auto& e : step) {
      if (!first) out += ',';
      out += e;
      first = false;
    }
    out += '}';
  }
  return out;
}

inline std::string blocks_to_text(const std::vector<OccSet>& blocks) {
  if (blocks.empty()) return kEpsilonText;
  std::string out;
  for (const auto& block : blocks) {
    out += '{';
    bool first = true;
    for (const auto& alpha : block) {
      if (!first) out += ',';
      out += to_text(alpha);
      first = false;
    }
    out += '}';
  }
  return out;
}

inline std::string to_text(const EnumeratedStepSequence& t) {
  return blocks_to_text(t.blocks);
}

inline std::string to_text(const StratifiedOrder& omega) {
  return blocks_to_text(omega.blocks);
}

/// Parses the step-sequence grammar: step := '{' ident (',' ident)* '}'.
/// Whitespace is ignored; the empty string (or a lone epsilon) denotes the
/// empty sequence; '{}' is rejected.
inline StepSequence parse_step_sequence(const std::string& text) {
  StepSequence result;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() &&
           (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\n' ||
            text[pos] == '\r'))
      ++pos;
  };
  auto parse_ident = [&]() -> EventSymbol {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() &&
           ((text[pos] >= 'a' && text[pos] <= 'z') ||
            (text[pos] >= 'A' && text[pos] <= 'Z') ||
            (text[pos] >= '0' && text[pos] <= '9') || text[pos] == '_'))
      ++pos;
    EventSymbol name = text.substr(start, pos - start);
    if (!is_valid_event_name(name))
      fail(ErrorKind::Parse, "expected event name at offset " + std::to_string(start));
    return name;
  };

  skip_ws();
  if (pos + 1 < text.size() && text.compare(pos, 2, kEpsilonText) == 0) {
    pos += 2;
    skip_ws();
    if (pos != text.size())
      fail(ErrorKind::Parse, "trailing input after empty sequence");
    return result;
  }
  while (true) {
    skip_ws();
    if (pos == text.size()) break;
    if (text[pos] != '{')
      fail(ErrorKind::Parse, "expected '{' at offset " + std::to_string(pos));
    ++pos;
    Step step;
    step.insert(parse_ident());
    skip_ws();
    while (pos < text.size() && text[pos] == ',') {
      ++pos;
      if (!step.insert(parse_ident()).second)
        fail(ErrorKind::Parse, "duplicate event in step");
      skip_ws();
    }
    if (pos == text.size() || text[pos] != '}')
      fail(ErrorKind::Parse, "expected '}' at offset " + std::to_string(pos));
    ++pos;
    result.push_back(std::move(step));
  }
  return result;
}

}  // namespace comtrace
