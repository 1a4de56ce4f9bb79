#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "comtrace/alphabet.hpp"
#include "comtrace/cdgraph.hpp"
#include "comtrace/error.hpp"
#include "comtrace/lsos.hpp"
#include "comtrace/sostruct.hpp"
#include "comtrace/stepseq.hpp"

namespace comtrace {

using nlohmann::json;

inline json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    fail(ErrorKind::Parse, std::string("invalid JSON: ") + e.what());
  }
}

// ---------------------------------------------------------------------------
// Alphabet files: {"events":[...], "sim":[["a","b"],...], "ser":[["b","c"],...]}
// sim entries are unordered, ser entries are ordered [from, to].

inline ComtraceAlphabet alphabet_from_json(const json& j) {
  if (!j.is_object() || !j.contains("events"))
    fail(ErrorKind::Parse, "alphabet JSON must be an object with \"events\"");
  auto read_pairs = [&](const char* key) {
    std::vector<EventPair> pairs;
    if (!j.contains(key)) return pairs;
    if (!j[key].is_array())
      fail(ErrorKind::Parse, std::string("\"") + key + "\" must be an array");
    for (const auto& entry : j[key]) {
      if (!entry.is_array() || entry.size() != 2 || !entry[0].is_string() ||
          !entry[1].is_string())
        fail(ErrorKind::Parse,
             std::string("\"") + key + "\" entries must be [string, string]");
      pairs.emplace_back(entry[0].get<std::string>(), entry[1].get<std::string>());
    }
    return pairs;
  };
  if (!j["events"].is_array())
    fail(ErrorKind::Parse, "\"events\" must be an array");
  std::vector<EventSymbol> events;
  for (const auto& e : j["events"]) {
    if (!e.is_string()) fail(ErrorKind::Parse, "\"events\" entries must be strings");
    events.push_back(e.get<std::string>());
  }
  return ComtraceAlphabet::build(std::move(events), read_pairs("sim"),
                                 read_pairs("ser"));
}

inline json to_json(const ComtraceAlphabet& theta) {
  json j;
  j["events"] = theta.events();
  j["sim"] = json::array();
  for (const auto& [a, b] : theta.sim()) j["sim"].push_back({a, b});
  j["ser"] = json::array();
  for (const auto& [a, b] : theta.ser()) j["ser"].push_back({a, b});
  return j;
}

// ---------------------------------------------------------------------------
// Occurrences and structures.

inline json to_json(const Occ& alpha) {
  return json{{"event", alpha.event}, {"index", alpha.index}};
}

inline Occ occ_from_json(const json& j) {
  if (!j.is_object() || !j.contains("event") || !j.contains("index") ||
      !j["event"].is_string() || !j["index"].is_number_integer())
    fail(ErrorKind::Parse,
         "occurrence must be {\"event\": string, \"index\": integer}");
  Occ alpha{j["event"].get<std::string>(), j["index"].get<int>()};
  if (!is_valid_event_name(alpha.event))
    fail(ErrorKind::Parse, "invalid event name '" + alpha.event + "'");
  if (alpha.index < 1) fail(ErrorKind::Parse, "occurrence index must be >= 1");
  return alpha;
}

namespace detail {

inline json relation_to_json(const OccRelation& rel) {
  json arr = json::array();
  for (const auto& [a, b] : rel) arr.push_back({to_json(a), to_json(b)});
  return arr;
}

inline OccRelation relation_from_json(const json& j, const char* key) {
  OccRelation rel;
  if (!j.is_array())
    fail(ErrorKind::Parse, std::string("\"") + key + "\" must be an array");
  for (const auto& entry : j) {
    if (!entry.is_array() || entry.size() != 2)
      fail(ErrorKind::Parse,
           std::string("\"") + key + "\" entries must be pairs of occurrences");
    rel.emplace(occ_from_json(entry[0]), occ_from_json(entry[1]));
  }
  return rel;
}

inline OccSet ground_from_json(const json& j) {
  OccSet ground;
  if (!j.is_array()) fail(ErrorKind::Parse, "\"ground\" must be an array");
  for (const auto& entry : j) ground.insert(occ_from_json(entry));
  return ground;
}

}  // namespace detail

inline json to_json(const SoStructure& s) {
  json j;
  j["ground"] = json::array();
  for (const auto& alpha : s.ground) j["ground"].push_back(to_json(alpha));
  j["prec"] = detail::relation_to_json(s.prec);
  j["wk"] = detail::relation_to_json(s.wk);
  return j;
}

inline json to_json(const LsosComtrace& t) { return to_json(t.so); }

/// Shape-level parse; axioms are checked by the operations that need them.
inline SoStructure so_from_json(const json& j) {
  if (!j.is_object() || !j.contains("ground") || !j.contains("prec") ||
      !j.contains("wk"))
    fail(ErrorKind::Parse,
         "structure JSON must carry \"ground\", \"prec\" and \"wk\"");
  SoStructure s;
  s.ground = detail::ground_from_json(j["ground"]);
  s.prec = detail::relation_from_json(j["prec"], "prec");
  s.wk = detail::relation_from_json(j["wk"], "wk");
  detail::require_in_ground(s.ground, s.prec, "prec");
  detail::require_in_ground(s.ground, s.wk, "wk");
  return s;
}

inline json to_json(const CdGraph& d) {
  json j;
  j["ground"] = json::array();
  for (const auto& alpha : d.ground) j["ground"].push_back(to_json(alpha));
  j["solid"] = detail::relation_to_json(d.solid);
  j["dashed"] = detail::relation_to_json(d.dashed);
  return j;
}

inline CdGraph cdgraph_from_json(const json& j) {
  if (!j.is_object() || !j.contains("ground") || !j.contains("solid") ||
      !j.contains("dashed"))
    fail(ErrorKind::Parse,
         "cd-graph JSON must carry \"ground\", \"solid\" and \"dashed\"");
  CdGraph d;
  d.ground = detail::ground_from_json(j["ground"]);
  d.solid = detail::relation_from_json(j["solid"], "solid");
  d.dashed = detail::relation_from_json(j["dashed"], "dashed");
  detail::require_in_ground(d.ground, d.solid, "solid");
  detail::require_in_ground(d.ground, d.dashed, "dashed");
  return d;
}

inline bool looks_like_cdgraph_json(const json& j) {
  return j.is_object() && j.contains("solid") && j.contains("dashed");
}

inline json to_json(const QuotientSoStructure& q) {
  json j;
  j["blocks"] = json::array();
  for (const auto& block : q.blocks) {
    json arr = json::array();
    for (const auto& alpha : block) arr.push_back(to_json(alpha));
    j["blocks"].push_back(arr);
  }
  j["block_labels"] = json::array();
  for (const auto& labels : q.block_labels)
    j["block_labels"].push_back(std::vector<EventSymbol>(labels.begin(), labels.end()));
  j["prec"] = json::array();
  for (const auto& [a, b] : q.qprec) j["prec"].push_back({a, b});
  j["wk"] = json::array();
  for (const auto& [a, b] : q.qwk) j["wk"].push_back({a, b});
  return j;
}

// ---------------------------------------------------------------------------
// DOT export. Solid arrows are causality arcs, dashed arrows weak-causality
// only; cd-graphs draw their dashed relation in full. Quotient blocks render
// as boxes.

namespace detail {

inline std::string dot_id(const std::string& s) { return "\"" + s + "\""; }

}  // namespace detail

inline std::string to_dot(const SoStructure& s) {
  std::string out = "digraph sostructure {\n  rankdir=LR;\n  node [shape=circle];\n";
  for (const auto& alpha : s.ground)
    out += "  " + detail::dot_id(to_text(alpha)) + ";\n";
  for (const auto& [a, b] : s.prec)
    out += "  " + detail::dot_id(to_text(a)) + " -> " + detail::dot_id(to_text(b)) + ";\n";
  for (const auto& [a, b] : s.wk) {
    if (s.prec.count({a, b})) continue;
    out += "  " + detail::dot_id(to_text(a)) + " -> " + detail::dot_id(to_text(b)) +
           " [style=dashed];\n";
  }
  out += "}\n";
  return out;
}

inline std::string to_dot(const LsosComtrace& t) { return to_dot(t.so); }

inline std::string to_dot(const CdGraph& d) {
  std::string out = "digraph cdgraph {\n  rankdir=LR;\n  node [shape=circle];\n";
  for (const auto& alpha : d.ground)
    out += "  " + detail::dot_id(to_text(alpha)) + ";\n";
  for (const auto& [a, b] : d.solid)
    out += "  " + detail::dot_id(to_text(a)) + " -> " + detail::dot_id(to_text(b)) + ";\n";
  for (const auto& [a, b] : d.dashed)
    out += "  " + detail::dot_id(to_text(a)) + " -> " + detail::dot_id(to_text(b)) +
           " [style=dashed];\n";
  out += "}\n";
  return out;
}

inline std::string to_dot(const QuotientSoStructure& q) {
  auto block_name = [&](std::size_t i) {
    std::string name = "{";
    bool first = true;
    for (const auto& alpha : q.blocks[i]) {
      if (!first) name += ',';
      name += to_text(alpha);
      first = false;
    }
    return name + "}";
  };
  auto block_label = [&](std::size_t i) {
    std::string label = "{";
    bool first = true;
    for (const auto& e : q.block_labels[i]) {
      if (!first) label += ',';
      label += e;
      first = false;
    }
    return label + "}";
  };
  std::string out = "digraph quotient {\n  rankdir=LR;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < q.blocks.size(); ++i)
    out += "  " + detail::dot_id(block_name(i)) + " [label=" +
           detail::dot_id(block_label(i)) + "];\n";
  for (const auto& [a, b] : q.qprec)
    out += "  " + detail::dot_id(block_name(a)) + " -> " +
           detail::dot_id(block_name(b)) + ";\n";
  for (const auto& [a, b] : q.qwk) {
    if (q.qprec.count({a, b})) continue;
    out += "  " + detail::dot_id(block_name(a)) + " -> " +
           detail::dot_id(block_name(b)) + " [style=dashed];\n";
  }
  out += "}\n";
  return out;
}

// ---------------------------------------------------------------------------
// Plain-text structure renderings used by the CLI.

namespace detail {

inline std::string relation_line(const char* name, const OccRelation& rel) {
  std::string out = name;
  out += ':';
  bool first = true;
  for (const auto& [a, b] : rel) {
    out += first ? " " : ", ";
    out += "(" + to_text(a) + "," + to_text(b) + ")";
    first = false;
  }
  return out;
}

}  // namespace detail

inline std::string to_text(const SoStructure& s) {
  std::string out = "ground:";
  bool first = true;
  for (const auto& alpha : s.ground) {
    out += first ? " " : ", ";
    out += to_text(alpha);
    first = false;
  }
  out += '\n';
  out += detail::relation_line("prec", s.prec) + "\n";
  out += detail::relation_line("wk", s.wk) + "\n";
  return out;
}

inline std::string to_text(const LsosComtrace& t) { return to_text(t.so); }

inline std::string to_text(const CdGraph& d) {
  std::string out = "ground:";
  bool first = true;
  for (const auto& alpha : d.ground) {
    out += first ? " " : ", ";
    out += to_text(alpha);
    first = false;
  }
  out += '\n';
  out += detail::relation_line("solid", d.solid) + "\n";
  out += detail::relation_line("dashed", d.dashed) + "\n";
  return out;
}

inline std::string to_text(const QuotientSoStructure& q) {
  std::string out;
  for (std::size_t i = 0; i < q.blocks.size(); ++i) {
    out += "block " + std::to_string(i) + ": {";
    bool first = true;
    for (const auto& alpha : q.blocks[i]) {
      if (!first) out += ',';
      out += to_text(alpha);
      first = false;
    }
    out += "} labels {";
    first = true;
    for (const auto& e : q.block_labels[i]) {
      if (!first) out += ',';
      out += e;
      first = false;
    }
    out += "}\n";
  }
  auto index_relation_line = [](const char* name,
                                const PairRelation<std::size_t>& rel) {
    std::string line = name;
    line += ':';
    bool first = true;
    for (const auto& [a, b] : rel) {
      line += first ? " " : ", ";
      line += "(" + std::to_string(a) + "," + std::to_string(b) + ")";
      first = false;
    }
    return line;
  };
  out += index_relation_line("prec", q.qprec) + "\n";
  out += index_relation_line("wk", q.qwk) + "\n";
  return out;
}

}  // namespace comtrace
