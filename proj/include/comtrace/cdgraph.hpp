#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "comtrace/alphabet.hpp"
#include "comtrace/error.hpp"
#include "comtrace/lsos.hpp"
#include "comtrace/sostruct.hpp"
#include "comtrace/stepseq.hpp"

namespace comtrace {

/// A combined dependency graph: the reduced graph-theoretic representation
/// whose closure is an so-structure. Grounds reuse the canonical occurrence
/// naming, so lp-isomorphism is again plain equality.
struct CdGraph {
  OccSet ground;
  OccRelation solid;   // the "earlier than" arcs
  OccRelation dashed;  // the "not later than" arcs

  bool operator==(const CdGraph&) const = default;
  auto operator<=>(const CdGraph&) const = default;

  bool empty() const { return ground.empty(); }
};

/// Verifies irreflexivity of both arc relations, well-formedness of the
/// closure, and CD1 through CD4.
inline CheckReport check_cdgraph(const ComtraceAlphabet& theta,
                                 const CdGraph& d) {
  detail::require_known_labels(theta, d.ground);
  detail::require_in_ground(d.ground, d.solid, "solid");
  detail::require_in_ground(d.ground, d.dashed, "dashed");

  CheckReport report;
  for (const auto& [a, b] : d.solid) {
    if (a == b) {
      report.add("solid-irreflexive", {a});
      break;
    }
  }
  for (const auto& [a, b] : d.dashed) {
    if (a == b) {
      report.add("dashed-irreflexive", {a});
      break;
    }
  }
  if (report.ok) {
    const auto closed = diamond_closure({d.ground, d.solid, d.dashed});
    bool closure_ok = true;
    for (const auto& [a, b] : closed.r1) {
      if (a == b) {
        report.add("closure", {a});
        closure_ok = false;
        break;
      }
    }
    if (closure_ok) {
      auto axioms = check_so_axioms(closed);
      for (const auto& v : axioms.violations)
        report.add("closure-" + v.condition, v.witnesses);
    }
  }

  bool cd1_seen = false, cd2_seen = false;
  for (const auto& alpha : d.ground) {
    for (const auto& beta : d.ground) {
      if (alpha == beta) continue;
      if (!cd1_seen && !theta.sim_related(alpha.event, beta.event) &&
          !d.solid.count({alpha, beta}) && !d.solid.count({beta, alpha})) {
        report.add("CD1", {alpha, beta});
        cd1_seen = true;
      }
      if (!cd2_seen && !theta.ser_related(alpha.event, beta.event) &&
          !d.solid.count({alpha, beta}) && !d.dashed.count({beta, alpha})) {
        report.add("CD2", {alpha, beta});
        cd2_seen = true;
      }
    }
  }
  for (const auto& [alpha, beta] : d.solid) {
    if (theta.ser_related(alpha.event, beta.event)) {
      report.add("CD3", {alpha, beta});
      break;
    }
  }
  for (const auto& [alpha, beta] : d.dashed) {
    if (theta.ser_related(beta.event, alpha.event)) {
      report.add("CD4", {alpha, beta});
      break;
    }
  }
  return report;
}

inline CdGraph make_cdgraph(const ComtraceAlphabet& theta, OccSet ground,
                            OccRelation solid, OccRelation dashed) {
  CdGraph d{std::move(ground), std::move(solid), std::move(dashed)};
  auto report = check_cdgraph(theta, d);
  if (!report.ok)
    fail(ErrorKind::InvalidStructure, "not a cd-graph: " + to_text(report));
  return d;
}

/// Strongly connected components of the dashed relation; these are the
/// synchronous steps of the closure.
inline std::vector<OccSet> nonserializable_components(const CdGraph& d) {
  return strongly_connected_components(d.ground, d.dashed);
}

inline CdGraph cdgraph_identity() { return CdGraph{}; }

}  // namespace comtrace
