#pragma once

#include <cassert>
#include <cstddef>
#include <map>
#include <set>
#include <utility>

#include "comtrace/alphabet.hpp"
#include "comtrace/cdgraph.hpp"
#include "comtrace/congruence.hpp"
#include "comtrace/error.hpp"
#include "comtrace/lsos.hpp"
#include "comtrace/sostruct.hpp"
#include "comtrace/stepseq.hpp"

namespace comtrace {

/// The local invariant relations of a single step sequence: strictly-before
/// pairs whose labels are not serializable, and not-later-than pairs whose
/// reversed labels are not serializable. Unclosed; this is exactly the
/// cd-graph content of the class of u.
inline RelationalStructure invariant_structure(const ComtraceAlphabet& theta,
                                               const StepSequence& u) {
  validate_step_sequence(theta, u);
  const auto omega = to_stratified_order(u);
  RelationalStructure rs;
  rs.ground = omega.ground();
  for (const auto& [a, b] : order_pairs(omega)) {
    if (!theta.ser_related(a.event, b.event)) rs.r1.emplace(a, b);
  }
  for (const auto& [a, b] : weak_order_pairs(omega)) {
    if (!theta.ser_related(b.event, a.event)) rs.r2.emplace(a, b);
  }
  return rs;
}

/// Comtrace to lsos-comtrace: closure of the invariant relations of any
/// member. Member-independent; spot-checked against a second member in
/// debug builds.
inline LsosComtrace ct2lct(const ComtraceAlphabet& theta, const Comtrace& ct) {
  const auto closed = diamond_closure(invariant_structure(theta, ct.least()));
  auto result = make_lsos_comtrace(
      theta, SoStructure{closed.ground, closed.r1, closed.r2});
#ifndef NDEBUG
  if (ct.members.size() > 1) {
    const auto& other = *std::next(ct.members.begin());
    const auto closed2 = diamond_closure(invariant_structure(theta, other));
    assert(result == make_lsos_comtrace(
                         theta, SoStructure{closed2.ground, closed2.r1,
                                            closed2.r2}));
  }
#endif
  return result;
}

/// Lsos-comtrace to comtrace: label images of all stratified extensions.
inline Comtrace lct2ct(const ComtraceAlphabet& theta, const LsosComtrace& t,
                       std::size_t max_ground = kDefaultMaxGround) {
  Comtrace ct;
  for (const auto& omega : stratified_extensions(t.so, max_ground))
    ct.members.insert(from_stratified_order(theta, omega));
  return ct;
}

/// Comtrace to cd-graph: the unclosed invariant relations of any member.
inline CdGraph ct2dep(const ComtraceAlphabet& theta, const Comtrace& ct) {
  const auto rs = invariant_structure(theta, ct.least());
  CdGraph d{rs.ground, rs.r1, rs.r2};
#ifndef NDEBUG
  assert(check_cdgraph(theta, d).ok);
  if (ct.members.size() > 1) {
    const auto rs2 = invariant_structure(theta, *std::next(ct.members.begin()));
    assert(d == (CdGraph{rs2.ground, rs2.r1, rs2.r2}));
  }
#endif
  return d;
}

/// Cd-graph to lsos-comtrace: the closure.
inline LsosComtrace dep2lct(const ComtraceAlphabet& theta, const CdGraph& d) {
  const auto closed = diamond_closure({d.ground, d.solid, d.dashed});
  return make_lsos_comtrace(theta,
                            SoStructure{closed.ground, closed.r1, closed.r2});
}

/// Lsos-comtrace to cd-graph, via the comtrace representation.
inline CdGraph lct2dep(const ComtraceAlphabet& theta, const LsosComtrace& t,
                       std::size_t max_ground = kDefaultMaxGround) {
  return ct2dep(theta, lct2ct(theta, t, max_ground));
}

namespace detail {

inline std::map<EventSymbol, int> occurrence_counts(const OccSet& ground) {
  std::map<EventSymbol, int> counts;
  for (const auto& alpha : ground) ++counts[alpha.event];
  return counts;
}

/// Disjoint union via per-event index shifting of the right operand, which
/// keeps canonical occurrence names canonical in the union.
inline Occ shift(const Occ& alpha, const std::map<EventSymbol, int>& left_counts) {
  auto it = left_counts.find(alpha.event);
  return {alpha.event, alpha.index + (it == left_counts.end() ? 0 : it->second)};
}

}  // namespace detail

/// Composition of lsos-comtraces: disjoint union with all non-serializable
/// cross pairs added, then closed.
inline LsosComtrace compose_lsos(const ComtraceAlphabet& theta,
                                 const LsosComtrace& lhs,
                                 const LsosComtrace& rhs) {
  detail::require_known_labels(theta, lhs.so.ground);
  detail::require_known_labels(theta, rhs.so.ground);
  const auto left_counts = detail::occurrence_counts(lhs.so.ground);

  RelationalStructure rs;
  rs.ground = lhs.so.ground;
  OccSet right_ground;
  for (const auto& alpha : rhs.so.ground)
    right_ground.insert(detail::shift(alpha, left_counts));
  rs.ground.insert(right_ground.begin(), right_ground.end());

  rs.r1 = lhs.so.prec;
  rs.r2 = lhs.so.wk;
  for (const auto& [a, b] : rhs.so.prec)
    rs.r1.emplace(detail::shift(a, left_counts), detail::shift(b, left_counts));
  for (const auto& [a, b] : rhs.so.wk)
    rs.r2.emplace(detail::shift(a, left_counts), detail::shift(b, left_counts));
  for (const auto& alpha : lhs.so.ground) {
    for (const auto& beta : right_ground) {
      if (!theta.ser_related(alpha.event, beta.event)) rs.r1.emplace(alpha, beta);
      if (!theta.ser_related(beta.event, alpha.event)) rs.r2.emplace(alpha, beta);
    }
  }
  const auto closed = diamond_closure(rs);
  return make_lsos_comtrace(theta,
                            SoStructure{closed.ground, closed.r1, closed.r2});
}

/// Composition of cd-graphs: disjoint union with the same cross arcs, no
/// closure applied.
inline CdGraph compose_cdg(const ComtraceAlphabet& theta, const CdGraph& lhs,
                           const CdGraph& rhs) {
  detail::require_known_labels(theta, lhs.ground);
  detail::require_known_labels(theta, rhs.ground);
  const auto left_counts = detail::occurrence_counts(lhs.ground);

  CdGraph d;
  d.ground = lhs.ground;
  OccSet right_ground;
  for (const auto& alpha : rhs.ground)
    right_ground.insert(detail::shift(alpha, left_counts));
  d.ground.insert(right_ground.begin(), right_ground.end());

  d.solid = lhs.solid;
  d.dashed = lhs.dashed;
  for (const auto& [a, b] : rhs.solid)
    d.solid.emplace(detail::shift(a, left_counts), detail::shift(b, left_counts));
  for (const auto& [a, b] : rhs.dashed)
    d.dashed.emplace(detail::shift(a, left_counts), detail::shift(b, left_counts));
  for (const auto& alpha : lhs.ground) {
    for (const auto& beta : right_ground) {
      if (!theta.ser_related(alpha.event, beta.event)) d.solid.emplace(alpha, beta);
      if (!theta.ser_related(beta.event, alpha.event)) d.dashed.emplace(alpha, beta);
    }
  }
#ifndef NDEBUG
  assert(check_cdgraph(theta, d).ok);
#endif
  return d;
}

}  // namespace comtrace
