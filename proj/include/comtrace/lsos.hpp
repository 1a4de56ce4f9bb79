#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "comtrace/alphabet.hpp"
#include "comtrace/error.hpp"
#include "comtrace/sostruct.hpp"
#include "comtrace/stepseq.hpp"

namespace comtrace {

inline constexpr std::size_t kDefaultMaxCycleClass = 12;

/// Ground elements are event occurrences, so the labeling of a labeled
/// so-structure is the occurrence event. Occurrence indices are arbitrary
/// until canonicalized.

namespace detail {

inline void require_known_labels(const ComtraceAlphabet& theta,
                                 const OccSet& ground) {
  for (const auto& alpha : ground) {
    if (!theta.has_event(alpha.event))
      fail(ErrorKind::AlphabetMismatch,
           "label '" + alpha.event + "' not in alphabet");
  }
}

/// Everything the condition checks consume, precomputed on indices: the
/// dense structure, per-element label indices, sim/ser lookup tables over
/// label indices, cycle classes and the quotient relations.
struct LsosCheckContext {
  DenseStructure d;
  std::vector<std::size_t> label;          // element -> label index
  std::vector<EventSymbol> label_names;    // label index -> event
  std::vector<char> sim, ser;              // label-pair tables, row-major
  std::vector<std::size_t> block_of;       // element -> block
  std::vector<std::vector<std::size_t>> blocks;  // sorted by least element
  std::vector<char> qprec, qwk, qcov;      // block-pair tables, row-major

  bool sim_at(std::size_t a, std::size_t b) const {
    return sim[a * label_names.size() + b] != 0;
  }
  bool ser_at(std::size_t a, std::size_t b) const {
    return ser[a * label_names.size() + b] != 0;
  }
};

inline LsosCheckContext make_lsos_context(const ComtraceAlphabet& theta,
                                          const SoStructure& so) {
  LsosCheckContext ctx;
  ctx.d = densify(so.ground, so.prec, so.wk);
  const auto axioms = check_so_axioms_dense(ctx.d);
  if (!axioms.ok)
    fail(ErrorKind::InvalidStructure, "not an so-structure: " + to_text(axioms));
  const std::size_t n = ctx.d.n;

  ctx.label.resize(n);
  std::map<EventSymbol, std::size_t> label_index;
  for (std::size_t i = 0; i < n; ++i) {
    auto [it, fresh] = label_index.try_emplace(ctx.d.elems[i].event,
                                               ctx.label_names.size());
    if (fresh) ctx.label_names.push_back(ctx.d.elems[i].event);
    ctx.label[i] = it->second;
  }
  const std::size_t L = ctx.label_names.size();
  ctx.sim.assign(L * L, 0);
  ctx.ser.assign(L * L, 0);
  for (std::size_t a = 0; a < L; ++a)
    for (std::size_t b = 0; b < L; ++b) {
      ctx.sim[a * L + b] =
          theta.sim_related(ctx.label_names[a], ctx.label_names[b]) ? 1 : 0;
      ctx.ser[a * L + b] =
          theta.ser_related(ctx.label_names[a], ctx.label_names[b]) ? 1 : 0;
    }

  // Cycle classes: strongly connected components of the weak relation,
  // here via reachability masks (the grounds are small).
  std::vector<std::uint64_t> reach = star(ctx.d.r2);
  ctx.block_of.assign(n, n);
  std::vector<std::size_t> leader;
  for (std::size_t i = 0; i < n; ++i) {
    if (ctx.block_of[i] != n) continue;
    const std::size_t id = leader.size();
    leader.push_back(i);
    ctx.block_of[i] = id;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (ctx.block_of[j] == n && (reach[i] >> j & 1) && (reach[j] >> i & 1))
        ctx.block_of[j] = id;
    }
  }
  const std::size_t k = leader.size();
  ctx.blocks.resize(k);
  for (std::size_t i = 0; i < n; ++i) ctx.blocks[ctx.block_of[i]].push_back(i);

  ctx.qprec.assign(k * k, 0);
  ctx.qwk.assign(k * k, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (ctx.block_of[i] == ctx.block_of[j]) continue;
      if (ctx.d.r1[i] >> j & 1)
        ctx.qprec[ctx.block_of[i] * k + ctx.block_of[j]] = 1;
      if (ctx.d.r2[i] >> j & 1)
        ctx.qwk[ctx.block_of[i] * k + ctx.block_of[j]] = 1;
    }
  }
  ctx.qcov = ctx.qwk;
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) {
      if (!ctx.qwk[a * k + b]) continue;
      for (std::size_t m = 0; m < k; ++m) {
        if (ctx.qwk[a * k + m] && ctx.qwk[m * k + b]) {
          ctx.qcov[a * k + b] = 0;
          break;
        }
      }
    }
  return ctx;
}

/// Label product over pairs of distinct elements of two blocks, tested for
/// containment in ser (or sim).
inline bool block_product_inside(const LsosCheckContext& ctx, std::size_t a,
                                 std::size_t b, bool in_ser) {
  for (std::size_t x : ctx.blocks[a])
    for (std::size_t y : ctx.blocks[b]) {
      if (x == y) continue;
      const bool related = in_ser ? ctx.ser_at(ctx.label[x], ctx.label[y])
                                  : ctx.sim_at(ctx.label[x], ctx.label[y]);
      if (!related) return false;
    }
  return true;
}

/// LC1 through LC3, shared between the element-level and quotient-level
/// check variants.
inline void check_lc123(const LsosCheckContext& ctx,
                        std::size_t max_cycle_class, CheckReport& report) {
  const std::size_t k = ctx.blocks.size();
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      if (!ctx.qcov[a * k + b]) continue;
      if (ctx.qprec[a * k + b]) {
        if (block_product_inside(ctx, a, b, true))
          report.add("LC1", {ctx.d.elems[ctx.blocks[a].front()],
                             ctx.d.elems[ctx.blocks[b].front()]});
      } else {
        if (block_product_inside(ctx, b, a, true))
          report.add("LC2", {ctx.d.elems[ctx.blocks[a].front()],
                             ctx.d.elems[ctx.blocks[b].front()]});
      }
    }
  }

  // LC3: no cycle class may split into two serializable parts. Enumerates
  // ordered pairs of nonempty proper subsets covering the class; each
  // member goes left, right, or both.
  for (const auto& block : ctx.blocks) {
    const std::size_t m = block.size();
    if (m < 2) continue;
    if (m > max_cycle_class)
      fail(ErrorKind::GroundTooLarge,
           "cycle class has " + std::to_string(m) +
               " elements; two-cover enumeration bounded at " +
               std::to_string(max_cycle_class));
    bool violated = false;
    std::vector<int> assign(m, 0);  // 0 left, 1 right, 2 both
    while (!violated) {
      std::size_t at = 0;
      while (at < m && assign[at] == 2) assign[at++] = 0;
      if (at == m) break;
      ++assign[at];
      std::size_t left_count = 0, right_count = 0;
      for (std::size_t i = 0; i < m; ++i) {
        if (assign[i] != 1) ++left_count;
        if (assign[i] != 0) ++right_count;
      }
      // A side equal to the whole class overlaps the other side, so its
      // product meets a reflexive pair and cannot sit inside ser.
      if (left_count == 0 || right_count == 0) continue;
      if (left_count == m || right_count == m) continue;
      bool inside = true;
      for (std::size_t i = 0; i < m && inside; ++i) {
        if (assign[i] == 1) continue;
        for (std::size_t j = 0; j < m; ++j) {
          if (assign[j] == 0) continue;
          if (!ctx.ser_at(ctx.label[block[i]], ctx.label[block[j]])) {
            inside = false;
            break;
          }
        }
      }
      if (inside) {
        report.add("LC3", {ctx.d.elems[block.front()]});
        violated = true;
      }
    }
  }
}

}  // namespace detail

/// Checks the five conditions characterizing comtraces order-theoretically.
/// LC1 and LC2 quantify over covering pairs of cycle classes in the
/// quotient weak order, LC3 over two-part covers of each class, LC4 and LC5
/// over ordered pairs of distinct elements. The structure must already
/// satisfy the so-structure axioms.
inline CheckReport check_lsos(const ComtraceAlphabet& theta,
                              const SoStructure& so,
                              std::size_t max_cycle_class = kDefaultMaxCycleClass) {
  detail::require_known_labels(theta, so.ground);

  CheckReport report;
  const auto ctx = detail::make_lsos_context(theta, so);
  detail::check_lc123(ctx, max_cycle_class, report);

  bool lc4_seen = false, lc5_seen = false;
  for (std::size_t i = 0; i < ctx.d.n; ++i) {
    for (std::size_t j = 0; j < ctx.d.n; ++j) {
      if (i == j) continue;
      if (!lc4_seen && !ctx.ser_at(ctx.label[i], ctx.label[j]) &&
          !(ctx.d.r1[i] >> j & 1) && !(ctx.d.r2[j] >> i & 1)) {
        report.add("LC4", {ctx.d.elems[i], ctx.d.elems[j]});
        lc4_seen = true;
      }
      if (!lc5_seen && !ctx.sim_at(ctx.label[i], ctx.label[j]) &&
          !(ctx.d.r1[i] >> j & 1) && !(ctx.d.r1[j] >> i & 1)) {
        report.add("LC5", {ctx.d.elems[i], ctx.d.elems[j]});
        lc5_seen = true;
      }
    }
  }
  return report;
}

/// The quotient-level variant: LC1 through LC3 plus LC4'/LC5', which state
/// the serializability and simultaneity constraints between whole cycle
/// classes. Label products range over pairs of distinct elements; for a
/// class against itself LC5' therefore requires pairwise-similar labels
/// inside every class, without which the quotient-level conditions would
/// not match the element-level ones.
inline CheckReport check_lsos_prime(const ComtraceAlphabet& theta,
                                    const SoStructure& so,
                                    std::size_t max_cycle_class = kDefaultMaxCycleClass) {
  detail::require_known_labels(theta, so.ground);

  CheckReport report;
  const auto ctx = detail::make_lsos_context(theta, so);
  detail::check_lc123(ctx, max_cycle_class, report);

  const std::size_t k = ctx.blocks.size();
  bool lc4_seen = false, lc5_seen = false;
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      if (!lc4_seen && a != b && !detail::block_product_inside(ctx, a, b, true) &&
          !ctx.qprec[a * k + b] && !ctx.qwk[b * k + a]) {
        report.add("LC4'", {ctx.d.elems[ctx.blocks[a].front()],
                            ctx.d.elems[ctx.blocks[b].front()]});
        lc4_seen = true;
      }
      const bool prec_either =
          a != b && (ctx.qprec[a * k + b] || ctx.qprec[b * k + a]);
      if (!lc5_seen && !detail::block_product_inside(ctx, a, b, false) &&
          !prec_either) {
        report.add("LC5'", {ctx.d.elems[ctx.blocks[a].front()],
                            ctx.d.elems[ctx.blocks[b].front()]});
        lc5_seen = true;
      }
    }
  }
  return report;
}

/// A labeled so-structure in canonical (enumerated) form: occurrence
/// indices equal causality ranks among same-labeled elements. Constructors
/// canonicalize eagerly, so equality of values decides lp-isomorphism.
struct LsosComtrace {
  SoStructure so;

  bool operator==(const LsosComtrace&) const = default;
  auto operator<=>(const LsosComtrace&) const = default;

  bool empty() const { return so.ground.empty(); }
};

/// Renames every element to its label with the causality rank among equal
/// labels. Fails when two same-labeled elements are causally incomparable,
/// which would break index uniqueness.
inline LsosComtrace canonicalize(const ComtraceAlphabet& theta,
                                 const SoStructure& so) {
  detail::require_known_labels(theta, so.ground);
  std::map<EventSymbol, std::vector<Occ>> by_label;
  for (const auto& alpha : so.ground) by_label[alpha.event].push_back(alpha);
  for (const auto& [event, occs] : by_label) {
    for (std::size_t i = 0; i < occs.size(); ++i) {
      for (std::size_t j = i + 1; j < occs.size(); ++j) {
        if (!so.prec.count({occs[i], occs[j]}) &&
            !so.prec.count({occs[j], occs[i]}))
          fail(ErrorKind::NotAnLsosComtrace,
               "same-label elements " + to_text(occs[i]) + " and " +
                   to_text(occs[j]) + " are causally incomparable");
      }
    }
  }
  std::map<Occ, Occ> rename;
  for (const auto& alpha : so.ground) {
    int before = 0;
    for (const auto& beta : by_label[alpha.event])
      if (so.prec.count({beta, alpha})) ++before;
    rename[alpha] = Occ{alpha.event, before + 1};
  }
  LsosComtrace out;
  for (const auto& alpha : so.ground) out.so.ground.insert(rename[alpha]);
  for (const auto& [a, b] : so.prec) out.so.prec.emplace(rename[a], rename[b]);
  for (const auto& [a, b] : so.wk) out.so.wk.emplace(rename[a], rename[b]);
  return out;
}

/// Validating constructor: checks the five conditions, then stores the
/// canonical form.
inline LsosComtrace make_lsos_comtrace(const ComtraceAlphabet& theta,
                                       const SoStructure& so) {
  auto report = check_lsos(theta, so);
  if (!report.ok)
    fail(ErrorKind::NotAnLsosComtrace, "conditions violated: " + to_text(report));
  return canonicalize(theta, so);
}

/// Label-preserving isomorphism, decided by canonical-form equality.
inline bool lp_isomorphic(const ComtraceAlphabet& theta, const SoStructure& lhs,
                          const SoStructure& rhs) {
  return make_lsos_comtrace(theta, lhs) == make_lsos_comtrace(theta, rhs);
}

inline LsosComtrace lsos_identity() { return LsosComtrace{}; }

}  // namespace comtrace
