#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "comtrace/error.hpp"
#include "comtrace/relation.hpp"
#include "comtrace/stepseq.hpp"

namespace comtrace {

inline constexpr std::size_t kDefaultMaxGround = 10;

/// A ground set with two binary relations; the raw material the closure
/// operator works on.
struct RelationalStructure {
  OccSet ground;
  OccRelation r1;
  OccRelation r2;

  bool operator==(const RelationalStructure&) const = default;
};

/// Causality (prec, "earlier than") and weak causality (wk, "not later
/// than") over a common ground set. Use make_so_structure or
/// check_so_axioms to establish the axioms.
struct SoStructure {
  OccSet ground;
  OccRelation prec;
  OccRelation wk;

  bool operator==(const SoStructure&) const = default;
  auto operator<=>(const SoStructure&) const = default;
};

struct Violation {
  std::string condition;
  std::vector<Occ> witnesses;

  bool operator==(const Violation&) const = default;
};

struct CheckReport {
  bool ok = true;
  std::vector<Violation> violations;

  explicit operator bool() const { return ok; }

  void add(std::string condition, std::vector<Occ> witnesses) {
    ok = false;
    violations.push_back({std::move(condition), std::move(witnesses)});
  }
};

inline std::string to_text(const CheckReport& report) {
  if (report.ok) return "ok";
  std::string out;
  for (const auto& v : report.violations) {
    if (!out.empty()) out += "; ";
    out += v.condition;
    if (!v.witnesses.empty()) {
      out += " at (";
      for (std::size_t i = 0; i < v.witnesses.size(); ++i) {
        if (i) out += ',';
        out += to_text(v.witnesses[i]);
      }
      out += ')';
    }
  }
  return out;
}

inline RelationalStructure as_relational(const SoStructure& s) {
  return {s.ground, s.prec, s.wk};
}

namespace detail {

inline void require_in_ground(const OccSet& ground, const OccRelation& rel,
                              const char* name) {
  for (const auto& [a, b] : rel) {
    if (!ground.count(a) || !ground.count(b))
      fail(ErrorKind::InvalidStructure,
           std::string(name) + " relation mentions element outside ground");
  }
}

/// Dense index view over a structure's two relations. The library's ground
/// sets are desk scale; 64 elements is a hard cap for the mask algorithms.
struct DenseStructure {
  std::vector<Occ> elems;
  std::size_t n = 0;
  std::vector<std::uint64_t> r1;  // row masks: bit j of r1[i] iff elems[i] R1 elems[j]
  std::vector<std::uint64_t> r2;

  std::size_t index_of(const Occ& x) const {
    return static_cast<std::size_t>(
        std::lower_bound(elems.begin(), elems.end(), x) - elems.begin());
  }
};

inline DenseStructure densify(const OccSet& ground, const OccRelation& rel1,
                              const OccRelation& rel2) {
  if (ground.size() > 64)
    fail(ErrorKind::GroundTooLarge, "ground sets beyond 64 elements unsupported");
  require_in_ground(ground, rel1, "first");
  require_in_ground(ground, rel2, "second");
  DenseStructure d;
  d.elems.assign(ground.begin(), ground.end());
  d.n = d.elems.size();
  d.r1.assign(d.n, 0);
  d.r2.assign(d.n, 0);
  for (const auto& [a, b] : rel1)
    d.r1[d.index_of(a)] |= std::uint64_t{1} << d.index_of(b);
  for (const auto& [a, b] : rel2)
    d.r2[d.index_of(a)] |= std::uint64_t{1} << d.index_of(b);
  return d;
}

/// Reflexive-transitive closure of row masks, by iterated composition to
/// fixpoint.
inline std::vector<std::uint64_t> star(const std::vector<std::uint64_t>& rows) {
  const std::size_t n = rows.size();
  std::vector<std::uint64_t> out(rows);
  for (std::size_t i = 0; i < n; ++i) out[i] |= std::uint64_t{1} << i;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < n; ++i) {
      std::uint64_t row = out[i];
      std::uint64_t acc = row;
      std::uint64_t rest = row;
      while (rest) {
        const std::size_t j = static_cast<std::size_t>(__builtin_ctzll(rest));
        rest &= rest - 1;
        acc |= out[j];
      }
      if (acc != row) {
        out[i] = acc;
        changed = true;
      }
    }
  }
  return out;
}

inline OccRelation relation_from_rows(const std::vector<Occ>& elems,
                                      const std::vector<std::uint64_t>& rows) {
  OccRelation rel;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    std::uint64_t rest = rows[i];
    while (rest) {
      const std::size_t j = static_cast<std::size_t>(__builtin_ctzll(rest));
      rest &= rest - 1;
      rel.emplace(elems[i], elems[j]);
    }
  }
  return rel;
}

}  // namespace detail

namespace detail {

/// S1 through S4 on the dense view; first witness per axiom in canonical
/// order.
inline CheckReport check_so_axioms_dense(const DenseStructure& d) {
  CheckReport report;

  // S1: r2 irreflexive.
  for (std::size_t i = 0; i < d.n; ++i) {
    if (d.r2[i] >> i & 1) {
      report.add("S1", {d.elems[i]});
      break;
    }
  }
  // S2: r1 contained in r2.
  [&] {
    for (std::size_t i = 0; i < d.n; ++i) {
      std::uint64_t extra = d.r1[i] & ~d.r2[i];
      if (extra) {
        const auto j = static_cast<std::size_t>(__builtin_ctzll(extra));
        report.add("S2", {d.elems[i], d.elems[j]});
        return;
      }
    }
  }();
  // S3: a r2 b r2 c, a != c implies a r2 c.
  [&] {
    for (std::size_t i = 0; i < d.n; ++i) {
      std::uint64_t mids = d.r2[i];
      std::uint64_t reach = 0;
      while (mids) {
        const auto j = static_cast<std::size_t>(__builtin_ctzll(mids));
        mids &= mids - 1;
        reach |= d.r2[j];
      }
      std::uint64_t missing = reach & ~d.r2[i] & ~(std::uint64_t{1} << i);
      if (missing) {
        const auto k = static_cast<std::size_t>(__builtin_ctzll(missing));
        // Recover a middle witness.
        for (std::size_t j = 0; j < d.n; ++j) {
          if ((d.r2[i] >> j & 1) && (d.r2[j] >> k & 1)) {
            report.add("S3", {d.elems[i], d.elems[j], d.elems[k]});
            return;
          }
        }
      }
    }
  }();
  // S4: a r2 b r1 c or a r1 b r2 c implies a r1 c.
  [&] {
    for (std::size_t i = 0; i < d.n; ++i) {
      for (std::size_t j = 0; j < d.n; ++j) {
        std::uint64_t forced = 0;
        if (d.r2[i] >> j & 1) forced |= d.r1[j];
        if (d.r1[i] >> j & 1) forced |= d.r2[j];
        std::uint64_t missing = forced & ~d.r1[i];
        if (missing) {
          const auto k = static_cast<std::size_t>(__builtin_ctzll(missing));
          report.add("S4", {d.elems[i], d.elems[j], d.elems[k]});
          return;
        }
      }
    }
  }();
  return report;
}

}  // namespace detail

/// Verifies S1 through S4, reporting the first witness per axiom in
/// canonical order.
inline CheckReport check_so_axioms(const RelationalStructure& rs) {
  return detail::check_so_axioms_dense(detail::densify(rs.ground, rs.r1, rs.r2));
}

inline bool is_so_structure(const RelationalStructure& rs) {
  return check_so_axioms(rs).ok;
}

inline SoStructure make_so_structure(OccSet ground, OccRelation prec,
                                     OccRelation wk) {
  RelationalStructure rs{std::move(ground), std::move(prec), std::move(wk)};
  auto report = check_so_axioms(rs);
  if (!report.ok)
    fail(ErrorKind::InvalidStructure, "not an so-structure: " + to_text(report));
  return {std::move(rs.ground), std::move(rs.r1), std::move(rs.r2)};
}

inline void require_so_structure(const SoStructure& s) {
  auto report = check_so_axioms(as_relational(s));
  if (!report.ok)
    fail(ErrorKind::InvalidStructure, "not an so-structure: " + to_text(report));
}

/// The so-structure a stratified order induces: prec is the order itself,
/// wk additionally relates distinct same-block elements.
inline SoStructure so_from_stratified(const StratifiedOrder& omega) {
  SoStructure s;
  s.ground = omega.ground();
  s.prec = order_pairs(omega);
  s.wk = weak_order_pairs(omega);
  return s;
}

/// Closure operator turning a generating structure into an so-structure:
/// r1' = (R1 u R2)* o R1 o (R1 u R2)*, r2' = (R1 u R2)* minus identity.
inline RelationalStructure diamond_closure(const RelationalStructure& rs) {
  const auto d = detail::densify(rs.ground, rs.r1, rs.r2);
  std::vector<std::uint64_t> both(d.n);
  for (std::size_t i = 0; i < d.n; ++i) both[i] = d.r1[i] | d.r2[i];
  const auto reach = detail::star(both);

  // left = reach o r1
  std::vector<std::uint64_t> left(d.n, 0);
  for (std::size_t i = 0; i < d.n; ++i) {
    std::uint64_t rest = reach[i];
    while (rest) {
      const auto j = static_cast<std::size_t>(__builtin_ctzll(rest));
      rest &= rest - 1;
      left[i] |= d.r1[j];
    }
  }
  // closed1 = left o reach
  std::vector<std::uint64_t> closed1(d.n, 0);
  for (std::size_t i = 0; i < d.n; ++i) {
    std::uint64_t rest = left[i];
    while (rest) {
      const auto j = static_cast<std::size_t>(__builtin_ctzll(rest));
      rest &= rest - 1;
      closed1[i] |= reach[j];
    }
  }
  std::vector<std::uint64_t> closed2(reach);
  for (std::size_t i = 0; i < d.n; ++i) closed2[i] &= ~(std::uint64_t{1} << i);

  RelationalStructure out;
  out.ground = rs.ground;
  out.r1 = detail::relation_from_rows(d.elems, closed1);
  out.r2 = detail::relation_from_rows(d.elems, closed2);
  return out;
}

/// True iff the closure's first relation is irreflexive, i.e. the closure
/// yields an so-structure.
inline bool is_diamond_valid(const RelationalStructure& rs) {
  const auto closed = diamond_closure(rs);
  return is_irreflexive(closed.r1);
}

/// All stratified orders extending the structure: prec inside the strict
/// order, wk inside its not-later-than view. Exhaustive enumeration over
/// ordered set partitions of the ground set, pruned by the two containment
/// constraints; results are sorted.
inline std::vector<StratifiedOrder> stratified_extensions(
    const SoStructure& s, std::size_t max_ground = kDefaultMaxGround) {
  require_so_structure(s);
  if (s.ground.size() > max_ground)
    fail(ErrorKind::GroundTooLarge,
         "ground has " + std::to_string(s.ground.size()) +
             " elements; extension enumeration bounded at " +
             std::to_string(max_ground));
  const auto d = detail::densify(s.ground, s.prec, s.wk);
  const std::size_t n = d.n;
  std::vector<std::uint64_t> prec_pred(n, 0), wk_pred(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t rest = d.r1[i];
    while (rest) {
      const auto j = static_cast<std::size_t>(__builtin_ctzll(rest));
      rest &= rest - 1;
      prec_pred[j] |= std::uint64_t{1} << i;
    }
    rest = d.r2[i];
    while (rest) {
      const auto j = static_cast<std::size_t>(__builtin_ctzll(rest));
      rest &= rest - 1;
      wk_pred[j] |= std::uint64_t{1} << i;
    }
  }

  const std::uint64_t full = n == 64 ? ~std::uint64_t{0}
                                     : (std::uint64_t{1} << n) - 1;
  std::vector<StratifiedOrder> result;
  std::vector<std::uint64_t> current;

  auto emit = [&] {
    StratifiedOrder omega;
    for (std::uint64_t block : current) {
      OccSet members;
      while (block) {
        const auto j = static_cast<std::size_t>(__builtin_ctzll(block));
        block &= block - 1;
        members.insert(d.elems[j]);
      }
      omega.blocks.push_back(std::move(members));
    }
    result.push_back(std::move(omega));
  };

  std::function<void(std::uint64_t)> explore = [&](std::uint64_t placed) {
    if (placed == full) {
      emit();
      return;
    }
    // Candidates must have all strict predecessors placed already.
    std::uint64_t ready = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (!(placed >> i & 1) && (prec_pred[i] & ~placed) == 0)
        ready |= std::uint64_t{1} << i;
    }
    for (std::uint64_t block = ready; block; block = (block - 1) & ready) {
      bool valid = true;
      std::uint64_t rest = block;
      while (rest) {
        const auto i = static_cast<std::size_t>(__builtin_ctzll(rest));
        rest &= rest - 1;
        if (wk_pred[i] & ~(placed | block)) {
          valid = false;
          break;
        }
      }
      if (!valid) continue;
      current.push_back(block);
      explore(placed | block);
      current.pop_back();
    }
  };
  explore(0);
  std::sort(result.begin(), result.end());
  return result;
}

/// Intersection of all stratified extensions, both as strict orders and as
/// not-later-than views. For an so-structure this reproduces the structure
/// itself.
inline SoStructure intersect_extensions(const SoStructure& s,
                                        std::size_t max_ground = kDefaultMaxGround) {
  const auto exts = stratified_extensions(s, max_ground);
  SoStructure out;
  out.ground = s.ground;
  if (exts.empty()) return out;
  out.prec = order_pairs(exts.front());
  out.wk = weak_order_pairs(exts.front());
  for (std::size_t i = 1; i < exts.size(); ++i) {
    OccRelation prec_next, wk_next;
    const auto strict = order_pairs(exts[i]);
    const auto weak = weak_order_pairs(exts[i]);
    std::set_intersection(out.prec.begin(), out.prec.end(), strict.begin(),
                          strict.end(),
                          std::inserter(prec_next, prec_next.end()));
    std::set_intersection(out.wk.begin(), out.wk.end(), weak.begin(),
                          weak.end(), std::inserter(wk_next, wk_next.end()));
    out.prec = std::move(prec_next);
    out.wk = std::move(wk_next);
  }
  return out;
}

/// Classes of the weak-causality cycle equivalence: alpha and beta are
/// equivalent iff equal or mutually wk-related. Computed as the strongly
/// connected components of (ground, wk).
inline std::vector<OccSet> cycle_classes(const SoStructure& s) {
  return strongly_connected_components(s.ground, s.wk);
}

struct QuotientSoStructure {
  std::vector<OccSet> blocks;
  PairRelation<std::size_t> qprec;
  PairRelation<std::size_t> qwk;
  std::vector<std::set<EventSymbol>> block_labels;

  bool operator==(const QuotientSoStructure&) const = default;

  std::size_t block_of(const Occ& alpha) const {
    for (std::size_t i = 0; i < blocks.size(); ++i)
      if (blocks[i].count(alpha)) return i;
    fail(ErrorKind::NotAnOccurrence, to_text(alpha) + " not in any block");
  }
};

/// Quotient by the cycle equivalence: blocks related iff distinct and some
/// cross pair is related.
inline QuotientSoStructure quotient(const SoStructure& s) {
  QuotientSoStructure q;
  q.blocks = cycle_classes(s);
  for (const auto& block : q.blocks) {
    std::set<EventSymbol> labels;
    for (const auto& alpha : block) labels.insert(alpha.event);
    q.block_labels.push_back(std::move(labels));
  }
  std::map<Occ, std::size_t> block_index;
  for (std::size_t i = 0; i < q.blocks.size(); ++i)
    for (const auto& alpha : q.blocks[i]) block_index[alpha] = i;
  for (const auto& [a, b] : s.prec) {
    const auto ia = block_index.at(a), ib = block_index.at(b);
    if (ia != ib) q.qprec.emplace(ia, ib);
  }
  for (const auto& [a, b] : s.wk) {
    const auto ia = block_index.at(a), ib = block_index.at(b);
    if (ia != ib) q.qwk.emplace(ia, ib);
  }
  return q;
}

namespace detail {

/// Deterministic linear extension of the quotient's weak order: greedily
/// takes the available block with the least minimum element. merged_with,
/// when set, forces two blocks to come out consecutively.
inline std::vector<std::size_t> linearize_blocks(
    const QuotientSoStructure& q, std::size_t merge_first = static_cast<std::size_t>(-1),
    std::size_t merge_second = static_cast<std::size_t>(-1)) {
  const std::size_t k = q.blocks.size();
  std::vector<std::set<std::size_t>> preds(k);
  for (const auto& [a, b] : q.qwk) preds[b].insert(a);
  if (merge_second != static_cast<std::size_t>(-1)) {
    // Treat the merged pair as one node anchored at merge_first.
    for (std::size_t b = 0; b < k; ++b) {
      if (preds[b].erase(merge_second)) preds[b].insert(merge_first);
    }
    preds[merge_first].insert(preds[merge_second].begin(),
                              preds[merge_second].end());
    preds[merge_first].erase(merge_first);
  }
  std::vector<char> placed(k, 0);
  std::vector<std::size_t> order;
  auto is_ready = [&](std::size_t b) {
    for (std::size_t p : preds[b])
      if (!placed[p]) return false;
    return true;
  };
  while (order.size() < k) {
    std::size_t chosen = k;
    for (std::size_t b = 0; b < k; ++b) {
      if (placed[b] || b == merge_second || !is_ready(b)) continue;
      if (chosen == k || q.blocks[b] < q.blocks[chosen]) chosen = b;
    }
    if (chosen == k)
      fail(ErrorKind::InvalidStructure, "quotient weak order is cyclic");
    order.push_back(chosen);
    placed[chosen] = 1;
    if (chosen == merge_first && merge_second != static_cast<std::size_t>(-1)) {
      order.push_back(merge_second);
      placed[merge_second] = 1;
    }
  }
  return order;
}

}  // namespace detail

/// A stratified extension whose blocks are exactly the cycle classes,
/// ordered by a deterministic linear extension of the quotient weak order.
inline StratifiedOrder synchronous_step_witness(const SoStructure& s) {
  require_so_structure(s);
  const auto q = quotient(s);
  StratifiedOrder omega;
  for (std::size_t b : detail::linearize_blocks(q)) omega.blocks.push_back(q.blocks[b]);
  return omega;
}

/// As above, with the classes of alpha and beta adjacent. Requires the
/// class of alpha to cover the class of beta in the quotient weak order.
inline StratifiedOrder synchronous_step_witness(const SoStructure& s,
                                                const Occ& alpha,
                                                const Occ& beta) {
  require_so_structure(s);
  const auto q = quotient(s);
  const auto ia = q.block_of(alpha);
  const auto ib = q.block_of(beta);
  const auto cov = covering(q.qwk);
  if (!cov.count({ia, ib}))
    fail(ErrorKind::NotCovering,
         "class of " + to_text(alpha) + " does not cover class of " +
             to_text(beta) + " in the quotient weak order");
  StratifiedOrder omega;
  for (std::size_t b : detail::linearize_blocks(q, ia, ib))
    omega.blocks.push_back(q.blocks[b]);
  return omega;
}

}  // namespace comtrace
