#include <doctest.h>

#include "comtrace/transform.hpp"
#include "test_helpers.hpp"

using namespace comtrace;
using namespace comtrace::testing;

namespace {

CdGraph dense_reference_graph() {
  CdGraph d;
  const Occ a1 = occ("a", 1), b1 = occ("b", 1), b2 = occ("b", 2);
  const Occ c1 = occ("c", 1), c2 = occ("c", 2);
  d.ground = {a1, b1, b2, c1, c2};
  d.solid = {{b1, c1}, {b1, b2}, {b1, c2}, {c1, b2}, {c1, c2}};
  d.dashed = {{a1, c1}, {a1, c2}, {b1, c1}, {b1, b2}, {b1, c2},
              {c1, b2}, {c1, c2}, {b2, c2}, {c2, b2}};
  return d;
}

/// Distinct classes generated by short sequences, keyed by least member.
std::vector<Comtrace> class_pool(const ComtraceAlphabet& theta,
                                 std::size_t max_steps) {
  std::set<StepSequence> leasts;
  std::vector<Comtrace> pool;
  for (const auto& seed : all_step_sequences(theta, max_steps)) {
    auto ct = comtrace_of(theta, seed);
    if (leasts.insert(ct.least()).second) pool.push_back(std::move(ct));
  }
  return pool;
}

}  // namespace

TEST_CASE("ct2lct of the dense example is the reference structure") {
  const auto theta = dense_alphabet();
  const auto ct = comtrace_of(theta, parse("{a,b}{c}{b,c}"));
  CHECK(ct2lct(theta, ct).so == dense_reference_structure());
}

TEST_CASE("ct2lct maps the identity to the identity") {
  const auto theta = small_alphabet();
  CHECK(ct2lct(theta, comtrace_identity()) == lsos_identity());
  CHECK(lct2ct(theta, lsos_identity()) == comtrace_identity());
}

TEST_CASE("ct2lct is member independent") {
  const auto theta = dense_alphabet();
  const auto ct = comtrace_of(theta, parse("{a,b}{c}{b,c}"));
  REQUIRE(ct.members.size() == 4);
  for (const auto& member : ct.members) {
    const auto closed = diamond_closure(invariant_structure(theta, member));
    const auto t = make_lsos_comtrace(
        theta, SoStructure{closed.ground, closed.r1, closed.r2});
    CHECK(t.so == dense_reference_structure());
  }
}

TEST_CASE("lct2ct of the reference structure lists the four members") {
  const auto theta = dense_alphabet();
  const auto t = make_lsos_comtrace(theta, dense_reference_structure());
  const auto ct = lct2ct(theta, t);
  CHECK(ct.members == std::set<StepSequence>{
                          parse("{a,b}{c}{b,c}"), parse("{a}{b}{c}{b,c}"),
                          parse("{b}{a}{c}{b,c}"), parse("{b}{a,c}{b,c}")});
}

TEST_CASE("lct2ct of the small example lists its two members") {
  const auto theta = small_alphabet();
  const auto ct = comtrace_of(theta, parse("{a}{a,b}{b,c}"));
  CHECK(lct2ct(theta, ct2lct(theta, ct)) == ct);
  CHECK(ct.members.size() == 2);
}

TEST_CASE("ct2dep of the dense example is the reference graph") {
  const auto theta = dense_alphabet();
  const auto ct = comtrace_of(theta, parse("{a,b}{c}{b,c}"));
  const auto d = ct2dep(theta, ct);
  CHECK(d == dense_reference_graph());
  // The omitted arc stays omitted, the dashed two-cycle is present.
  CHECK(d.solid.count({occ("a", 1), occ("c", 2)}) == 0);
  CHECK(d.dashed.count({occ("b", 2), occ("c", 2)}) == 1);
  CHECK(d.dashed.count({occ("c", 2), occ("b", 2)}) == 1);
}

TEST_CASE("ct2dep is member independent") {
  const auto theta = dense_alphabet();
  const auto ct = comtrace_of(theta, parse("{a,b}{c}{b,c}"));
  for (const auto& member : ct.members) {
    const auto rs = invariant_structure(theta, member);
    CHECK(CdGraph{rs.ground, rs.r1, rs.r2} == dense_reference_graph());
  }
}

TEST_CASE("ct2dep maps the identity to the empty graph") {
  const auto theta = small_alphabet();
  CHECK(ct2dep(theta, comtrace_identity()) == cdgraph_identity());
  CHECK(dep2lct(theta, cdgraph_identity()) == lsos_identity());
  CHECK(lct2dep(theta, lsos_identity()) == cdgraph_identity());
}

TEST_CASE("dep2lct of the reference graph is the reference structure") {
  const auto theta = dense_alphabet();
  CHECK(dep2lct(theta, dense_reference_graph()).so ==
        dense_reference_structure());
}

TEST_CASE("lct2dep of the reference structure is the reference graph") {
  const auto theta = dense_alphabet();
  const auto t = make_lsos_comtrace(theta, dense_reference_structure());
  CHECK(lct2dep(theta, t) == dense_reference_graph());
}

TEST_CASE("the two closure routes agree on every small class") {
  for (const auto& theta : {small_alphabet(), dense_alphabet()}) {
    for (const auto& ct : class_pool(theta, 2)) {
      CHECK(dep2lct(theta, ct2dep(theta, ct)) == ct2lct(theta, ct));
    }
  }
}

TEST_CASE("representation round trips on every small class") {
  for (const auto& theta : {small_alphabet(), dense_alphabet()}) {
    for (const auto& ct : class_pool(theta, 2)) {
      const auto t = ct2lct(theta, ct);
      CHECK(lct2ct(theta, t) == ct);
      CHECK(ct2lct(theta, lct2ct(theta, t)) == t);
      const auto d = ct2dep(theta, ct);
      CHECK(dep2lct(theta, lct2dep(theta, t)) == t);
      CHECK(lct2dep(theta, dep2lct(theta, d)) == d);
    }
  }
}

TEST_CASE("composition identity laws") {
  const auto theta = dense_alphabet();
  const auto t = ct2lct(theta, comtrace_of(theta, parse("{a,b}{c}")));
  CHECK(compose_lsos(theta, t, lsos_identity()) == t);
  CHECK(compose_lsos(theta, lsos_identity(), t) == t);
  const auto d = ct2dep(theta, comtrace_of(theta, parse("{a,b}{c}")));
  CHECK(compose_cdg(theta, d, cdgraph_identity()) == d);
  CHECK(compose_cdg(theta, cdgraph_identity(), d) == d);
}

TEST_CASE("lsos composition tracks concatenation over the small alphabet") {
  const auto theta = small_alphabet();
  const auto lhs = ct2lct(theta, comtrace_of(theta, parse("{a}")));
  const auto rhs = ct2lct(theta, comtrace_of(theta, parse("{a,b}{b,c}")));
  const auto composed = compose_lsos(theta, lhs, rhs);
  CHECK(composed ==
        ct2lct(theta, comtrace_of(theta, parse("{a}{a,b}{b,c}"))));
  CHECK(lct2ct(theta, composed) ==
        comtrace_of(theta, parse("{a}{a,b}{b,c}")));
}

TEST_CASE("homomorphism laws on small class pools") {
  for (const auto& theta : {small_alphabet(), dense_alphabet()}) {
    auto pool = class_pool(theta, 1);
    for (const auto& lhs : pool) {
      for (const auto& rhs : pool) {
        const auto product = concat(theta, lhs, rhs);
        const auto tl = ct2lct(theta, lhs);
        const auto tr = ct2lct(theta, rhs);
        CHECK(ct2lct(theta, product) == compose_lsos(theta, tl, tr));
        CHECK(lct2ct(theta, compose_lsos(theta, tl, tr)) == product);
        const auto dl = ct2dep(theta, lhs);
        const auto dr = ct2dep(theta, rhs);
        CHECK(ct2dep(theta, product) == compose_cdg(theta, dl, dr));
        CHECK(lct2dep(theta, compose_lsos(theta, tl, tr)) ==
              compose_cdg(theta, lct2dep(theta, tl), lct2dep(theta, tr)));
        CHECK(dep2lct(theta, compose_cdg(theta, dl, dr)) ==
              compose_lsos(theta, dep2lct(theta, dl), dep2lct(theta, dr)));
      }
    }
  }
}

TEST_CASE("compositions are associative on a small pool") {
  const auto theta = dense_alphabet();
  std::vector<LsosComtrace> ts;
  std::vector<CdGraph> ds;
  for (const auto& text : {"{a}", "{b,c}", "{a,b,c}", ""}) {
    const auto ct = comtrace_of(theta, parse(text));
    ts.push_back(ct2lct(theta, ct));
    ds.push_back(ct2dep(theta, ct));
  }
  for (const auto& x : ts)
    for (const auto& y : ts)
      for (const auto& z : ts)
        CHECK(compose_lsos(theta, compose_lsos(theta, x, y), z) ==
              compose_lsos(theta, x, compose_lsos(theta, y, z)));
  for (const auto& x : ds)
    for (const auto& y : ds)
      for (const auto& z : ds)
        CHECK(compose_cdg(theta, compose_cdg(theta, x, y), z) ==
              compose_cdg(theta, x, compose_cdg(theta, y, z)));
}

TEST_CASE("composition rejects labels outside the alphabet") {
  const auto theta = ComtraceAlphabet::build({"a"}, {}, {});
  LsosComtrace foreign;
  foreign.so.ground = {occ("z", 1)};
  try {
    compose_lsos(theta, lsos_identity(), foreign);
    FAIL("expected error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::AlphabetMismatch);
  }
}
