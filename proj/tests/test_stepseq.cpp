#include <doctest.h>

#include "comtrace/stepseq.hpp"
#include "test_helpers.hpp"

using namespace comtrace;
using namespace comtrace::testing;

namespace {

// {a,b}{b,c}{c,a}{a} over an alphabet where everything may overlap.
ComtraceAlphabet full_sim_alphabet() {
  return ComtraceAlphabet::build({"a", "b", "c"},
                                 {{"a", "b"}, {"a", "c"}, {"b", "c"}}, {});
}

const StepSequence kWalk = parse("{a,b}{b,c}{c,a}{a}");

}  // namespace

TEST_CASE("occ_count counts steps containing the event") {
  const auto theta = full_sim_alphabet();
  CHECK(occ_count(theta, kWalk, "a") == 3);
  CHECK(occ_count(theta, kWalk, "b") == 2);
  CHECK(occ_count(theta, StepSequence{}, "a") == 0);
  CHECK_THROWS_AS(occ_count(theta, kWalk, "x"), Error);
}

TEST_CASE("enumerate_occurrences assigns per-event indices") {
  const auto enumerated = enumerate_occurrences(kWalk);
  CHECK(to_text(enumerated) == "{a#1,b#1}{b#2,c#1}{a#2,c#2}{a#3}");
  CHECK(enumerate_occurrences({}).blocks.empty());
  CHECK(to_text(enumerate_occurrences(parse("{a}{a}"))) == "{a#1}{a#2}");
}

TEST_CASE("label erasure of the enumerated sequence reproduces the input") {
  for (const auto& t : {kWalk, parse("{a}{a}"), StepSequence{}}) {
    const auto enumerated = enumerate_occurrences(t);
    StepSequence erased;
    for (const auto& block : enumerated.blocks) {
      Step step;
      for (const auto& alpha : block) step.insert(alpha.event);
      erased.push_back(step);
    }
    CHECK(erased == t);
  }
}

TEST_CASE("position reports the containing step") {
  CHECK(position(kWalk, occ("a", 2)) == 3);
  CHECK(position(kWalk, occ("b", 2)) == 2);
  CHECK(position(kWalk, occ("c", 1)) == 2);
  CHECK(position(parse("{a}"), occ("a", 1)) == 1);
  CHECK_THROWS_AS(position(kWalk, occ("a", 4)), Error);
}

TEST_CASE("to_stratified_order matches positions") {
  const auto omega = to_stratified_order(kWalk);
  CHECK(omega.blocks.size() == 4);
  CHECK(omega.ground().size() == 7);
  const auto rel = order_pairs(omega);
  for (const auto& alpha : omega.ground()) {
    for (const auto& beta : omega.ground()) {
      if (alpha == beta) continue;
      const bool before = position(kWalk, alpha) < position(kWalk, beta);
      CHECK(before == (rel.count({alpha, beta}) == 1));
    }
  }
  CHECK(to_stratified_order({}).blocks.empty());
  const auto single = to_stratified_order(parse("{a,b}"));
  CHECK(single.blocks.size() == 1);
  CHECK(order_pairs(single).empty());
}

TEST_CASE("round trip through the stratified order") {
  const auto theta = full_sim_alphabet();
  for (const auto& t :
       {kWalk, parse("{a}{a}"), parse("{a,b,c}"), StepSequence{}}) {
    CHECK(from_stratified_order(theta, to_stratified_order(t)) == t);
  }
}

TEST_CASE("occurrence count identity") {
  const auto theta = full_sim_alphabet();
  int total = 0;
  for (const auto& e : theta.events()) total += occ_count(theta, kWalk, e);
  CHECK(static_cast<std::size_t>(total) == occurrences(kWalk).size());
}

TEST_CASE("from_stratified_order rejects bad block images") {
  const auto theta = small_alphabet();
  StratifiedOrder collision;
  collision.blocks.push_back({occ("a", 1), occ("a", 2)});
  CHECK_THROWS_AS(from_stratified_order(theta, collision), Error);

  StratifiedOrder nonclique;
  nonclique.blocks.push_back({occ("a", 1), occ("c", 1)});
  CHECK_THROWS_AS(from_stratified_order(theta, nonclique), Error);
}

TEST_CASE("step sequence text grammar") {
  CHECK(parse("") == StepSequence{});
  CHECK(parse("\xce\xb5") == StepSequence{});
  CHECK(to_text(StepSequence{}) == "\xce\xb5");
  CHECK(parse(" { a , b } { c } ") == StepSequence{{"a", "b"}, {"c"}});
  CHECK(to_text(parse("{b,a}{c}")) == "{a,b}{c}");
  CHECK_THROWS_AS(parse("{}"), Error);
  CHECK_THROWS_AS(parse("{a,}"), Error);
  CHECK_THROWS_AS(parse("{a"), Error);
  CHECK_THROWS_AS(parse("a}"), Error);
  CHECK_THROWS_AS(parse("{a,a}"), Error);
  CHECK_THROWS_AS(parse("{1a}"), Error);
}

TEST_CASE("validate_step_sequence enforces alphabet steps") {
  const auto theta = small_alphabet();
  CHECK_NOTHROW(validate_step_sequence(theta, parse("{a}{a,b}{b,c}")));
  CHECK_THROWS_AS(validate_step_sequence(theta, parse("{a,c}")), Error);
  CHECK_THROWS_AS(validate_step_sequence(theta, parse("{x}")), Error);
}
