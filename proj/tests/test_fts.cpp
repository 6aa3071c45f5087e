#include <doctest.h>

#include "fuzzyts/error.hpp"
#include "fuzzyts/fts.hpp"
#include "support/fixtures.hpp"

using namespace fuzzyts;
using namespace fuzzyts::testing;

namespace {

RawModel fig1_raw() {
  RawModel raw;
  raw.states = {"s3", "s2", "s1", "s0"};
  raw.labels = {"c", "b", "a"};
  raw.init = "s0";
  raw.transitions = {{"s0", "a", deg("0.9"), "s1", 5}, {"s1", "b", deg("0.8"), "s2", 6}, {"s1", "c", deg("0.7"), "s3", 7}};
  return raw;
}

}  // namespace

TEST_SUITE("fts") {
  TEST_CASE("validate_fts canonicalizes the FIG1_S description") {
    const Fts f = validate_fts(fig1_raw());
    CHECK(f.num_states() == 4);
    CHECK(f.num_labels() == 3);
    CHECK(f.state_name(0) == "s0");
    CHECK(f.label_name(0) == "a");
    CHECK(f.init() == f.state("s0"));
    CHECK(f.num_transitions() == 3);
    CHECK(f.degree(f.state("s1"), f.label("b"), f.state("s2")) == deg("0.8"));
    CHECK(f.delta(f.state("s0"), f.label("b")).empty());
    CHECK(f == fig1_s());
  }

  TEST_CASE("validate_fts errors") {
    RawModel raw = fig1_raw();
    raw.transitions.push_back({"s0", "a", deg("0.5"), "s1", 8});
    CHECK_THROWS_WITH_AS(validate_fts(raw), doctest::Contains("duplicate transition"), Error);

    raw = fig1_raw();
    raw.transitions.push_back({"s9", "a", deg("0.5"), "s1", 8});
    CHECK_THROWS_WITH_AS(validate_fts(raw), doctest::Contains("unknown state 's9'"), Error);

    raw = fig1_raw();
    raw.transitions.push_back({"s0", "z", deg("0.5"), "s1", 8});
    CHECK_THROWS_WITH_AS(validate_fts(raw), doctest::Contains("unknown label 'z'"), Error);

    raw = fig1_raw();
    raw.init.reset();
    CHECK_THROWS_WITH_AS(validate_fts(raw), doctest::Contains("missing init"), Error);

    raw = fig1_raw();
    raw.init = "nowhere";
    CHECK_THROWS_WITH_AS(validate_fts(raw), doctest::Contains("unknown state"), Error);

    raw = RawModel{};
    raw.init = "s0";
    CHECK_THROWS_WITH_AS(validate_fts(raw), doctest::Contains("no states"), Error);

    raw = fig1_raw();
    raw.states.push_back("s0");
    CHECK_THROWS_WITH_AS(validate_fts(raw), doctest::Contains("duplicate state"), Error);

    raw = fig1_raw();
    raw.states.push_back("bad id");
    CHECK_THROWS_WITH_AS(validate_fts(raw), doctest::Contains("invalid state identifier"), Error);

    // Out-of-range degrees never reach a RawModel: Degree itself refuses them.
    CHECK_THROWS_WITH_AS(Degree::parse("1.2"), doctest::Contains("degree out of range"), Error);
  }

  TEST_CASE("zero-degree transitions are dropped") {
    RawModel raw = fig1_raw();
    raw.transitions.push_back({"s2", "a", Degree::zero(), "s0", 8});
    CHECK(validate_fts(raw) == fig1_s());
  }

  TEST_CASE("identifiers") {
    CHECK(is_valid_identifier("t1'"));
    CHECK(is_valid_identifier("(s0,t0)"));
    CHECK(is_valid_identifier("[s1]"));
    CHECK_FALSE(is_valid_identifier(""));
    CHECK_FALSE(is_valid_identifier("a-b"));
    CHECK_FALSE(is_valid_identifier("a#"));
    CHECK_FALSE(is_valid_identifier("a b"));
  }

  TEST_CASE("automaton final sets") {
    const Fts f = fig1_s();
    const RawFinal finals[] = {{"s1", deg("0.5"), 1}};
    const FuzzyAutomaton m(f, make_final_set(f, finals));
    CHECK(m.final_set[f.state("s1")] == deg("0.5"));
    const RawFinal twice[] = {{"s1", deg("0.5"), 1}, {"s1", deg("0.4"), 2}};
    CHECK_THROWS_AS(make_final_set(f, twice), Error);
    CHECK_THROWS_AS(FuzzyAutomaton(f, FuzzySet(2)), Error);
  }

  TEST_CASE("label alphabet check") {
    CHECK_NOTHROW(require_same_labels(fig1_s(), fig1_t()));
    CHECK_THROWS_WITH_AS(require_same_labels(fig1_s(), cex_intersect()), doctest::Contains("label alphabet mismatch"),
                         Error);
  }
}
