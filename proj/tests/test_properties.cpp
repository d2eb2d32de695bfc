#include "doctest.h"
#include "support/properties.hpp"

TEST_CASE("pareto sweep agrees with the quadratic oracle, ties included") {
  CHECK(props::pareto_matches_oracle() == "");
}

TEST_CASE("candidate count equals the product of option counts") {
  CHECK(props::count_law() == "");
}

TEST_CASE("constrained enumeration is exactly the filtered product") {
  CHECK(props::constraint_soundness() == "");
}

TEST_CASE("scores move the right way with level and proficiency") {
  CHECK(props::monotonicity_and_invariance() == "");
}

TEST_CASE("shipped patterns and default config validate") {
  CHECK(props::shipped_data_valid() == "");
}

TEST_CASE("fixtures survive load and save unchanged") {
  CHECK(props::load_save_identity() == "");
}

TEST_CASE("different seeds also hold") {
  CHECK(props::pareto_matches_oracle(30, 60, 99) == "");
  CHECK(props::count_law(30, 123) == "");
  CHECK(props::constraint_soundness(30, 321) == "");
  CHECK(props::monotonicity_and_invariance(300, 555) == "");
}
