#include "shelflab/golden.hpp"
#include "shelflab/homology.hpp"
#include "shelflab/laver.hpp"

#include <catch_amalgamated.hpp>

using namespace shelflab;

TEST_CASE("small Laver tables") {
  LaverTable a0 = laver_build(0);
  CHECK(a0.magma == FiniteMagma(1, {0}));

  LaverTable a1 = laver_build(1);
  // rows (2,2),(1,2) in 1-indexed terms
  CHECK(a1.magma == FiniteMagma(2, {1, 1, 0, 1}));

  for (int k = 2; k <= 4; ++k)
    CHECK(laver_build(k).magma == golden::laver_reference(k));
}

TEST_CASE("Laver table invariants") {
  for (int k = 1; k <= 5; ++k) {
    FiniteMagma m = laver_build(k).magma;
    const int n = 1 << k;
    for (int x = 0; x < n; ++x) CHECK(m.at(x, 0) == (x + 1) % n);
    for (int y = 0; y < n; ++y) CHECK(m.at(n - 1, y) == y);
    // transposing gives a right self-distributive magma
    if (k <= 4) CHECK(check_axioms(transpose(m)).shelf);
  }
}

TEST_CASE("row period doubling") {
  for (int k = 2; k <= 4; ++k) {
    FiniteMagma big = laver_build(k).magma;
    FiniteMagma small = laver_build(k - 1).magma;
    const int half = 1 << (k - 1);
    for (int y = 0; y < half; ++y) {
      int v = big.at(0, y) + 1;                 // 1-indexed value in A_k
      int reduced = ((v - 1) % half) + 1;       // representative in 1..2^(k-1)
      CHECK(reduced == small.at(0, y) + 1);
    }
  }
}

TEST_CASE("uniqueness of the Laver structure") {
  CHECK(laver_uniqueness_check(0));
  CHECK(laver_uniqueness_check(1));
  CHECK(laver_uniqueness_check(2));
  CHECK_THROWS_AS(laver_uniqueness_check(3), std::invalid_argument);
}

TEST_CASE("right structure of the transposed tables") {
  for (int k = 2; k <= 6; ++k) {
    LaverRightStructure s = laver_right_structure(k);
    CHECK(s.right_fixed == std::make_pair((1 << k) - 1, 1 << k));
    CHECK(s.identity_column == (1 << k));
    bool found = false;
    for (auto& p : s.all_right_fixed)
      if (p == s.right_fixed) found = true;
    CHECK(found);
    found = false;
    for (int y : s.bijective_columns)
      if (y == (1 << k)) found = true;
    CHECK(found);
  }
  CHECK_THROWS_AS(laver_right_structure(0), std::invalid_argument);
  CHECK_THROWS_AS(laver_build(11), std::invalid_argument);
}

TEST_CASE("chain homotopy on the transposed Laver table") {
  FiniteMagma tr = transpose(laver_build(2).magma);
  // 0-indexed right fixed pair (2, 3), the 1-indexed (3, 4)
  CHECK(chain_homotopy_verify(tr, 2, 3, 2));
}
