#include "shelflab/freealg.hpp"
#include "shelflab/golden.hpp"

#include <catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <set>

using namespace shelflab;

namespace {

// independent oracle for the proto-unital normal form: a power collapses to
// the square, otherwise keep the last occurrence of each letter in order
std::vector<int> keep_last_oracle(const std::vector<int>& w) {
  if (w.size() <= 1) return w;
  bool all_same = true;
  for (int x : w)
    if (x != w[0]) all_same = false;
  if (all_same) return {w[0], w[0]};
  std::vector<int> out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    bool later = false;
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (w[j] == w[i]) later = true;
    if (!later) out.push_back(w[i]);
  }
  return out;
}

bool table_matches(const FreeTable& ft, const std::vector<std::vector<int>>& words,
                   const int* products, std::size_t n) {
  if (ft.elements.size() != n) return false;
  std::vector<int> idx(n);
  for (std::size_t i = 0; i < n; ++i) {
    int k = ft.index_of(Word(words[i], ft.alphabet));
    if (k < 0) return false;
    idx[i] = k;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (ft.table.at(idx[i], idx[j]) != idx[products[i * n + j]]) return false;
  return true;
}

}  // namespace

TEST_CASE("words") {
  Word w({0, 1, 0}, 2);
  CHECK(word_to_string(w) == "0.1.0");
  CHECK(parse_word("0.1.0", 2) == w);
  CHECK(parse_word("", 3) == Word({}, 3));
  CHECK_FALSE(w.repeat_free());
  CHECK(Word({0, 2, 1}, 3).repeat_free());
  CHECK_THROWS_AS(Word({0, 3}, 2), std::invalid_argument);
}

TEST_CASE("one-generator free associative shelf") {
  FreeTable f = fas_build(1, 6);
  REQUIRE(f.elements.size() == 3);
  CHECK(f.elements[0].letters == std::vector<int>{0});
  CHECK(f.elements[1].letters == std::vector<int>{0, 0});
  CHECK(f.elements[2].letters == std::vector<int>{0, 0, 0});
  // a^3 absorbs further letters
  CHECK(f.table.at(2, 0) == 2);
  CHECK(f.table.at(1, 0) == 2);
  CHECK(fas_key_identity_check(1));
}

TEST_CASE("two-generator free associative shelf matches the golden table") {
  FreeTable f = fas_build(2, 8);
  REQUIRE(f.elements.size() == 18);
  CHECK(table_matches(f, golden::kFas2Words, &golden::kFas2Products[0][0], 18));
  AxiomReport ax = check_axioms(f.table);
  CHECK(ax.shelf);
  CHECK(ax.associative);

  // the two generator classes regenerate all 18 elements
  int a = f.index_of(Word({0}, 2)), b = f.index_of(Word({1}, 2));
  std::set<int> closure = {a, b};
  for (;;) {
    std::set<int> next = closure;
    for (int x : closure)
      for (int y : closure) next.insert(f.table.at(x, y));
    if (next == closure) break;
    closure = next;
  }
  CHECK(closure.size() == 18);
}

TEST_CASE("three-generator size and the rewriting identity") {
  CHECK(fas_build(3, 8).elements.size() == 93);
  CHECK(fas_key_identity_check(2));
  CHECK(fas_key_identity_check(3));
}

TEST_CASE("four-generator size agrees with the recursion") {
  CHECK(fas_build(4, 8, /*allow_large=*/true).elements.size() == 516);
}

TEST_CASE("free associative shelf bounds and stability") {
  CHECK_THROWS(fas_build(2, 4));  // no room for normal form times a letter
  CHECK_THROWS_AS(fas_build(4), std::invalid_argument);
  CHECK_THROWS_AS(fas_build(0), std::invalid_argument);
  CHECK_THROWS_AS(fas_build(2, 3), std::invalid_argument);
}

TEST_CASE("size sequences for the free associative shelf") {
  FasCounts fc = fas_counts(10);
  CHECK(fc.direct == std::vector<Int>{0, 3, 18, 93});
  CHECK(fc.recursion[0] == 0);
  CHECK(fc.recursion[2] == 18);
  CHECK(fc.recursion[4] == 516);
  CHECK(fc.egf[3] == 93);
  // 2! [x^2] of the generating function
  CHECK(egf_coefficients(FreeKind::fas, 2) == std::vector<Int>{0, 3, 18});

  FasAlternateForms alt = fas_alternate_count_forms(3);
  CHECK(alt.closed_form[2] == 12);   // conflicts with 18
  CHECK(alt.closed_form[3] == 51);   // conflicts with 93
  CHECK(alt.one_term_rec[2] == 14);  // conflicts with 18

  FasCensus census = fas_census(fas_build(2, 8));
  CHECK(census.repeat_free == 4);
  CHECK(census.prepended == 6);
  CHECK(census.doubled_repeat_free == 2);
  CHECK(census.doubled_prepended == 6);
  CHECK(census.other == 0);
}

TEST_CASE("proto-unital rewriting") {
  auto reduce = [](std::vector<int> w, int n) {
    return fpus_reduce(Word(std::move(w), n)).letters;
  };
  CHECK(reduce({0, 0, 1}, 2) == std::vector<int>{0, 1});       // aab -> ab
  CHECK(reduce({0, 1, 0}, 2) == std::vector<int>{1, 0});       // aba -> ba
  CHECK(reduce({0, 1, 0, 1}, 2) == std::vector<int>{0, 1});    // abab -> ab
  CHECK(reduce({0, 0, 0}, 2) == std::vector<int>{0, 0});       // a^3 -> a^2
  CHECK(reduce({0}, 2) == std::vector<int>{0});
  CHECK_THROWS_AS(fpus_reduce(Word({}, 2)), std::invalid_argument);

  std::mt19937 rng(2023);
  for (int trial = 0; trial < 10000; ++trial) {
    std::uniform_int_distribution<int> alpha(1, 4);
    int n = alpha(rng);
    std::uniform_int_distribution<int> len(1, 10), letter(0, n - 1);
    std::vector<int> w(len(rng));
    for (int& x : w) x = letter(rng);
    Word input(w, n);
    Word det = fpus_reduce(input);
    CHECK(det.letters == keep_last_oracle(w));
    CHECK(fpus_reduce(det).letters == det.letters);             // idempotent
    CHECK(fpus_reduce_random(input, rng).letters == det.letters);  // confluent
  }
}

TEST_CASE("free proto-unital shelves") {
  FreeTable f1 = fpus_build(1);
  REQUIRE(f1.elements.size() == 2);
  CHECK(f1.elements[0].letters == std::vector<int>{0});
  CHECK(f1.elements[1].letters == std::vector<int>{0, 0});

  FreeTable f2 = fpus_build(2);
  CHECK(table_matches(f2, golden::kFpus2Words, &golden::kFpus2Products[0][0], 6));
  CHECK(check_axioms(f2.table).proto_unital);

  CHECK(fpus_build(3).elements.size() == 18);
  CHECK(egf_coefficients(FreeKind::fpus, 3) == std::vector<Int>{0, 2, 6, 18});
}

TEST_CASE("right zeros of the free proto-unital shelf") {
  auto z1 = fpus_right_zeros(1);
  REQUIRE(z1.size() == 1);
  CHECK(z1[0].letters == std::vector<int>{0, 0});

  auto z2 = fpus_right_zeros(2);
  REQUIRE(z2.size() == 2);
  CHECK(z2[0].letters == std::vector<int>{0, 1});
  CHECK(z2[1].letters == std::vector<int>{1, 0});

  auto z3 = fpus_right_zeros(3);
  CHECK(z3.size() == 6);
  for (const Word& w : z3) {
    CHECK(w.size() == 3);
    CHECK(w.repeat_free());
  }
  // independent direction: every permutation word really is a right zero
  FreeTable f3 = fpus_build(3);
  int zi = f3.index_of(Word({2, 0, 1}, 3));
  REQUIRE(zi >= 0);
  for (int x = 0; x < f3.table.order(); ++x) CHECK(f3.table.at(x, zi) == zi);
}

TEST_CASE("deletion product") {
  CHECK(fptus_multiply(Word({0, 1}, 2), Word({0}, 2)).letters == std::vector<int>{1, 0});
  CHECK(fptus_multiply(Word({0, 1, 3, 2}, 4), Word({0, 2}, 4)).letters ==
        std::vector<int>{1, 3, 0, 2});
  std::mt19937 rng(77);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<int> letters{0, 1, 2, 3};
    std::shuffle(letters.begin(), letters.end(), rng);
    std::uniform_int_distribution<std::size_t> len(1, 4);
    letters.resize(len(rng));
    Word w(letters, 4);
    CHECK(fptus_multiply(w, w) == w);  // idempotent
  }
  CHECK_THROWS_AS(fptus_multiply(Word({0, 0}, 2), Word({1}, 2)), std::invalid_argument);
  CHECK_THROWS_AS(fptus_multiply(Word({}, 2), Word({1}, 2)), std::invalid_argument);
  CHECK_THROWS_AS(fptus_multiply(Word({0}, 2), Word({0}, 3)), std::invalid_argument);
}

TEST_CASE("free pre-unital and unital shelves") {
  FreeTable f2 = fptus_build(2);
  CHECK(table_matches(f2, golden::kFptus2Words, &golden::kFptus2Products[0][0], 4));
  AxiomReport ax = check_axioms(f2.table);
  CHECK(ax.pre_unital);
  CHECK(ax.associative);

  // all triples of three-letter normal forms at once
  AxiomReport ax3 = check_axioms(fptus_build(3).table);
  CHECK(ax3.shelf);
  CHECK(ax3.associative);
  CHECK(ax3.pre_unital);

  std::vector<Int> b = b_sequence_recursion(6);
  CHECK(b == std::vector<Int>{0, 1, 4, 15, 64, 325, 1956});
  CHECK(egf_coefficients(FreeKind::fptus, 6) == b);
  for (int n = 1; n <= 5; ++n) {
    CHECK(Int(fptus_build(n).elements.size()) == b[n]);
    FreeTable fu = fus_build(n);
    CHECK(Int(fu.elements.size()) == b[n] + 1);
    AxiomReport uax = check_axioms(fu.table);
    CHECK(uax.unital);
    CHECK(uax.unit == fu.index_of(Word({}, n)));
  }
  CHECK(fus_build(2).elements.size() == 5);
  CHECK(egf_coefficients(FreeKind::fus, 4) == std::vector<Int>{1, 2, 5, 16, 65});
}

TEST_CASE("generating function bounds") {
  CHECK_THROWS_AS(egf_coefficients(FreeKind::fus, 21), std::invalid_argument);
  CHECK_THROWS_AS(egf_coefficients(FreeKind::fus, -1), std::invalid_argument);
  CHECK_THROWS_AS(fas_counts(13), std::invalid_argument);
}
