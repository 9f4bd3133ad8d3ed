#pragma once

// One-shot reproduction suite: reruns every bundled result (golden tables,
// count sequences, Laver structure, homology groups, theorem property
// sweeps, conjecture probes) and reports one pass/fail line per check.

#include "shelflab/blockspindle.hpp"
#include "shelflab/enumerate.hpp"
#include "shelflab/freealg.hpp"
#include "shelflab/golden.hpp"
#include "shelflab/homology.hpp"
#include "shelflab/intmatrix.hpp"
#include "shelflab/laver.hpp"
#include "shelflab/magma.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace shelflab {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

struct VerifyOptions {
  // Default depth keeps orders <= 4 and degrees <= 2 with the two-letter
  // free shelf; deep raises to the three-letter shelf, degree 3, and the
  // order-5 proto-unital sweep.
  bool deep = false;
};

namespace detail {

struct Checker {
  std::ostringstream out;
  bool ok = true;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (out.tellp() > 0) out << "; ";
      out << "FAILED: " << what;
    }
  }
  void note(const std::string& what) {
    if (out.tellp() > 0) out << "; ";
    out << what;
  }
};

inline CheckResult timed(const std::string& name, double limit_seconds,
                         const std::function<void(Checker&)>& body) {
  Checker c;
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.ok = false;
    c.note(std::string("exception: ") + e.what());
  }
  auto t1 = std::chrono::steady_clock::now();
  CheckResult r;
  r.name = name;
  r.seconds = std::chrono::duration<double>(t1 - t0).count();
  if (limit_seconds > 0 && r.seconds > limit_seconds) {
    c.ok = false;
    c.note("time limit " + std::to_string(limit_seconds) + "s exceeded");
  }
  r.passed = c.ok;
  r.detail = c.out.str();
  return r;
}

// product table of a built free structure matches a golden fixture given as
// words + index matrix
template <std::size_t N>
inline bool table_matches(const FreeTable& ft, const std::vector<std::vector<int>>& words,
                          const int (&products)[N][N]) {
  if (ft.elements.size() != N) return false;
  std::vector<int> idx(N);
  for (std::size_t i = 0; i < N; ++i) {
    int k = ft.index_of(Word(words[i], ft.alphabet));
    if (k < 0) return false;
    idx[i] = k;
  }
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j)
      if (ft.table.at(idx[i], idx[j]) != idx[products[i][j]]) return false;
  return true;
}

inline std::vector<FiniteMagma> iso_class_witnesses(int order, std::set<Axiom> axioms,
                                                    bool allow5 = false) {
  EnumerationQuery q;
  q.order = order;
  q.axioms = std::move(axioms);
  q.mode = CountMode::iso_classes;
  q.collect_witnesses = true;
  q.allow_order5 = allow5;
  return enumerate_magmas(q).witnesses;
}

inline bool group_is(const HomologyGroup& h, long rank) {
  return h.free_rank == rank && h.torsion.empty();
}

}  // namespace detail

inline CheckResult verify_free_shelf_tables(const VerifyOptions& opt) {
  return detail::timed("free associative shelf golden tables", 60.0, [&](detail::Checker& c) {
    FreeTable f1 = fas_build(1, 6);
    c.require(f1.elements.size() == 3, "|fas(1)| = 3");
    c.require(f1.elements[0].letters == std::vector<int>{0} &&
                  f1.elements[1].letters == std::vector<int>{0, 0} &&
                  f1.elements[2].letters == std::vector<int>{0, 0, 0},
              "fas(1) elements are a, a^2, a^3");
    FreeTable f2 = fas_build(2, 8);
    c.require(f2.elements.size() == 18, "|fas(2)| = 18");
    c.require(detail::table_matches(f2, golden::kFas2Words, golden::kFas2Products),
              "fas(2) product table matches the golden table");
    if (opt.deep) {
      FreeTable f3 = fas_build(3, 8);
      c.require(f3.elements.size() == 93, "|fas(3)| = 93");
      c.note("sizes 3/18/93");
    } else {
      c.note("sizes 3/18 (rerun with --deep for the three-letter build)");
    }
  });
}

inline CheckResult verify_fas_count_triangulation(const VerifyOptions&) {
  return detail::timed("fas count recursion against generating function", 0, [](detail::Checker& c) {
    FasCounts fc = fas_counts(10);  // throws if recursion and egf disagree
    c.require(fc.recursion[1] == 3 && fc.recursion[2] == 18 && fc.recursion[3] == 93,
              "sequence starts 3, 18, 93");
    std::ostringstream seq;
    for (int n = 1; n <= 10; ++n) seq << (n > 1 ? "," : "") << fc.recursion[n];
    c.note("c_1..c_10 = " + seq.str());
  });
}

inline CheckResult verify_free_unital_families(const VerifyOptions&) {
  return detail::timed("proto/pre-unital and unital free structures", 30.0, [](detail::Checker& c) {
    c.require(detail::table_matches(fpus_build(2), golden::kFpus2Words, golden::kFpus2Products),
              "fpus(2) matches the golden 6-element table");
    c.require(detail::table_matches(fptus_build(2), golden::kFptus2Words, golden::kFptus2Products),
              "fptus(2) matches the golden 4-element table");
    std::vector<Int> b = b_sequence_recursion(6);
    std::vector<Int> expect = {0, 1, 4, 15, 64, 325, 1956};
    c.require(b == expect, "b recursion gives 1, 4, 15, 64, 325, 1956");
    std::vector<Int> egf = egf_coefficients(FreeKind::fptus, 6);
    c.require(egf == expect, "b generating function agrees");
    for (int n = 1; n <= 5; ++n) {
      c.require(Int(fptus_build(n).elements.size()) == b[n],
                "|fptus(" + std::to_string(n) + ")| = b_n");
      c.require(Int(fus_build(n).elements.size()) == b[n] + 1,
                "|fus(" + std::to_string(n) + ")| = b_n + 1");
    }
    std::vector<Word> z1 = fpus_right_zeros(1);
    c.require(z1.size() == 1 && z1[0].letters == std::vector<int>{0, 0},
              "right zeros of fpus(1) are exactly {a^2}");
    std::uint64_t fact = 1;
    for (int n = 2; n <= 4; ++n) {
      fact *= n;
      std::vector<Word> z = fpus_right_zeros(n);
      c.require(z.size() == fact,
                "fpus(" + std::to_string(n) + ") has n! right zeros");
      for (const Word& w : z)
        c.require(w.size() == n && w.repeat_free(),
                  "right zeros of fpus(" + std::to_string(n) + ") are permutation words");
    }
  });
}

inline CheckResult verify_enumeration_survey(const VerifyOptions&) {
  return detail::timed("iso-class counts of associative shelves and spindles", 600.0,
                       [](detail::Checker& c) {
    std::vector<CountSurveyRow> rows = count_survey(4);
    std::ostringstream us_line;
    for (const CountSurveyRow& r : rows) {
      c.require(r.as_match, "associative shelves at n=" + std::to_string(r.n) + ": computed " +
                                std::to_string(r.assoc_shelves) + ", reference " +
                                std::to_string(r.ref_as));
      c.require(r.asp_match, "associative spindles at n=" + std::to_string(r.n) + ": computed " +
                                 std::to_string(r.assoc_spindles) + ", reference " +
                                 std::to_string(r.ref_asp));
      if (r.n >= 2)
        c.require(r.unital_shelves == r.pre_unital_prev,
                  "unital shelves at n=" + std::to_string(r.n) +
                      " equal pre-unital shelves at n-1");
      us_line << (r.n > 1 ? "," : "") << r.unital_shelves;
    }
    // The unital column is reported against the reference, not asserted; the
    // unit-adjunction identity above is the binding check.
    std::ostringstream ref;
    for (int i = 0; i < 4; ++i) ref << (i ? "," : "") << kReferenceUS[i];
    c.note("US computed (" + us_line.str() + ") vs reference (" + ref.str() + ")");
  });
}

inline CheckResult verify_laver_tables(const VerifyOptions&) {
  return detail::timed("Laver tables", 10.0, [](detail::Checker& c) {
    for (int k = 2; k <= 4; ++k)
      c.require(laver_build(k).magma == golden::laver_reference(k),
                "A_" + std::to_string(k) + " matches the golden table");
    for (int k = 0; k <= 2; ++k)
      c.require(laver_uniqueness_check(k),
                "uniqueness at k=" + std::to_string(k));
    for (int k = 1; k <= 8; ++k) {
      LaverRightStructure s = laver_right_structure(k);
      c.require(s.right_fixed == std::make_pair((1 << k) - 1, 1 << k),
                "right fixed pair at k=" + std::to_string(k));
      c.require(s.identity_column == (1 << k), "identity column at k=" + std::to_string(k));
    }
  });
}

inline CheckResult verify_homology_groups(const VerifyOptions&) {
  return detail::timed("homology of the eight order-4 shelves", 60.0, [](detail::Checker& c) {
    const FiniteMagma one_term_tables[4] = {golden::t5(), golden::t6(), golden::t7(),
                                            golden::t8()};
    const FiniteMagma two_term_tables[4] = {golden::t1(), golden::t2(), golden::t3(),
                                            golden::t4()};
    for (int i = 0; i < 4; ++i)
      for (int q = 0; q <= 2; ++q) {
        HomologyGroup h = homology(one_term_tables[i], Theory::one_term, q);
        c.require(detail::group_is(h, golden::kOneTermRanks[i][q]),
                  "one-term H_" + std::to_string(q) + "(T_" + std::to_string(i + 5) + ")");
      }
    for (int i = 0; i < 4; ++i)
      for (int q = 0; q <= 2; ++q) {
        HomologyGroup h = homology(two_term_tables[i], Theory::two_term, q);
        c.require(detail::group_is(h, golden::kTwoTermRanks[i][q]),
                  "two-term H_" + std::to_string(q) + "(T_" + std::to_string(i + 1) + ")");
      }
  });
}

inline CheckResult verify_theorem_properties(const VerifyOptions& opt) {
  return detail::timed("homology theorems over all small shelves", 900.0,
                       [&](detail::Checker& c) {
    // unital shelves have vanishing reduced one-term homology
    int unital_seen = 0;
    for (int n = 1; n <= 4; ++n)
      for (const FiniteMagma& m : detail::iso_class_witnesses(n, {Axiom::unital})) {
        ++unital_seen;
        for (int q = 0; q <= 2; ++q)
          c.require(detail::group_is(homology(m, Theory::one_term, q, true), 0),
                    "reduced one-term homology of a unital shelf vanishes");
      }
    // shelves with a right fixed element have two-term homology Z
    int fixed_seen = 0;
    for (int n = 1; n <= 4; ++n)
      for (const FiniteMagma& m : detail::iso_class_witnesses(n, {Axiom::shelf})) {
        if (right_fixed_elements(m).empty()) continue;
        ++fixed_seen;
        for (int q = 0; q <= 2; ++q)
          c.require(detail::group_is(homology(m, Theory::two_term, q), 1),
                    "two-term homology of a right-fixed shelf is Z");
      }
    // proto-unital shelves likewise
    int proto_seen = 0;
    for (int n = 1; n <= 4; ++n)
      for (const FiniteMagma& m : detail::iso_class_witnesses(n, {Axiom::proto_unital})) {
        ++proto_seen;
        for (int q = 0; q <= 2; ++q)
          c.require(detail::group_is(homology(m, Theory::two_term, q), 1),
                    "two-term homology of a proto-unital shelf is Z");
      }
    // the chain homotopy identity on basis tuples
    int qmax = opt.deep ? 3 : 2;
    c.require(chain_homotopy_verify(golden::t5(), 3, 3, qmax),
              "chain homotopy identity on T_5");
    c.require(chain_homotopy_verify(transpose(laver_build(2).magma), 2, 3, qmax),
              "chain homotopy identity on transpose(A_2)");
    c.note(std::to_string(unital_seen) + " unital, " + std::to_string(fixed_seen) +
           " right-fixed, " + std::to_string(proto_seen) + " proto-unital classes");
  });
}

inline CheckResult verify_structural_properties(const VerifyOptions& opt) {
  return detail::timed("chain complex and normal form structure", 0, [&](detail::Checker& c) {
    int qmax = opt.deep ? 3 : 2;
    for (int n = 1; n <= 3; ++n)
      for (const FiniteMagma& m : detail::iso_class_witnesses(n, {Axiom::shelf}))
        for (Theory th : {Theory::one_term, Theory::two_term}) {
          for (int q = 1; q <= qmax; ++q) {
            IntMatrix a = boundary_matrix(m, th, q);
            IntMatrix b = boundary_matrix(m, th, q + 1);
            c.require((a * b).is_zero(), "boundary composed with boundary is zero");
          }
          for (int q = 2; q <= qmax; ++q)
            for (int i = 0; i < q; ++i)
              for (int j = i + 1; j <= q; ++j)
                c.require(face_matrix(m, th, i, q - 1) * face_matrix(m, th, j, q) ==
                              face_matrix(m, th, j - 1, q - 1) * face_matrix(m, th, i, q),
                          "pre-simplicial face identity");
        }
    // random SNF round trips with unimodular transforms
    std::mt19937 rng(20160328);
    std::uniform_int_distribution<int> dim(1, 12), entry(-9, 9);
    for (int trial = 0; trial < 1000; ++trial) {
      IntMatrix a(dim(rng), dim(rng));
      for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) a.at(i, j) = entry(rng);
      SnfResult s = smith_normal_form(a);  // throws unless U*A*V = D holds
      Int du = determinant(s.U), dv = determinant(s.V);
      c.require((du == 1 || du == -1) && (dv == 1 || dv == -1),
                "transforms are unimodular");
      if (!c.ok) break;
    }
    // associative racks are projections
    for (int n = 1; n <= 3; ++n)
      for (const FiniteMagma& m : detail::iso_class_witnesses(n, {Axiom::rack, Axiom::associative}))
        for (int x = 0; x < n; ++x)
          for (int y = 0; y < n; ++y)
            c.require(m.at(x, y) == x, "associative racks satisfy x*y = x");
    // finite proto-unital shelves have a right zero
    int proto_max = opt.deep ? 5 : 4;
    for (int n = 1; n <= proto_max; ++n)
      for (const FiniteMagma& m :
           detail::iso_class_witnesses(n, {Axiom::proto_unital}, /*allow5=*/true))
        c.require(!right_zeros(m).empty(), "proto-unital shelf of order " + std::to_string(n) +
                                               " has a right zero");
    c.note(std::string("proto-unital right-zero sweep to order ") + std::to_string(proto_max));
  });
}

inline CheckResult verify_conjecture_probes(const VerifyOptions&) {
  return detail::timed("torsion probes (report only)", 0, [](detail::Checker& c) {
    std::vector<FiniteMagma> assoc;
    for (int n = 1; n <= 4; ++n)
      for (const FiniteMagma& m :
           detail::iso_class_witnesses(n, {Axiom::shelf, Axiom::associative}))
        assoc.push_back(m);
    TorsionScanReport one = torsion_scan(assoc, Theory::one_term, 2);
    TorsionScanReport two = torsion_scan(assoc, Theory::two_term, 2);
    c.note(std::to_string(assoc.size()) + " associative shelves scanned; torsion hits: one-term " +
           std::to_string(one.occurrences.size()) + ", two-term " +
           std::to_string(two.occurrences.size()));

    SpindleScanReport scan = torsion_witness_scan(singleton_block_specs(6));
    c.require(scan.all_singleton_two_term_z,
              "two-term homology of every singleton-block spindle is Z through degree 2");
    if (scan.torsion_indices.empty()) {
      c.note("no one-term H_2 torsion among block spindles of total size <= 6");
    } else {
      const SpindleScanEntry& e = scan.entries[scan.torsion_indices.front()];
      std::ostringstream tor;
      for (std::size_t i = 0; i < e.one_term_h2.torsion.size(); ++i)
        tor << (i ? "," : "") << e.one_term_h2.torsion[i];
      std::ostringstream blocks;
      for (std::size_t i = 0; i < e.spec.blocks.size(); ++i) {
        blocks << (i ? " " : "") << e.spec.blocks[i].size << ":(";
        for (std::size_t j = 0; j < e.spec.blocks[i].f.size(); ++j)
          blocks << (j ? " " : "") << e.spec.blocks[i].f[j];
        blocks << ")";
      }
      c.note(std::to_string(scan.torsion_indices.size()) +
             " block spindles with one-term H_2 torsion; first witness [" + blocks.str() +
             "] has factors (" + tor.str() + ")");
    }
  });
}

inline std::vector<CheckResult> run_verification(const VerifyOptions& opt) {
  std::vector<CheckResult> results;
  results.push_back(verify_free_shelf_tables(opt));
  results.push_back(verify_fas_count_triangulation(opt));
  results.push_back(verify_free_unital_families(opt));
  results.push_back(verify_enumeration_survey(opt));
  results.push_back(verify_laver_tables(opt));
  results.push_back(verify_homology_groups(opt));
  results.push_back(verify_theorem_properties(opt));
  results.push_back(verify_structural_properties(opt));
  results.push_back(verify_conjecture_probes(opt));
  return results;
}

}  // namespace shelflab
