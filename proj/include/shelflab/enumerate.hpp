#pragma once

// Backtracking enumeration of finite magmas satisfying a chosen axiom set,
// counted as labeled tables or up to isomorphism.

#include "shelflab/magma.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace shelflab {

enum class Axiom {
  shelf,
  spindle,
  associative,
  unital,
  proto_unital,
  pre_unital,
  rack,
  quandle,
  quasigroup,
};

enum class CountMode { labeled, iso_classes };

struct EnumerationQuery {
  int order = 1;
  std::set<Axiom> axioms;
  CountMode mode = CountMode::iso_classes;
  bool collect_witnesses = false;
  bool allow_order5 = false;       // order-5 searches are behind this override
  std::vector<int> cell_order;     // optional permutation of the n*n cells
};

struct CountReport {
  EnumerationQuery query;
  std::uint64_t count = 0;
  std::vector<FiniteMagma> witnesses;  // sorted; canonical tables in iso mode
};

namespace detail {

// primitive constraints the axiom names expand into
constexpr std::uint32_t kShelf = 1u << 0;
constexpr std::uint32_t kAssoc = 1u << 1;
constexpr std::uint32_t kIdem = 1u << 2;
constexpr std::uint32_t kColsBij = 1u << 3;
constexpr std::uint32_t kRowsBij = 1u << 4;
constexpr std::uint32_t kPair1 = 1u << 5;  // a*b = b*(a*b)
constexpr std::uint32_t kPair2 = 1u << 6;  // a*b = (a*b)*b
constexpr std::uint32_t kUnit = 1u << 7;   // two-sided unit exists (final check)

inline std::uint32_t primitives_of(const std::set<Axiom>& axioms) {
  std::uint32_t p = 0;
  for (Axiom a : axioms) {
    switch (a) {
      case Axiom::shelf: p |= kShelf; break;
      case Axiom::spindle: p |= kShelf | kIdem; break;
      case Axiom::associative: p |= kAssoc; break;
      case Axiom::unital: p |= kShelf | kUnit; break;
      case Axiom::proto_unital: p |= kShelf | kPair1 | kPair2; break;
      case Axiom::pre_unital: p |= kShelf | kPair1 | kPair2 | kIdem; break;
      case Axiom::rack: p |= kShelf | kColsBij; break;
      case Axiom::quandle: p |= kShelf | kColsBij | kIdem; break;
      case Axiom::quasigroup: p |= kColsBij | kRowsBij; break;
    }
  }
  return p;
}

struct MagmaSearch {
  int n;
  std::uint32_t prim;
  std::vector<int> tab;    // n*n, -1 = unassigned
  std::vector<int> order;  // cell fill order

  int at(int a, int b) const { return tab[static_cast<std::size_t>(a) * n + b]; }

  // Scan every constraint instance whose referenced cells are all assigned.
  // Simple and order-independent; fast enough at these sizes.
  bool consistent() const {
    if (prim & kIdem)
      for (int a = 0; a < n; ++a) {
        int v = at(a, a);
        if (v >= 0 && v != a) return false;
      }
    if (prim & (kColsBij | kRowsBij))
      for (int k = 0; k < n; ++k) {
        if (prim & kColsBij) {
          std::uint32_t seen = 0;
          for (int x = 0; x < n; ++x) {
            int v = at(x, k);
            if (v < 0) continue;
            if (seen & (1u << v)) return false;
            seen |= 1u << v;
          }
        }
        if (prim & kRowsBij) {
          std::uint32_t seen = 0;
          for (int x = 0; x < n; ++x) {
            int v = at(k, x);
            if (v < 0) continue;
            if (seen & (1u << v)) return false;
            seen |= 1u << v;
          }
        }
      }
    if (prim & (kPair1 | kPair2))
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
          int ab = at(a, b);
          if (ab < 0) continue;
          if (prim & kPair1) {
            int v = at(b, ab);
            if (v >= 0 && v != ab) return false;
          }
          if (prim & kPair2) {
            int v = at(ab, b);
            if (v >= 0 && v != ab) return false;
          }
        }
    if (prim & (kShelf | kAssoc))
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
          int ab = at(a, b);
          if (ab < 0) continue;
          for (int c = 0; c < n; ++c) {
            int abc = at(ab, c);
            if (abc < 0) continue;
            if (prim & kShelf) {
              int ac = at(a, c), bc = at(b, c);
              if (ac >= 0 && bc >= 0) {
                int v = at(ac, bc);
                if (v >= 0 && v != abc) return false;
              }
            }
            if (prim & kAssoc) {
              int bc = at(b, c);
              if (bc >= 0) {
                int v = at(a, bc);
                if (v >= 0 && v != abc) return false;
              }
            }
          }
        }
    return true;
  }

  bool final_ok() const {
    if (prim & kUnit) {
      for (int e = 0; e < n; ++e) {
        bool unit = true;
        for (int x = 0; x < n; ++x)
          if (at(x, e) != x || at(e, x) != x) { unit = false; break; }
        if (unit) return true;
      }
      return false;
    }
    return true;
  }

  template <class Emit>
  void run(std::size_t depth, Emit&& emit) {
    if (depth == order.size()) {
      if (final_ok()) emit(tab);
      return;
    }
    int cell = order[depth];
    for (int v = 0; v < n; ++v) {
      tab[cell] = v;
      if (consistent()) run(depth + 1, emit);
    }
    tab[cell] = -1;
  }
};

}  // namespace detail

/// Counts (and optionally collects) all magmas of the given order satisfying
/// every axiom in the query, labeled or up to isomorphism.
inline CountReport enumerate_magmas(const EnumerationQuery& query) {
  const int n = query.order;
  if (n < 1) throw std::invalid_argument("enumerate: order must be >= 1");
  if (query.axioms.empty()) throw std::invalid_argument("enumerate: axiom set must be non-empty");
  if (n > 5 || (n == 5 && !query.allow_order5))
    throw std::invalid_argument(
        "enumerate: order " + std::to_string(n) +
        " exceeds the search bound (4; order 5 requires the override flag)");

  detail::MagmaSearch s;
  s.n = n;
  s.prim = detail::primitives_of(query.axioms);
  s.tab.assign(static_cast<std::size_t>(n) * n, -1);
  if (query.cell_order.empty()) {
    for (int i = 0; i < n * n; ++i) s.order.push_back(i);
  } else {
    if (static_cast<int>(query.cell_order.size()) != n * n)
      throw std::invalid_argument("enumerate: cell_order must list every cell exactly once");
    s.order = query.cell_order;
  }

  CountReport rep;
  rep.query = query;
  if (query.mode == CountMode::labeled) {
    std::set<std::vector<int>> tables;  // sorted for deterministic output
    s.run(0, [&](const std::vector<int>& t) {
      ++rep.count;
      if (query.collect_witnesses) tables.insert(t);
    });
    for (const auto& t : tables) rep.witnesses.emplace_back(n, t);
  } else {
    std::set<std::vector<int>> canon;
    s.run(0, [&](const std::vector<int>& t) {
      canon.insert(canonical_form(FiniteMagma(n, t)).data());
    });
    rep.count = canon.size();
    if (query.collect_witnesses)
      for (const auto& t : canon) rep.witnesses.emplace_back(n, t);
  }
  return rep;
}

/// Number of relabelings fixing the table.
inline std::uint64_t automorphism_count(const FiniteMagma& m) {
  const int n = m.order();
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::uint64_t count = 0;
  do {
    bool fix = true;
    for (int x = 0; x < n && fix; ++x)
      for (int y = 0; y < n; ++y)
        if (perm[m.at(x, y)] != m.at(perm[x], perm[y])) { fix = false; break; }
    if (fix) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

// Reference values for the published survey of associative shelves (AS),
// associative spindles (ASp), and unital shelves (US), orders 1..4.
inline constexpr std::uint64_t kReferenceAS[4] = {1, 4, 16, 93};
inline constexpr std::uint64_t kReferenceASp[4] = {1, 3, 9, 38};
inline constexpr std::uint64_t kReferenceUS[4] = {1, 1, 4, 6};

struct CountSurveyRow {
  int n = 0;
  std::uint64_t assoc_shelves = 0;   // iso classes
  std::uint64_t assoc_spindles = 0;  // iso classes
  std::uint64_t unital_shelves = 0;  // iso classes
  std::uint64_t pre_unital_prev = 0; // pre-unital shelves of order n-1, iso classes
  std::uint64_t ref_as = 0, ref_asp = 0, ref_us = 0;
  bool as_match = false, asp_match = false, us_match = false;
};

/// Recomputes the AS/ASp/US iso-class counts for n = 1..nmax and compares
/// them against the reference values; mismatches are reported, not fatal.
inline std::vector<CountSurveyRow> count_survey(int nmax) {
  if (nmax < 1 || nmax > 4) throw std::invalid_argument("count_survey: nmax must be in 1..4");
  std::vector<CountSurveyRow> rows;
  for (int n = 1; n <= nmax; ++n) {
    CountSurveyRow row;
    row.n = n;
    EnumerationQuery q;
    q.order = n;
    q.mode = CountMode::iso_classes;
    q.axioms = {Axiom::shelf, Axiom::associative};
    row.assoc_shelves = enumerate_magmas(q).count;
    q.axioms = {Axiom::spindle, Axiom::associative};
    row.assoc_spindles = enumerate_magmas(q).count;
    q.axioms = {Axiom::unital};
    row.unital_shelves = enumerate_magmas(q).count;
    if (n >= 2) {
      EnumerationQuery p;
      p.order = n - 1;
      p.mode = CountMode::iso_classes;
      p.axioms = {Axiom::pre_unital};
      row.pre_unital_prev = enumerate_magmas(p).count;
    } else {
      row.pre_unital_prev = 0;
    }
    row.ref_as = kReferenceAS[n - 1];
    row.ref_asp = kReferenceASp[n - 1];
    row.ref_us = kReferenceUS[n - 1];
    row.as_match = row.assoc_shelves == row.ref_as;
    row.asp_match = row.assoc_spindles == row.ref_asp;
    row.us_match = row.unital_shelves == row.ref_us;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace shelflab
