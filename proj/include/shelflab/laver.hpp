#pragma once

// Laver tables A_k on {1,...,2^k} with the left self-distributive operation
// determined by a*1 = a+1 (mod 2^k). Storage is 0-indexed (element i holds
// the value i+1 of the 1-indexed convention); reports shift back to 1-indexed.

#include "shelflab/magma.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace shelflab {

struct LaverTable {
  int k = 0;
  FiniteMagma magma{1, {0}};  // left self-distributive
};

/// Builds A_k by the standard recurrence a*(b+1) = (a*b)*(a*1), rows filled
/// from a = 2^k downward. Validates left self-distributivity, the successor
/// column, and the identity last row exhaustively.
inline LaverTable laver_build(int k) {
  if (k < 0 || k > 10) throw std::invalid_argument("laver_build: k must be in 0..10");
  const int n = 1 << k;
  std::vector<int> t(static_cast<std::size_t>(n) * n, -1);
  auto at = [&](int x, int y) -> int& { return t[static_cast<std::size_t>(x) * n + y]; };
  for (int x = 0; x < n; ++x) at(x, 0) = (x + 1) % n;  // a*1 = a+1 (mod 2^k)
  for (int x = n - 1; x >= 0; --x)
    for (int y = 1; y < n; ++y) {
      int a = at(x, y - 1), b = at(x, 0);
      if (at(a, b) < 0)
        throw std::logic_error("laver_build: recurrence referenced an unfilled row");
      at(x, y) = at(a, b);
    }

  for (int x = 0; x < n - 1; ++x)
    if (at(x, 0) != x + 1) throw std::logic_error("laver_build: successor column violated");
  for (int y = 0; y < n; ++y)
    if (at(n - 1, y) != y)
      throw std::logic_error("laver_build: last row is not the identity");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (at(a, at(b, c)) != at(at(a, b), at(a, c)))
          throw std::logic_error("laver_build: left self-distributivity violated");

  return LaverTable{k, FiniteMagma(n, std::move(t))};
}

namespace detail {

// counts left self-distributive tables with the successor first column
inline void laver_search(int n, std::vector<int>& t, int cell, int& solutions,
                         std::vector<int>* first) {
  auto at = [&](int x, int y) -> int& { return t[static_cast<std::size_t>(x) * n + y]; };
  auto consistent = [&]() {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) {
          int bc = at(b, c);
          if (bc < 0) continue;
          int lhs = at(a, bc);
          if (lhs < 0) continue;
          int ab = at(a, b), ac = at(a, c);
          if (ab < 0 || ac < 0) continue;
          int rhs = at(ab, ac);
          if (rhs >= 0 && rhs != lhs) return false;
        }
    return true;
  };
  if (cell == n * n) {
    ++solutions;
    if (solutions == 1 && first) *first = t;
    return;
  }
  int x = cell / n, y = cell % n;
  if (y == 0) {  // fixed successor column
    if (consistent()) laver_search(n, t, cell + 1, solutions, first);
    return;
  }
  for (int v = 0; v < n; ++v) {
    at(x, y) = v;
    if (consistent()) laver_search(n, t, cell + 1, solutions, first);
  }
  at(x, y) = -1;
}

}  // namespace detail

/// Exhaustively confirms that exactly one left self-distributive table with
/// the successor column exists at order 2^k, and that it equals laver_build.
inline bool laver_uniqueness_check(int k) {
  if (k < 0 || k > 2)
    throw std::invalid_argument("laver_uniqueness_check: search is feasible only for k <= 2");
  const int n = 1 << k;
  std::vector<int> t(static_cast<std::size_t>(n) * n, -1);
  for (int x = 0; x < n; ++x) t[static_cast<std::size_t>(x) * n] = (x + 1) % n;
  int solutions = 0;
  std::vector<int> first;
  detail::laver_search(n, t, 0, solutions, &first);
  return solutions == 1 && FiniteMagma(n, first) == laver_build(k).magma;
}

/// Structure of transpose(A_k) used by the homology results, 1-indexed:
/// the right fixed pair (2^k - 1 |-> 2^k) and the identity column 2^k.
struct LaverRightStructure {
  int k = 0;
  std::pair<int, int> right_fixed;                 // (2^k - 1, 2^k)
  int identity_column = 0;                         // 2^k
  std::vector<std::pair<int, int>> all_right_fixed;
  std::vector<int> bijective_columns;
};

inline LaverRightStructure laver_right_structure(int k) {
  if (k < 1 || k > 10)
    throw std::invalid_argument("laver_right_structure: k must be in 1..10");
  LaverTable lt = laver_build(k);
  const int n = 1 << k;
  FiniteMagma tr = transpose(lt.magma);

  LaverRightStructure out;
  out.k = k;
  for (auto& [r, c] : right_fixed_elements(tr))
    out.all_right_fixed.emplace_back(r + 1, c + 1);
  for (int y = 0; y < n; ++y) {
    std::vector<bool> seen(n, false);
    bool bij = true;
    for (int x = 0; x < n; ++x) {
      int v = tr.at(x, y);
      if (seen[v]) { bij = false; break; }
      seen[v] = true;
    }
    if (bij) out.bijective_columns.push_back(y + 1);
  }

  // row 2^k - 1 of A_k (1-indexed) must be constantly 2^k
  for (int x = 0; x < n; ++x)
    if (tr.at(x, n - 2) != n - 1)
      throw std::runtime_error("laver_right_structure: row " + std::to_string(n - 1) +
                               " is not constant");
  out.right_fixed = {n - 1, n};
  // column 2^k of the transpose is the identity map
  for (int x = 0; x < n; ++x)
    if (tr.at(x, n - 1) != x)
      throw std::runtime_error("laver_right_structure: row " + std::to_string(n) +
                               " is not the identity");
  out.identity_column = n;
  return out;
}

}  // namespace shelflab
