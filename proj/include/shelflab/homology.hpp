#pragma once

// One-term distributive homology and two-term (rack) homology of finite
// shelves, computed exactly over the integers.
//
// C_q is the free abelian group on (q+1)-tuples over X, in lexicographic
// order with x_0 most significant. The boundary is sum((-1)^i d_i); the
// one-term face maps star the prefix with x_i and drop it, the two-term
// face maps are d_i^R = d_i^{drop} - d_i^{star}. d_0^R = 0.

#include "shelflab/intmatrix.hpp"
#include "shelflab/magma.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace shelflab {

enum class Theory { one_term, two_term };

inline std::string theory_name(Theory t) {
  return t == Theory::one_term ? "one-term" : "two-term";
}

struct HomologyGroup {
  std::int64_t free_rank = 0;
  std::vector<Int> torsion;  // invariant factors > 1, each dividing the next

  friend bool operator==(const HomologyGroup& a, const HomologyGroup& b) {
    return a.free_rank == b.free_rank && a.torsion == b.torsion;
  }
};

namespace detail {

inline std::size_t pow_size(int base, int exp) {
  // saturates well above any usable chain module size
  constexpr std::size_t kSat = std::size_t{1} << 40;
  std::size_t r = 1;
  while (exp-- > 0) {
    if (r >= kSat / static_cast<std::size_t>(base)) return kSat;
    r *= static_cast<std::size_t>(base);
  }
  return r;
}

inline void decode_tuple(std::size_t idx, int n, int len, std::vector<int>& out) {
  out.assign(len, 0);
  for (int i = len - 1; i >= 0; --i) {
    out[i] = static_cast<int>(idx % n);
    idx /= n;
  }
}

inline std::size_t encode_tuple(const std::vector<int>& t, int n) {
  std::size_t idx = 0;
  for (int x : t) idx = idx * n + static_cast<std::size_t>(x);
  return idx;
}

}  // namespace detail

/// Face map d_{i,q}: C_q -> C_{q-1} as a matrix (q >= 1).
inline IntMatrix face_matrix(const FiniteMagma& m, Theory theory, int i, int q) {
  const int n = m.order();
  if (q < 1 || i < 0 || i > q) throw std::invalid_argument("face_matrix: bad degree or face index");
  const std::size_t cols = detail::pow_size(n, q + 1);
  const std::size_t rows = detail::pow_size(n, q);
  IntMatrix d(rows, cols);
  std::vector<int> t, f;
  for (std::size_t col = 0; col < cols; ++col) {
    detail::decode_tuple(col, n, q + 1, t);
    // drop-i face (trivial left projection operation)
    f.clear();
    for (int j = 0; j <= q; ++j)
      if (j != i) f.push_back(t[j]);
    std::size_t drop = detail::encode_tuple(f, n);
    // starred face: prefix entries multiplied by t[i]
    f.clear();
    for (int j = 0; j < i; ++j) f.push_back(m.at(t[j], t[i]));
    for (int j = i + 1; j <= q; ++j) f.push_back(t[j]);
    std::size_t star = detail::encode_tuple(f, n);
    if (theory == Theory::one_term) {
      d.at(star, col) += 1;
    } else {
      d.at(drop, col) += 1;
      d.at(star, col) -= 1;
    }
  }
  return d;
}

/// Matrix of the boundary map in degree q (C_q -> C_{q-1}); degree 0 maps to 0.
inline IntMatrix boundary_matrix(const FiniteMagma& m, Theory theory, int q,
                                 std::size_t column_cap = 200000) {
  if (q < 0) throw std::invalid_argument("boundary_matrix: negative degree");
  if (!check_axioms(m).shelf)
    throw std::invalid_argument("boundary_matrix: input is not a shelf");
  const int n = m.order();
  const std::size_t cols = detail::pow_size(n, q + 1);
  if (cols > column_cap)
    throw std::invalid_argument("boundary_matrix: " + std::to_string(cols) +
                                " columns exceeds cap of " + std::to_string(column_cap));
  if (q == 0) return IntMatrix(0, cols);

  const std::size_t rows = detail::pow_size(n, q);
  IntMatrix d(rows, cols);
  std::vector<int> t, f;
  for (std::size_t col = 0; col < cols; ++col) {
    detail::decode_tuple(col, n, q + 1, t);
    int sign = 1;
    for (int i = 0; i <= q; ++i, sign = -sign) {
      f.clear();
      for (int j = 0; j < i; ++j) f.push_back(m.at(t[j], t[i]));
      for (int j = i + 1; j <= q; ++j) f.push_back(t[j]);
      std::size_t star = detail::encode_tuple(f, n);
      if (theory == Theory::one_term) {
        d.at(star, col) += sign;
      } else {
        f.clear();
        for (int j = 0; j <= q; ++j)
          if (j != i) f.push_back(t[j]);
        std::size_t drop = detail::encode_tuple(f, n);
        d.at(drop, col) += sign;
        d.at(star, col) -= sign;
      }
    }
  }
  return d;
}

/// H_q = ker(boundary_q) / im(boundary_{q+1}), exact. `reduced` splits one Z
/// off degree 0 of the one-term theory and is otherwise identical.
inline HomologyGroup homology(const FiniteMagma& m, Theory theory, int q, bool reduced = false,
                              std::size_t column_cap = 200000) {
  if (reduced && theory == Theory::two_term)
    throw std::invalid_argument("homology: reduced groups are defined for the one-term theory only");
  IntMatrix bq = boundary_matrix(m, theory, q, column_cap);
  IntMatrix bq1 = boundary_matrix(m, theory, q + 1, column_cap);
  SnfResult sq = smith_normal_form(bq);
  SnfResult sq1 = smith_normal_form(bq1);
  HomologyGroup h;
  h.free_rank = static_cast<std::int64_t>(bq.cols()) - static_cast<std::int64_t>(sq.rank) -
                static_cast<std::int64_t>(sq1.rank);
  for (const Int& d : sq1.invariant_factors)
    if (d > 1) h.torsion.push_back(d);
  if (reduced && q == 0) h.free_rank -= 1;
  return h;
}

// --- chain homotopy for the two-term theory ------------------------------

namespace detail {

using Chain = std::map<std::vector<int>, std::int64_t>;

inline void chain_add(Chain& c, const std::vector<int>& t, std::int64_t coeff) {
  if (coeff == 0) return;
  auto it = c.find(t);
  if (it == c.end()) {
    c.emplace(t, coeff);
  } else {
    it->second += coeff;
    if (it->second == 0) c.erase(it);
  }
}

/// Two-term boundary of a single tuple, as a sparse chain.
inline Chain boundary_of_tuple(const FiniteMagma& m, const std::vector<int>& t) {
  Chain out;
  const int q = static_cast<int>(t.size()) - 1;
  std::vector<int> f;
  int sign = 1;
  for (int i = 0; i <= q; ++i, sign = -sign) {
    f.clear();
    for (int j = 0; j <= q; ++j)
      if (j != i) f.push_back(t[j]);
    chain_add(out, f, sign);
    f.clear();
    for (int j = 0; j < i; ++j) f.push_back(m.at(t[j], t[i]));
    for (int j = i + 1; j <= q; ++j) f.push_back(t[j]);
    chain_add(out, f, -sign);
  }
  return out;
}

}  // namespace detail

/// Checks the homotopy identity boundary(f(t)) + f(boundary(t)) = t - (c,..,c)
/// on every basis tuple through degree qmax, where f appends the right
/// c-fixed element r with sign (-1)^(q+1). Also checks that the constant
/// chains (c,...,c) have zero boundary.
inline bool chain_homotopy_verify(const FiniteMagma& m, int r, int c, int qmax) {
  auto fixed = right_fixed_elements(m);
  bool ok = false;
  for (auto& [rr, cc] : fixed)
    if (rr == r && cc == c) ok = true;
  if (!ok)
    throw std::invalid_argument("chain_homotopy_verify: (" + std::to_string(r) + ", " +
                                std::to_string(c) + ") is not a right fixed pair");
  const int n = m.order();
  std::vector<int> t;
  for (int q = 0; q <= qmax; ++q) {
    const std::size_t count = detail::pow_size(n, q + 1);
    // constant chain has zero boundary
    std::vector<int> cc(q + 1, c);
    if (q >= 1 && !detail::boundary_of_tuple(m, cc).empty()) return false;
    const std::int64_t sign_f = (q % 2 == 0) ? -1 : 1;  // (-1)^(q+1)
    for (std::size_t idx = 0; idx < count; ++idx) {
      detail::decode_tuple(idx, n, q + 1, t);
      detail::Chain lhs;
      // boundary(f_q(t)): append r, boundary, scale
      std::vector<int> tr = t;
      tr.push_back(r);
      for (auto& [tup, coeff] : detail::boundary_of_tuple(m, tr))
        detail::chain_add(lhs, tup, coeff * sign_f);
      // f_{q-1}(boundary(t)); boundary vanishes in degree 0
      if (q >= 1) {
        const std::int64_t sign_f1 = (q % 2 == 0) ? 1 : -1;  // (-1)^q
        for (auto& [tup, coeff] : detail::boundary_of_tuple(m, t)) {
          std::vector<int> ext = tup;
          ext.push_back(r);
          detail::chain_add(lhs, ext, coeff * sign_f1);
        }
      }
      detail::Chain rhs;
      detail::chain_add(rhs, t, 1);
      detail::chain_add(rhs, cc, -1);
      if (lhs != rhs) return false;
    }
  }
  return true;
}

// --- torsion scans --------------------------------------------------------

struct TorsionOccurrence {
  std::size_t magma_index;
  int q;
  std::vector<Int> torsion;
};

struct TorsionScanReport {
  Theory theory;
  int qmax;
  std::size_t scanned = 0;
  std::vector<TorsionOccurrence> occurrences;
};

/// Computes homology of every input through qmax and records all nontrivial
/// torsion. Inputs must be associative shelves; findings are reported, never
/// asserted.
inline TorsionScanReport torsion_scan(const std::vector<FiniteMagma>& ms, Theory theory,
                                      int qmax) {
  TorsionScanReport rep;
  rep.theory = theory;
  rep.qmax = qmax;
  for (std::size_t i = 0; i < ms.size(); ++i) {
    AxiomReport ax = check_axioms(ms[i]);
    if (!ax.shelf || !ax.associative)
      throw std::invalid_argument("torsion_scan: input " + std::to_string(i) +
                                  " is not an associative shelf");
    for (int q = 0; q <= qmax; ++q) {
      HomologyGroup h = homology(ms[i], theory, q);
      if (!h.torsion.empty()) rep.occurrences.push_back({i, q, h.torsion});
    }
    ++rep.scanned;
  }
  return rep;
}

}  // namespace shelflab
