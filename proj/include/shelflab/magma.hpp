#pragma once

// Finite magmas as Cayley tables, axiom detection, isomorphism testing,
// and the ".cay" text format.

#include <algorithm>
#include <istream>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace shelflab {

/// An order-n binary operation stored as a row-major n×n table.
/// Entry (x, y) is x*y. Immutable after construction.
class FiniteMagma {
 public:
  FiniteMagma(int order, std::vector<int> table) : n_(order), t_(std::move(table)) {
    if (n_ < 1) throw std::invalid_argument("magma order must be >= 1");
    if (t_.size() != static_cast<std::size_t>(n_) * n_)
      throw std::invalid_argument("magma table size does not match order");
    for (int x = 0; x < n_; ++x)
      for (int y = 0; y < n_; ++y) {
        int v = t_[static_cast<std::size_t>(x) * n_ + y];
        if (v < 0 || v >= n_)
          throw std::invalid_argument("table entry out of range at cell (" +
                                      std::to_string(x) + ", " + std::to_string(y) + ")");
      }
  }

  static FiniteMagma from_rows(const std::vector<std::vector<int>>& rows) {
    std::vector<int> flat;
    for (const auto& r : rows) {
      if (r.size() != rows.size())
        throw std::invalid_argument("magma rows must form a square table");
      flat.insert(flat.end(), r.begin(), r.end());
    }
    return FiniteMagma(static_cast<int>(rows.size()), std::move(flat));
  }

  int order() const { return n_; }
  int at(int x, int y) const { return t_[static_cast<std::size_t>(x) * n_ + y]; }
  const std::vector<int>& data() const { return t_; }

  friend bool operator==(const FiniteMagma& a, const FiniteMagma& b) {
    return a.n_ == b.n_ && a.t_ == b.t_;
  }
  friend bool operator!=(const FiniteMagma& a, const FiniteMagma& b) { return !(a == b); }
  friend bool operator<(const FiniteMagma& a, const FiniteMagma& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    return a.t_ < b.t_;
  }

 private:
  int n_;
  std::vector<int> t_;
};

inline FiniteMagma make_magma(int order, std::vector<int> table) {
  return FiniteMagma(order, std::move(table));
}

struct AxiomReport {
  bool shelf = false;        // (a*b)*c = (a*c)*(b*c)
  bool idempotent = false;   // a*a = a
  bool rack = false;         // shelf with bijective right translations
  bool spindle = false;      // idempotent shelf
  bool quandle = false;      // idempotent rack
  bool associative = false;
  bool quasigroup = false;   // Latin square
  bool unital = false;       // shelf with a two-sided unit
  bool proto_unital = false; // shelf with a*b = b*(a*b) and a*b = (a*b)*b
  bool pre_unital = false;   // idempotent proto-unital shelf
  std::optional<int> unit;   // two-sided unit, whenever one exists
  std::vector<std::pair<int, int>> right_fixed;  // (r, c) with x*r = c for all x
  std::vector<int> right_zeros;                  // r with x*r = r for all x
};

/// Decides every supported axiom by exhaustive check over element tuples.
inline AxiomReport check_axioms(const FiniteMagma& m) {
  const int n = m.order();
  AxiomReport rep;

  rep.shelf = true;
  rep.associative = true;
  for (int a = 0; a < n && (rep.shelf || rep.associative); ++a)
    for (int b = 0; b < n && (rep.shelf || rep.associative); ++b)
      for (int c = 0; c < n; ++c) {
        int ab = m.at(a, b);
        if (m.at(ab, c) != m.at(m.at(a, c), m.at(b, c))) rep.shelf = false;
        if (m.at(ab, c) != m.at(a, m.at(b, c))) rep.associative = false;
        if (!rep.shelf && !rep.associative) break;
      }

  rep.idempotent = true;
  for (int a = 0; a < n; ++a)
    if (m.at(a, a) != a) { rep.idempotent = false; break; }

  // Latin-square style bijectivity of rows and columns.
  bool cols_bij = true, rows_bij = true;
  for (int k = 0; k < n; ++k) {
    std::vector<bool> seen_col(n, false), seen_row(n, false);
    for (int x = 0; x < n; ++x) {
      int cv = m.at(x, k);
      if (seen_col[cv]) cols_bij = false;
      seen_col[cv] = true;
      int rv = m.at(k, x);
      if (seen_row[rv]) rows_bij = false;
      seen_row[rv] = true;
    }
  }
  rep.quasigroup = cols_bij && rows_bij;
  rep.rack = rep.shelf && cols_bij;
  rep.spindle = rep.shelf && rep.idempotent;
  rep.quandle = rep.rack && rep.idempotent;

  // Unit search; a magma has at most one two-sided unit.
  for (int e = 0; e < n && !rep.unit; ++e) {
    bool ok = true;
    for (int x = 0; x < n; ++x)
      if (m.at(x, e) != x || m.at(e, x) != x) { ok = false; break; }
    if (ok) rep.unit = e;
  }
  rep.unital = rep.shelf && rep.unit.has_value();

  bool pair1 = true, pair2 = true;  // a*b = b*(a*b), a*b = (a*b)*b
  for (int a = 0; a < n && (pair1 || pair2); ++a)
    for (int b = 0; b < n; ++b) {
      int ab = m.at(a, b);
      if (m.at(b, ab) != ab) pair1 = false;
      if (m.at(ab, b) != ab) pair2 = false;
      if (!pair1 && !pair2) break;
    }
  rep.proto_unital = rep.shelf && pair1 && pair2;
  rep.pre_unital = rep.proto_unital && rep.idempotent;

  for (int r = 0; r < n; ++r) {
    int c = m.at(0, r);
    bool constant = true;
    for (int x = 1; x < n; ++x)
      if (m.at(x, r) != c) { constant = false; break; }
    if (constant) {
      rep.right_fixed.emplace_back(r, c);
      if (r == c) rep.right_zeros.push_back(r);
    }
  }
  return rep;
}

/// All pairs (r, c) such that x*r = c for every x.
inline std::vector<std::pair<int, int>> right_fixed_elements(const FiniteMagma& m) {
  return check_axioms(m).right_fixed;
}

inline std::vector<int> right_zeros(const FiniteMagma& m) {
  return check_axioms(m).right_zeros;
}

/// Swaps the roles of the two arguments; turns left self-distributive
/// tables into right self-distributive ones and vice versa.
inline FiniteMagma transpose(const FiniteMagma& m) {
  const int n = m.order();
  std::vector<int> t(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) t[static_cast<std::size_t>(x) * n + y] = m.at(y, x);
  return FiniteMagma(n, std::move(t));
}

/// Relabels elements: result(p(x), p(y)) = p(x*y).
inline FiniteMagma permuted(const FiniteMagma& m, const std::vector<int>& p) {
  const int n = m.order();
  if (static_cast<int>(p.size()) != n) throw std::invalid_argument("permutation size mismatch");
  std::vector<int> t(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      t[static_cast<std::size_t>(p[x]) * n + p[y]] = p[m.at(x, y)];
  return FiniteMagma(n, std::move(t));
}

/// Finds p with p(x*y) = p(x)*'p(y), or nullopt. Backtracking on partial maps.
inline std::optional<std::vector<int>> find_isomorphism(const FiniteMagma& m1,
                                                        const FiniteMagma& m2) {
  if (m1.order() != m2.order())
    throw std::invalid_argument("cannot compare magmas of different orders");
  const int n = m1.order();
  std::vector<int> p(n, -1);
  std::vector<bool> used(n, false);

  auto consistent = [&](int k) {
    // all products among 0..k whose value is also <= k must be respected
    for (int x = 0; x <= k; ++x)
      for (int y = 0; y <= k; ++y) {
        int xy = m1.at(x, y);
        if (xy <= k && m2.at(p[x], p[y]) != p[xy]) return false;
      }
    return true;
  };

  auto rec = [&](auto&& self, int k) -> bool {
    if (k == n) return true;
    for (int img = 0; img < n; ++img) {
      if (used[img]) continue;
      p[k] = img;
      used[img] = true;
      if (consistent(k) && self(self, k + 1)) return true;
      used[img] = false;
      p[k] = -1;
    }
    return false;
  };

  if (rec(rec, 0)) return p;
  return std::nullopt;
}

/// Lexicographically least relabeling over all permutations. Exact; n <= max_order.
inline FiniteMagma canonical_form(const FiniteMagma& m, int max_order = 6) {
  const int n = m.order();
  if (n > max_order)
    throw std::invalid_argument(
        "canonical_form is limited to order " + std::to_string(max_order) +
        "; use find_isomorphism for pairwise comparison instead");
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::vector<int> best = m.data();
  std::vector<int> img(static_cast<std::size_t>(n) * n);
  do {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        img[static_cast<std::size_t>(perm[x]) * n + perm[y]] = perm[m.at(x, y)];
    if (img < best) best = img;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return FiniteMagma(n, std::move(best));
}

// --- ".cay" text format ------------------------------------------------
// Line 1: order n. Then n lines of n whitespace-separated entries in [0, n).
// Lines starting with '#' and blank lines are ignored, so annotated output
// stays parseable.

inline FiniteMagma parse_cay(std::istream& in) {
  std::string line;
  int lineno = 0;
  auto next_content_line = [&](std::string& out) {
    while (std::getline(in, line)) {
      ++lineno;
      std::size_t i = line.find_first_not_of(" \t\r");
      if (i == std::string::npos) continue;
      if (line[i] == '#') continue;
      out = line;
      return true;
    }
    return false;
  };

  std::string l;
  if (!next_content_line(l)) throw std::invalid_argument("cay: empty input");
  int n = 0;
  {
    std::istringstream ss(l);
    std::string extra;
    if (!(ss >> n) || n < 1)
      throw std::invalid_argument("cay: line " + std::to_string(lineno) +
                                  ": expected a positive order");
    if (ss >> extra)
      throw std::invalid_argument("cay: line " + std::to_string(lineno) +
                                  ": trailing garbage after order");
  }
  std::vector<int> t;
  t.reserve(static_cast<std::size_t>(n) * n);
  for (int r = 0; r < n; ++r) {
    if (!next_content_line(l))
      throw std::invalid_argument("cay: unexpected end of input; expected " +
                                  std::to_string(n) + " rows");
    std::istringstream ss(l);
    for (int c = 0; c < n; ++c) {
      int v;
      if (!(ss >> v))
        throw std::invalid_argument("cay: line " + std::to_string(lineno) + ": expected " +
                                    std::to_string(n) + " entries");
      if (v < 0 || v >= n)
        throw std::invalid_argument("cay: line " + std::to_string(lineno) + ": entry " +
                                    std::to_string(v) + " out of range at cell (" +
                                    std::to_string(r) + ", " + std::to_string(c) + ")");
      t.push_back(v);
    }
    std::string extra;
    if (ss >> extra)
      throw std::invalid_argument("cay: line " + std::to_string(lineno) +
                                  ": trailing garbage after row");
  }
  if (next_content_line(l))
    throw std::invalid_argument("cay: line " + std::to_string(lineno) +
                                ": trailing garbage after table");
  return FiniteMagma(n, std::move(t));
}

inline FiniteMagma parse_cay(const std::string& text) {
  std::istringstream ss(text);
  return parse_cay(ss);
}

inline void write_cay(std::ostream& out, const FiniteMagma& m) {
  const int n = m.order();
  out << n << '\n';
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (y) out << ' ';
      out << m.at(x, y);
    }
    out << '\n';
  }
}

inline std::string to_cay(const FiniteMagma& m) {
  std::ostringstream ss;
  write_cay(ss, m);
  return ss.str();
}

}  // namespace shelflab
