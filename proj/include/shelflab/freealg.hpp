#pragma once

// Finitely generated free structures as finite multiplication tables:
//   fas   - free associative shelves, by bounded congruence closure
//   fpus  - free proto-unital shelves, by rewriting to normal form
//   fptus - free pre-unital shelves, by the letter-deletion product
//   fus   - free unital shelves (fptus plus the empty word as unit)
// together with size recursions and generating-function cross-checks.

#include "shelflab/egf.hpp"
#include "shelflab/magma.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace shelflab {

/// A word over letters 0..alphabet-1. The empty word is legal only where a
/// unit is modeled (the fus tables).
struct Word {
  std::vector<int> letters;
  int alphabet = 0;

  Word() = default;
  Word(std::vector<int> l, int a) : letters(std::move(l)), alphabet(a) {
    if (a < 1) throw std::invalid_argument("word alphabet must be >= 1");
    for (int x : letters)
      if (x < 0 || x >= a) throw std::invalid_argument("word letter out of range");
  }

  int size() const { return static_cast<int>(letters.size()); }
  bool repeat_free() const {
    std::uint64_t seen = 0;
    for (int x : letters) {
      if (seen & (1ull << x)) return false;
      seen |= 1ull << x;
    }
    return true;
  }

  friend bool operator==(const Word& a, const Word& b) {
    return a.alphabet == b.alphabet && a.letters == b.letters;
  }
  friend bool operator<(const Word& a, const Word& b) {  // length-lex
    if (a.letters.size() != b.letters.size()) return a.letters.size() < b.letters.size();
    return a.letters < b.letters;
  }
};

/// Serialization: letter indices joined by dots, "0.1.0"; empty word -> "".
inline std::string word_to_string(const Word& w) {
  std::string s;
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    if (i) s += '.';
    s += std::to_string(w.letters[i]);
  }
  return s;
}

inline Word parse_word(const std::string& text, int alphabet) {
  std::vector<int> letters;
  if (!text.empty()) {
    std::istringstream ss(text);
    std::string part;
    while (std::getline(ss, part, '.')) {
      if (part.empty()) throw std::invalid_argument("word: empty letter field");
      letters.push_back(std::stoi(part));
    }
  }
  return Word(std::move(letters), alphabet);
}

enum class FreeKind { fas, fpus, fptus, fus };

inline std::string free_kind_name(FreeKind k) {
  switch (k) {
    case FreeKind::fas: return "fas";
    case FreeKind::fpus: return "fpus";
    case FreeKind::fptus: return "fptus";
    case FreeKind::fus: return "fus";
  }
  return "?";
}

struct FreeTable {
  FreeKind kind{};
  int alphabet = 0;
  std::vector<Word> elements;  // normal forms in length-lex order
  FiniteMagma table{1, {0}};

  int index_of(const Word& w) const {
    auto it = index_.find(w.letters);
    return it == index_.end() ? -1 : it->second;
  }
  void rebuild_index() {
    index_.clear();
    for (std::size_t i = 0; i < elements.size(); ++i)
      index_[elements[i].letters] = static_cast<int>(i);
  }

 private:
  std::map<std::vector<int>, int> index_;
};

/// n! * [x^n] of the exponential generating function of each family,
/// for n = 0..N. Exact rational series arithmetic.
inline std::vector<Int> egf_coefficients(FreeKind kind, int N) {
  if (N < 0 || N > 20) throw std::invalid_argument("egf_coefficients: N must be in 0..20");
  PowerSeries ex = PowerSeries::exponential(N + 1);
  PowerSeries geo = PowerSeries::geometric(N + 1);
  PowerSeries s = ex * geo;
  switch (kind) {
    case FreeKind::fas: s = (s * geo).times_poly({{1, 3}, {3, -1}}); break;  // (3x-x^3) e^x/(1-x)^2
    case FreeKind::fpus: s = s.times_poly({{1, 2}, {2, -1}}); break;         // (2x-x^2) e^x/(1-x)
    case FreeKind::fptus: s = s.times_poly({{1, 1}}); break;                 // x e^x/(1-x)
    case FreeKind::fus: break;                                               // e^x/(1-x)
  }
  std::vector<Int> out;
  for (int n = 0; n <= N; ++n) out.push_back(s.egf_count(n));
  return out;
}

// --- free associative shelves ---------------------------------------------

/// Bounded congruence closure of the word semigroup under xyz ~ xzyz applied
/// at every position, over all words of length 1..max_len. Words are indexed
/// length-lexicographically, so the least index in a class is its normal form.
class FasQuotient {
 public:
  FasQuotient(int alphabet, int max_len) : n_(alphabet), L_(max_len) {
    if (n_ < 1) throw std::invalid_argument("fas: alphabet must be >= 1");
    if (L_ < 4) throw std::invalid_argument("fas: max_len must be >= 4");
    offset_.assign(L_ + 2, 0);
    std::int64_t acc = 0, p = 1;
    for (int len = 1; len <= L_; ++len) {
      p *= n_;
      offset_[len] = acc;
      acc += p;
      if (acc > (std::int64_t{1} << 24))
        throw std::invalid_argument("fas: universe too large; lower max_len");
    }
    offset_[L_ + 1] = acc;
    parent_.resize(acc);
    for (std::int64_t i = 0; i < acc; ++i) parent_[i] = i;

    std::vector<int> w, partner;
    for (int len = 3; len < L_; ++len) {
      const std::int64_t count = offset_[len + 1] - offset_[len];
      for (std::int64_t v = 0; v < count; ++v) {
        w.assign(len, 0);
        std::int64_t t = v;
        for (int i = len - 1; i >= 0; --i) {
          w[i] = static_cast<int>(t % n_);
          t /= n_;
        }
        for (int i = 0; i + 2 < len; ++i) {
          partner.clear();
          partner.insert(partner.end(), w.begin(), w.begin() + i + 1);
          partner.push_back(w[i + 2]);
          partner.push_back(w[i + 1]);
          partner.push_back(w[i + 2]);
          partner.insert(partner.end(), w.begin() + i + 3, w.end());
          unite(offset_[len] + v, index_of(partner));
        }
      }
    }
  }

  int alphabet() const { return n_; }
  int max_len() const { return L_; }

  std::int64_t class_of(const std::vector<int>& w) const {
    if (w.empty()) throw std::invalid_argument("fas: empty word has no class");
    if (static_cast<int>(w.size()) > L_)
      throw std::invalid_argument("fas: word longer than the closure bound");
    return find(index_of(w));
  }

  std::vector<int> word_of(std::int64_t idx) const {
    int len = 1;
    while (idx >= offset_[len + 1]) ++len;
    std::int64_t v = idx - offset_[len];
    std::vector<int> w(len);
    for (int i = len - 1; i >= 0; --i) {
      w[i] = static_cast<int>(v % n_);
      v /= n_;
    }
    return w;
  }

 private:
  std::int64_t index_of(const std::vector<int>& w) const {
    std::int64_t v = 0;
    for (int d : w) v = v * n_ + d;
    return offset_[w.size()] + v;
  }
  std::int64_t find(std::int64_t x) const {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::int64_t a, std::int64_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b) parent_[b] = a;  // min root keeps the length-lex least word
    else parent_[a] = b;
  }

  int n_, L_;
  std::vector<std::int64_t> offset_;
  mutable std::vector<std::int64_t> parent_;
};

namespace detail {

struct FasGenerated {
  std::vector<std::vector<int>> reps;           // length-lex sorted normal forms
  std::vector<std::vector<int>> letter_mult;    // [element][letter] -> element

  friend bool operator==(const FasGenerated& a, const FasGenerated& b) {
    return a.reps == b.reps && a.letter_mult == b.letter_mult;
  }
};

// The submagma generated by the letters: close under right multiplication by
// single letters. Stuck junk classes of long words never show up here.
inline FasGenerated fas_generated(const FasQuotient& q) {
  const int n = q.alphabet();
  std::unordered_map<std::int64_t, int> id;
  std::vector<std::int64_t> roots;
  for (int a = 0; a < n; ++a) {
    std::int64_t r = q.class_of({a});
    if (!id.count(r)) {
      id.emplace(r, static_cast<int>(roots.size()));
      roots.push_back(r);
    }
  }
  std::vector<std::vector<int>> lm;
  for (std::size_t head = 0; head < roots.size(); ++head) {
    std::vector<int> rep = q.word_of(roots[head]);
    if (static_cast<int>(rep.size()) + 1 > q.max_len())
      throw std::runtime_error(
          "fas: normal form times a letter exceeds max_len; rerun with a larger bound");
    std::vector<int> row(n);
    for (int a = 0; a < n; ++a) {
      rep.push_back(a);
      std::int64_t r = q.class_of(rep);
      rep.pop_back();
      auto it = id.find(r);
      if (it == id.end()) {
        id.emplace(r, static_cast<int>(roots.size()));
        row[a] = static_cast<int>(roots.size());
        roots.push_back(r);
      } else {
        row[a] = it->second;
      }
    }
    lm.push_back(std::move(row));
  }

  // sort normal forms length-lex and remap
  FasGenerated g;
  std::vector<std::pair<std::vector<int>, int>> order;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    std::vector<int> w = q.word_of(roots[i]);
    order.emplace_back(std::move(w), static_cast<int>(i));
  }
  std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    return a.first < b.first;
  });
  std::vector<int> new_of_old(roots.size());
  for (std::size_t i = 0; i < order.size(); ++i) new_of_old[order[i].second] = static_cast<int>(i);
  g.reps.resize(order.size());
  g.letter_mult.assign(order.size(), std::vector<int>(n));
  for (std::size_t i = 0; i < order.size(); ++i) {
    g.reps[i] = order[i].first;
    for (int a = 0; a < n; ++a)
      g.letter_mult[i][a] = new_of_old[lm[order[i].second][a]];
  }
  return g;
}

}  // namespace detail

/// Builds the free associative shelf on n letters as a finite table.
/// The quotient at max_len and max_len+1 must agree (same normal forms and
/// same products); otherwise the result is unstable and an error is raised.
inline FreeTable fas_build(int n, int max_len = 8, bool allow_large = false) {
  if (n < 1) throw std::invalid_argument("fas_build: n must be >= 1");
  if (n > 3 && !allow_large)
    throw std::invalid_argument("fas_build: n > 3 requires the allow_large flag");
  if (n > 5) throw std::invalid_argument("fas_build: n must be <= 5");
  if (max_len < 4) throw std::invalid_argument("fas_build: max_len must be >= 4");

  FasQuotient q1(n, max_len);
  detail::FasGenerated g1 = detail::fas_generated(q1);
  FasQuotient q2(n, max_len + 1);
  detail::FasGenerated g2 = detail::fas_generated(q2);
  if (!(g1 == g2))
    throw std::runtime_error("fas_build: quotient is unstable at max_len " +
                             std::to_string(max_len) + "; rerun with a larger bound");

  const int count = static_cast<int>(g1.reps.size());
  std::vector<int> table(static_cast<std::size_t>(count) * count);
  for (int i = 0; i < count; ++i)
    for (int j = 0; j < count; ++j) {
      int cur = i;  // multiply letter by letter; the quotient is associative
      for (int a : g1.reps[j]) cur = g1.letter_mult[cur][a];
      table[static_cast<std::size_t>(i) * count + j] = cur;
    }

  FreeTable ft;
  ft.kind = FreeKind::fas;
  ft.alphabet = n;
  for (auto& w : g1.reps) ft.elements.emplace_back(w, n);
  ft.table = FiniteMagma(count, std::move(table));
  ft.rebuild_index();
  AxiomReport ax = check_axioms(ft.table);
  if (!ax.shelf || !ax.associative)
    throw std::runtime_error("fas_build: quotient table is not an associative shelf; "
                             "rerun with a larger max_len");
  return ft;
}

/// Verifies class(abba) = class(aba) for all ordered letter pairs; the
/// degenerate n=1 form is class(aaaa) = class(aaa).
inline bool fas_key_identity_check(int n, int max_len = 8) {
  FasQuotient q(n, max_len);
  if (n == 1) return q.class_of({0, 0, 0, 0}) == q.class_of({0, 0, 0});
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a == b) continue;
      if (q.class_of({a, b, b, a}) != q.class_of({a, b, a})) return false;
    }
  return true;
}

struct FasCounts {
  std::vector<Int> direct;     // sizes from fas_build, n = 0..min(nmax, 3)
  std::vector<Int> recursion;  // c_0 = 0, c_1 = 3, c_n = (n+2)c_{n-1} - (n-1)c_{n-2} + 3n
  std::vector<Int> egf;        // n! [x^n] (3x - x^3) e^x / (1-x)^2
};

inline FasCounts fas_counts(int nmax) {
  if (nmax < 1 || nmax > 12) throw std::invalid_argument("fas_counts: nmax must be in 1..12");
  FasCounts out;
  out.direct.push_back(0);
  for (int n = 1; n <= std::min(nmax, 3); ++n)
    out.direct.push_back(static_cast<Int>(fas_build(n).elements.size()));
  out.recursion = {0, 3};
  for (int n = 2; n <= nmax; ++n)
    out.recursion.push_back((n + 2) * out.recursion[n - 1] - (n - 1) * out.recursion[n - 2] +
                            3 * n);
  out.recursion.resize(nmax + 1);
  out.egf = egf_coefficients(FreeKind::fas, nmax);
  for (int n = 0; n <= nmax; ++n)
    if (out.recursion[n] != out.egf[n])
      throw std::logic_error("fas_counts: recursion and generating function disagree at n = " +
                             std::to_string(n));
  for (std::size_t n = 0; n < out.direct.size(); ++n)
    if (out.direct[n] != out.recursion[n])
      throw std::logic_error("fas_counts: direct size disagrees at n = " + std::to_string(n));
  return out;
}

/// The printed closed form and one-term recursion that conflict with the
/// table sizes; kept for inspection only, never asserted.
struct FasAlternateForms {
  std::vector<Int> closed_form;    // 3n + sum_{i=2..n} (i+1)! C(n,i)
  std::vector<Int> one_term_rec;   // c_n = n^2/(n-1) c_{n-1} + n(n-1), from c_1 = 3
};

inline FasAlternateForms fas_alternate_count_forms(int nmax) {
  FasAlternateForms out;
  out.closed_form.push_back(0);
  out.one_term_rec.push_back(0);
  for (int n = 1; n <= nmax; ++n) {
    Int cf = 3 * n;
    for (int i = 2; i <= n; ++i) {
      Int binom = 1;
      for (int k = 0; k < i; ++k) binom = binom * (n - k) / (k + 1);
      Int fact = 1;
      for (int k = 2; k <= i + 1; ++k) fact *= k;
      cf += fact * binom;
    }
    out.closed_form.push_back(cf);
    if (n == 1) out.one_term_rec.push_back(3);
    else out.one_term_rec.push_back(Int(n) * n * out.one_term_rec[n - 1] / (n - 1) +
                                    Int(n) * (n - 1));
  }
  return out;
}

/// Census of normal-form shapes in a fas table, for inspection.
struct FasCensus {
  int repeat_free = 0;        // no letter twice
  int prepended = 0;          // x w with w repeat-free containing x
  int doubled_prepended = 0;  // a prepended form with its last letter doubled
  int doubled_repeat_free = 0;// a repeat-free word with its last letter doubled
  int other = 0;
};

inline FasCensus fas_census(const FreeTable& ft) {
  FasCensus c;
  auto is_repeat_free = [](const std::vector<int>& w) {
    std::uint64_t seen = 0;
    for (int x : w) {
      if (seen & (1ull << x)) return false;
      seen |= 1ull << x;
    }
    return true;
  };
  for (const Word& e : ft.elements) {
    const auto& w = e.letters;
    if (is_repeat_free(w)) {
      ++c.repeat_free;
      continue;
    }
    auto prepended = [&](const std::vector<int>& v) {
      if (v.size() < 2) return false;
      std::vector<int> tail(v.begin() + 1, v.end());
      if (!is_repeat_free(tail)) return false;
      return std::find(tail.begin(), tail.end(), v[0]) != tail.end();
    };
    if (prepended(w)) {
      ++c.prepended;
      continue;
    }
    if (w.size() >= 2 && w[w.size() - 1] == w[w.size() - 2]) {
      std::vector<int> stripped(w.begin(), w.end() - 1);
      if (is_repeat_free(stripped)) {
        ++c.doubled_repeat_free;
        continue;
      }
      if (prepended(stripped)) {
        ++c.doubled_prepended;
        continue;
      }
    }
    ++c.other;
  }
  return c;
}

// --- free proto-unital shelves ---------------------------------------------

namespace detail {

// One rewriting step, applied at a chosen instance. The sound deletions are:
//   yy after a letter   (x y y -> x y)
//   doubled head        (x x y -> x y)
//   repeat at distance  (x v x -> v x, any nonempty v)
struct RewriteInstance {
  int erase_pos;
};

inline void fpus_instances(const std::vector<int>& w, std::vector<RewriteInstance>& out) {
  out.clear();
  const int len = static_cast<int>(w.size());
  for (int i = 0; i + 2 < len; ++i)
    if (w[i + 1] == w[i + 2]) out.push_back({i + 2});
  for (int i = 0; i + 2 < len; ++i)
    if (w[i] == w[i + 1]) out.push_back({i});
  for (int i = 0; i < len; ++i)
    for (int j = i + 2; j < len; ++j)
      if (w[i] == w[j]) out.push_back({i});
}

}  // namespace detail

/// Rewrites a word to its proto-unital normal form: a letter, a squared
/// letter, or a repeat-free word of length >= 2.
inline Word fpus_reduce(const Word& w) {
  if (w.letters.empty()) throw std::invalid_argument("fpus_reduce: empty word");
  std::vector<int> cur = w.letters;
  std::vector<detail::RewriteInstance> inst;
  for (;;) {
    detail::fpus_instances(cur, inst);
    if (inst.empty()) break;
    cur.erase(cur.begin() + inst.front().erase_pos);
  }
  return Word(std::move(cur), w.alphabet);
}

/// Same reduction but choosing a random applicable instance at every step;
/// used to exercise confluence.
inline Word fpus_reduce_random(const Word& w, std::mt19937& rng) {
  if (w.letters.empty()) throw std::invalid_argument("fpus_reduce: empty word");
  std::vector<int> cur = w.letters;
  std::vector<detail::RewriteInstance> inst;
  for (;;) {
    detail::fpus_instances(cur, inst);
    if (inst.empty()) break;
    std::uniform_int_distribution<std::size_t> pick(0, inst.size() - 1);
    cur.erase(cur.begin() + inst[pick(rng)].erase_pos);
  }
  return Word(std::move(cur), w.alphabet);
}

namespace detail {

inline void arrangements(int n, int min_len, int max_len,
                         std::vector<std::vector<int>>& out) {
  // all repeat-free words in length-lex order
  std::vector<int> cur;
  std::uint32_t used = 0;
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(cur.size()) >= min_len) out.push_back(cur);
    if (static_cast<int>(cur.size()) == max_len) return;
    for (int a = 0; a < n; ++a) {
      if (used & (1u << a)) continue;
      used |= 1u << a;
      cur.push_back(a);
      self(self);
      cur.pop_back();
      used &= ~(1u << a);
    }
  };
  rec(rec);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
}

}  // namespace detail

/// Free proto-unital shelf: letters, squared letters, and repeat-free words
/// of length >= 2, multiplied by juxtapose-then-reduce.
inline FreeTable fpus_build(int n) {
  if (n < 1 || n > 5) throw std::invalid_argument("fpus_build: n must be in 1..5");
  std::vector<std::vector<int>> words;
  detail::arrangements(n, 1, n, words);
  for (int a = 0; a < n; ++a) words.push_back({a, a});
  std::sort(words.begin(), words.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });

  FreeTable ft;
  ft.kind = FreeKind::fpus;
  ft.alphabet = n;
  for (auto& w : words) ft.elements.emplace_back(w, n);
  ft.rebuild_index();

  const int count = static_cast<int>(words.size());
  std::vector<int> table(static_cast<std::size_t>(count) * count);
  for (int i = 0; i < count; ++i)
    for (int j = 0; j < count; ++j) {
      std::vector<int> prod = words[i];
      prod.insert(prod.end(), words[j].begin(), words[j].end());
      Word norm = fpus_reduce(Word(std::move(prod), n));
      int idx = ft.index_of(norm);
      if (idx < 0) throw std::logic_error("fpus_build: product left the normal-form set");
      table[static_cast<std::size_t>(i) * count + j] = idx;
    }
  ft.table = FiniteMagma(count, std::move(table));
  if (!check_axioms(ft.table).proto_unital)
    throw std::logic_error("fpus_build: table is not a proto-unital shelf");
  return ft;
}

/// The right zeros of fpus(n): elements z with x*z = z for every x.
inline std::vector<Word> fpus_right_zeros(int n) {
  FreeTable ft = fpus_build(n);
  const int count = ft.table.order();
  std::vector<Word> out;
  for (int z = 0; z < count; ++z) {
    bool rz = true;
    for (int x = 0; x < count; ++x)
      if (ft.table.at(x, z) != z) { rz = false; break; }
    if (rz) out.push_back(ft.elements[z]);
  }
  return out;
}

// --- free pre-unital and unital shelves -------------------------------------

/// Deletion product on repeat-free words: drop from w1 every letter that
/// also occurs in w2, then juxtapose.
inline Word fptus_multiply(const Word& w1, const Word& w2) {
  if (w1.alphabet != w2.alphabet)
    throw std::invalid_argument("fptus_multiply: alphabet mismatch");
  if (w1.letters.empty() || w2.letters.empty())
    throw std::invalid_argument("fptus_multiply: words must be non-empty");
  if (!w1.repeat_free() || !w2.repeat_free())
    throw std::invalid_argument("fptus_multiply: words must be repeat-free");
  std::uint64_t in2 = 0;
  for (int x : w2.letters) in2 |= 1ull << x;
  std::vector<int> out;
  for (int x : w1.letters)
    if (!(in2 & (1ull << x))) out.push_back(x);
  out.insert(out.end(), w2.letters.begin(), w2.letters.end());
  return Word(std::move(out), w1.alphabet);
}

namespace detail {

inline FreeTable deletion_product_table(int n, bool with_unit) {
  std::vector<std::vector<int>> words;
  if (with_unit) words.push_back({});
  detail::arrangements(n, 1, n, words);

  FreeTable ft;
  ft.kind = with_unit ? FreeKind::fus : FreeKind::fptus;
  ft.alphabet = n;
  for (auto& w : words) ft.elements.emplace_back(w, n);
  ft.rebuild_index();

  const int count = static_cast<int>(words.size());
  std::vector<int> table(static_cast<std::size_t>(count) * count);
  for (int i = 0; i < count; ++i)
    for (int j = 0; j < count; ++j) {
      std::uint64_t in2 = 0;
      for (int x : words[j]) in2 |= 1ull << x;
      std::vector<int> prod;
      for (int x : words[i])
        if (!(in2 & (1ull << x))) prod.push_back(x);
      prod.insert(prod.end(), words[j].begin(), words[j].end());
      int idx = ft.index_of(Word(std::move(prod), n));
      if (idx < 0) throw std::logic_error("deletion product left the normal-form set");
      table[static_cast<std::size_t>(i) * count + j] = idx;
    }
  ft.table = FiniteMagma(count, std::move(table));
  AxiomReport ax = check_axioms(ft.table);
  if (with_unit ? !ax.unital : !ax.pre_unital)
    throw std::logic_error("deletion product table failed its axiom check");
  return ft;
}

}  // namespace detail

/// Free pre-unital shelf: all non-empty repeat-free words under the
/// deletion product. |fptus(n)| = b_n.
inline FreeTable fptus_build(int n) {
  if (n < 1 || n > 5) throw std::invalid_argument("fptus_build: n must be in 1..5");
  return detail::deletion_product_table(n, false);
}

/// Free unital shelf: fptus(n) plus the empty word as two-sided unit.
inline FreeTable fus_build(int n) {
  if (n < 1 || n > 5) throw std::invalid_argument("fus_build: n must be in 1..5");
  return detail::deletion_product_table(n, true);
}

/// b_0..b_nmax by the recursion b_n = n b_{n-1} + n.
inline std::vector<Int> b_sequence_recursion(int nmax) {
  std::vector<Int> b{0};
  for (int n = 1; n <= nmax; ++n) b.push_back(Int(n) * b[n - 1] + n);
  return b;
}

}  // namespace shelflab
