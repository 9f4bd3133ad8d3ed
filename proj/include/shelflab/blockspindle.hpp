#pragma once

// f-block spindles: a disjoint union of blocks X_i with self-maps f_i,
// multiplied by x*y = y inside a block and f_j(y) across blocks.

#include "shelflab/homology.hpp"
#include "shelflab/magma.hpp"

#include <algorithm>
#include <istream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace shelflab {

struct BlockSpec {
  struct Block {
    int size = 0;
    std::vector<int> f;  // self-map on [0, size)
  };
  std::vector<Block> blocks;

  int total() const {
    int t = 0;
    for (const auto& b : blocks) t += b.size;
    return t;
  }
  bool has_singleton() const {
    for (const auto& b : blocks)
      if (b.size == 1) return true;
    return false;
  }
};

/// Blocks are laid out consecutively in specification order. The result is
/// checked to be a spindle (idempotent right self-distributive table).
inline FiniteMagma make_block_spindle(const BlockSpec& spec) {
  if (spec.blocks.empty()) throw std::invalid_argument("block spindle: need at least one block");
  int total = 0;
  for (std::size_t i = 0; i < spec.blocks.size(); ++i) {
    const auto& b = spec.blocks[i];
    if (b.size < 1) throw std::invalid_argument("block spindle: block sizes must be positive");
    if (static_cast<int>(b.f.size()) != b.size)
      throw std::invalid_argument("block spindle: block " + std::to_string(i) +
                                  " function arity mismatch");
    for (int v : b.f)
      if (v < 0 || v >= b.size)
        throw std::invalid_argument("block spindle: block " + std::to_string(i) +
                                    " function value out of the block");
    total += b.size;
  }
  if (total > 64) throw std::invalid_argument("block spindle: total size must be <= 64");

  std::vector<int> base(spec.blocks.size()), block_of(total), offset_of(total);
  {
    int acc = 0;
    for (std::size_t i = 0; i < spec.blocks.size(); ++i) {
      base[i] = acc;
      for (int p = 0; p < spec.blocks[i].size; ++p) {
        block_of[acc + p] = static_cast<int>(i);
        offset_of[acc + p] = p;
      }
      acc += spec.blocks[i].size;
    }
  }

  std::vector<int> t(static_cast<std::size_t>(total) * total);
  for (int x = 0; x < total; ++x)
    for (int y = 0; y < total; ++y) {
      int i = block_of[x], j = block_of[y];
      t[static_cast<std::size_t>(x) * total + y] =
          (i == j) ? y : base[j] + spec.blocks[j].f[offset_of[y]];
    }
  FiniteMagma m(total, std::move(t));
  AxiomReport ax = check_axioms(m);
  if (!ax.spindle) throw std::logic_error("block spindle construction is not a spindle");
  return m;
}

// Text format: one line per block, "size: f(0) f(1) ... f(size-1)".
inline BlockSpec parse_block_spec(std::istream& in) {
  BlockSpec spec;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t i = line.find_first_not_of(" \t\r");
    if (i == std::string::npos || line[i] == '#') continue;
    std::size_t colon = line.find(':');
    if (colon == std::string::npos)
      throw std::invalid_argument("block spec: line " + std::to_string(lineno) +
                                  ": expected \"size: values\"");
    BlockSpec::Block b;
    try {
      b.size = std::stoi(line.substr(0, colon));
    } catch (...) {
      throw std::invalid_argument("block spec: line " + std::to_string(lineno) +
                                  ": bad block size");
    }
    std::istringstream ss(line.substr(colon + 1));
    int v;
    while (ss >> v) b.f.push_back(v);
    if (static_cast<int>(b.f.size()) != b.size)
      throw std::invalid_argument("block spec: line " + std::to_string(lineno) + ": expected " +
                                  std::to_string(b.size) + " function values");
    spec.blocks.push_back(std::move(b));
  }
  if (spec.blocks.empty()) throw std::invalid_argument("block spec: no blocks");
  return spec;
}

inline std::string block_spec_to_string(const BlockSpec& spec) {
  std::string s;
  for (const auto& b : spec.blocks) {
    s += std::to_string(b.size) + ":";
    for (int v : b.f) s += " " + std::to_string(v);
    s += "\n";
  }
  return s;
}

// --- scanning ---------------------------------------------------------------

struct SpindleScanEntry {
  BlockSpec spec;
  HomologyGroup one_term_h2;
  bool torsion_found = false;
  bool singleton_checked = false;   // two-term H_q = Z confirmed for q <= 2
};

struct SpindleScanReport {
  std::vector<SpindleScanEntry> entries;
  std::vector<std::size_t> torsion_indices;
  bool all_singleton_two_term_z = true;
};

/// Computes one-term H_2 for every spec, reporting all torsion found, and
/// confirms H_q^R = Z for q <= 2 whenever the spec has a singleton block
/// (a right zero exists there, so the identity is expected to hold).
inline SpindleScanReport torsion_witness_scan(const std::vector<BlockSpec>& specs) {
  SpindleScanReport rep;
  for (const BlockSpec& spec : specs) {
    if (spec.total() > 8)
      throw std::invalid_argument("torsion_witness_scan: total size must be <= 8");
    FiniteMagma m = make_block_spindle(spec);
    SpindleScanEntry e;
    e.spec = spec;
    e.one_term_h2 = homology(m, Theory::one_term, 2);
    e.torsion_found = !e.one_term_h2.torsion.empty();
    if (spec.has_singleton()) {
      e.singleton_checked = true;
      for (int q = 0; q <= 2; ++q) {
        HomologyGroup h = homology(m, Theory::two_term, q);
        if (h.free_rank != 1 || !h.torsion.empty()) {
          rep.all_singleton_two_term_z = false;
          e.singleton_checked = false;
        }
      }
    }
    if (e.torsion_found) rep.torsion_indices.push_back(rep.entries.size());
    rep.entries.push_back(std::move(e));
  }
  return rep;
}

/// Self-maps of [0, k) up to conjugation by permutations of the block.
inline std::vector<std::vector<int>> self_maps_up_to_conjugacy(int k) {
  if (k < 1 || k > 5) throw std::invalid_argument("self_maps_up_to_conjugacy: k must be in 1..5");
  std::set<std::vector<int>> canon;
  std::vector<int> f(k), perm(k);
  std::size_t count = 1;
  for (int i = 0; i < k; ++i) count *= static_cast<std::size_t>(k);
  for (std::size_t code = 0; code < count; ++code) {
    std::size_t c = code;
    for (int i = 0; i < k; ++i) {
      f[i] = static_cast<int>(c % k);
      c /= k;
    }
    std::vector<int> best;
    for (int i = 0; i < k; ++i) perm[i] = i;
    do {
      std::vector<int> g(k);
      for (int i = 0; i < k; ++i) g[perm[i]] = perm[f[i]];
      if (best.empty() || g < best) best = g;
    } while (std::next_permutation(perm.begin(), perm.end()));
    canon.insert(best);
  }
  return {canon.begin(), canon.end()};
}

/// Every spec of total size <= max_total containing a singleton block, with
/// block sizes non-increasing and block functions taken up to conjugacy.
inline std::vector<BlockSpec> singleton_block_specs(int max_total) {
  if (max_total < 1 || max_total > 6)
    throw std::invalid_argument("singleton_block_specs: max_total must be in 1..6");
  std::vector<BlockSpec> out;
  std::vector<int> sizes;
  auto emit = [&]() {
    if (std::find(sizes.begin(), sizes.end(), 1) == sizes.end()) return;
    // combine function choices per block
    std::vector<std::vector<std::vector<int>>> choices;
    for (int s : sizes) choices.push_back(self_maps_up_to_conjugacy(s));
    std::vector<std::size_t> pick(sizes.size(), 0);
    for (;;) {
      BlockSpec spec;
      for (std::size_t i = 0; i < sizes.size(); ++i)
        spec.blocks.push_back({sizes[i], choices[i][pick[i]]});
      out.push_back(std::move(spec));
      std::size_t i = 0;
      while (i < pick.size() && ++pick[i] == choices[i].size()) pick[i++] = 0;
      if (i == pick.size()) break;
    }
  };
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (!sizes.empty()) emit();
    for (int s = std::min(remaining, max_part); s >= 1; --s) {
      sizes.push_back(s);
      self(self, remaining - s, s);
      sizes.pop_back();
    }
  };
  rec(rec, max_total, max_total);
  return out;
}

}  // namespace shelflab
