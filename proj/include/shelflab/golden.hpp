#pragma once

// Golden reference data the verification suite reproduces: the published
// free-structure multiplication tables, the Laver tables A_2..A_4, the
// worked example magmas, and the eight order-4 shelves T_1..T_8 with their
// known homology groups.

#include "shelflab/magma.hpp"

#include <vector>

namespace shelflab::golden {

// Free associative shelf on two letters: 18 normal forms in the published
// order, and the product table over those indices.
inline const std::vector<std::vector<int>> kFas2Words = {
    {0},       {1},       {0, 1},    {1, 0},    {0, 0},       {1, 1},
    {1, 1, 1}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}, {0, 0, 1},    {0, 1, 0},
    {1, 0, 0}, {0, 0, 0}, {1, 0, 1, 1}, {0, 1, 0, 0}, {0, 0, 1, 1}, {1, 1, 0, 0}};

inline const int kFas2Products[18][18] = {
    {4, 2, 10, 11, 13, 7, 7, 16, 10, 11, 10, 11, 15, 13, 16, 15, 16, 15},
    {3, 5, 8, 9, 12, 6, 6, 14, 8, 9, 8, 9, 17, 12, 14, 17, 14, 17},
    {11, 7, 10, 11, 15, 7, 7, 16, 10, 11, 10, 11, 15, 15, 16, 15, 16, 15},
    {12, 8, 8, 9, 12, 14, 14, 14, 8, 9, 8, 9, 17, 12, 14, 17, 14, 17},
    {13, 10, 10, 11, 13, 16, 16, 16, 10, 11, 10, 11, 15, 13, 16, 15, 16, 15},
    {9, 6, 8, 9, 17, 6, 6, 14, 8, 9, 8, 9, 17, 17, 14, 17, 14, 17},
    {9, 6, 8, 9, 17, 6, 6, 14, 8, 9, 8, 9, 17, 17, 14, 17, 14, 17},
    {11, 7, 10, 11, 15, 7, 7, 16, 10, 11, 10, 11, 15, 15, 16, 15, 16, 15},
    {9, 14, 8, 9, 17, 14, 14, 14, 8, 9, 8, 9, 17, 17, 14, 17, 14, 17},
    {17, 8, 8, 9, 17, 14, 14, 14, 8, 9, 8, 9, 17, 17, 14, 17, 14, 17},
    {11, 16, 10, 11, 15, 16, 16, 16, 10, 11, 10, 11, 15, 15, 16, 15, 16, 15},
    {15, 10, 10, 11, 15, 16, 16, 16, 10, 11, 10, 11, 15, 15, 16, 15, 16, 15},
    {12, 8, 8, 9, 12, 14, 14, 14, 8, 9, 8, 9, 17, 12, 14, 17, 14, 17},
    {13, 10, 10, 11, 13, 16, 16, 16, 10, 11, 10, 11, 15, 13, 16, 15, 16, 15},
    {9, 14, 8, 9, 17, 14, 14, 14, 8, 9, 8, 9, 17, 17, 14, 17, 14, 17},
    {15, 10, 10, 11, 15, 16, 16, 16, 10, 11, 10, 11, 15, 15, 16, 15, 16, 15},
    {11, 16, 10, 11, 15, 16, 16, 16, 10, 11, 10, 11, 15, 15, 16, 15, 16, 15},
    {17, 8, 8, 9, 17, 14, 14, 14, 8, 9, 8, 9, 17, 17, 14, 17, 14, 17}};

// Free proto-unital shelf on two letters: elements a, a^2, ab, b, b^2, ba.
inline const std::vector<std::vector<int>> kFpus2Words = {
    {0}, {0, 0}, {0, 1}, {1}, {1, 1}, {1, 0}};

inline const int kFpus2Products[6][6] = {
    {1, 1, 2, 2, 2, 5},
    {1, 1, 2, 2, 2, 5},
    {5, 5, 2, 2, 2, 5},
    {5, 5, 2, 4, 4, 5},
    {5, 5, 2, 4, 4, 5},
    {5, 5, 2, 2, 2, 5}};

// Free pre-unital shelf on two letters: elements a, b, ab, ba.
inline const std::vector<std::vector<int>> kFptus2Words = {{0}, {1}, {0, 1}, {1, 0}};

inline const int kFptus2Products[4][4] = {
    {0, 2, 2, 3},
    {3, 1, 2, 3},
    {3, 2, 2, 3},
    {3, 2, 2, 3}};

// Laver tables, 1-indexed values as usually printed.
inline const int kLaverA2[4][4] = {
    {2, 4, 2, 4},
    {3, 4, 3, 4},
    {4, 4, 4, 4},
    {1, 2, 3, 4}};

inline const int kLaverA3[8][8] = {
    {2, 4, 6, 8, 2, 4, 6, 8},
    {3, 4, 7, 8, 3, 4, 7, 8},
    {4, 8, 4, 8, 4, 8, 4, 8},
    {5, 6, 7, 8, 5, 6, 7, 8},
    {6, 8, 6, 8, 6, 8, 6, 8},
    {7, 8, 7, 8, 7, 8, 7, 8},
    {8, 8, 8, 8, 8, 8, 8, 8},
    {1, 2, 3, 4, 5, 6, 7, 8}};

inline const int kLaverA4[16][16] = {
    {2, 12, 14, 16, 2, 12, 14, 16, 2, 12, 14, 16, 2, 12, 14, 16},
    {3, 12, 15, 16, 3, 12, 15, 16, 3, 12, 15, 16, 3, 12, 15, 16},
    {4, 8, 12, 16, 4, 8, 12, 16, 4, 8, 12, 16, 4, 8, 12, 16},
    {5, 6, 7, 8, 13, 14, 15, 16, 5, 6, 7, 8, 13, 14, 15, 16},
    {6, 8, 14, 16, 6, 8, 14, 16, 6, 8, 14, 16, 6, 8, 14, 16},
    {7, 8, 15, 16, 7, 8, 15, 16, 7, 8, 15, 16, 7, 8, 15, 16},
    {8, 16, 8, 16, 8, 16, 8, 16, 8, 16, 8, 16, 8, 16, 8, 16},
    {9, 10, 11, 12, 13, 14, 15, 16, 9, 10, 11, 12, 13, 14, 15, 16},
    {10, 12, 14, 16, 10, 12, 14, 16, 10, 12, 14, 16, 10, 12, 14, 16},
    {11, 12, 15, 16, 11, 12, 15, 16, 11, 12, 15, 16, 11, 12, 15, 16},
    {12, 16, 12, 16, 12, 16, 12, 16, 12, 16, 12, 16, 12, 16, 12, 16},
    {13, 14, 15, 16, 13, 14, 15, 16, 13, 14, 15, 16, 13, 14, 15, 16},
    {14, 16, 14, 16, 14, 16, 14, 16, 14, 16, 14, 16, 14, 16, 14, 16},
    {15, 16, 15, 16, 15, 16, 15, 16, 15, 16, 15, 16, 15, 16, 15, 16},
    {16, 16, 16, 16, 16, 16, 16, 16, 16, 16, 16, 16, 16, 16, 16, 16},
    {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16}};

inline FiniteMagma laver_reference(int k) {
  std::vector<int> t;
  if (k == 2) {
    for (auto& row : kLaverA2)
      for (int v : row) t.push_back(v - 1);
    return FiniteMagma(4, std::move(t));
  }
  if (k == 3) {
    for (auto& row : kLaverA3)
      for (int v : row) t.push_back(v - 1);
    return FiniteMagma(8, std::move(t));
  }
  for (auto& row : kLaverA4)
    for (int v : row) t.push_back(v - 1);
  return FiniteMagma(16, std::move(t));
}

// Worked example magmas.
inline FiniteMagma associative_spindle_example() {  // spindle, not a quandle
  return FiniteMagma(4, {0, 0, 2, 3,
                         0, 1, 2, 3,
                         0, 0, 2, 3,
                         0, 3, 2, 3});
}

inline FiniteMagma quasigroup_example() {
  return FiniteMagma(4, {0, 2, 3, 1,
                         3, 1, 0, 2,
                         1, 3, 2, 0,
                         2, 0, 1, 3});
}

inline FiniteMagma assoc_shelf_right_zeros_not_proto_unital() {
  return FiniteMagma(4, {0, 0, 2, 3,
                         0, 0, 2, 3,
                         0, 0, 2, 3,
                         0, 2, 2, 3});
}

// Order-4 associative shelves with known homology, T_1..T_8.
inline FiniteMagma t1() {
  return FiniteMagma(4, {0, 0, 0, 0,
                         0, 1, 1, 1,
                         0, 1, 2, 2,
                         0, 1, 2, 3});
}
inline FiniteMagma t2() {
  return FiniteMagma(4, {0, 0, 0, 0,
                         0, 0, 0, 0,
                         0, 0, 0, 0,
                         3, 3, 3, 3});
}
inline FiniteMagma t3() {
  return FiniteMagma(4, {0, 0, 0, 0,
                         0, 0, 0, 0,
                         2, 2, 2, 2,
                         3, 3, 3, 3});
}
inline FiniteMagma t4() {  // left projection x*y = x
  return FiniteMagma(4, {0, 0, 0, 0,
                         1, 1, 1, 1,
                         2, 2, 2, 2,
                         3, 3, 3, 3});
}
inline FiniteMagma t5() {
  return FiniteMagma(4, {0, 0, 0, 3,
                         0, 0, 0, 3,
                         0, 0, 2, 3,
                         0, 0, 3, 3});
}
inline FiniteMagma t6() {
  return FiniteMagma(4, {0, 0, 2, 2,
                         1, 1, 3, 3,
                         0, 0, 2, 2,
                         1, 1, 3, 3});
}
inline FiniteMagma t7() {
  return FiniteMagma(4, {0, 0, 2, 3,
                         0, 1, 2, 3,
                         0, 0, 2, 3,
                         0, 0, 2, 3});
}
inline FiniteMagma t8() {  // right projection x*y = y
  return FiniteMagma(4, {0, 1, 2, 3,
                         0, 1, 2, 3,
                         0, 1, 2, 3,
                         0, 1, 2, 3});
}

// Known homology free ranks for q = 0, 1, 2 (all groups are torsion-free).
inline const long kOneTermRanks[4][3] = {
    {1, 0, 0},    // T_5
    {2, 4, 16},   // T_6
    {3, 8, 32},   // T_7
    {4, 12, 48}}; // T_8

inline const long kTwoTermRanks[4][3] = {
    {1, 1, 1},    // T_1
    {2, 4, 8},    // T_2
    {3, 9, 27},   // T_3
    {4, 16, 64}}; // T_4

}  // namespace shelflab::golden
