#pragma once

#include <string>
#include <vector>

#include "oracles.hpp"
#include "qloop/io.hpp"
#include "qloop/loop.hpp"

#ifndef QLOOP_FIXTURE_DIR
#define QLOOP_FIXTURE_DIR "fixtures"
#endif

namespace testing_support {

inline qloop::LoopTable fixture(const std::string& stem) {
  return qloop::load_loop(std::string(QLOOP_FIXTURE_DIR) + "/" + stem + ".loop").loop;
}

inline qloop::LoopTable cyclic(int n) {
  std::vector<std::vector<int>> rows(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) rows[i][j] = (i + j) % n;
  return qloop::LoopTable::from_rows(rows);
}

// Z_2^k with XOR.
inline qloop::LoopTable elementary_abelian(int k) {
  const int n = 1 << k;
  std::vector<std::vector<int>> rows(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) rows[i][j] = i ^ j;
  return qloop::LoopTable::from_rows(rows);
}

// S_3 as permutations of {0,1,2} in lexicographic order, identity first.
inline qloop::LoopTable symmetric3() {
  const std::vector<std::vector<int>> perms = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  std::vector<std::vector<int>> rows(6, std::vector<int>(6));
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      std::vector<int> c(3);
      for (int x = 0; x < 3; ++x) c[x] = perms[i][perms[j][x]];
      for (int k = 0; k < 6; ++k)
        if (perms[k] == c) rows[i][j] = k;
    }
  return qloop::LoopTable::from_rows(rows);
}

inline oracle::Table rows_of(const qloop::LoopTable& q) { return q.rows(0); }

}  // namespace testing_support
