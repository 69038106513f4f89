#include "oracles.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace oracle {

namespace {

using Bits = std::uint64_t;

Bits bit(int x) { return Bits{1} << x; }

void extend(int n, Table& t, std::vector<Table>& out) {
  const int r = static_cast<int>(t.size());
  if (r == n) {
    out.push_back(t);
    return;
  }
  std::vector<int> row(n);
  std::iota(row.begin(), row.end(), 0);
  // Permutations of 0..n-1 in lexicographic order; keep those starting with r.
  do {
    if (row[0] != r) continue;
    bool ok = true;
    for (int c = 0; c < n && ok; ++c)
      for (const auto& prev : t)
        if (prev[c] == row[c]) {
          ok = false;
          break;
        }
    if (!ok) continue;
    t.push_back(row);
    extend(n, t, out);
    t.pop_back();
  } while (std::next_permutation(row.begin(), row.end()));
}

Bits image(const Table& t, Bits s, int x, bool left) {
  Bits out = 0;
  for (int a = 0; a < static_cast<int>(t.size()); ++a)
    if (s & bit(a)) out |= bit(left ? t[x][a] : t[a][x]);
  return out;
}

}  // namespace

std::vector<Table> normalized_tables(int n) {
  std::vector<Table> out;
  Table t;
  std::vector<int> first(n);
  std::iota(first.begin(), first.end(), 0);
  t.push_back(first);
  if (n == 1) return {t};
  extend(n, t, out);
  return out;
}

bool isomorphic(const Table& a, const Table& b) {
  const int n = static_cast<int>(a.size());
  if (static_cast<int>(b.size()) != n) return false;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      for (int y = 0; y < n && ok; ++y) ok = p[a[x][y]] == b[p[x]][p[y]];
    if (ok) return true;
  } while (std::next_permutation(p.begin() + 1, p.end()));
  return false;
}

int ldiv(const Table& t, int a, int b) {
  for (int x = 0; x < static_cast<int>(t.size()); ++x)
    if (t[a][x] == b) return x;
  return -1;
}

int rdiv(const Table& t, int b, int a) {
  for (int y = 0; y < static_cast<int>(t.size()); ++y)
    if (t[y][a] == b) return y;
  return -1;
}

Bits closure(const Table& t, Bits s) {
  const int n = static_cast<int>(t.size());
  s |= 1;
  for (bool grew = true; grew;) {
    grew = false;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        if (!(s & bit(a)) || !(s & bit(b))) continue;
        const Bits add = bit(t[a][b]) | bit(ldiv(t, a, b)) | bit(rdiv(t, a, b));
        if (add & ~s) {
          s |= add;
          grew = true;
        }
      }
  }
  return s;
}

std::vector<Bits> subloops(const Table& t) {
  const int n = static_cast<int>(t.size());
  std::vector<Bits> out;
  for (Bits m = 1; m < (Bits{1} << n); m += 2)
    if (closure(t, m) == m) out.push_back(m);
  return out;
}

Bits left_nucleus(const Table& t) {
  const int n = static_cast<int>(t.size());
  Bits out = 0;
  for (int a = 0; a < n; ++a) {
    bool in = true;
    for (int x = 0; x < n && in; ++x)
      for (int y = 0; y < n && in; ++y) in = t[t[a][x]][y] == t[a][t[x][y]];
    if (in) out |= bit(a);
  }
  return out;
}

Bits middle_nucleus(const Table& t) {
  const int n = static_cast<int>(t.size());
  Bits out = 0;
  for (int a = 0; a < n; ++a) {
    bool in = true;
    for (int x = 0; x < n && in; ++x)
      for (int y = 0; y < n && in; ++y) in = t[t[x][a]][y] == t[x][t[a][y]];
    if (in) out |= bit(a);
  }
  return out;
}

Bits right_nucleus(const Table& t) {
  const int n = static_cast<int>(t.size());
  Bits out = 0;
  for (int a = 0; a < n; ++a) {
    bool in = true;
    for (int x = 0; x < n && in; ++x)
      for (int y = 0; y < n && in; ++y) in = t[t[x][y]][a] == t[x][t[y][a]];
    if (in) out |= bit(a);
  }
  return out;
}

Bits commutant(const Table& t) {
  const int n = static_cast<int>(t.size());
  Bits out = 0;
  for (int a = 0; a < n; ++a) {
    bool in = true;
    for (int x = 0; x < n && in; ++x) in = t[a][x] == t[x][a];
    if (in) out |= bit(a);
  }
  return out;
}

bool normal_by_cosets(const Table& t, Bits s) {
  const int n = static_cast<int>(t.size());
  for (int x = 0; x < n; ++x) {
    if (image(t, s, x, true) != image(t, s, x, false)) return false;
    for (int y = 0; y < n; ++y) {
      // (xS)y versus x(Sy)
      if (image(t, image(t, s, x, true), y, false) != image(t, image(t, s, y, false), x, true)) return false;
      // x(yS) versus (xy)S
      if (image(t, image(t, s, y, true), x, true) != image(t, s, t[x][y], true)) return false;
    }
  }
  return true;
}

bool normal_by_inner_closure(const Table& t, Bits s) {
  const int n = static_cast<int>(t.size());
  using P = std::vector<int>;
  std::vector<P> gens;
  for (int a = 0; a < n; ++a) {
    P l(n), r(n);
    for (int x = 0; x < n; ++x) {
      l[x] = t[a][x];
      r[x] = t[x][a];
    }
    gens.push_back(l);
    gens.push_back(r);
  }
  P id(n);
  std::iota(id.begin(), id.end(), 0);
  std::set<P> seen{id};
  std::vector<P> frontier{id};
  while (!frontier.empty()) {
    std::vector<P> next;
    for (const P& p : frontier)
      for (const P& g : gens) {
        P q(n);
        for (int x = 0; x < n; ++x) q[x] = g[p[x]];
        if (seen.insert(q).second) next.push_back(q);
      }
    frontier.swap(next);
  }
  for (const P& p : seen) {
    if (p[0] != 0) continue;
    for (int x = 0; x < n; ++x)
      if ((s & bit(x)) && !(s & bit(p[x]))) return false;
  }
  return true;
}

bool associative(const Table& t) {
  const int n = static_cast<int>(t.size());
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (t[t[x][y]][z] != t[x][t[y][z]]) return false;
  return true;
}

bool commutative(const Table& t) {
  const int n = static_cast<int>(t.size());
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < x; ++y)
      if (t[x][y] != t[y][x]) return false;
  return true;
}

std::string show(const Table& t) {
  std::string out;
  for (std::size_t r = 0; r < t.size(); ++r) {
    if (r) out += "/";
    for (std::size_t c = 0; c < t[r].size(); ++c) {
      if (c) out += " ";
      out += std::to_string(t[r][c]);
    }
  }
  return out;
}

}  // namespace oracle
