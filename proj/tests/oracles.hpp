#pragma once

// Brute-force reference implementations used as test oracles. They work on
// plain row vectors and share no code with the library.

#include <cstdint>
#include <string>
#include <vector>

namespace oracle {

using Table = std::vector<std::vector<int>>;  // 0-based, identity at 0

// Every n x n Latin square with row 0 and column 0 equal to 0..n-1, built
// row by row from whole permutations. Lexicographic row-major order.
std::vector<Table> normalized_tables(int n);

// Bijections fixing 0 are tried one by one.
bool isomorphic(const Table& a, const Table& b);

int ldiv(const Table& t, int a, int b);  // a\b
int rdiv(const Table& t, int b, int a);  // b/a

// Least superset of s and {0} closed under the three operations, as a mask.
std::uint64_t closure(const Table& t, std::uint64_t s);
// Every mask that is closed under the three operations and contains 0.
std::vector<std::uint64_t> subloops(const Table& t);

std::uint64_t left_nucleus(const Table& t);
std::uint64_t middle_nucleus(const Table& t);
std::uint64_t right_nucleus(const Table& t);
std::uint64_t commutant(const Table& t);

// xS = Sx, (xS)y = x(Sy) and x(yS) = (xy)S for all x, y.
bool normal_by_cosets(const Table& t, std::uint64_t s);
// Closes the multiplication group and tests every permutation fixing 0.
// Only for small orders.
bool normal_by_inner_closure(const Table& t, std::uint64_t s);

bool associative(const Table& t);
bool commutative(const Table& t);

// Rows rendered as "0 1 2/1 0 2/..." for failure messages.
std::string show(const Table& t);

}  // namespace oracle
