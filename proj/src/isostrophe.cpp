#include "qloop/isostrophe.hpp"

#include "qloop/error.hpp"

namespace qloop {

LoopTable principal_isostrophe(const LoopTable& q, Side side) {
  const int n = q.order();
  std::vector<std::uint8_t> t(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const Element v = side == Side::Right ? q.rdiv(x, q.right_inv(y)) : q.ldiv(q.left_inv(x), y);
      t[x * n + y] = static_cast<std::uint8_t>(v);
    }
  const char* suffix = side == Side::Right ? "^o" : "^*";
  return LoopTable::from_cells(n, t, q.name().empty() ? "" : q.name() + suffix);
}

IsostropheDivisions isostrophe_divisions(const LoopTable& q) {
  const int n = q.order();
  const LoopTable circ = principal_isostrophe(q, Side::Right);
  IsostropheDivisions d{std::vector<Element>(n * n), std::vector<Element>(n * n)};
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      d.ldiv[x * n + y] = q.left_inv(q.ldiv(y, x));
      d.rdiv[x * n + y] = q.mul(x, q.right_inv(y));
      if (d.ldiv[x * n + y] != circ.ldiv(x, y) || d.rdiv[x * n + y] != circ.rdiv(x, y))
        throw Error(ErrorKind::InternalInconsistency,
                    "isostrophe division mismatch at (" + std::to_string(x) + "," + std::to_string(y) + ")");
    }
  return d;
}

}  // namespace qloop
