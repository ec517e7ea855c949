#include "sbq/cayley.hpp"

namespace sbq {

namespace {

// Row = first (left) factor, column = second (right) factor.
//   e0 is the identity, e_i^2 = -1 for 1 <= i <= 6, e7^2 = +1, e7 central.
constexpr CayleyTable canonical = {
    // sign[i][j]
    {{+1, +1, +1, +1, +1, +1, +1, +1},
     {+1, -1, +1, -1, -1, +1, +1, -1},
     {+1, -1, -1, +1, +1, +1, -1, -1},
     {+1, +1, -1, -1, +1, -1, +1, -1},
     {+1, +1, -1, +1, -1, -1, +1, -1},
     {+1, -1, +1, +1, +1, -1, -1, -1},
     {+1, +1, +1, -1, -1, +1, -1, -1},
     {+1, -1, -1, -1, -1, -1, -1, +1}},
    // index[i][j]
    {{0, 1, 2, 3, 4, 5, 6, 7},
     {1, 0, 3, 2, 5, 4, 7, 6},
     {2, 3, 0, 1, 6, 7, 4, 5},
     {3, 2, 1, 0, 7, 6, 5, 4},
     {4, 5, 6, 7, 0, 1, 2, 3},
     {5, 4, 7, 6, 1, 0, 3, 2},
     {6, 7, 4, 5, 2, 3, 0, 1},
     {7, 6, 5, 4, 3, 2, 1, 0}},
};

}  // namespace

const CayleyTable& cayley_table() noexcept { return canonical; }

Number mul(const Number& x, const Number& y, const CayleyTable& table) {
  Number::Coeffs z{};
  for (int i = 0; i < 8; ++i) {
    const double xi = x[static_cast<std::size_t>(i)];
    if (xi == 0.0) continue;
    for (int j = 0; j < 8; ++j) {
      z[table.index[i][j]] +=
          static_cast<double>(table.sign[i][j]) * xi * y[static_cast<std::size_t>(j)];
    }
  }
  return Number(z);
}

Number operator*(const Number& x, const Number& y) {
  return mul(x, y, canonical);
}

}  // namespace sbq
