#pragma once

#include <cstdint>

#include "sbq/number.hpp"

namespace sbq {

/**
 * Structure constants of the algebra: e_i * e_j = sign[i][j] * e_index[i][j].
 *
 * The canonical table encodes the full 8x8 multiplication table (row = left
 * factor, column = right factor). It is kept as data rather than baked into
 * the product kernel so that tests can run the verification suite against a
 * deliberately corrupted copy (mutation testing).
 */
struct CayleyTable {
  std::int8_t sign[8][8];
  std::uint8_t index[8][8];
};

/// The canonical multiplication table.
const CayleyTable& cayley_table() noexcept;

/// Product of x and y under an explicit structure-constants table.
/// With cayley_table() this is exactly operator*.
Number mul(const Number& x, const Number& y, const CayleyTable& table);

}  // namespace sbq
