#pragma once

#include <vector>

#include "lly/rational.hpp"

namespace lly::detail {

/// Rank of a rows x cols integer matrix (row-major) by fraction-free
/// Bareiss elimination. The matrix is consumed.
int exact_rank(std::vector<BigInt> m, int rows, int cols);

}  // namespace lly::detail
