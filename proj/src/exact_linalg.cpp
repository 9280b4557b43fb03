#include "exact_linalg.hpp"

#include <utility>

#include "lly/error.hpp"

namespace lly::detail {

int exact_rank(std::vector<BigInt> m, int rows, int cols) {
  if (static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols) != m.size()) {
    throw InternalError("exact_rank: matrix shape mismatch");
  }
  auto at = [&](int r, int c) -> BigInt& { return m[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols) + static_cast<std::size_t>(c)]; };
  BigInt prev = 1;
  BigInt t;
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r) {
      if (sgn(at(r, col)) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != rank) {
      for (int c = col; c < cols; ++c) std::swap(at(pivot, c), at(rank, c));
    }
    const BigInt& p = at(rank, col);
    bool rest_nonzero = false;
    for (int r = rank + 1; r < rows; ++r) {
      const BigInt& lead = at(r, col);
      for (int c = col + 1; c < cols; ++c) {
        BigInt& x = at(r, c);
        // x = (x * p - lead * at(rank, c)) / prev, exact by Sylvester's identity.
        mpz_mul(t.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t());
        mpz_submul(t.get_mpz_t(), lead.get_mpz_t(), at(rank, c).get_mpz_t());
        mpz_divexact(x.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        if (!rest_nonzero && sgn(x) != 0) rest_nonzero = true;
      }
      at(r, col) = 0;
    }
    prev = p;
    ++rank;
    if (!rest_nonzero) break;
  }
  return rank;
}

}  // namespace lly::detail
