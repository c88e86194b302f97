#pragma once

#include <cstddef>
#include <span>

namespace disbessel {

// Fixed-shape tree summation: the split point depends only on the length,
// so the rounding sequence is the same on every call.
template <typename Scalar>
Scalar pairwise_sum(std::span<const Scalar> terms) {
  switch (terms.size()) {
    case 0:
      return Scalar(0);
    case 1:
      return terms[0];
    case 2:
      return terms[0] + terms[1];
    default: {
      const std::size_t half = terms.size() / 2;
      return pairwise_sum(terms.first(half)) + pairwise_sum(terms.subspan(half));
    }
  }
}

}  // namespace disbessel
