#pragma once

/// @file certify_kernels.hpp
/// Subset sums of k exact translation numbers, sorted exactly.
///
/// Entry eps (bit j-1 = epsilon_j) holds sum_{j : eps_j = 1} tau_j. The order is by exact
/// value with ties broken by eps, so both kernels return identical arrays.

#include <cstdint>
#include <vector>

#include "rigid1d/enclosure.hpp"
#include "rigid1d/quad.hpp"

namespace rigid1d {

struct SortedSums {
  std::vector<std::uint32_t> eps;  ///< epsilon bit vectors in increasing value order
  std::vector<QuadVal> value;      ///< matching exact sums
};

/// Largest k accepted by the kernels.
inline constexpr int kMaxCertifyK = 24;

/// Reference kernel: dynamic-programming sums followed by one std::sort.
SortedSums subset_sums_sorted_serial(const std::vector<QuadVal>& taus);

/// OpenMP kernel: the eps range is split by high bits, each chunk is summed and sorted on
/// its own thread, then chunks are merged pairwise. threads <= 0 uses the OpenMP default.
SortedSums subset_sums_sorted_parallel(const std::vector<QuadVal>& taus, int threads = 0);

}  // namespace rigid1d
