#include "rigid1d/certify_kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace rigid1d {

namespace {

void check_k(const std::vector<QuadVal>& taus) {
  if (taus.size() > static_cast<std::size_t>(kMaxCertifyK))
    throw std::invalid_argument("subset sums: k = " + std::to_string(taus.size()) + " exceeds " +
                                std::to_string(kMaxCertifyK));
}

/// Exact order with a certified floating-point shortcut; ties broken by eps.
struct ValueOrder {
  const std::vector<QuadVal>* values;
  const std::vector<Enclosure>* boxes;

  bool operator()(std::uint32_t i, std::uint32_t j) const {
    const Enclosure& a = (*boxes)[i];
    const Enclosure& b = (*boxes)[j];
    if (certainly_lt(a, b)) return true;
    if (certainly_lt(b, a)) return false;
    const auto c = (*values)[i] <=> (*values)[j];
    if (c != 0) return c < 0;
    return i < j;
  }
};

SortedSums collect(std::vector<std::uint32_t> order, std::vector<QuadVal>& values) {
  SortedSums out;
  out.value.reserve(order.size());
  for (std::uint32_t e : order) out.value.push_back(std::move(values[e]));
  out.eps = std::move(order);
  return out;
}

}  // namespace

SortedSums subset_sums_sorted_serial(const std::vector<QuadVal>& taus) {
  check_k(taus);
  const std::size_t n = std::size_t{1} << taus.size();
  std::vector<QuadVal> values(n);
  std::vector<Enclosure> boxes(n);
  boxes[0] = Enclosure(0.0);
  for (std::size_t e = 1; e < n; ++e) {
    const int low = std::countr_zero(e);
    values[e] = values[e & (e - 1)] + taus[static_cast<std::size_t>(low)];
    boxes[e] = Enclosure::of(values[e]);
  }
  std::vector<std::uint32_t> order(n);
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(), ValueOrder{&values, &boxes});
  return collect(std::move(order), values);
}

SortedSums subset_sums_sorted_parallel(const std::vector<QuadVal>& taus, int threads) {
  check_k(taus);
  const int k = static_cast<int>(taus.size());
  const std::size_t n = std::size_t{1} << k;
  const int nthreads = threads > 0 ? threads : omp_get_max_threads();
  // Chunks are aligned blocks of 2^low_bits consecutive eps values.
  int chunk_bits = 0;
  while ((std::size_t{1} << chunk_bits) < static_cast<std::size_t>(4 * nthreads) && chunk_bits < k) ++chunk_bits;
  const int low_bits = k - chunk_bits;
  const std::size_t chunk = std::size_t{1} << low_bits;
  const std::size_t chunks = std::size_t{1} << chunk_bits;

  std::vector<QuadVal> low(chunk);
  for (std::size_t e = 1; e < chunk; ++e) low[e] = low[e & (e - 1)] + taus[static_cast<std::size_t>(std::countr_zero(e))];

  std::vector<QuadVal> values(n);
  std::vector<Enclosure> boxes(n);
  std::vector<std::uint32_t> order(n);
  const ValueOrder cmp{&values, &boxes};

#pragma omp parallel for schedule(dynamic, 1) num_threads(nthreads)
  for (std::size_t c = 0; c < chunks; ++c) {
    QuadVal base;
    for (int b = 0; b < chunk_bits; ++b)
      if ((c >> b) & 1u) base += taus[static_cast<std::size_t>(low_bits + b)];
    const std::size_t first = c * chunk;
    for (std::size_t e = 0; e < chunk; ++e) {
      values[first + e] = base + low[e];
      boxes[first + e] = Enclosure::of(values[first + e]);
      order[first + e] = static_cast<std::uint32_t>(first + e);
    }
    std::sort(order.begin() + static_cast<std::ptrdiff_t>(first),
              order.begin() + static_cast<std::ptrdiff_t>(first + chunk), cmp);
  }

  for (std::size_t width = chunk; width < n; width *= 2) {
    const std::size_t pairs = n / (2 * width);
#pragma omp parallel for schedule(dynamic, 1) num_threads(nthreads)
    for (std::size_t p = 0; p < pairs; ++p) {
      const auto first = order.begin() + static_cast<std::ptrdiff_t>(2 * p * width);
      std::inplace_merge(first, first + static_cast<std::ptrdiff_t>(width), first + static_cast<std::ptrdiff_t>(2 * width),
                         cmp);
    }
  }
  return collect(std::move(order), values);
}

}  // namespace rigid1d
