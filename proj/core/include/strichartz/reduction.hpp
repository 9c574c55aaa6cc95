#pragma once

#include <cstddef>
#include <span>

namespace strichartz {

// Sum of f(i) for i in [begin, end) over a fixed binary tree. The tree only
// depends on the range, so results are bitwise reproducible.
template <class F>
auto pairwise_reduce(std::size_t begin, std::size_t end, F&& f) -> decltype(f(begin)) {
  using T = decltype(f(begin));
  const std::size_t n = end - begin;
  if (n <= 8) {
    T s{};
    for (std::size_t i = begin; i < end; ++i) s += f(i);
    return s;
  }
  const std::size_t mid = begin + n / 2;
  return pairwise_reduce(begin, mid, f) + pairwise_reduce(mid, end, f);
}

template <class T>
T pairwise_sum(std::span<const T> v) {
  return pairwise_reduce(0, v.size(), [&](std::size_t i) { return v[i]; });
}

}  // namespace strichartz
