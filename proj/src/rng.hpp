#ifndef PIMETRIC_SRC_RNG_HPP
#define PIMETRIC_SRC_RNG_HPP

#include <cstdint>
#include <random>
#include <span>
#include <utility>

namespace pimetric::detail
{

// std::mt19937_64 output is fixed by the standard, but the standard
// distributions and std::shuffle are not. These two helpers keep seeded
// streams identical across standard library implementations.

inline std::uint64_t uniform_below(std::mt19937_64 &rng, std::uint64_t bound)
{
  std::uint64_t const limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

template<typename T>
void fisher_yates(std::mt19937_64 &rng, std::span<T> items)
{
  for (std::size_t i = items.size(); i > 1; --i) {
    auto j = static_cast<std::size_t>(uniform_below(rng, i));
    std::swap(items[i - 1], items[j]);
  }
}

} // namespace pimetric::detail

#endif // PIMETRIC_SRC_RNG_HPP
