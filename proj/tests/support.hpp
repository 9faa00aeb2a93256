#ifndef PIMETRIC_TESTS_SUPPORT_HPP
#define PIMETRIC_TESTS_SUPPORT_HPP

// Test-only reference routines. They work on raw coordinate vectors and do
// not go through the library's block/index machinery.

#include <cstdint>
#include <string>
#include <vector>

#include "pimetric/pispace.hpp"
#include "pimetric/symmetry.hpp"

namespace pimetric::testing
{

inline Space space(unsigned q, std::string const &pi)
{
  return Space(Field::make(q), Partition::parse(pi));
}

inline std::vector<unsigned> coords_of(std::uint64_t index, unsigned q, unsigned n)
{
  std::vector<unsigned> c(n);
  for (unsigned j = n; j-- > 0;) {
    c[j] = static_cast<unsigned>(index % q);
    index /= q;
  }
  return c;
}

inline std::uint64_t index_of(std::vector<unsigned> const &c, unsigned q)
{
  std::uint64_t x = 0;
  for (unsigned v : c)
    x = x * q + v;
  return x;
}

/// Table of v -> sigma . v, moving coordinates block by block:
/// (sigma . v)_j = v_{sigma^{-1}(j)}.
inline std::vector<std::uint32_t> permutation_table(Space const &s,
                                                    std::vector<unsigned> const &sigma)
{
  auto const &pi = s.partition();
  std::uint64_t size = s.size();
  std::vector<std::uint32_t> table(size);
  for (std::uint64_t v = 0; v < size; ++v) {
    auto c = coords_of(v, s.q(), s.n());
    std::vector<unsigned> out(s.n());
    for (unsigned i = 0; i < pi.m(); ++i) {
      for (unsigned t = 0; t < pi.block(i); ++t)
        out[pi.offset(sigma[i]) + t] = c[pi.offset(i) + t];
    }
    table[v] = static_cast<std::uint32_t>(index_of(out, s.q()));
  }
  return table;
}

/// Table of v -> (T_1(v_1), ..., T_m(v_m)), block tables indexed by the
/// lexicographic index of the block's coordinates.
inline std::vector<std::uint32_t>
blockwise_table(Space const &s, std::vector<std::vector<std::uint32_t>> const &tables)
{
  auto const &pi = s.partition();
  std::uint64_t size = s.size();
  std::vector<std::uint32_t> table(size);
  for (std::uint64_t v = 0; v < size; ++v) {
    auto c = coords_of(v, s.q(), s.n());
    std::vector<unsigned> out(s.n());
    for (unsigned i = 0; i < pi.m(); ++i) {
      std::vector<unsigned> block(c.begin() + pi.offset(i),
                                  c.begin() + pi.offset(i) + pi.block(i));
      auto image = coords_of(tables[i][index_of(block, s.q())], s.q(), pi.block(i));
      for (unsigned t = 0; t < pi.block(i); ++t)
        out[pi.offset(i) + t] = image[t];
    }
    table[v] = static_cast<std::uint32_t>(index_of(out, s.q()));
  }
  return table;
}

inline std::vector<std::uint32_t> compose(std::vector<std::uint32_t> const &f,
                                          std::vector<std::uint32_t> const &g)
{
  std::vector<std::uint32_t> out(g.size());
  for (std::size_t v = 0; v < g.size(); ++v)
    out[v] = f[g[v]];
  return out;
}

inline std::vector<std::uint32_t> inverse(std::vector<std::uint32_t> const &f)
{
  std::vector<std::uint32_t> out(f.size());
  for (std::size_t v = 0; v < f.size(); ++v)
    out[f[v]] = static_cast<std::uint32_t>(v);
  return out;
}

/// Count of differing blocks straight from coordinates.
inline unsigned block_distance(Space const &s, std::uint64_t u, std::uint64_t v)
{
  auto const &pi = s.partition();
  auto a = coords_of(u, s.q(), s.n());
  auto b = coords_of(v, s.q(), s.n());
  unsigned d = 0;
  for (unsigned i = 0; i < pi.m(); ++i) {
    bool differ = false;
    for (unsigned t = 0; t < pi.block(i); ++t)
      differ |= a[pi.offset(i) + t] != b[pi.offset(i) + t];
    d += differ;
  }
  return d;
}

} // namespace pimetric::testing

#endif // PIMETRIC_TESTS_SUPPORT_HPP
