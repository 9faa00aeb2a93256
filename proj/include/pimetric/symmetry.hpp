#ifndef PIMETRIC_SYMMETRY_HPP
#define PIMETRIC_SYMMETRY_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "pimetric/pispace.hpp"

namespace pimetric
{

/**
 * @brief Permutation of the block indices {0, ..., m-1}.
 *
 * Acts on vectors by (sigma . v)_j = v_{sigma^{-1}(j)}: the block in slot i
 * moves to slot sigma(i). Products compose right to left, so
 * (a * b)(i) = a(b(i)).
 */
class BlockPermutation
{
public:
  /// Throws `InvalidArgument` unless `image` is a permutation of [0, m).
  explicit BlockPermutation(std::vector<unsigned> image);

  static BlockPermutation identity(unsigned m);

  unsigned operator()(unsigned i) const { return _image.at(i); }
  unsigned degree() const noexcept { return static_cast<unsigned>(_image.size()); }
  std::vector<unsigned> const &image() const noexcept { return _image; }

  BlockPermutation inverse() const;
  bool is_identity() const noexcept;

  friend BlockPermutation operator*(BlockPermutation const &a, BlockPermutation const &b);
  friend bool operator==(BlockPermutation const &, BlockPermutation const &) = default;

private:
  std::vector<unsigned> _image;
};

/// True iff sigma only exchanges blocks of equal size.
bool is_admissible(BlockPermutation const &sigma, Partition const &pi);

/// Bijection of the q^k vectors of one block, as a lookup table.
class BlockBijection
{
public:
  /// Throws `NotBijective` unless `table` is a permutation of [0, size).
  explicit BlockBijection(std::vector<std::uint32_t> table);

  static BlockBijection identity(std::uint32_t size);

  std::uint32_t operator()(std::uint32_t x) const { return _table[x]; }
  std::uint32_t size() const noexcept { return static_cast<std::uint32_t>(_table.size()); }
  std::vector<std::uint32_t> const &table() const noexcept { return _table; }

  BlockBijection inverse() const;
  bool is_identity() const noexcept;

  /// (a * b)(x) = a(b(x)).
  friend BlockBijection operator*(BlockBijection const &a, BlockBijection const &b);
  friend bool operator==(BlockBijection const &, BlockBijection const &) = default;

private:
  std::vector<std::uint32_t> _table;
};

using BlockBijections = std::vector<BlockBijection>;

/// A map of F_q^n given by the image index of every vector index.
class ExplicitMap
{
public:
  /// Checks length and range only; bijectivity is a separate question.
  ExplicitMap(Space space, std::vector<std::uint32_t> table);

  static ExplicitMap identity(Space const &space);

  Space const &space() const noexcept { return _space; }
  std::vector<std::uint32_t> const &table() const noexcept { return _table; }
  std::uint32_t operator()(std::uint32_t v) const { return _table[v]; }
  std::uint32_t size() const noexcept { return static_cast<std::uint32_t>(_table.size()); }

  bool is_bijective() const;

  friend bool operator==(ExplicitMap const &a, ExplicitMap const &b)
  { return a._space == b._space && a._table == b._table; }

private:
  Space _space;
  std::vector<std::uint32_t> _table;
};

/// (f o g)(v) = f(g(v)).
ExplicitMap compose_tables(ExplicitMap const &f, ExplicitMap const &g);
/// Throws `NotBijective`.
ExplicitMap invert_table(ExplicitMap const &f);

/// An element (sigma, T) of S_pi x| M acting as v -> sigma(T(v)).
class StructuredSymmetry
{
public:
  /// Throws `NotAdmissible` or `InvalidArgument` on shape errors.
  StructuredSymmetry(Space space, BlockPermutation sigma, BlockBijections blocks);

  static StructuredSymmetry identity(Space const &space);

  Space const &space() const noexcept { return _space; }
  BlockPermutation const &sigma() const noexcept { return _sigma; }
  BlockBijections const &blocks() const noexcept { return _blocks; }

  friend bool operator==(StructuredSymmetry const &a, StructuredSymmetry const &b)
  { return a._space == b._space && a._sigma == b._sigma && a._blocks == b._blocks; }

private:
  Space _space;
  BlockPermutation _sigma;
  BlockBijections _blocks;
};

/// First pair (u, v) with d(F u, F v) != d(u, v), if any. Throws
/// `NotBijective` if the table is not a permutation.
std::optional<std::pair<std::uint32_t, std::uint32_t>>
find_distance_violation(ExplicitMap const &f);

/// Bijective and distance preserving on every pair.
bool is_symmetry(ExplicitMap const &f);

/// The block j with {F(v + x) : x in V_i} = F(v) + V_j, if the image of the
/// coset v + V_i has that shape.
std::optional<unsigned> coset_image_block(ExplicitMap const &f, IndexedSpace const &space,
                                          std::uint32_t v, unsigned i);

BlockVector apply_structured(StructuredSymmetry const &s, BlockVector const &v);

ExplicitMap expand(StructuredSymmetry const &s);

/// sigma_F. Throws `NotASymmetry`.
BlockPermutation induced_permutation(ExplicitMap const &f);

/// Unique (sigma_F, T) with F = sigma_F o T. With `validate` the block
/// separability of sigma_F^{-1} o F is checked on every vector and a failure
/// throws `SeparabilityViolation`.
StructuredSymmetry decompose(ExplicitMap const &f, bool validate = false);

/// (sigma, T)(phi, S) = (sigma phi, (phi^{-1} T phi) S).
StructuredSymmetry compose(StructuredSymmetry const &a, StructuredSymmetry const &b);

StructuredSymmetry invert(StructuredSymmetry const &s);

/// sigma^{-1} T sigma = (T_{sigma(1)}, ..., T_{sigma(m)}). Throws
/// `NotAdmissible`.
BlockBijections conjugate_by_permutation(BlockBijections const &blocks,
                                         BlockPermutation const &sigma,
                                         Partition const &pi);

/// Uniform element of S_pi x| M, reproducible per seed.
StructuredSymmetry random_symmetry(Space const &space, std::uint64_t seed);

} // namespace pimetric

#endif // PIMETRIC_SYMMETRY_HPP
