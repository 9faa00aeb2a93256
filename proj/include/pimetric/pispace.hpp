#ifndef PIMETRIC_PISPACE_HPP
#define PIMETRIC_PISPACE_HPP

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pimetric/ffield.hpp"

namespace pimetric
{

/// Enumeration guard for vector spaces and code spans.
inline constexpr std::uint64_t kMaxEnumerable = std::uint64_t{1} << 20;

struct SizeClass
{
  unsigned size;
  unsigned multiplicity;

  friend bool operator==(SizeClass const &, SizeClass const &) = default;
};

/// Distinct block sizes l_1 > ... > l_r with their multiplicities.
using SizeProfile = std::vector<SizeClass>;

/**
 * @brief Non-increasing composition (k_1, ..., k_m) of n.
 *
 * Unsorted input is rejected with `PartitionNotSorted` rather than sorted,
 * since block i must keep meaning the i-th given block.
 */
class Partition
{
public:
  explicit Partition(std::vector<unsigned> blocks);

  /// Parses "2,1,1". Throws `ParseError`, `InvalidPartition` or
  /// `PartitionNotSorted`.
  static Partition parse(std::string_view text);

  /// The Hamming partition (1, ..., 1) of n.
  static Partition ones(unsigned n);

  std::vector<unsigned> const &blocks() const noexcept { return _blocks; }
  unsigned block(unsigned i) const { return _blocks.at(i); }
  unsigned m() const noexcept { return static_cast<unsigned>(_blocks.size()); }
  unsigned n() const noexcept { return _n; }
  /// Index of the first coordinate of block i.
  unsigned offset(unsigned i) const { return _offsets.at(i); }

  SizeProfile profile() const;

  std::string to_string() const;

  friend bool operator==(Partition const &, Partition const &) = default;

private:
  std::vector<unsigned> _blocks;
  std::vector<unsigned> _offsets;
  unsigned _n = 0;
};

/**
 * @brief The metric space (F_q^n, d_pi).
 *
 * Vectors are indexed lexicographically by their coordinate indices with the
 * first coordinate most significant. Equivalently the index is a mixed-radix
 * number whose digits are the block indices (block 1 most significant, radix
 * q^{k_i}), each block index itself being the lexicographic index of the
 * block's coordinates.
 */
class Space
{
public:
  Space(Field field, Partition partition);

  Field const &field() const noexcept { return _d->field; }
  Partition const &partition() const noexcept { return _d->partition; }
  unsigned q() const noexcept { return _d->field.q(); }
  unsigned n() const noexcept { return _d->partition.n(); }
  unsigned m() const noexcept { return _d->partition.m(); }

  /// q^n, or throws `SpaceTooLarge` when it exceeds `limit`.
  std::uint64_t size(std::uint64_t limit = kMaxEnumerable) const;
  /// q^{k_i}, the number of vectors in block i.
  std::uint64_t block_size(unsigned i) const { return _d->block_sizes.at(i); }

  /// Splits a vector index into its m block indices.
  void split(std::uint64_t index, std::span<std::uint32_t> blocks) const;
  std::uint64_t join(std::span<std::uint32_t const> blocks) const;

  /// Coordinates of block index x of a block of length k.
  void block_coords(std::uint32_t x, unsigned k, std::span<Elem> out) const;
  std::uint32_t block_index(std::span<Elem const> coords) const;

  std::string describe() const;

  friend bool operator==(Space const &a, Space const &b)
  { return a._d == b._d || (a.field() == b.field() && a.partition() == b.partition()); }

private:
  struct Data
  {
    Field field;
    Partition partition;
    std::vector<std::uint64_t> block_sizes;
    std::vector<std::uint64_t> block_weights; // positional weight of block i
  };

  std::shared_ptr<Data const> _d;
};

/// Throws `SpaceMismatch` unless both spaces agree.
void require_same_space(Space const &a, Space const &b);

class BlockVector
{
public:
  /// Zero vector.
  explicit BlockVector(Space space);
  /// Throws `InvalidArgument` on wrong length or out-of-field entries.
  BlockVector(Space space, std::vector<Elem> coords);

  static BlockVector from_index(Space space, std::uint64_t index);

  Space const &space() const noexcept { return _space; }
  std::vector<Elem> const &coords() const noexcept { return _coords; }
  std::span<Elem const> block(unsigned i) const;
  bool block_is_zero(unsigned i) const;

  std::uint64_t index() const;

  BlockVector operator+(BlockVector const &rhs) const;
  BlockVector operator-(BlockVector const &rhs) const;
  BlockVector scaled(Elem c) const;

  friend bool operator==(BlockVector const &a, BlockVector const &b)
  { return a._space == b._space && a._coords == b._coords; }

private:
  Space _space;
  std::vector<Elem> _coords;
};

/// Number of nonzero blocks.
unsigned pi_weight(BlockVector const &v);

/// Number of blocks in which u and v differ; throws `SpaceMismatch`.
unsigned pi_distance(BlockVector const &u, BlockVector const &v);

/// All q^n vectors in index order; throws `SpaceTooLarge` past 2^20.
std::vector<BlockVector> enumerate_vectors(Space const &space);

/// Spanning rows of a linear error-block code.
struct GeneratorMatrix
{
  Space space;
  std::vector<BlockVector> rows;
};

/// Row-reduced basis of the row space.
std::vector<BlockVector> row_basis(GeneratorMatrix const &g);

/// Minimum pi-weight over nonzero codewords by span enumeration.
/// Throws `ZeroCode` for the zero code and `SpaceTooLarge` if q^rank > 2^20.
unsigned code_min_distance(GeneratorMatrix const &g);

/**
 * @brief Index-level view of a space used by the exhaustive algorithms.
 *
 * Precomputes the block decomposition of every vector so distances between
 * vector indices cost m table lookups.
 */
class IndexedSpace
{
public:
  explicit IndexedSpace(Space space, std::uint64_t limit = kMaxEnumerable);

  Space const &space() const noexcept { return _space; }
  std::uint32_t size() const noexcept { return _size; }
  unsigned m() const noexcept { return _m; }

  std::uint32_t block_of(std::uint32_t v, unsigned i) const noexcept
  { return _blocks[static_cast<std::size_t>(v) * _m + i]; }

  unsigned distance(std::uint32_t u, std::uint32_t v) const noexcept
  {
    unsigned d = 0;
    auto const *a = &_blocks[static_cast<std::size_t>(u) * _m];
    auto const *b = &_blocks[static_cast<std::size_t>(v) * _m];
    for (unsigned i = 0; i < _m; ++i)
      d += a[i] != b[i];
    return d;
  }

  unsigned weight(std::uint32_t v) const noexcept { return distance(v, 0); }

  /// Vector whose block i is x and other blocks are zero.
  std::uint32_t embed(unsigned i, std::uint32_t x) const noexcept
  { return static_cast<std::uint32_t>(x * _weights[i]); }

  std::uint32_t add(std::uint32_t u, std::uint32_t v) const;
  std::uint32_t sub(std::uint32_t u, std::uint32_t v) const;
  std::uint32_t scale(Elem c, std::uint32_t v) const;

private:
  Space _space;
  std::uint32_t _size = 0;
  unsigned _m = 0;
  std::vector<std::uint32_t> _blocks;
  std::vector<std::uint32_t> _weights;
};

} // namespace pimetric

#endif // PIMETRIC_PISPACE_HPP
