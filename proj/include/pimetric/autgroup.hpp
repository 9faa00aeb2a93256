#ifndef PIMETRIC_AUTGROUP_HPP
#define PIMETRIC_AUTGROUP_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "pimetric/bigint.hpp"
#include "pimetric/symmetry.hpp"

namespace pimetric
{

/// Determinant of a row-major k x k matrix over the field, by elimination.
Elem determinant(Field const &field, unsigned k, std::span<Elem const> entries);

/**
 * @brief Invertible k x k matrix over GF(q), stored row-major.
 *
 * Vectors are columns and the matrix acts on the left, so column j holds the
 * image of the j-th standard basis vector.
 */
class BlockMatrix
{
public:
  /// Throws `NotInvertible` for a singular matrix, `InvalidArgument` on shape.
  BlockMatrix(Field field, unsigned k, std::vector<Elem> entries);

  static BlockMatrix identity(Field field, unsigned k);

  Field const &field() const noexcept { return _field; }
  unsigned k() const noexcept { return _k; }
  std::vector<Elem> const &entries() const noexcept { return _entries; }
  Elem operator()(unsigned row, unsigned col) const { return _entries[row * _k + col]; }

  /// y = A x for block coordinates x.
  void apply(std::span<Elem const> x, std::span<Elem> y) const;

  friend bool operator==(BlockMatrix const &a, BlockMatrix const &b)
  { return a._field == b._field && a._k == b._k && a._entries == b._entries; }

private:
  Field _field;
  unsigned _k;
  std::vector<Elem> _entries;
};

/// An automorphism (sigma, A_1, ..., A_m) acting as v -> sigma(A_1 v_1, ..., A_m v_m).
class LinearBlockMap
{
public:
  /// Throws `NotAdmissible` or `InvalidArgument` on shape errors.
  LinearBlockMap(Space space, BlockPermutation sigma, std::vector<BlockMatrix> mats);

  static LinearBlockMap identity(Space const &space);

  Space const &space() const noexcept { return _space; }
  BlockPermutation const &sigma() const noexcept { return _sigma; }
  std::vector<BlockMatrix> const &mats() const noexcept { return _mats; }

  friend bool operator==(LinearBlockMap const &, LinearBlockMap const &) = default;

private:
  Space _space;
  BlockPermutation _sigma;
  std::vector<BlockMatrix> _mats;
};

/// Additive on all pairs and homogeneous for all scalars.
bool is_linear(ExplicitMap const &f);

bool is_automorphism(ExplicitMap const &f);

StructuredSymmetry to_structured(LinearBlockMap const &l);

BlockVector apply_linear(LinearBlockMap const &l, BlockVector const &v);

ExplicitMap expand(LinearBlockMap const &l);

/// Throws `NotAnAutomorphism`.
LinearBlockMap decompose_linear(ExplicitMap const &f);

/// |GL(k, q)| = prod_{j<k} (q^k - q^j). Throws `NotPrimePower`.
BigInt gl_order(unsigned k, unsigned q);

/// Uniform element of S_pi x| prod GL(k_i, q), reproducible per seed.
LinearBlockMap random_automorphism(Space const &space, std::uint64_t seed);

} // namespace pimetric

#endif // PIMETRIC_AUTGROUP_HPP
