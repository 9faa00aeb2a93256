#ifndef PIMETRIC_ORACLE_HPP
#define PIMETRIC_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pimetric/symmetry.hpp"

namespace pimetric
{

/**
 * @file oracle.hpp
 * @brief Exhaustive ground truth for the symmetry theory on tiny spaces.
 *
 * Nothing here uses the structure theory it is meant to check: symmetries are
 * found by filtering every bijection through the distance predicate and
 * automorphisms by filtering every matrix. The caps below are fixed so that a
 * test run cannot blow up by accident.
 */

/// Bijection enumeration needs q^n <= 9 (9! = 362880 candidates).
inline constexpr std::uint64_t kMaxBijectionDomain = 9;
/// Matrix enumeration needs q^{n^2} <= 2^26.
inline constexpr std::uint64_t kMaxMatrixCandidates = std::uint64_t{1} << 26;
/// Enumeration of M needs prod (q^{k_i})! <= 10^6 ...
inline constexpr std::uint64_t kMaxMElements = 1000000;
/// ... and q^n <= 256 so that each element can be pair-checked.
inline constexpr std::uint64_t kMaxMDomain = 256;

struct EnumerationReport
{
  std::string space;
  std::string kind;
  std::uint64_t candidates = 0;
  std::uint64_t count = 0;
  /// Present when requested; then maps->size() == count.
  std::optional<std::vector<ExplicitMap>> maps;
  double seconds = 0.0;
};

struct OracleOptions
{
  bool keep_maps = false;
  /// 0 means: PIMETRIC_WORKERS if set, else the hardware concurrency.
  unsigned workers = 0;
};

/// Worker count after applying the PIMETRIC_WORKERS override.
unsigned resolve_workers(unsigned requested);

/// Every bijection of F_q^n in lexicographic order, filtered by is_symmetry.
EnumerationReport enumerate_symmetries(Space const &space, OracleOptions const &opts = {});

/// Every n x n matrix over GF(q), filtered by invertibility and preservation
/// of the pi-weight (for a linear map this is preservation of d_pi).
EnumerationReport enumerate_automorphisms(Space const &space, OracleOptions const &opts = {});

/// Every tuple of block bijections; count is the number whose expansion is a
/// symmetry, which should be all of them.
EnumerationReport enumerate_M(Space const &space, OracleOptions const &opts = {});

/// S_m filtered by admissibility.
std::vector<BlockPermutation> enumerate_admissible(Partition const &pi);

/// Number of invertible k x k matrices over the field, by determinant.
std::uint64_t count_invertible_matrices(Field const &field, unsigned k);

/// For every v and block i, {F(v + x) : x in V_i} is a coset F(v) + V_j with
/// k_j = k_i.
bool satisfies_lemma1(ExplicitMap const &f);

/// satisfies_lemma1 over every enumerated symmetry of the space.
bool verify_lemma1(Space const &space, OracleOptions const &opts = {});

struct DecompositionCheck
{
  std::uint64_t enumerated = 0;  // symmetries found by brute force
  std::uint64_t structured = 0;  // |S_pi| * |M| pairs expanded
  std::uint64_t distinct_images = 0;
  bool round_trip = true;        // expand(decompose(F)) == F for every F
  bool same_set = true;          // images of S_pi x M == enumerated set

  bool ok() const
  {
    return round_trip && same_set && enumerated == structured &&
           distinct_images == structured;
  }
};

DecompositionCheck check_decomposition_bijection(Space const &space,
                                                 OracleOptions const &opts = {});

/// (sigma, T) -> expand(sigma, T) is a bijection S_pi x M -> Symm.
inline bool verify_decomposition_bijection(Space const &space, OracleOptions const &opts = {})
{
  return check_decomposition_bijection(space, opts).ok();
}

/// All elements of M, in odometer order over the block tables.
std::vector<BlockBijections> enumerate_block_tuples(Space const &space);

} // namespace pimetric

#endif // PIMETRIC_ORACLE_HPP
