#include <doctest.h>

#include <set>

#include "pimetric/autgroup.hpp"
#include "pimetric/error.hpp"
#include "pimetric/oracle.hpp"
#include "support.hpp"

using namespace pimetric;
namespace t = pimetric::testing;

namespace
{

// Leibniz determinant over a prime field, independent of elimination.
unsigned leibniz_det(std::vector<unsigned> const &a, unsigned k, unsigned p)
{
  std::vector<unsigned> perm(k);
  for (unsigned i = 0; i < k; ++i)
    perm[i] = i;
  long long total = 0;
  do {
    unsigned inversions = 0;
    for (unsigned i = 0; i < k; ++i) {
      for (unsigned j = i + 1; j < k; ++j)
        inversions += perm[i] > perm[j];
    }
    long long term = 1;
    for (unsigned i = 0; i < k; ++i)
      term = term * a[i * k + perm[i]] % p;
    total += (inversions % 2 ? p - term : term);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return static_cast<unsigned>(total % p);
}

std::uint64_t brute_force_gl(unsigned k, unsigned p)
{
  std::uint64_t total = 1;
  for (unsigned j = 0; j < k * k; ++j)
    total *= p;
  std::uint64_t count = 0;
  std::vector<unsigned> a(k * k);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t rest = idx;
    for (auto &x : a) {
      x = static_cast<unsigned>(rest % p);
      rest /= p;
    }
    count += leibniz_det(a, k, p) != 0;
  }
  return count;
}

template<typename Fn>
void expect_error(Errc code, Fn &&fn)
{
  try {
    fn();
    FAIL("expected " << errc_name(code));
  } catch (Error const &e) {
    CHECK(e.code() == code);
  }
}

// F(x1, x2, x3) = (x1 + x2, x2, x3) over GF(2), built from coordinates.
ExplicitMap shear_21(Space const &s)
{
  std::vector<std::uint32_t> table(8);
  for (unsigned v = 0; v < 8; ++v) {
    auto c = t::coords_of(v, 2, 3);
    table[v] = static_cast<std::uint32_t>(t::index_of({(c[0] + c[1]) % 2, c[1], c[2]}, 2));
  }
  return ExplicitMap(s, table);
}

std::vector<BlockMatrix> all_invertible(Field const &f, unsigned k)
{
  std::vector<BlockMatrix> out;
  std::uint64_t total = 1;
  for (unsigned j = 0; j < k * k; ++j)
    total *= f.q();
  std::vector<Elem> a(k * k);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t rest = idx;
    for (auto &x : a) {
      x = static_cast<Elem>(rest % f.q());
      rest /= f.q();
    }
    if (determinant(f, k, a) != 0)
      out.emplace_back(f, k, a);
  }
  return out;
}

} // namespace

TEST_SUITE("autgroup")
{

TEST_CASE("determinant and BlockMatrix validation")
{
  auto f2 = Field::make(2);
  CHECK(determinant(f2, 2, std::vector<Elem>{1, 1, 0, 1}) == 1);
  CHECK(determinant(f2, 2, std::vector<Elem>{1, 1, 1, 1}) == 0);
  auto f3 = Field::make(3);
  CHECK(determinant(f3, 2, std::vector<Elem>{0, 1, 1, 0}) == 2);

  for (unsigned p : {2u, 3u, 5u}) {
    auto f = Field::make(p);
    for (std::uint64_t idx = 0; idx < p * p * p * p; ++idx) {
      std::vector<unsigned> a(4);
      std::vector<Elem> e(4);
      std::uint64_t rest = idx;
      for (unsigned j = 0; j < 4; ++j) {
        a[j] = static_cast<unsigned>(rest % p);
        e[j] = static_cast<Elem>(a[j]);
        rest /= p;
      }
      CHECK(determinant(f, 2, e) == leibniz_det(a, 2, p));
    }
  }

  expect_error(Errc::NotInvertible, [&] { BlockMatrix(f2, 2, {1, 1, 1, 1}); });
  expect_error(Errc::InvalidArgument, [&] { BlockMatrix(f2, 2, {1, 0, 1}); });
  expect_error(Errc::InvalidArgument, [&] { BlockMatrix(f2, 1, {2}); });
}

TEST_CASE("is_linear examples")
{
  auto s11 = t::space(2, "1,1");
  CHECK(is_linear(ExplicitMap::identity(s11)));

  auto s21 = t::space(3, "2,1");
  IndexedSpace is(s21);
  std::vector<std::uint32_t> shifted(is.size());
  for (std::uint32_t v = 0; v < is.size(); ++v)
    shifted[v] = is.add(v, 1);
  CHECK_FALSE(is_linear(ExplicitMap(s21, shifted)));

  // Blockwise negation on GF(2)^2 maps 0 to (1,1).
  CHECK_FALSE(is_linear(ExplicitMap(s11, {3, 2, 1, 0})));

  // Additive but not homogeneous: the Frobenius map x -> x^2 on GF(4).
  auto s4 = t::space(4, "1");
  auto f4 = Field::make(4);
  std::vector<std::uint32_t> frob(4);
  for (Elem x = 0; x < 4; ++x)
    frob[x] = f4.mul(x, x);
  CHECK_FALSE(is_linear(ExplicitMap(s4, frob)));
}

TEST_CASE("is_automorphism examples")
{
  auto s11 = t::space(2, "1,1");
  CHECK(is_automorphism(ExplicitMap(s11, {0, 2, 1, 3})));
  auto antipodal = ExplicitMap(s11, {3, 1, 2, 0});
  CHECK(is_symmetry(antipodal));
  CHECK_FALSE(is_automorphism(antipodal));

  auto s21 = t::space(2, "2,1");
  CHECK(is_automorphism(shear_21(s21)));

  // Linear but not a symmetry: (x1, x2 | x3) -> (x1, x2 + x3 | x3).
  std::vector<std::uint32_t> table(8);
  for (unsigned v = 0; v < 8; ++v) {
    auto c = t::coords_of(v, 2, 3);
    table[v] = static_cast<std::uint32_t>(t::index_of({c[0], (c[1] + c[2]) % 2, c[2]}, 2));
  }
  ExplicitMap mixing(s21, table);
  CHECK(is_linear(mixing));
  CHECK_FALSE(is_automorphism(mixing));
}

TEST_CASE("decompose_linear examples")
{
  auto s11 = t::space(2, "1,1");
  CHECK(decompose_linear(ExplicitMap::identity(s11)) == LinearBlockMap::identity(s11));

  auto swap = decompose_linear(ExplicitMap(s11, {0, 2, 1, 3}));
  CHECK(swap.sigma().image() == std::vector<unsigned>{1, 0});
  CHECK(swap.mats()[0].entries() == std::vector<Elem>{1});
  CHECK(swap.mats()[1].entries() == std::vector<Elem>{1});

  auto s21 = t::space(2, "2,1");
  auto shear = decompose_linear(shear_21(s21));
  CHECK(shear.sigma().is_identity());
  CHECK(shear.mats()[0].entries() == std::vector<Elem>{1, 1, 0, 1});
  CHECK(shear.mats()[1].entries() == std::vector<Elem>{1});
  CHECK(expand(shear) == shear_21(s21));

  expect_error(Errc::NotAnAutomorphism,
               [&] { decompose_linear(ExplicitMap(s11, {3, 1, 2, 0})); });
}

TEST_CASE("gl_order against Leibniz brute force")
{
  CHECK(gl_order(1, 2) == 1);
  CHECK(gl_order(2, 2) == 6);
  CHECK(gl_order(3, 2) == 168);
  CHECK(gl_order(2, 3) == 48);
  for (auto [k, q] : std::vector<std::pair<unsigned, unsigned>>{
           {1, 2}, {1, 3}, {2, 2}, {2, 3}, {3, 2}, {1, 5}, {2, 5}}) {
    CAPTURE(k);
    CAPTURE(q);
    CHECK(gl_order(k, q) == brute_force_gl(k, q));
  }
  // Non-prime fields against elimination-based counting.
  CHECK(gl_order(2, 4) == count_invertible_matrices(Field::make(4), 2));
  CHECK(gl_order(1, 9) == 8);
  expect_error(Errc::NotPrimePower, [] { gl_order(2, 6); });
}

TEST_CASE("decompose_linear round trip over every automorphism of small binary spaces")
{
  for (auto const *pi : {"1", "2", "1,1", "3", "2,1", "1,1,1"}) {
    auto s = t::space(2, pi);
    CAPTURE(s.describe());
    auto const &f = s.field();
    std::vector<std::vector<BlockMatrix>> per_block;
    for (unsigned k : s.partition().blocks())
      per_block.push_back(all_invertible(f, k));

    unsigned count = 0;
    bool ok = true;
    for (auto const &sigma : enumerate_admissible(s.partition())) {
      std::vector<std::size_t> odo(s.m(), 0);
      while (true) {
        std::vector<BlockMatrix> mats;
        for (unsigned i = 0; i < s.m(); ++i)
          mats.push_back(per_block[i][odo[i]]);
        LinearBlockMap l(s, sigma, mats);
        auto table = expand(l);
        ok &= table(0) == 0;
        ok &= is_automorphism(table);
        ok &= decompose_linear(table) == l;
        ++count;

        unsigned i = s.m();
        while (i-- > 0) {
          if (++odo[i] < per_block[i].size())
            break;
          odo[i] = 0;
        }
        if (i == static_cast<unsigned>(-1))
          break;
      }
    }
    CHECK(ok);
    CHECK(count > 0);
  }
}

TEST_CASE("apply_linear agrees with the expanded table")
{
  auto s = t::space(3, "2,1,1");
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto l = random_automorphism(s, seed);
    auto table = expand(l);
    for (std::uint32_t v = 0; v < table.size(); ++v)
      CHECK(apply_linear(l, BlockVector::from_index(s, v)).index() == table(v));
  }
}

TEST_CASE("random_automorphism")
{
  auto s21 = t::space(3, "2,1");
  CHECK(random_automorphism(s21, 9) == random_automorphism(s21, 9));
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto table = expand(random_automorphism(s21, seed));
    CHECK(is_automorphism(table));
  }

  auto s11 = t::space(2, "1,1");
  std::set<std::vector<std::uint32_t>> seen;
  for (std::uint64_t seed = 0; seed < 1000; ++seed)
    seen.insert(expand(random_automorphism(s11, seed)).table());
  CHECK(seen.size() == 2);
}

}
