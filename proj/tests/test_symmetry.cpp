#include <doctest.h>

#include <set>

#include "pimetric/error.hpp"
#include "pimetric/symmetry.hpp"
#include "support.hpp"

using namespace pimetric;
namespace t = pimetric::testing;

namespace
{

BlockBijection const kId2 = BlockBijection::identity(2);
BlockBijection const kNot({1, 0});

BlockPermutation perm(std::vector<unsigned> image)
{
  return BlockPermutation(std::move(image));
}

// Antipodal swap on GF(2)^2: (0,0) <-> (1,1), others fixed.
ExplicitMap antipodal(Space const &s)
{
  return ExplicitMap(s, {3, 1, 2, 0});
}

std::vector<std::uint32_t> oracle_table(StructuredSymmetry const &s)
{
  std::vector<std::vector<std::uint32_t>> tables;
  for (auto const &b : s.blocks())
    tables.push_back(b.table());
  return t::compose(t::permutation_table(s.space(), s.sigma().image()),
                    t::blockwise_table(s.space(), tables));
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

} // namespace

TEST_SUITE("symmetry")
{

TEST_CASE("is_symmetry examples")
{
  auto s11 = t::space(2, "1,1");
  CHECK(is_symmetry(ExplicitMap::identity(s11)));

  ExplicitMap swap01(s11, {1, 0, 2, 3});
  CHECK_FALSE(is_symmetry(swap01));
  // The pair ((0,0),(1,1)) is a witness: distance 2 becomes 1.
  auto is = IndexedSpace(s11);
  CHECK(is.distance(0, 3) == 2);
  CHECK(is.distance(swap01(0), swap01(3)) == 1);
  auto w = find_distance_violation(swap01);
  REQUIRE(w);
  CHECK(is.distance(w->first, w->second) != is.distance(swap01(w->first), swap01(w->second)));

  expect_error(Errc::NotBijective, [&] { is_symmetry(ExplicitMap(s11, {0, 0, 2, 3})); });
  CHECK_THROWS_AS(ExplicitMap(s11, {0, 1, 2}), Error);
  CHECK_THROWS_AS(ExplicitMap(s11, {0, 1, 2, 4}), Error);

  for (std::uint64_t seed = 0; seed < 10; ++seed)
    CHECK(is_symmetry(expand(random_symmetry(t::space(3, "1,1"), seed))));
}

TEST_CASE("is_admissible examples")
{
  auto pi21 = Partition::parse("2,1");
  CHECK(is_admissible(BlockPermutation::identity(2), pi21));
  CHECK_FALSE(is_admissible(perm({1, 0}), pi21));
  CHECK(is_admissible(perm({1, 0}), Partition::parse("1,1")));
  CHECK(is_admissible(perm({1, 0, 2}), Partition::parse("2,2,1")));
  CHECK_FALSE(is_admissible(perm({2, 1, 0}), Partition::parse("2,2,1")));
  CHECK_FALSE(is_admissible(perm({0, 1, 2}), pi21));

  expect_error(Errc::NotAdmissible, [&] {
    StructuredSymmetry(t::space(2, "2,1"), perm({1, 0}),
                       {BlockBijection::identity(4), kId2});
  });
}

TEST_CASE("apply_structured examples")
{
  auto s11 = t::space(2, "1,1");
  BlockVector v(s11, {0, 1});
  CHECK(apply_structured(StructuredSymmetry::identity(s11), v) == v);

  StructuredSymmetry swap(s11, perm({1, 0}), {kId2, kId2});
  CHECK(apply_structured(swap, v).coords() == std::vector<Elem>{1, 0});

  StructuredSymmetry swap_not(s11, perm({1, 0}), {kNot, kNot});
  CHECK(apply_structured(swap_not, BlockVector(s11)).coords() == std::vector<Elem>{1, 1});
  CHECK(expand(swap_not) == antipodal(s11));

  // Block moves keep the internal coordinate order.
  auto s221 = t::space(2, "2,2,1");
  StructuredSymmetry move(s221, perm({1, 0, 2}),
                          {BlockBijection::identity(4), BlockBijection::identity(4), kId2});
  CHECK(apply_structured(move, BlockVector(s221, {1, 0, 0, 1, 1})).coords() ==
        std::vector<Elem>{0, 1, 1, 0, 1});

  expect_error(Errc::SpaceMismatch, [&] { apply_structured(swap, BlockVector(t::space(3, "1,1"))); });
}

TEST_CASE("expand examples and agreement with the coordinate oracle")
{
  auto s11 = t::space(2, "1,1");
  CHECK(expand(StructuredSymmetry::identity(s11)) == ExplicitMap::identity(s11));
  CHECK(expand(StructuredSymmetry(s11, perm({1, 0}), {kId2, kId2})).table() ==
        std::vector<std::uint32_t>{0, 2, 1, 3});

  for (auto const *pi : {"1,1", "2,1", "1,1,1", "2,2", "3"}) {
    auto s = t::space(2, pi);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      auto r = random_symmetry(s, seed);
      CHECK(expand(r).table() == oracle_table(r));
    }
  }
  auto s3 = t::space(3, "1,1");
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto r = random_symmetry(s3, seed);
    CHECK(expand(r).table() == oracle_table(r));
  }
}

TEST_CASE("induced_permutation examples")
{
  auto s11 = t::space(2, "1,1");
  CHECK(induced_permutation(ExplicitMap::identity(s11)).is_identity());
  CHECK(induced_permutation(ExplicitMap(s11, {0, 2, 1, 3})) == perm({1, 0}));
  // F(0) = (1,1) and F(V_1) = {(1,1),(1,0)} = (1,1) + V_2.
  CHECK(induced_permutation(antipodal(s11)) == perm({1, 0}));

  expect_error(Errc::NotASymmetry,
               [&] { induced_permutation(ExplicitMap(s11, {1, 0, 2, 3})); });
  expect_error(Errc::NotASymmetry,
               [&] { induced_permutation(ExplicitMap(s11, {0, 0, 2, 3})); });

  auto s21 = t::space(2, "2,1");
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto r = random_symmetry(s21, seed);
    auto sigma = induced_permutation(expand(r));
    CHECK(is_admissible(sigma, s21.partition()));
    CHECK(sigma == r.sigma());
  }
}

TEST_CASE("decompose examples")
{
  auto s11 = t::space(2, "1,1");
  CHECK(decompose(ExplicitMap::identity(s11)) == StructuredSymmetry::identity(s11));

  auto d = decompose(antipodal(s11), true);
  CHECK(d.sigma() == perm({1, 0}));
  CHECK(d.blocks() == BlockBijections{kNot, kNot});

  expect_error(Errc::NotASymmetry, [&] { decompose(ExplicitMap(s11, {1, 0, 2, 3})); });
}

TEST_CASE("decompose inverts expand")
{
  for (auto [q, pi] : std::vector<std::pair<unsigned, char const *>>{
           {2, "1,1"}, {2, "2,1"}, {2, "1,1,1"}, {2, "2,2"}, {2, "2,1,1"},
           {3, "1,1"}, {3, "2,1"}, {4, "1,1"}, {5, "1"}}) {
    auto s = t::space(q, pi);
    CAPTURE(s.describe());
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
      auto r = random_symmetry(s, seed);
      auto f = expand(r);
      CHECK(decompose(f) == r);
      CHECK(decompose(f, true) == r);
      CHECK(expand(decompose(f)) == f);
    }
  }
}

TEST_CASE("translations are absorbed into the block part")
{
  auto s = t::space(3, "2,1");
  IndexedSpace is(s);
  std::uint32_t shift = BlockVector(s, {1, 2, 1}).index();
  std::vector<std::uint32_t> table(is.size());
  for (std::uint32_t v = 0; v < is.size(); ++v)
    table[v] = is.add(v, shift);
  ExplicitMap f(s, table);
  auto d = decompose(f, true);
  CHECK(d.sigma().is_identity());
  CHECK(d.blocks()[0](0) == BlockVector(s, {1, 2, 0}).index() / 3);
  CHECK(d.blocks()[1](0) == 1);
  CHECK(expand(d) == f);
}

TEST_CASE("compose examples")
{
  auto s11 = t::space(2, "1,1");
  StructuredSymmetry swap(s11, perm({1, 0}), {kId2, kId2});
  StructuredSymmetry flip1(s11, BlockPermutation::identity(2), {kNot, kId2});
  auto c = compose(swap, flip1);
  CHECK(c == StructuredSymmetry(s11, perm({1, 0}), {kNot, kId2}));
  CHECK(expand(c) == compose_tables(expand(swap), expand(flip1)));

  auto r = random_symmetry(t::space(2, "2,1"), 7);
  CHECK(compose(r, StructuredSymmetry::identity(r.space())) == r);
  CHECK(compose(StructuredSymmetry::identity(r.space()), r) == r);
  CHECK(compose(r, invert(r)) == StructuredSymmetry::identity(r.space()));

  expect_error(Errc::SpaceMismatch, [&] { compose(swap, r); });
}

TEST_CASE("compose is a homomorphism into table composition")
{
  for (auto [q, pi] : std::vector<std::pair<unsigned, char const *>>{
           {2, "2,1"}, {2, "1,1,1"}, {3, "1,1"}, {2, "2,2,1"}}) {
    auto s = t::space(q, pi);
    CAPTURE(s.describe());
    bool ok = true;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      auto a = random_symmetry(s, 2 * seed);
      auto b = random_symmetry(s, 2 * seed + 1);
      ok &= expand(compose(a, b)).table() == t::compose(oracle_table(a), oracle_table(b));
    }
    CHECK(ok);
  }
}

TEST_CASE("invert examples")
{
  auto s11 = t::space(2, "1,1");
  CHECK(invert(StructuredSymmetry::identity(s11)) == StructuredSymmetry::identity(s11));
  StructuredSymmetry swap(s11, perm({1, 0}), {kId2, kId2});
  CHECK(invert(swap) == swap);

  auto s21 = t::space(2, "2,1");
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    auto r = random_symmetry(s21, seed);
    CHECK(expand(invert(r)).table() == t::inverse(expand(r).table()));
    CHECK(compose(invert(r), r) == StructuredSymmetry::identity(s21));
  }
  auto s3 = t::space(3, "1,1,1");
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    auto r = random_symmetry(s3, seed);
    CHECK(expand(invert(r)) == invert_table(expand(r)));
  }
}

TEST_CASE("conjugate_by_permutation")
{
  auto pi11 = Partition::parse("1,1");
  BlockBijections tnot{kNot, kId2};
  CHECK(conjugate_by_permutation(tnot, BlockPermutation::identity(2), pi11) == tnot);
  CHECK(conjugate_by_permutation(tnot, perm({1, 0}), pi11) == BlockBijections{kId2, kNot});

  expect_error(Errc::NotAdmissible, [&] {
    conjugate_by_permutation({BlockBijection::identity(4), kId2}, perm({1, 0}),
                             Partition::parse("2,1"));
  });

  // sigma^{-1} T sigma against explicit tables, every (T, sigma) on GF(2)^3
  // with pi = (1,1,1).
  auto s = t::space(2, "1,1,1");
  std::vector<BlockBijection> both{kId2, kNot};
  std::vector<unsigned> image{0, 1, 2};
  unsigned checked = 0;
  do {
    auto sigma_table = t::permutation_table(s, image);
    for (unsigned mask = 0; mask < 8; ++mask) {
      BlockBijections blocks{both[mask & 1], both[(mask >> 1) & 1], both[(mask >> 2) & 1]};
      std::vector<std::vector<std::uint32_t>> raw;
      for (auto const &b : blocks)
        raw.push_back(b.table());
      auto expected =
          t::compose(t::inverse(sigma_table), t::compose(t::blockwise_table(s, raw), sigma_table));
      auto conj = conjugate_by_permutation(blocks, perm(image), s.partition());
      std::vector<std::vector<std::uint32_t>> conj_raw;
      for (auto const &b : conj)
        conj_raw.push_back(b.table());
      CHECK(t::blockwise_table(s, conj_raw) == expected);
      ++checked;
    }
  } while (std::next_permutation(image.begin(), image.end()));
  CHECK(checked == 48);
}

TEST_CASE("random_symmetry is reproducible and covers the group")
{
  auto s21 = t::space(2, "2,1");
  CHECK(random_symmetry(s21, 42) == random_symmetry(s21, 42));
  CHECK_FALSE(random_symmetry(s21, 42) == random_symmetry(s21, 43));

  // The group for q=2, pi=(1,1) has 8 elements (the dihedral group of the
  // 4-cycle, enumerated in the oracle tests).
  auto s11 = t::space(2, "1,1");
  std::set<std::vector<std::uint32_t>> seen;
  for (std::uint64_t seed = 0; seed < 1000; ++seed)
    seen.insert(expand(random_symmetry(s11, seed)).table());
  CHECK(seen.size() == 8);

  // Only admissible permutations appear.
  auto s221 = t::space(2, "2,2,1");
  std::set<std::vector<unsigned>> sigmas;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    auto r = random_symmetry(s221, seed);
    CHECK(is_admissible(r.sigma(), s221.partition()));
    sigmas.insert(r.sigma().image());
  }
  CHECK(sigmas.size() == 2);
}

TEST_CASE("coset images for structured symmetries")
{
  auto s = t::space(3, "2,1");
  IndexedSpace is(s);
  auto r = random_symmetry(s, 5);
  auto f = expand(r);
  for (std::uint32_t v = 0; v < is.size(); ++v) {
    for (unsigned i = 0; i < 2; ++i) {
      auto j = coset_image_block(f, is, v, i);
      REQUIRE(j);
      CHECK(*j == r.sigma()(i));
    }
  }
}

}
