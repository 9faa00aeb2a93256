#include "pimetric/symmetry.hpp"

#include <numeric>

#include "pimetric/error.hpp"
#include "rng.hpp"

namespace pimetric
{

namespace
{

template<typename T>
bool is_permutation_of_range(std::vector<T> const &image)
{
  std::vector<bool> seen(image.size(), false);
  for (T x : image) {
    if (x >= image.size() || seen[x])
      return false;
    seen[x] = true;
  }
  return true;
}

// Index of sigma . v, i.e. block i of v moved to slot sigma(i).
std::uint32_t permute_index(IndexedSpace const &space, BlockPermutation const &sigma,
                            std::uint32_t v)
{
  std::uint32_t out = 0;
  for (unsigned i = 0; i < space.m(); ++i)
    out += space.embed(sigma(i), space.block_of(v, i));
  return out;
}

} // namespace

BlockPermutation::BlockPermutation(std::vector<unsigned> image)
  : _image(std::move(image))
{
  if (_image.empty() || !is_permutation_of_range(_image))
    throw Error(Errc::InvalidArgument, "not a permutation of the block indices");
}

BlockPermutation BlockPermutation::identity(unsigned m)
{
  std::vector<unsigned> image(m);
  std::iota(image.begin(), image.end(), 0u);
  return BlockPermutation(std::move(image));
}

BlockPermutation BlockPermutation::inverse() const
{
  std::vector<unsigned> inv(_image.size());
  for (unsigned i = 0; i < _image.size(); ++i)
    inv[_image[i]] = i;
  return BlockPermutation(std::move(inv));
}

bool BlockPermutation::is_identity() const noexcept
{
  for (unsigned i = 0; i < _image.size(); ++i) {
    if (_image[i] != i)
      return false;
  }
  return true;
}

BlockPermutation operator*(BlockPermutation const &a, BlockPermutation const &b)
{
  if (a.degree() != b.degree())
    throw Error(Errc::SpaceMismatch, "permutations of different degree");
  std::vector<unsigned> image(a.degree());
  for (unsigned i = 0; i < image.size(); ++i)
    image[i] = a(b(i));
  return BlockPermutation(std::move(image));
}

bool is_admissible(BlockPermutation const &sigma, Partition const &pi)
{
  if (sigma.degree() != pi.m())
    return false;
  for (unsigned i = 0; i < pi.m(); ++i) {
    if (pi.block(i) != pi.block(sigma(i)))
      return false;
  }
  return true;
}

BlockBijection::BlockBijection(std::vector<std::uint32_t> table)
  : _table(std::move(table))
{
  if (_table.empty() || !is_permutation_of_range(_table))
    throw Error(Errc::NotBijective, "block table is not a permutation");
}

BlockBijection BlockBijection::identity(std::uint32_t size)
{
  std::vector<std::uint32_t> table(size);
  std::iota(table.begin(), table.end(), 0u);
  return BlockBijection(std::move(table));
}

BlockBijection BlockBijection::inverse() const
{
  std::vector<std::uint32_t> inv(_table.size());
  for (std::uint32_t x = 0; x < _table.size(); ++x)
    inv[_table[x]] = x;
  return BlockBijection(std::move(inv));
}

bool BlockBijection::is_identity() const noexcept
{
  for (std::uint32_t x = 0; x < _table.size(); ++x) {
    if (_table[x] != x)
      return false;
  }
  return true;
}

BlockBijection operator*(BlockBijection const &a, BlockBijection const &b)
{
  if (a.size() != b.size())
    throw Error(Errc::SpaceMismatch, "block bijections of different size");
  std::vector<std::uint32_t> table(a.size());
  for (std::uint32_t x = 0; x < table.size(); ++x)
    table[x] = a(b(x));
  return BlockBijection(std::move(table));
}

ExplicitMap::ExplicitMap(Space space, std::vector<std::uint32_t> table)
  : _space(std::move(space)),
    _table(std::move(table))
{
  std::uint64_t n = _space.size();
  if (_table.size() != n)
    throw Error(Errc::InvalidArgument, "map table has " + std::to_string(_table.size()) +
                                           " entries, space has " + std::to_string(n));
  for (auto x : _table) {
    if (x >= n)
      throw Error(Errc::InvalidArgument, "map image " + std::to_string(x) + " out of range");
  }
}

ExplicitMap ExplicitMap::identity(Space const &space)
{
  std::vector<std::uint32_t> table(space.size());
  std::iota(table.begin(), table.end(), 0u);
  return ExplicitMap(space, std::move(table));
}

bool ExplicitMap::is_bijective() const
{
  return is_permutation_of_range(_table);
}

ExplicitMap compose_tables(ExplicitMap const &f, ExplicitMap const &g)
{
  require_same_space(f.space(), g.space());
  std::vector<std::uint32_t> table(g.size());
  for (std::uint32_t v = 0; v < table.size(); ++v)
    table[v] = f(g(v));
  return ExplicitMap(f.space(), std::move(table));
}

ExplicitMap invert_table(ExplicitMap const &f)
{
  if (!f.is_bijective())
    throw Error(Errc::NotBijective, "cannot invert a non-bijective map");
  std::vector<std::uint32_t> table(f.size());
  for (std::uint32_t v = 0; v < table.size(); ++v)
    table[f(v)] = v;
  return ExplicitMap(f.space(), std::move(table));
}

StructuredSymmetry::StructuredSymmetry(Space space, BlockPermutation sigma,
                                       BlockBijections blocks)
  : _space(std::move(space)),
    _sigma(std::move(sigma)),
    _blocks(std::move(blocks))
{
  auto const &pi = _space.partition();
  if (_sigma.degree() != pi.m() || _blocks.size() != pi.m())
    throw Error(Errc::InvalidArgument, "expected " + std::to_string(pi.m()) + " blocks");
  if (!is_admissible(_sigma, pi))
    throw Error(Errc::NotAdmissible, "block permutation mixes block sizes");
  for (unsigned i = 0; i < pi.m(); ++i) {
    if (_blocks[i].size() != _space.block_size(i))
      throw Error(Errc::InvalidArgument, "table for block " + std::to_string(i + 1) +
                                             " must have " +
                                             std::to_string(_space.block_size(i)) +
                                             " entries");
  }
}

StructuredSymmetry StructuredSymmetry::identity(Space const &space)
{
  BlockBijections blocks;
  for (unsigned i = 0; i < space.m(); ++i)
    blocks.push_back(BlockBijection::identity(static_cast<std::uint32_t>(space.block_size(i))));
  return StructuredSymmetry(space, BlockPermutation::identity(space.m()), std::move(blocks));
}

std::optional<std::pair<std::uint32_t, std::uint32_t>>
find_distance_violation(ExplicitMap const &f)
{
  if (!f.is_bijective())
    throw Error(Errc::NotBijective, "map table is not a permutation");
  IndexedSpace space(f.space());
  for (std::uint32_t u = 0; u < space.size(); ++u) {
    for (std::uint32_t v = u + 1; v < space.size(); ++v) {
      if (space.distance(f(u), f(v)) != space.distance(u, v))
        return std::pair{u, v};
    }
  }
  return std::nullopt;
}

bool is_symmetry(ExplicitMap const &f)
{
  return !find_distance_violation(f).has_value();
}

std::optional<unsigned> coset_image_block(ExplicitMap const &f, IndexedSpace const &space,
                                          std::uint32_t v, unsigned i)
{
  auto const &pi = space.space().partition();
  std::uint32_t const base = f(v);
  auto const coset_size = static_cast<std::uint32_t>(space.space().block_size(i));

  std::optional<unsigned> target;
  std::vector<bool> hit;
  for (std::uint32_t x = 1; x < coset_size; ++x) {
    std::uint32_t diff = space.sub(f(space.add(v, space.embed(i, x))), base);

    std::optional<unsigned> support;
    for (unsigned j = 0; j < space.m(); ++j) {
      if (space.block_of(diff, j) == 0)
        continue;
      if (support)
        return std::nullopt;
      support = j;
    }
    if (!support)
      return std::nullopt;
    if (!target) {
      target = support;
      if (pi.block(*target) != pi.block(i))
        return std::nullopt;
      hit.assign(coset_size, false);
      hit[0] = true;
    } else if (*target != *support) {
      return std::nullopt;
    }
    std::uint32_t y = space.block_of(diff, *target);
    if (hit[y])
      return std::nullopt;
    hit[y] = true;
  }
  // A block of size q^k >= 2 always yields at least one x, so target is set.
  return target;
}

BlockVector apply_structured(StructuredSymmetry const &s, BlockVector const &v)
{
  require_same_space(s.space(), v.space());
  auto const &space = s.space();
  auto const &pi = space.partition();
  std::vector<Elem> out(space.n());
  for (unsigned i = 0; i < pi.m(); ++i) {
    unsigned j = s.sigma()(i);
    std::uint32_t image = s.blocks()[i](space.block_index(v.block(i)));
    space.block_coords(image, pi.block(j),
                       std::span<Elem>(out).subspan(pi.offset(j), pi.block(j)));
  }
  return BlockVector(space, std::move(out));
}

ExplicitMap expand(StructuredSymmetry const &s)
{
  auto const &space = s.space();
  std::uint64_t total = space.size();
  unsigned m = space.m();
  std::vector<std::uint32_t> in(m), out(m), table(total);
  for (std::uint64_t v = 0; v < total; ++v) {
    space.split(v, in);
    for (unsigned i = 0; i < m; ++i)
      out[s.sigma()(i)] = s.blocks()[i](in[i]);
    table[v] = static_cast<std::uint32_t>(space.join(out));
  }
  return ExplicitMap(space, std::move(table));
}

BlockPermutation induced_permutation(ExplicitMap const &f)
{
  if (!f.is_bijective() || !is_symmetry(f))
    throw Error(Errc::NotASymmetry, "map does not preserve the pi-distance");
  IndexedSpace space(f.space());
  std::vector<unsigned> image(space.m());
  for (unsigned i = 0; i < space.m(); ++i) {
    auto j = coset_image_block(f, space, 0, i);
    if (!j)
      throw Error(Errc::NotASymmetry, "image of block " + std::to_string(i + 1) +
                                          " is not a block coset");
    image[i] = *j;
  }
  try {
    return BlockPermutation(std::move(image));
  } catch (Error const &) {
    throw Error(Errc::NotASymmetry, "block images do not form a permutation");
  }
}

StructuredSymmetry decompose(ExplicitMap const &f, bool validate)
{
  BlockPermutation sigma = induced_permutation(f);
  BlockPermutation sigma_inv = sigma.inverse();
  IndexedSpace space(f.space());

  // G = sigma^{-1} o F lies in M.
  auto g = [&](std::uint32_t v) { return permute_index(space, sigma_inv, f(v)); };

  BlockBijections blocks;
  for (unsigned i = 0; i < space.m(); ++i) {
    auto size = static_cast<std::uint32_t>(f.space().block_size(i));
    std::vector<std::uint32_t> table(size);
    for (std::uint32_t x = 0; x < size; ++x)
      table[x] = space.block_of(g(space.embed(i, x)), i);
    try {
      blocks.emplace_back(std::move(table));
    } catch (Error const &) {
      throw Error(Errc::SeparabilityViolation,
                  "block " + std::to_string(i + 1) + " does not map bijectively");
    }
  }

  if (validate) {
    for (std::uint32_t v = 0; v < space.size(); ++v) {
      std::uint32_t w = g(v);
      for (unsigned i = 0; i < space.m(); ++i) {
        if (space.block_of(w, i) != blocks[i](space.block_of(v, i)))
          throw Error(Errc::SeparabilityViolation,
                      "block " + std::to_string(i + 1) + " of the image of vector " +
                          std::to_string(v) + " depends on other blocks");
      }
    }
  }

  return StructuredSymmetry(f.space(), std::move(sigma), std::move(blocks));
}

StructuredSymmetry compose(StructuredSymmetry const &a, StructuredSymmetry const &b)
{
  require_same_space(a.space(), b.space());
  auto const &phi = b.sigma();
  BlockBijections conj = conjugate_by_permutation(a.blocks(), phi, a.space().partition());
  BlockBijections blocks;
  blocks.reserve(conj.size());
  for (unsigned i = 0; i < conj.size(); ++i)
    blocks.push_back(conj[i] * b.blocks()[i]);
  return StructuredSymmetry(a.space(), a.sigma() * phi, std::move(blocks));
}

StructuredSymmetry invert(StructuredSymmetry const &s)
{
  BlockPermutation sigma_inv = s.sigma().inverse();
  BlockBijections blocks;
  for (unsigned i = 0; i < s.blocks().size(); ++i)
    blocks.push_back(s.blocks()[sigma_inv(i)].inverse());
  return StructuredSymmetry(s.space(), std::move(sigma_inv), std::move(blocks));
}

BlockBijections conjugate_by_permutation(BlockBijections const &blocks,
                                         BlockPermutation const &sigma,
                                         Partition const &pi)
{
  if (!is_admissible(sigma, pi))
    throw Error(Errc::NotAdmissible, "conjugating permutation mixes block sizes");
  if (blocks.size() != pi.m())
    throw Error(Errc::SpaceMismatch, "block count does not match the partition");
  BlockBijections out;
  out.reserve(blocks.size());
  for (unsigned i = 0; i < blocks.size(); ++i)
    out.push_back(blocks[sigma(i)]);
  return out;
}

StructuredSymmetry random_symmetry(Space const &space, std::uint64_t seed)
{
  std::mt19937_64 rng(seed);
  auto const &pi = space.partition();

  std::vector<unsigned> image(pi.m());
  std::iota(image.begin(), image.end(), 0u);
  unsigned start = 0;
  for (auto const &cls : pi.profile()) {
    detail::fisher_yates(rng, std::span<unsigned>(image).subspan(start, cls.multiplicity));
    start += cls.multiplicity;
  }

  BlockBijections blocks;
  for (unsigned i = 0; i < pi.m(); ++i) {
    std::uint64_t size = space.block_size(i);
    if (size > kMaxEnumerable)
      throw Error(Errc::SpaceTooLarge, "block " + std::to_string(i + 1) + " is too large");
    std::vector<std::uint32_t> table(size);
    std::iota(table.begin(), table.end(), 0u);
    detail::fisher_yates(rng, std::span<std::uint32_t>(table));
    blocks.emplace_back(std::move(table));
  }
  return StructuredSymmetry(space, BlockPermutation(std::move(image)), std::move(blocks));
}

} // namespace pimetric
