#include "pimetric/autgroup.hpp"

#include "pimetric/error.hpp"
#include "rng.hpp"

namespace pimetric
{

Elem determinant(Field const &field, unsigned k, std::span<Elem const> entries)
{
  if (entries.size() != static_cast<std::size_t>(k) * k)
    throw Error(Errc::InvalidArgument, "matrix must have k*k entries");
  std::vector<Elem> a(entries.begin(), entries.end());
  Elem det = 1;
  for (unsigned col = 0; col < k; ++col) {
    unsigned pivot = col;
    while (pivot < k && a[pivot * k + col] == 0)
      ++pivot;
    if (pivot == k)
      return 0;
    if (pivot != col) {
      for (unsigned j = 0; j < k; ++j)
        std::swap(a[pivot * k + j], a[col * k + j]);
      det = field.neg(det);
    }
    Elem p = a[col * k + col];
    det = field.mul(det, p);
    Elem p_inv = field.inv(p);
    for (unsigned r = col + 1; r < k; ++r) {
      Elem factor = field.mul(a[r * k + col], p_inv);
      if (factor == 0)
        continue;
      for (unsigned j = col; j < k; ++j)
        a[r * k + j] = field.sub(a[r * k + j], field.mul(factor, a[col * k + j]));
    }
  }
  return det;
}

BlockMatrix::BlockMatrix(Field field, unsigned k, std::vector<Elem> entries)
  : _field(std::move(field)),
    _k(k),
    _entries(std::move(entries))
{
  if (k == 0 || _entries.size() != static_cast<std::size_t>(k) * k)
    throw Error(Errc::InvalidArgument, "block matrix must be k x k with k >= 1");
  for (Elem c : _entries) {
    if (!_field.contains(c))
      throw Error(Errc::InvalidArgument, "matrix entry outside the field");
  }
  if (determinant(_field, _k, _entries) == 0)
    throw Error(Errc::NotInvertible, "block matrix is singular");
}

BlockMatrix BlockMatrix::identity(Field field, unsigned k)
{
  std::vector<Elem> entries(static_cast<std::size_t>(k) * k, 0);
  for (unsigned j = 0; j < k; ++j)
    entries[j * k + j] = 1;
  return BlockMatrix(std::move(field), k, std::move(entries));
}

void BlockMatrix::apply(std::span<Elem const> x, std::span<Elem> y) const
{
  for (unsigned r = 0; r < _k; ++r) {
    Elem acc = 0;
    for (unsigned c = 0; c < _k; ++c)
      acc = _field.add(acc, _field.mul((*this)(r, c), x[c]));
    y[r] = acc;
  }
}

LinearBlockMap::LinearBlockMap(Space space, BlockPermutation sigma,
                               std::vector<BlockMatrix> mats)
  : _space(std::move(space)),
    _sigma(std::move(sigma)),
    _mats(std::move(mats))
{
  auto const &pi = _space.partition();
  if (_sigma.degree() != pi.m() || _mats.size() != pi.m())
    throw Error(Errc::InvalidArgument, "expected " + std::to_string(pi.m()) + " blocks");
  if (!is_admissible(_sigma, pi))
    throw Error(Errc::NotAdmissible, "block permutation mixes block sizes");
  for (unsigned i = 0; i < pi.m(); ++i) {
    if (_mats[i].k() != pi.block(i) || !(_mats[i].field() == _space.field()))
      throw Error(Errc::InvalidArgument, "matrix " + std::to_string(i + 1) +
                                             " does not fit its block");
  }
}

LinearBlockMap LinearBlockMap::identity(Space const &space)
{
  std::vector<BlockMatrix> mats;
  for (unsigned k : space.partition().blocks())
    mats.push_back(BlockMatrix::identity(space.field(), k));
  return LinearBlockMap(space, BlockPermutation::identity(space.m()), std::move(mats));
}

bool is_linear(ExplicitMap const &f)
{
  IndexedSpace space(f.space());
  std::uint32_t const size = space.size();
  for (std::uint32_t u = 0; u < size; ++u) {
    for (std::uint32_t v = u; v < size; ++v) {
      if (f(space.add(u, v)) != space.add(f(u), f(v)))
        return false;
    }
  }
  for (Elem c : f.space().field().elements()) {
    for (std::uint32_t v = 0; v < size; ++v) {
      if (f(space.scale(c, v)) != space.scale(c, f(v)))
        return false;
    }
  }
  return true;
}

bool is_automorphism(ExplicitMap const &f)
{
  return f.is_bijective() && is_symmetry(f) && is_linear(f);
}

StructuredSymmetry to_structured(LinearBlockMap const &l)
{
  auto const &space = l.space();
  BlockBijections blocks;
  for (unsigned i = 0; i < space.m(); ++i) {
    auto const &a = l.mats()[i];
    std::uint64_t size = space.block_size(i);
    if (size > kMaxEnumerable)
      throw Error(Errc::SpaceTooLarge, "block " + std::to_string(i + 1) + " is too large");
    std::vector<Elem> x(a.k()), y(a.k());
    std::vector<std::uint32_t> table(size);
    for (std::uint32_t v = 0; v < size; ++v) {
      space.block_coords(v, a.k(), x);
      a.apply(x, y);
      table[v] = space.block_index(y);
    }
    blocks.emplace_back(std::move(table));
  }
  return StructuredSymmetry(space, l.sigma(), std::move(blocks));
}

BlockVector apply_linear(LinearBlockMap const &l, BlockVector const &v)
{
  require_same_space(l.space(), v.space());
  auto const &pi = l.space().partition();
  std::vector<Elem> out(pi.n());
  for (unsigned i = 0; i < pi.m(); ++i) {
    unsigned j = l.sigma()(i);
    l.mats()[i].apply(v.block(i), std::span<Elem>(out).subspan(pi.offset(j), pi.block(j)));
  }
  return BlockVector(l.space(), std::move(out));
}

ExplicitMap expand(LinearBlockMap const &l)
{
  return expand(to_structured(l));
}

LinearBlockMap decompose_linear(ExplicitMap const &f)
{
  if (!is_automorphism(f))
    throw Error(Errc::NotAnAutomorphism, "map is not a linear symmetry");
  StructuredSymmetry s = decompose(f);
  auto const &space = f.space();
  std::vector<BlockMatrix> mats;
  for (unsigned i = 0; i < space.m(); ++i) {
    unsigned k = space.partition().block(i);
    std::vector<Elem> entries(static_cast<std::size_t>(k) * k);
    std::vector<Elem> column(k);
    std::uint32_t unit = 1;
    for (unsigned j = 1; j < k; ++j)
      unit *= space.q();
    // e_j has block index q^{k-1-j}.
    for (unsigned j = 0; j < k; ++j, unit /= space.q()) {
      space.block_coords(s.blocks()[i](unit), k, column);
      for (unsigned r = 0; r < k; ++r)
        entries[r * k + j] = column[r];
    }
    mats.emplace_back(space.field(), k, std::move(entries));
  }
  return LinearBlockMap(space, s.sigma(), std::move(mats));
}

BigInt gl_order(unsigned k, unsigned q)
{
  if (prime_power(q).first == 0)
    throw Error(Errc::NotPrimePower, std::to_string(q) + " is not a prime power");
  if (k == 0)
    throw Error(Errc::InvalidArgument, "matrix size must be positive");
  BigInt qk = boost::multiprecision::pow(BigInt(q), k);
  BigInt qj = 1;
  BigInt order = 1;
  for (unsigned j = 0; j < k; ++j) {
    order *= qk - qj;
    qj *= q;
  }
  return order;
}

LinearBlockMap random_automorphism(Space const &space, std::uint64_t seed)
{
  std::mt19937_64 rng(seed);
  auto const &pi = space.partition();

  std::vector<unsigned> image(pi.m());
  for (unsigned i = 0; i < pi.m(); ++i)
    image[i] = i;
  unsigned start = 0;
  for (auto const &cls : pi.profile()) {
    detail::fisher_yates(rng, std::span<unsigned>(image).subspan(start, cls.multiplicity));
    start += cls.multiplicity;
  }

  auto const &field = space.field();
  std::vector<BlockMatrix> mats;
  for (unsigned k : pi.blocks()) {
    std::vector<Elem> entries(static_cast<std::size_t>(k) * k);
    do {
      for (auto &c : entries)
        c = static_cast<Elem>(detail::uniform_below(rng, field.q()));
    } while (determinant(field, k, entries) == 0);
    mats.emplace_back(field, k, std::move(entries));
  }
  return LinearBlockMap(space, BlockPermutation(std::move(image)), std::move(mats));
}

} // namespace pimetric
