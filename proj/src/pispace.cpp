#include "pimetric/pispace.hpp"

#include <charconv>
#include <sstream>

#include "pimetric/error.hpp"

namespace pimetric
{

Partition::Partition(std::vector<unsigned> blocks)
  : _blocks(std::move(blocks))
{
  if (_blocks.empty())
    throw Error(Errc::InvalidPartition, "partition needs at least one block");
  for (std::size_t i = 0; i < _blocks.size(); ++i) {
    if (_blocks[i] == 0)
      throw Error(Errc::InvalidPartition, "block sizes must be positive");
    if (i > 0 && _blocks[i] > _blocks[i - 1])
      throw Error(Errc::PartitionNotSorted,
                  "block sizes must be non-increasing: " + to_string());
  }
  _offsets.reserve(_blocks.size());
  for (unsigned k : _blocks) {
    _offsets.push_back(_n);
    _n += k;
  }
}

Partition Partition::parse(std::string_view text)
{
  std::vector<unsigned> blocks;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos)
      comma = text.size();
    auto token = text.substr(pos, comma - pos);
    while (!token.empty() && token.front() == ' ')
      token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ')
      token.remove_suffix(1);
    unsigned value = 0;
    auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || end != token.data() + token.size())
      throw Error(Errc::ParseError, "bad partition '" + std::string(text) + "'");
    blocks.push_back(value);
    pos = comma + 1;
  }
  return Partition(std::move(blocks));
}

Partition Partition::ones(unsigned n)
{
  return Partition(std::vector<unsigned>(n, 1));
}

SizeProfile Partition::profile() const
{
  SizeProfile out;
  for (unsigned k : _blocks) {
    if (!out.empty() && out.back().size == k)
      ++out.back().multiplicity;
    else
      out.push_back({k, 1});
  }
  return out;
}

std::string Partition::to_string() const
{
  std::string out;
  for (std::size_t i = 0; i < _blocks.size(); ++i) {
    if (i > 0)
      out += ',';
    out += std::to_string(_blocks[i]);
  }
  return out;
}

namespace
{

// q^k saturating at `cap + 1`.
std::uint64_t bounded_pow(std::uint64_t q, unsigned k, std::uint64_t cap)
{
  std::uint64_t r = 1;
  for (unsigned j = 0; j < k; ++j) {
    if (r > cap / q)
      return cap + 1;
    r *= q;
  }
  return r;
}

constexpr std::uint64_t kIndexCap = std::uint64_t{1} << 62;

} // namespace

Space::Space(Field field, Partition partition)
{
  auto d = std::make_shared<Data>(Data{std::move(field), std::move(partition), {}, {}});
  unsigned m = d->partition.m();
  d->block_sizes.resize(m);
  d->block_weights.resize(m);
  std::uint64_t weight = 1;
  for (unsigned i = m; i-- > 0;) {
    d->block_sizes[i] = bounded_pow(d->field.q(), d->partition.block(i), kIndexCap);
    d->block_weights[i] = weight;
    if (weight <= kIndexCap / d->block_sizes[i])
      weight *= d->block_sizes[i];
    else
      weight = kIndexCap + 1;
  }
  _d = std::move(d);
}

std::uint64_t Space::size(std::uint64_t limit) const
{
  std::uint64_t s = bounded_pow(q(), n(), limit);
  if (s > limit)
    throw Error(Errc::SpaceTooLarge, describe() + " has more than " +
                                         std::to_string(limit) + " vectors");
  return s;
}

void Space::split(std::uint64_t index, std::span<std::uint32_t> blocks) const
{
  for (unsigned i = m(); i-- > 0;) {
    blocks[i] = static_cast<std::uint32_t>(index % _d->block_sizes[i]);
    index /= _d->block_sizes[i];
  }
}

std::uint64_t Space::join(std::span<std::uint32_t const> blocks) const
{
  std::uint64_t index = 0;
  for (unsigned i = 0; i < m(); ++i)
    index = index * _d->block_sizes[i] + blocks[i];
  return index;
}

void Space::block_coords(std::uint32_t x, unsigned k, std::span<Elem> out) const
{
  for (unsigned j = k; j-- > 0;) {
    out[j] = static_cast<Elem>(x % q());
    x /= q();
  }
}

std::uint32_t Space::block_index(std::span<Elem const> coords) const
{
  std::uint32_t x = 0;
  for (Elem c : coords)
    x = x * q() + c;
  return x;
}

std::string Space::describe() const
{
  return "q=" + std::to_string(q()) + " pi=" + partition().to_string();
}

void require_same_space(Space const &a, Space const &b)
{
  if (!(a == b))
    throw Error(Errc::SpaceMismatch, a.describe() + " vs " + b.describe());
}

BlockVector::BlockVector(Space space)
  : _space(std::move(space)),
    _coords(_space.n(), 0)
{}

BlockVector::BlockVector(Space space, std::vector<Elem> coords)
  : _space(std::move(space)),
    _coords(std::move(coords))
{
  if (_coords.size() != _space.n())
    throw Error(Errc::InvalidArgument, "expected " + std::to_string(_space.n()) +
                                           " coordinates, got " +
                                           std::to_string(_coords.size()));
  for (Elem c : _coords) {
    if (!_space.field().contains(c))
      throw Error(Errc::InvalidArgument, "coordinate " + std::to_string(c) +
                                             " outside GF(" +
                                             std::to_string(_space.q()) + ")");
  }
}

BlockVector BlockVector::from_index(Space space, std::uint64_t index)
{
  std::vector<Elem> coords(space.n());
  for (unsigned j = space.n(); j-- > 0;) {
    coords[j] = static_cast<Elem>(index % space.q());
    index /= space.q();
  }
  return BlockVector(std::move(space), std::move(coords));
}

std::span<Elem const> BlockVector::block(unsigned i) const
{
  auto const &p = _space.partition();
  return std::span<Elem const>(_coords).subspan(p.offset(i), p.block(i));
}

bool BlockVector::block_is_zero(unsigned i) const
{
  for (Elem c : block(i)) {
    if (c != 0)
      return false;
  }
  return true;
}

std::uint64_t BlockVector::index() const
{
  std::uint64_t x = 0;
  for (Elem c : _coords)
    x = x * _space.q() + c;
  return x;
}

BlockVector BlockVector::operator+(BlockVector const &rhs) const
{
  require_same_space(_space, rhs._space);
  auto const &f = _space.field();
  std::vector<Elem> out(_coords.size());
  for (std::size_t j = 0; j < out.size(); ++j)
    out[j] = f.add(_coords[j], rhs._coords[j]);
  return BlockVector(_space, std::move(out));
}

BlockVector BlockVector::operator-(BlockVector const &rhs) const
{
  require_same_space(_space, rhs._space);
  auto const &f = _space.field();
  std::vector<Elem> out(_coords.size());
  for (std::size_t j = 0; j < out.size(); ++j)
    out[j] = f.add(_coords[j], f.neg(rhs._coords[j]));
  return BlockVector(_space, std::move(out));
}

BlockVector BlockVector::scaled(Elem c) const
{
  auto const &f = _space.field();
  std::vector<Elem> out(_coords.size());
  for (std::size_t j = 0; j < out.size(); ++j)
    out[j] = f.mul(c, _coords[j]);
  return BlockVector(_space, std::move(out));
}

unsigned pi_weight(BlockVector const &v)
{
  unsigned w = 0;
  for (unsigned i = 0; i < v.space().m(); ++i)
    w += !v.block_is_zero(i);
  return w;
}

unsigned pi_distance(BlockVector const &u, BlockVector const &v)
{
  return pi_weight(u - v);
}

std::vector<BlockVector> enumerate_vectors(Space const &space)
{
  std::uint64_t total = space.size();
  std::vector<BlockVector> out;
  out.reserve(total);
  for (std::uint64_t x = 0; x < total; ++x)
    out.push_back(BlockVector::from_index(space, x));
  return out;
}

std::vector<BlockVector> row_basis(GeneratorMatrix const &g)
{
  auto const &f = g.space.field();
  unsigned n = g.space.n();
  std::vector<std::vector<Elem>> rows;
  for (auto const &r : g.rows) {
    require_same_space(g.space, r.space());
    rows.push_back(r.coords());
  }

  std::size_t rank = 0;
  for (unsigned col = 0; col < n && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0)
      ++pivot;
    if (pivot == rows.size())
      continue;
    std::swap(rows[rank], rows[pivot]);
    Elem scale = f.inv(rows[rank][col]);
    for (auto &c : rows[rank])
      c = f.mul(scale, c);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0)
        continue;
      Elem factor = rows[r][col];
      for (unsigned j = 0; j < n; ++j)
        rows[r][j] = f.sub(rows[r][j], f.mul(factor, rows[rank][j]));
    }
    ++rank;
  }

  std::vector<BlockVector> basis;
  for (std::size_t r = 0; r < rank; ++r)
    basis.emplace_back(g.space, rows[r]);
  return basis;
}

unsigned code_min_distance(GeneratorMatrix const &g)
{
  auto basis = row_basis(g);
  if (basis.empty())
    throw Error(Errc::ZeroCode, "generator matrix spans the zero code");

  unsigned q = g.space.q();
  std::uint64_t words = 1;
  for (std::size_t r = 0; r < basis.size(); ++r) {
    words *= q;
    if (words > kMaxEnumerable)
      throw Error(Errc::SpaceTooLarge, "code has more than 2^20 codewords");
  }

  auto const &f = g.space.field();
  unsigned n = g.space.n();
  unsigned best = g.space.m();
  std::vector<Elem> coeffs(basis.size(), 0);
  std::vector<Elem> word(n);
  for (std::uint64_t w = 1; w < words; ++w) {
    std::uint64_t x = w;
    for (auto &c : coeffs) {
      c = static_cast<Elem>(x % q);
      x /= q;
    }
    std::fill(word.begin(), word.end(), Elem{0});
    for (std::size_t r = 0; r < basis.size(); ++r) {
      if (coeffs[r] == 0)
        continue;
      auto const &row = basis[r].coords();
      for (unsigned j = 0; j < n; ++j)
        word[j] = f.add(word[j], f.mul(coeffs[r], row[j]));
    }
    best = std::min(best, pi_weight(BlockVector(g.space, word)));
  }
  return best;
}

IndexedSpace::IndexedSpace(Space space, std::uint64_t limit)
  : _space(std::move(space))
{
  _size = static_cast<std::uint32_t>(_space.size(limit));
  _m = _space.m();
  _blocks.resize(static_cast<std::size_t>(_size) * _m);
  for (std::uint32_t v = 0; v < _size; ++v)
    _space.split(v, std::span<std::uint32_t>(&_blocks[static_cast<std::size_t>(v) * _m], _m));
  _weights.resize(_m);
  std::uint32_t w = 1;
  for (unsigned i = _m; i-- > 0;) {
    _weights[i] = w;
    w *= static_cast<std::uint32_t>(_space.block_size(i));
  }
}

namespace
{

template<typename Op>
std::uint32_t coordinatewise(Space const &space, std::uint32_t u, std::uint32_t v, Op op)
{
  unsigned q = space.q();
  std::uint32_t out = 0, scale = 1;
  for (unsigned j = 0; j < space.n(); ++j) {
    out += scale * op(static_cast<Elem>(u % q), static_cast<Elem>(v % q));
    u /= q;
    v /= q;
    scale *= q;
  }
  return out;
}

} // namespace

std::uint32_t IndexedSpace::add(std::uint32_t u, std::uint32_t v) const
{
  auto const &f = _space.field();
  return coordinatewise(_space, u, v, [&](Elem a, Elem b) { return f.add(a, b); });
}

std::uint32_t IndexedSpace::sub(std::uint32_t u, std::uint32_t v) const
{
  auto const &f = _space.field();
  return coordinatewise(_space, u, v, [&](Elem a, Elem b) { return f.sub(a, b); });
}

std::uint32_t IndexedSpace::scale(Elem c, std::uint32_t v) const
{
  auto const &f = _space.field();
  return coordinatewise(_space, v, v, [&](Elem a, Elem) { return f.mul(c, a); });
}

} // namespace pimetric
