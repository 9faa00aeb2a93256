#include "pimetric/ffield.hpp"

#include <map>
#include <mutex>

#include "pimetric/error.hpp"

namespace pimetric
{

namespace
{

using Poly = std::vector<unsigned>; // coefficients, lowest degree first

bool is_prime(unsigned x) noexcept
{
  if (x < 2)
    return false;
  for (unsigned d = 2; d * d <= x; ++d) {
    if (x % d == 0)
      return false;
  }
  return true;
}

Poly digits(unsigned value, unsigned p, unsigned len)
{
  Poly out(len);
  for (unsigned j = 0; j < len; ++j) {
    out[j] = value % p;
    value /= p;
  }
  return out;
}

unsigned degree(Poly const &a)
{
  unsigned d = 0;
  for (unsigned j = 0; j < a.size(); ++j) {
    if (a[j] != 0)
      d = j;
  }
  return d;
}

bool is_zero(Poly const &a)
{
  for (unsigned c : a) {
    if (c != 0)
      return false;
  }
  return true;
}

unsigned inv_mod(unsigned a, unsigned p)
{
  for (unsigned x = 1; x < p; ++x) {
    if (a * x % p == 1)
      return x;
  }
  return 0;
}

// Remainder of a modulo a monic-or-not nonzero divisor over GF(p).
Poly poly_mod(Poly a, Poly const &divisor, unsigned p)
{
  unsigned dd = degree(divisor);
  unsigned lead_inv = inv_mod(divisor[dd], p);
  for (unsigned j = static_cast<unsigned>(a.size()); j-- > dd;) {
    if (a[j] == 0)
      continue;
    unsigned factor = a[j] * lead_inv % p;
    for (unsigned t = 0; t <= dd; ++t) {
      unsigned sub = factor * divisor[t] % p;
      a[j - dd + t] = (a[j - dd + t] + p - sub) % p;
    }
  }
  return a;
}

// Trial division by every monic polynomial of degree 1..e/2.
bool is_irreducible(Poly const &f, unsigned p)
{
  unsigned e = degree(f);
  for (unsigned d = 1; 2 * d <= e; ++d) {
    unsigned count = 1;
    for (unsigned j = 0; j < d; ++j)
      count *= p;
    for (unsigned low = 0; low < count; ++low) {
      Poly g = digits(low, p, d + 1);
      g[d] = 1;
      if (is_zero(poly_mod(f, g, p)))
        return false;
    }
  }
  return true;
}

Poly pinned_reduction_poly(unsigned p, unsigned e)
{
  if (e == 1)
    return {0, 1};
  unsigned count = 1;
  for (unsigned j = 0; j < e; ++j)
    count *= p;
  for (unsigned low = 0; low < count; ++low) {
    Poly f = digits(low, p, e + 1);
    f[e] = 1;
    if (is_irreducible(f, p))
      return f;
  }
  throw Error(Errc::NotPrimePower, "no irreducible polynomial found");
}

unsigned encode(Poly const &a, unsigned p, unsigned e)
{
  unsigned v = 0;
  for (unsigned j = e; j-- > 0;)
    v = v * p + a[j];
  return v;
}

} // namespace

std::pair<unsigned, unsigned> prime_power(unsigned q) noexcept
{
  if (q < 2)
    return {0, 0};
  unsigned p = 2;
  while (q % p != 0)
    ++p;
  if (!is_prime(p))
    return {0, 0};
  unsigned e = 0;
  while (q % p == 0) {
    q /= p;
    ++e;
  }
  if (q != 1)
    return {0, 0};
  return {p, e};
}

Field Field::make(unsigned q)
{
  if (q < 2 || q > 256)
    throw Error(Errc::NotPrimePower, "field order must lie in [2, 256], got " +
                                         std::to_string(q));
  auto [p, e] = prime_power(q);
  if (p == 0)
    throw Error(Errc::NotPrimePower, std::to_string(q) + " is not a prime power");

  static std::mutex mutex;
  static std::map<unsigned, std::shared_ptr<Tables const>> cache;

  std::lock_guard<std::mutex> lock(mutex);
  if (auto it = cache.find(q); it != cache.end())
    return Field(it->second);

  auto t = std::make_shared<Tables>();
  t->p = p;
  t->e = e;
  t->q = q;
  t->poly = pinned_reduction_poly(p, e);
  t->add.resize(q * q);
  t->mul.resize(q * q);
  t->neg.resize(q);
  t->inv.assign(q, 0);

  for (unsigned a = 0; a < q; ++a) {
    Poly pa = digits(a, p, e);
    for (unsigned b = 0; b < q; ++b) {
      Poly pb = digits(b, p, e);

      Poly sum(e);
      for (unsigned j = 0; j < e; ++j)
        sum[j] = (pa[j] + pb[j]) % p;
      t->add[a * q + b] = static_cast<Elem>(encode(sum, p, e));

      Poly prod(2 * e - 1, 0);
      for (unsigned i = 0; i < e; ++i) {
        for (unsigned j = 0; j < e; ++j)
          prod[i + j] = (prod[i + j] + pa[i] * pb[j]) % p;
      }
      if (e > 1)
        prod = poly_mod(prod, t->poly, p);
      t->mul[a * q + b] = static_cast<Elem>(encode(prod, p, e));
    }
  }

  for (unsigned a = 0; a < q; ++a) {
    for (unsigned b = 0; b < q; ++b) {
      if (t->add[a * q + b] == 0)
        t->neg[a] = static_cast<Elem>(b);
      if (t->mul[a * q + b] == 1)
        t->inv[a] = static_cast<Elem>(b);
    }
  }

  std::shared_ptr<Tables const> shared = std::move(t);
  cache.emplace(q, shared);
  return Field(shared);
}

Elem Field::inv(Elem a) const
{
  if (a == 0)
    throw Error(Errc::DivisionByZero, "inverse of zero");
  return _t->inv[a];
}

std::vector<Elem> Field::elements() const
{
  std::vector<Elem> out(q());
  for (unsigned a = 0; a < q(); ++a)
    out[a] = static_cast<Elem>(a);
  return out;
}

FieldElement::FieldElement(Field field, unsigned index)
  : _field(std::move(field)),
    _index(0)
{
  if (!_field.contains(index))
    throw Error(Errc::InvalidArgument, "element index " + std::to_string(index) +
                                           " outside GF(" +
                                           std::to_string(_field.q()) + ")");
  _index = static_cast<Elem>(index);
}

namespace
{

Field const &common_field(FieldElement const &a, FieldElement const &b)
{
  if (!(a.field() == b.field()))
    throw Error(Errc::FieldMismatch, "GF(" + std::to_string(a.field().q()) +
                                         ") vs GF(" +
                                         std::to_string(b.field().q()) + ")");
  return a.field();
}

} // namespace

FieldElement FieldElement::inv() const
{
  return FieldElement(_field, _field.inv(_index));
}

FieldElement operator+(FieldElement const &a, FieldElement const &b)
{
  auto const &f = common_field(a, b);
  return FieldElement(f, f.add(a.index(), b.index()));
}

FieldElement operator-(FieldElement const &a, FieldElement const &b)
{
  auto const &f = common_field(a, b);
  return FieldElement(f, f.sub(a.index(), b.index()));
}

FieldElement operator*(FieldElement const &a, FieldElement const &b)
{
  auto const &f = common_field(a, b);
  return FieldElement(f, f.mul(a.index(), b.index()));
}

FieldElement operator/(FieldElement const &a, FieldElement const &b)
{
  auto const &f = common_field(a, b);
  return FieldElement(f, f.div(a.index(), b.index()));
}

FieldElement operator-(FieldElement const &a)
{
  return FieldElement(a.field(), a.field().neg(a.index()));
}

} // namespace pimetric
