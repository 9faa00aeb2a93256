#ifndef PIMETRIC_FFIELD_HPP
#define PIMETRIC_FFIELD_HPP

#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

namespace pimetric
{

/// Raw element encoding. For a prime field this is the residue; for GF(p^e)
/// it is sum_j c_j p^j where c_j is the coefficient of x^j of the polynomial
/// representative. 0 is the additive and 1 the multiplicative identity.
using Elem = std::uint8_t;

/**
 * @brief Finite field GF(q), q = p^e <= 256, backed by full lookup tables.
 *
 * `Field` is a cheap handle onto immutable shared tables, so copies may be
 * passed around and used concurrently. Two handles compare equal iff they
 * describe the same order q (the reduction polynomial is pinned per q).
 *
 * Reduction polynomials are chosen as the monic irreducible polynomial of
 * degree e whose lower coefficients, read as base-p digits c_0 + c_1 p + ...,
 * form the smallest number. This yields x^2+x+1 for GF(4), x^3+x+1 for
 * GF(8), x^2+1 for GF(9) and x^8+x^4+x^3+x+1 for GF(256).
 */
class Field
{
public:
  /// Throws `NotPrimePower` unless q is a prime power in [2, 256].
  static Field make(unsigned q);

  unsigned p() const noexcept { return _t->p; }
  unsigned e() const noexcept { return _t->e; }
  unsigned q() const noexcept { return _t->q; }

  /// Coefficients c_0..c_e of the monic reduction polynomial (c_e = 1).
  /// For e = 1 this is x, which is never used for reduction.
  std::vector<unsigned> const &reduction_poly() const noexcept
  { return _t->poly; }

  Elem add(Elem a, Elem b) const noexcept { return _t->add[idx(a, b)]; }
  Elem sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }
  Elem neg(Elem a) const noexcept { return _t->neg[a]; }
  Elem mul(Elem a, Elem b) const noexcept { return _t->mul[idx(a, b)]; }
  /// Throws `DivisionByZero` for a = 0.
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

  bool contains(unsigned a) const noexcept { return a < _t->q; }

  std::vector<Elem> elements() const;

  friend bool operator==(Field const &lhs, Field const &rhs) noexcept
  { return lhs._t == rhs._t || lhs._t->q == rhs._t->q; }

private:
  struct Tables
  {
    unsigned p = 0, e = 0, q = 0;
    std::vector<unsigned> poly;
    std::vector<Elem> add, mul, neg, inv;
  };

  explicit Field(std::shared_ptr<Tables const> t) : _t(std::move(t)) {}

  std::size_t idx(Elem a, Elem b) const noexcept
  { return static_cast<std::size_t>(a) * _t->q + b; }

  std::shared_ptr<Tables const> _t;
};

/// Element bound to its field; arithmetic across different fields throws
/// `FieldMismatch`.
class FieldElement
{
public:
  FieldElement(Field field, unsigned index);

  Field const &field() const noexcept { return _field; }
  Elem index() const noexcept { return _index; }

  FieldElement inv() const;

  friend FieldElement operator+(FieldElement const &a, FieldElement const &b);
  friend FieldElement operator-(FieldElement const &a, FieldElement const &b);
  friend FieldElement operator*(FieldElement const &a, FieldElement const &b);
  friend FieldElement operator/(FieldElement const &a, FieldElement const &b);
  friend FieldElement operator-(FieldElement const &a);

  friend bool operator==(FieldElement const &a, FieldElement const &b)
  { return a._field == b._field && a._index == b._index; }

private:
  Field _field;
  Elem _index;
};

/// Factor q as p^e; returns {0, 0} when q is not a prime power.
std::pair<unsigned, unsigned> prime_power(unsigned q) noexcept;

inline Field make_field(unsigned q) { return Field::make(q); }

} // namespace pimetric

#endif // PIMETRIC_FFIELD_HPP
