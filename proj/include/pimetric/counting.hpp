#ifndef PIMETRIC_COUNTING_HPP
#define PIMETRIC_COUNTING_HPP

#include <string>

#include "pimetric/bigint.hpp"
#include "pimetric/pispace.hpp"

namespace pimetric
{

/// Largest q^{k_i} whose factorial the order formulas will evaluate; beyond
/// it they throw `Overflow`.
inline constexpr unsigned long long kMaxFactorialArgument = 1ULL << 16;

/// |S_pi| = prod_j (m_j!) over the size classes.
BigInt s_pi_order(SizeProfile const &profile);

/// |M| = prod_i (q^{k_i})!.
BigInt m_order(Partition const &pi, unsigned q);

/// |Symm(F_q^n, d_pi)| = |S_pi| * |M|.
BigInt symm_order(Partition const &pi, unsigned q);

/// |Aut(F_q^n, d_pi)| = |S_pi| * prod_i |GL(k_i, q)|.
BigInt aut_order(Partition const &pi, unsigned q);

struct HammingOrders
{
  BigInt symm; // n! (q!)^n
  BigInt aut;  // n! (q-1)^n
};

HammingOrders hamming_orders(unsigned n, unsigned q);

/// Decimal rendering of an exact order.
std::string to_decimal(BigInt const &x);

} // namespace pimetric

#endif // PIMETRIC_COUNTING_HPP
