#include "pimetric/counting.hpp"

#include "pimetric/autgroup.hpp"
#include "pimetric/error.hpp"

namespace pimetric
{

namespace
{

BigInt factorial(unsigned long long x)
{
  BigInt r = 1;
  for (unsigned long long j = 2; j <= x; ++j)
    r *= j;
  return r;
}

void require_prime_power(unsigned q)
{
  if (prime_power(q).first == 0)
    throw Error(Errc::NotPrimePower, std::to_string(q) + " is not a prime power");
}

} // namespace

BigInt s_pi_order(SizeProfile const &profile)
{
  BigInt r = 1;
  for (auto const &cls : profile)
    r *= factorial(cls.multiplicity);
  return r;
}

BigInt m_order(Partition const &pi, unsigned q)
{
  require_prime_power(q);
  BigInt r = 1;
  for (unsigned k : pi.blocks()) {
    unsigned long long size = 1;
    for (unsigned j = 0; j < k; ++j) {
      size *= q;
      if (size > kMaxFactorialArgument)
        throw Error(Errc::Overflow, "(q^" + std::to_string(k) + ")! exceeds the budget of " +
                                        std::to_string(kMaxFactorialArgument) + "!");
    }
    r *= factorial(size);
  }
  return r;
}

BigInt symm_order(Partition const &pi, unsigned q)
{
  return s_pi_order(pi.profile()) * m_order(pi, q);
}

BigInt aut_order(Partition const &pi, unsigned q)
{
  require_prime_power(q);
  BigInt r = s_pi_order(pi.profile());
  for (unsigned k : pi.blocks())
    r *= gl_order(k, q);
  return r;
}

HammingOrders hamming_orders(unsigned n, unsigned q)
{
  require_prime_power(q);
  if (n == 0)
    throw Error(Errc::InvalidArgument, "length must be positive");
  BigInt n_fact = factorial(n);
  return {n_fact * boost::multiprecision::pow(factorial(q), n),
          n_fact * boost::multiprecision::pow(BigInt(q - 1), n)};
}

std::string to_decimal(BigInt const &x)
{
  return x.str();
}

} // namespace pimetric
