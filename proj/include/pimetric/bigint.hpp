#ifndef PIMETRIC_BIGINT_HPP
#define PIMETRIC_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace pimetric
{

/// Exact unbounded integer used for all group orders.
using BigInt = boost::multiprecision::cpp_int;

} // namespace pimetric

#endif // PIMETRIC_BIGINT_HPP
