#ifndef TGRS_BIGINT_HPP
#define TGRS_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>

namespace tgrs {

// Weight counts and subset counts are exact arbitrary-precision integers;
// values like binom(q-1,k)*(q-1) overflow 64 bits well inside the supported
// field sizes.
using BigInt = boost::multiprecision::cpp_int;

BigInt binomial(std::uint64_t n, std::uint64_t k);
BigInt bigint_pow(std::uint64_t base, std::uint64_t exp);

}  // namespace tgrs

#endif
