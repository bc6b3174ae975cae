#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace bperm {

using BigInt = boost::multiprecision::cpp_int;

inline std::string to_string(const BigInt& x) { return x.str(); }

BigInt factorial(unsigned n);
BigInt binomial(long long n, long long k);

}  // namespace bperm
