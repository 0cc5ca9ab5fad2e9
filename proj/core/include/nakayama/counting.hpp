#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "nakayama/algebra.hpp"

namespace nakayama {

using BigInt = boost::multiprecision::cpp_int;

/// Exact C(n, k); 0 when k > n.
BigInt binomial(unsigned n, unsigned k);

/// sum_{j=1}^{n} C(n,j) * j^(n-j), with j^0 = 1.
BigInt count_formula(Rank n);

enum class CountMethod { Formula, Enumeration };

struct CountResult {
  Rank n;
  BigInt value;
  CountMethod method;
};

/// Enumeration walks every complete exceptional sequence, so it is only
/// practical for small ranks.
CountResult count(Rank n, CountMethod method);

std::string to_string(const BigInt& value);

}  // namespace nakayama
