#include "nakayama/counting.hpp"

#include "nakayama/exceptional.hpp"

namespace nakayama {

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (unsigned i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;  // exact: result is C(n-k+i, i) here
  }
  return result;
}

BigInt count_formula(Rank rank) {
  const auto n = static_cast<unsigned>(rank.value());
  BigInt total = 0;
  for (unsigned j = 1; j <= n; ++j) total += binomial(n, j) * boost::multiprecision::pow(BigInt(j), n - j);
  return total;
}

CountResult count(Rank n, CountMethod method) {
  if (method == CountMethod::Formula) return {n, count_formula(n), method};
  return {n, BigInt(enumerate_complete(n).size()), method};
}

std::string to_string(const BigInt& value) { return value.str(); }

}  // namespace nakayama
