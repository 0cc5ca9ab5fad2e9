#pragma once

// The correspondence between complete exceptional sequences of rank n and
// idempotent self-maps of {1..n}.
//
// phi sends E to the tuple whose i-th entry is i for a simple E_i and, for a
// nonsimple E_i, the position of the unique simple whose chain up to E_i is
// contained in E. gamma inverts it: fixed points p_1 < ... < p_x of A carry
// simples [T_1] < ... < [T_x]; the a_i later positions mapping to p_i carry
// the injective chain of [T_i] (vertices below T_i), the b_i earlier ones
// carry the projective chain (vertices above T_i). The vertex blocks
// [T_i - a_i, T_i + b_i] tile 1..n in order, which pins every T_i.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "nakayama/algebra.hpp"
#include "nakayama/exceptional.hpp"

namespace nakayama {

/// True iff A(A(i)) = A(i) for every i. Entries are 1-based; an entry
/// outside 1..size throws std::domain_error.
bool is_idempotent(const std::vector<int>& values);

class IdempotentFunction {
 public:
  /// Throws std::domain_error unless values is a nonempty idempotent tuple.
  explicit IdempotentFunction(std::vector<int> values);

  static IdempotentFunction identity(Rank n);

  Rank rank() const { return Rank(static_cast<int>(values_.size())); }
  const std::vector<int>& values() const noexcept { return values_; }

  /// A(i), 1-based.
  int operator()(int i) const { return values_.at(static_cast<std::size_t>(i - 1)); }

  std::vector<int> fixed_points() const;

  friend bool operator==(const IdempotentFunction&, const IdempotentFunction&) = default;
  friend auto operator<=>(const IdempotentFunction&, const IdempotentFunction&) = default;

 private:
  std::vector<int> values_;
};

/// "7,2,2,4,4,7,7".
std::string to_string(const IdempotentFunction& a);
std::string format_tuple(const std::vector<int>& values);

/// Comma-separated positive integers, no whitespace. Throws ParseError.
std::vector<int> parse_tuple(std::string_view text);

/// All idempotent functions on {1..n}, lexicographic by tuple.
std::vector<IdempotentFunction> enumerate_idempotent(Rank n);

IdempotentFunction phi(const ExceptionalSequence& e);

/// Per-fixed-point data for gamma. Vectors are indexed by fixed point in
/// increasing order.
struct GammaPlan {
  int n = 0;
  std::vector<int> fixed_points;  // p_i
  std::vector<int> after_counts;  // a_i = #{q > p_i : A(q) = p_i}
  std::vector<int> before_counts; // b_i = #{q < p_i : A(q) = p_i}
  std::vector<int> totals;        // c_i = a_i + b_i + 1
  std::vector<int> simple_vertices; // T_i
};

GammaPlan build_gamma_plan(const IdempotentFunction& a);

/// True iff the plan satisfies its tiling constraints.
bool is_consistent(const GammaPlan& plan);

ExceptionalSequence gamma(const IdempotentFunction& a);

}  // namespace nakayama
