#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nakayama/algebra.hpp"

namespace nakayama {

/// (m, n) is exceptional iff m != n, Hom(n, m) = 0 and Ext^k(n, m) = 0 for
/// k = 1..rank-1.
bool is_exceptional_pair(Rank rank, const Indec& m, const Indec& n);

/// Vertex-inequality form of the same predicate:
///   ([x],[y])         x < y
///   ([x],[y,y+1])     x != y
///   ([x,x+1],[y])     y != x+1
///   ([x,x+1],[y,y+1]) y not in {x, x+1}
bool is_exceptional_pair_closed_form(const Indec& m, const Indec& n);

/// Pairwise distinct and every earlier/later pair exceptional. Items must be
/// valid for `rank`.
bool is_exceptional_sequence(Rank rank, const std::vector<Indec>& items);

/// An exceptional sequence. Positions handed out by this class are 1-based.
class ExceptionalSequence {
 public:
  /// Throws std::invalid_argument if items are invalid for the rank or not
  /// exceptional.
  ExceptionalSequence(Rank rank, std::vector<Indec> items);

  Rank rank() const noexcept { return rank_; }
  const std::vector<Indec>& items() const noexcept { return items_; }
  std::size_t size() const noexcept { return items_.size(); }
  bool complete() const noexcept { return items_.size() == static_cast<std::size_t>(rank_.value()); }

  /// Module at 1-based position i.
  const Indec& at(std::size_t i) const { return items_.at(i - 1); }

  /// 1-based position of m, if present.
  std::optional<std::size_t> index_of(const Indec& m) const;
  bool contains(const Indec& m) const { return index_of(m).has_value(); }

  friend bool operator==(const ExceptionalSequence& a, const ExceptionalSequence& b) {
    return a.rank_ == b.rank_ && a.items_ == b.items_;
  }
  friend auto operator<=>(const ExceptionalSequence& a, const ExceptionalSequence& b) {
    return a.items_ <=> b.items_;
  }

 private:
  struct Trusted {};
  ExceptionalSequence(Trusted, Rank rank, std::vector<Indec> items) : rank_(rank), items_(std::move(items)) {}
  friend std::vector<ExceptionalSequence> enumerate_complete(Rank n);

  Rank rank_;
  std::vector<Indec> items_;
};

/// "[[6,7],[2],[1,2]]" form.
std::string to_string(const ExceptionalSequence& e);
std::string format_modules(const std::vector<Indec>& items);

/// Parses the bracketed, comma-separated list of module literals. No
/// whitespace is accepted. Throws ParseError naming the bad token.
std::vector<Indec> parse_modules(std::string_view text);

/// Parses and checks a complete exceptional sequence whose rank is its
/// length. Throws ParseError or std::invalid_argument.
ExceptionalSequence parse_complete_sequence(std::string_view text);

/// All complete exceptional sequences, lexicographic in the canonical module
/// order. Depth-first, extending a prefix only by modules that form an
/// exceptional pair with every earlier element.
std::vector<ExceptionalSequence> enumerate_complete(Rank n);

enum class ChainDirection { Projective, Injective };

/// Projective t-chain (P(Omega^t S), ..., P(S), S) or injective t-chain
/// (S, I(S), ..., I(Sigma^t S)) of a simple S.
struct Chain {
  Indec root;
  ChainDirection direction;
  int t;
  std::vector<Indec> elements;
};

/// Requires 0 <= t <= pdim(S) - 1; throws std::out_of_range otherwise.
Chain projective_chain(const Indec& simple, int t, Rank n);

/// Requires 0 <= t <= indim(S) - 1; throws std::out_of_range otherwise.
Chain injective_chain(const Indec& simple, int t, Rank n);

/// The chain from `simple` up to and including `target`, if target lies on
/// one of its chains (either direction).
std::optional<Chain> chain_to(const Indec& simple, const Indec& target, Rank n);

/// Position of the unique simple S in E whose chain from S to E_i lies
/// entirely in E. E must be complete and E_i nonsimple. Throws
/// InvariantViolation when zero or several chains qualify, or when the
/// chain's members are out of order in E.
std::size_t chain_root(const ExceptionalSequence& e, std::size_t i);

}  // namespace nakayama
