#pragma once

// Rooted labeled forests of height at most one on {1..n}. Such a forest is
// the same data as an idempotent function: roots are the fixed points and
// every other label points at its root. Roots match the simples of the
// corresponding exceptional sequence, and a root's children match the
// nonsimple members of that simple's chain.

#include <string>
#include <string_view>
#include <vector>

#include "nakayama/bijection.hpp"
#include "nakayama/counting.hpp"

namespace nakayama {

class Forest {
 public:
  /// `parent[i-1]` is the parent of label i, or i itself for a root.
  /// Throws std::domain_error unless every non-root hangs off a root.
  Forest(Rank n, std::vector<int> parent);

  Rank rank() const { return Rank(static_cast<int>(parent_.size())); }
  std::vector<int> roots() const;
  bool is_root(int label) const { return parent(label) == label; }
  int parent(int label) const { return parent_.at(static_cast<std::size_t>(label - 1)); }
  std::vector<int> children(int root) const;

  friend bool operator==(const Forest&, const Forest&) = default;

 private:
  std::vector<int> parent_;
};

/// Unlabeled type: per-root child counts, sorted descending.
class ForestShape {
 public:
  explicit ForestShape(std::vector<int> child_counts);

  const std::vector<int>& child_counts() const noexcept { return child_counts_; }
  int node_count() const;

  /// Tree sizes (child count + 1), i.e. the partition of node_count().
  std::vector<int> tree_sizes() const;

  friend bool operator==(const ForestShape&, const ForestShape&) = default;
  friend auto operator<=>(const ForestShape&, const ForestShape&) = default;

 private:
  std::vector<int> child_counts_;
};

Forest forest_from_function(const IdempotentFunction& a);
IdempotentFunction function_from_forest(const Forest& f);
Forest forest_from_sequence(const ExceptionalSequence& e);

ForestShape shape(const Forest& f);

/// One shape per integer partition of n, partitions in reverse
/// lexicographic order: (n), (n-1,1), ..., (1,...,1).
std::vector<ForestShape> enumerate_shapes(Rank n);

/// n! * prod(s_t) / (prod(s_t!) * prod(m_s!)), s_t the tree sizes and m_s
/// the multiplicity of size s.
BigInt count_labeled_with_shape(const ForestShape& shape);

/// "roots: {2,4,7}; edges: 1->7, 3->2, 5->4, 6->7". A forest with no edges
/// prints as "roots: {1,2}; edges:".
std::string to_string(const Forest& f);

/// Inverse of to_string(Forest). Throws ParseError.
Forest parse_forest(std::string_view text);

/// "2,1,1".
std::string to_string(const ForestShape& s);

}  // namespace nakayama
