#include "nakayama/forests.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <stdexcept>

#include "nakayama/error.hpp"

namespace nakayama {

Forest::Forest(Rank n, std::vector<int> parent) : parent_(std::move(parent)) {
  if (parent_.size() != static_cast<std::size_t>(n.value()))
    throw std::domain_error("forest parent map must have one entry per label");
  bool any_root = false;
  for (std::size_t i = 0; i < parent_.size(); ++i) {
    const int p = parent_[i];
    if (p < 1 || p > n.value()) throw std::domain_error("parent " + std::to_string(p) + " outside 1.." + std::to_string(n.value()));
    if (parent_[static_cast<std::size_t>(p - 1)] != p)
      throw std::domain_error("label " + std::to_string(i + 1) + " hangs off non-root " + std::to_string(p));
    any_root |= p == static_cast<int>(i + 1);
  }
  if (!any_root) throw std::domain_error("forest has no root");
}

std::vector<int> Forest::roots() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < parent_.size(); ++i)
    if (parent_[i] == static_cast<int>(i + 1)) out.push_back(parent_[i]);
  return out;
}

std::vector<int> Forest::children(int root) const {
  std::vector<int> out;
  for (std::size_t i = 0; i < parent_.size(); ++i) {
    const int label = static_cast<int>(i + 1);
    if (label != root && parent_[i] == root) out.push_back(label);
  }
  return out;
}

ForestShape::ForestShape(std::vector<int> child_counts) : child_counts_(std::move(child_counts)) {
  if (child_counts_.empty()) throw std::domain_error("forest shape needs at least one root");
  for (int c : child_counts_)
    if (c < 0) throw std::domain_error("negative child count");
  std::sort(child_counts_.begin(), child_counts_.end(), std::greater<>());
}

int ForestShape::node_count() const {
  int total = 0;
  for (int c : child_counts_) total += c + 1;
  return total;
}

std::vector<int> ForestShape::tree_sizes() const {
  std::vector<int> out;
  for (int c : child_counts_) out.push_back(c + 1);
  return out;
}

Forest forest_from_function(const IdempotentFunction& a) { return Forest(a.rank(), a.values()); }

IdempotentFunction function_from_forest(const Forest& f) {
  std::vector<int> values;
  for (int label = 1; label <= f.rank().value(); ++label) values.push_back(f.parent(label));
  return IdempotentFunction(std::move(values));
}

Forest forest_from_sequence(const ExceptionalSequence& e) { return forest_from_function(phi(e)); }

ForestShape shape(const Forest& f) {
  std::vector<int> counts;
  for (int r : f.roots()) counts.push_back(static_cast<int>(f.children(r).size()));
  return ForestShape(std::move(counts));
}

std::vector<ForestShape> enumerate_shapes(Rank n) {
  std::vector<ForestShape> out;
  std::vector<int> parts;
  auto partitions = [&](auto& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      std::vector<int> counts;
      for (int p : parts) counts.push_back(p - 1);
      out.emplace_back(std::move(counts));
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      parts.push_back(part);
      self(self, remaining - part, part);
      parts.pop_back();
    }
  };
  partitions(partitions, n.value(), n.value());
  return out;
}

namespace {

BigInt factorial(unsigned k) {
  BigInt out = 1;
  for (unsigned i = 2; i <= k; ++i) out *= i;
  return out;
}

}  // namespace

BigInt count_labeled_with_shape(const ForestShape& s) {
  const auto sizes = s.tree_sizes();
  BigInt numerator = factorial(static_cast<unsigned>(s.node_count()));
  BigInt denominator = 1;
  std::map<int, unsigned> multiplicity;
  for (int size : sizes) {
    numerator *= size;
    denominator *= factorial(static_cast<unsigned>(size));
    ++multiplicity[size];
  }
  for (const auto& [size, m] : multiplicity) denominator *= factorial(m);
  return numerator / denominator;
}

std::string to_string(const Forest& f) {
  std::string out = "roots: {";
  const auto roots = f.roots();
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(roots[i]);
  }
  out += "}; edges:";
  bool first = true;
  for (int label = 1; label <= f.rank().value(); ++label) {
    if (f.is_root(label)) continue;
    out += first ? " " : ", ";
    out += std::to_string(label) + "->" + std::to_string(f.parent(label));
    first = false;
  }
  return out;
}

namespace {

int read_label(std::string_view field) {
  int value = 0;
  const char* end = field.data() + field.size();
  if (field.empty() || field.front() < '1' || field.front() > '9') throw ParseError("expected a positive label", std::string(field));
  auto [ptr, ec] = std::from_chars(field.data(), end, value);
  if (ec != std::errc{} || ptr != end) throw ParseError("expected a positive label", std::string(field));
  return value;
}

std::vector<std::string_view> split(std::string_view text, std::string_view sep) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t next = text.find(sep, pos);
    out.push_back(text.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos));
    if (next == std::string_view::npos) return out;
    pos = next + sep.size();
  }
}

}  // namespace

Forest parse_forest(std::string_view text) {
  const std::string whole(text);
  constexpr std::string_view roots_prefix = "roots: {";
  constexpr std::string_view edges_marker = "}; edges:";
  if (!text.starts_with(roots_prefix)) throw ParseError("forest literal must start with 'roots: {'", whole);
  const std::size_t marker = text.find(edges_marker);
  if (marker == std::string_view::npos) throw ParseError("missing '}; edges:'", whole);

  std::vector<int> roots;
  for (auto field : split(text.substr(roots_prefix.size(), marker - roots_prefix.size()), ","))
    roots.push_back(read_label(field));

  std::vector<std::pair<int, int>> edges;
  std::string_view rest = text.substr(marker + edges_marker.size());
  if (!rest.empty()) {
    if (rest.front() != ' ') throw ParseError("expected ' ' after 'edges:'", std::string(rest));
    for (auto edge : split(rest.substr(1), ", ")) {
      const std::size_t arrow = edge.find("->");
      if (arrow == std::string_view::npos) throw ParseError("edge must be 'leaf->root'", std::string(edge));
      edges.emplace_back(read_label(edge.substr(0, arrow)), read_label(edge.substr(arrow + 2)));
    }
  }

  const int n = static_cast<int>(roots.size() + edges.size());
  std::vector<int> parent(static_cast<std::size_t>(n), 0);
  auto assign = [&](int label, int p) {
    if (label > n || parent[static_cast<std::size_t>(label - 1)] != 0)
      throw ParseError("labels must cover 1..n exactly once", std::to_string(label));
    parent[static_cast<std::size_t>(label - 1)] = p;
  };
  for (int r : roots) assign(r, r);
  for (auto [leaf, root] : edges) assign(leaf, root);
  try {
    return Forest(Rank(n), std::move(parent));
  } catch (const std::domain_error& e) {
    throw ParseError(e.what(), whole);
  }
}

std::string to_string(const ForestShape& s) { return format_tuple(s.child_counts()); }

}  // namespace nakayama
