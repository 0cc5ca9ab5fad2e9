#include "nakayama/bijection.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

#include "nakayama/error.hpp"

namespace nakayama {

bool is_idempotent(const std::vector<int>& values) {
  const int n = static_cast<int>(values.size());
  for (int v : values)
    if (v < 1 || v > n)
      throw std::domain_error("tuple entry " + std::to_string(v) + " outside 1.." + std::to_string(n));
  for (int v : values)
    if (values[static_cast<std::size_t>(v - 1)] != v) return false;
  return true;
}

IdempotentFunction::IdempotentFunction(std::vector<int> values) : values_(std::move(values)) {
  if (values_.empty()) throw std::domain_error("idempotent function needs at least one point");
  if (!is_idempotent(values_)) throw std::domain_error("tuple " + format_tuple(values_) + " is not idempotent");
}

IdempotentFunction IdempotentFunction::identity(Rank n) {
  std::vector<int> v(static_cast<std::size_t>(n.value()));
  for (int i = 0; i < n.value(); ++i) v[static_cast<std::size_t>(i)] = i + 1;
  return IdempotentFunction(std::move(v));
}

std::vector<int> IdempotentFunction::fixed_points() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < values_.size(); ++i)
    if (values_[i] == static_cast<int>(i + 1)) out.push_back(values_[i]);
  return out;
}

std::string format_tuple(const std::vector<int>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(values[i]);
  }
  return out;
}

std::string to_string(const IdempotentFunction& a) { return format_tuple(a.values()); }

std::vector<int> parse_tuple(std::string_view text) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    const std::string_view field = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    int value = 0;
    const char* end = field.data() + field.size();
    if (field.empty() || field.front() < '1' || field.front() > '9') throw ParseError("expected a positive integer", std::string(field));
    auto [ptr, ec] = std::from_chars(field.data(), end, value);
    if (ec != std::errc{} || ptr != end) throw ParseError("expected a positive integer", std::string(field));
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::vector<IdempotentFunction> enumerate_idempotent(Rank rank) {
  const int n = rank.value();
  std::vector<IdempotentFunction> out;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> fixed;
    std::vector<int> free;
    for (int i = 0; i < n; ++i) ((mask >> i) & 1u ? fixed : free).push_back(i + 1);

    // Mixed-radix counter over maps free -> fixed.
    std::vector<std::size_t> digit(free.size(), 0);
    while (true) {
      std::vector<int> values(static_cast<std::size_t>(n));
      for (int p : fixed) values[static_cast<std::size_t>(p - 1)] = p;
      for (std::size_t k = 0; k < free.size(); ++k) values[static_cast<std::size_t>(free[k] - 1)] = fixed[digit[k]];
      out.emplace_back(std::move(values));

      std::size_t k = 0;
      while (k < digit.size() && ++digit[k] == fixed.size()) digit[k++] = 0;
      if (k == digit.size()) break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

IdempotentFunction phi(const ExceptionalSequence& e) {
  if (!e.complete()) throw std::invalid_argument("phi requires a complete exceptional sequence, got " + to_string(e));
  std::vector<int> values(e.size());
  for (std::size_t i = 1; i <= e.size(); ++i)
    values[i - 1] = static_cast<int>(e.at(i).is_simple() ? i : chain_root(e, i));
  return IdempotentFunction(std::move(values));
}

GammaPlan build_gamma_plan(const IdempotentFunction& a) {
  const auto& values = a.values();
  GammaPlan plan;
  plan.n = static_cast<int>(values.size());
  plan.fixed_points = a.fixed_points();
  for (int p : plan.fixed_points) {
    int after = 0;
    int before = 0;
    for (int q = 1; q <= plan.n; ++q) {
      if (q == p || values[static_cast<std::size_t>(q - 1)] != p) continue;
      (q > p ? after : before) += 1;
    }
    plan.after_counts.push_back(after);
    plan.before_counts.push_back(before);
    plan.totals.push_back(after + before + 1);
  }
  for (std::size_t i = 0; i < plan.fixed_points.size(); ++i) {
    if (i == 0)
      plan.simple_vertices.push_back(1 + plan.after_counts[0]);
    else
      plan.simple_vertices.push_back(plan.simple_vertices[i - 1] + plan.after_counts[i] + plan.before_counts[i - 1] + 1);
  }
  return plan;
}

bool is_consistent(const GammaPlan& plan) {
  const std::size_t x = plan.fixed_points.size();
  if (x == 0 || plan.after_counts.size() != x || plan.before_counts.size() != x || plan.totals.size() != x ||
      plan.simple_vertices.size() != x)
    return false;
  int total = 0;
  for (std::size_t i = 0; i < x; ++i) {
    if (plan.totals[i] != plan.after_counts[i] + plan.before_counts[i] + 1) return false;
    total += plan.totals[i];
    const int low = plan.simple_vertices[i] - plan.after_counts[i];
    if (i == 0 ? low != 1 : low != plan.simple_vertices[i - 1] + plan.before_counts[i - 1] + 1) return false;
  }
  return total == plan.n && plan.simple_vertices[x - 1] + plan.before_counts[x - 1] == plan.n;
}

ExceptionalSequence gamma(const IdempotentFunction& a) {
  const GammaPlan plan = build_gamma_plan(a);
  if (!is_consistent(plan)) throw InvariantViolation("inconsistent gamma plan for " + to_string(a));

  const auto& values = a.values();
  std::vector<Indec> items(values.size(), Indec::simple(1));
  for (std::size_t i = 0; i < plan.fixed_points.size(); ++i) {
    const int p = plan.fixed_points[i];
    const int t = plan.simple_vertices[i];
    const int b = plan.before_counts[i];
    items[static_cast<std::size_t>(p - 1)] = Indec::simple(t);
    int after_seen = 0;
    int before_seen = 0;
    for (int q = 1; q <= plan.n; ++q) {
      if (q == p || values[static_cast<std::size_t>(q - 1)] != p) continue;
      if (q > p) {
        ++after_seen;  // I(Sigma^{r-1}[T]) = [T-r, T-r+1]
        items[static_cast<std::size_t>(q - 1)] = Indec::interval(t - after_seen);
      } else {
        ++before_seen;  // P(Omega^{b-r}[T]) = [T+b-r, T+b-r+1]
        items[static_cast<std::size_t>(q - 1)] = Indec::interval(t + b - before_seen);
      }
    }
  }

  const Rank rank = a.rank();
  if (!is_exceptional_sequence(rank, items))
    throw InvariantViolation("gamma(" + to_string(a) + ") produced non-exceptional " + format_modules(items));
  return ExceptionalSequence(rank, std::move(items));
}

}  // namespace nakayama
