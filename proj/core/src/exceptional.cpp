#include "nakayama/exceptional.hpp"

#include <algorithm>
#include <stdexcept>

#include "nakayama/error.hpp"

namespace nakayama {

bool is_exceptional_pair(Rank rank, const Indec& m, const Indec& n) {
  if (m == n) return false;
  if (hom_dim(n, m) != 0) return false;
  for (int k = 1; k <= rank.value() - 1; ++k)
    if (ext_dim(k, n, m) != 0) return false;
  return true;
}

bool is_exceptional_pair_closed_form(const Indec& m, const Indec& n) {
  const int x = m.vertex();
  const int y = n.vertex();
  if (m.is_simple() && n.is_simple()) return x < y;
  if (m.is_simple()) return x != y;
  if (n.is_simple()) return y != x + 1;
  return y != x && y != x + 1;
}

bool is_exceptional_sequence(Rank rank, const std::vector<Indec>& items) {
  for (std::size_t i = 0; i < items.size(); ++i)
    for (std::size_t j = i + 1; j < items.size(); ++j)
      if (items[i] == items[j]) return false;
  for (std::size_t i = 0; i < items.size(); ++i)
    for (std::size_t j = i + 1; j < items.size(); ++j)
      if (!is_exceptional_pair(rank, items[i], items[j])) return false;
  return true;
}

ExceptionalSequence::ExceptionalSequence(Rank rank, std::vector<Indec> items)
    : rank_(rank), items_(std::move(items)) {
  for (const auto& m : items_)
    if (!m.valid_for(rank_))
      throw std::invalid_argument("module " + to_string(m) + " is not valid for rank " +
                                  std::to_string(rank_.value()));
  if (!is_exceptional_sequence(rank_, items_))
    throw std::invalid_argument("not an exceptional sequence: " + format_modules(items_));
}

std::optional<std::size_t> ExceptionalSequence::index_of(const Indec& m) const {
  const auto it = std::find(items_.begin(), items_.end(), m);
  if (it == items_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - items_.begin()) + 1;
}

std::string format_modules(const std::vector<Indec>& items) {
  std::string out = "[";
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) out += ",";
    out += to_string(items[i]);
  }
  out += "]";
  return out;
}

std::string to_string(const ExceptionalSequence& e) { return format_modules(e.items()); }

std::vector<Indec> parse_modules(std::string_view text) {
  const std::string whole(text);
  if (text.size() < 2 || text.front() != '[' || text.back() != ']')
    throw ParseError("sequence literal must be enclosed in '[' ']'", whole);
  std::vector<Indec> out;
  std::string_view body = text.substr(1, text.size() - 2);
  std::size_t pos = 0;
  while (pos < body.size()) {
    if (body[pos] != '[') throw ParseError("expected a module literal", std::string(body.substr(pos)));
    const std::size_t close = body.find(']', pos);
    if (close == std::string_view::npos) throw ParseError("unterminated module literal", std::string(body.substr(pos)));
    out.push_back(parse_indec(body.substr(pos, close - pos + 1)));
    pos = close + 1;
    if (pos == body.size()) break;
    if (body[pos] != ',' || pos + 1 == body.size())
      throw ParseError("expected ',' between module literals", std::string(body.substr(pos)));
    ++pos;
  }
  return out;
}

ExceptionalSequence parse_complete_sequence(std::string_view text) {
  auto items = parse_modules(text);
  if (items.empty()) throw ParseError("empty sequence", std::string(text));
  const Rank rank(static_cast<int>(items.size()));
  for (const auto& m : items)
    if (!m.valid_for(rank)) throw ParseError("module out of range for rank " + std::to_string(rank.value()), to_string(m));
  return ExceptionalSequence(rank, std::move(items));
}

namespace {

struct Search {
  std::vector<Indec> modules;
  std::vector<std::vector<char>> compatible;  // compatible[a][b]: (modules[a], modules[b]) exceptional
  std::vector<int> prefix;
  std::vector<char> used;
  std::size_t target = 0;
  std::vector<ExceptionalSequence>* out = nullptr;
};

}  // namespace

std::vector<ExceptionalSequence> enumerate_complete(Rank n) {
  Search s;
  s.modules = all_indecomposables(n);
  const std::size_t count = s.modules.size();
  s.compatible.assign(count, std::vector<char>(count, 0));
  for (std::size_t a = 0; a < count; ++a)
    for (std::size_t b = 0; b < count; ++b) s.compatible[a][b] = is_exceptional_pair(n, s.modules[a], s.modules[b]);
  s.used.assign(count, 0);
  s.target = static_cast<std::size_t>(n.value());

  std::vector<ExceptionalSequence> result;
  s.out = &result;

  auto extend = [&](auto& self) -> void {
    if (s.prefix.size() == s.target) {
      std::vector<Indec> items;
      items.reserve(s.target);
      for (int idx : s.prefix) items.push_back(s.modules[static_cast<std::size_t>(idx)]);
      s.out->push_back(ExceptionalSequence(ExceptionalSequence::Trusted{}, n, std::move(items)));
      return;
    }
    for (std::size_t c = 0; c < count; ++c) {
      if (s.used[c]) continue;
      bool ok = true;
      for (int p : s.prefix)
        if (!s.compatible[static_cast<std::size_t>(p)][c]) {
          ok = false;
          break;
        }
      if (!ok) continue;
      s.used[c] = 1;
      s.prefix.push_back(static_cast<int>(c));
      self(self);
      s.prefix.pop_back();
      s.used[c] = 0;
    }
  };
  extend(extend);
  return result;
}

Chain projective_chain(const Indec& simple, int t, Rank n) {
  if (!simple.is_simple() || !simple.valid_for(n)) throw std::invalid_argument("chain root must be a simple module of this rank");
  const int pdim = hom_dims(simple, n).projective;
  if (t < 0 || t > pdim - 1)
    throw std::out_of_range("projective chain length t=" + std::to_string(t) + " outside 0..pdim-1 (pdim(" +
                            to_string(simple) + ")=" + std::to_string(pdim) + ")");
  Chain c{simple, ChainDirection::Projective, t, {}};
  for (int s = t; s >= 0; --s) c.elements.push_back(Indec::interval(simple.vertex() + s));
  c.elements.push_back(simple);
  return c;
}

Chain injective_chain(const Indec& simple, int t, Rank n) {
  if (!simple.is_simple() || !simple.valid_for(n)) throw std::invalid_argument("chain root must be a simple module of this rank");
  const int indim = hom_dims(simple, n).injective;
  if (t < 0 || t > indim - 1)
    throw std::out_of_range("injective chain length t=" + std::to_string(t) + " outside 0..indim-1 (indim(" +
                            to_string(simple) + ")=" + std::to_string(indim) + ")");
  Chain c{simple, ChainDirection::Injective, t, {simple}};
  for (int s = 0; s <= t; ++s) c.elements.push_back(Indec::interval(simple.vertex() - 1 - s));
  return c;
}

std::optional<Chain> chain_to(const Indec& simple, const Indec& target, Rank n) {
  if (target.is_simple()) return std::nullopt;
  const int v = simple.vertex();
  const int w = target.vertex();
  if (v <= w) return projective_chain(simple, w - v, n);
  return injective_chain(simple, v - w - 1, n);
}

std::size_t chain_root(const ExceptionalSequence& e, std::size_t i) {
  if (!e.complete()) throw std::invalid_argument("chain_root requires a complete sequence");
  const Indec& target = e.at(i);
  if (target.is_simple()) throw std::invalid_argument("chain_root requires a nonsimple position");

  std::optional<std::size_t> found;
  for (std::size_t pos = 1; pos <= e.size(); ++pos) {
    const Indec& s = e.at(pos);
    if (!s.is_simple()) continue;
    const auto chain = chain_to(s, target, e.rank());
    if (!chain) continue;
    const bool contained = std::all_of(chain->elements.begin(), chain->elements.end(),
                                       [&](const Indec& m) { return e.contains(m); });
    if (!contained) continue;
    if (found)
      throw InvariantViolation("module " + to_string(target) + " at position " + std::to_string(i) +
                               " lies on more than one chain contained in " + to_string(e));

    // Chain members must appear in E in chain order: projective members
    // before their root, injective members after it.
    std::size_t previous = 0;
    for (const auto& m : chain->elements) {
      const std::size_t idx = *e.index_of(m);
      if (idx <= previous)
        throw InvariantViolation("chain of " + to_string(s) + " appears out of order in " + to_string(e));
      previous = idx;
    }
    found = pos;
  }
  if (!found)
    throw InvariantViolation("module " + to_string(target) + " at position " + std::to_string(i) +
                             " lies on no chain contained in " + to_string(e));
  return *found;
}

}  // namespace nakayama
