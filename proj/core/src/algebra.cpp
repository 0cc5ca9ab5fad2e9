#include "nakayama/algebra.hpp"

#include <charconv>
#include <stdexcept>

#include "nakayama/error.hpp"

namespace nakayama {

Rank::Rank(int n) : n_(n) {
  if (n < 1) throw std::domain_error("rank must be at least 1, got " + std::to_string(n));
}

bool Indec::valid_for(Rank n) const noexcept {
  if (vertex_ < 1) return false;
  return is_simple() ? vertex_ <= n.value() : vertex_ <= n.value() - 1;
}

std::string to_string(const Indec& m) {
  std::string out = "[" + std::to_string(m.vertex());
  if (!m.is_simple()) out += "," + std::to_string(m.vertex() + 1);
  out += "]";
  return out;
}

namespace {

// Positive decimal with no sign and no leading zero. Advances `pos`.
bool read_positive(std::string_view text, std::size_t& pos, int& value) {
  if (pos >= text.size() || text[pos] < '1' || text[pos] > '9') return false;
  const char* begin = text.data() + pos;
  auto [ptr, ec] = std::from_chars(begin, text.data() + text.size(), value);
  if (ec != std::errc{}) return false;
  pos += static_cast<std::size_t>(ptr - begin);
  return true;
}

}  // namespace

Indec parse_indec(std::string_view text) {
  const std::string token(text);
  std::size_t pos = 0;
  int first = 0;
  if (text.empty() || text.front() != '[') throw ParseError("module literal must start with '['", token);
  ++pos;
  if (!read_positive(text, pos, first)) throw ParseError("expected a positive vertex", token);
  if (pos < text.size() && text[pos] == ']' && pos + 1 == text.size()) return Indec::simple(first);
  if (pos >= text.size() || text[pos] != ',') throw ParseError("malformed module literal", token);
  ++pos;
  int second = 0;
  if (!read_positive(text, pos, second)) throw ParseError("expected a positive vertex", token);
  if (pos + 1 != text.size() || text[pos] != ']') throw ParseError("malformed module literal", token);
  if (second != first + 1) throw ParseError("interval must be [v,v+1]", token);
  return Indec::interval(first);
}

std::vector<Indec> all_indecomposables(Rank n) {
  std::vector<Indec> out;
  out.reserve(static_cast<std::size_t>(2 * n.value() - 1));
  for (int v = 1; v <= n.value(); ++v) {
    out.push_back(Indec::simple(v));
    if (v < n.value()) out.push_back(Indec::interval(v));
  }
  return out;
}

Indec top(const Indec& m) { return Indec::simple(m.first()); }

Indec socle(const Indec& m) { return Indec::simple(m.last()); }

Indec projective_cover(const Indec& m, Rank n) {
  if (!m.is_simple()) return m;
  return m.vertex() < n.value() ? Indec::interval(m.vertex()) : m;
}

Indec injective_envelope(const Indec& m) {
  if (!m.is_simple()) return m;
  return m.vertex() > 1 ? Indec::interval(m.vertex() - 1) : m;
}

std::optional<Indec> syzygy(const Indec& m, Rank n) {
  if (is_projective(m, n)) return std::nullopt;
  return Indec::simple(m.vertex() + 1);
}

std::optional<Indec> cosyzygy(const Indec& m) {
  if (is_injective(m)) return std::nullopt;
  return Indec::simple(m.vertex() - 1);
}

bool is_projective(const Indec& m, Rank n) { return !m.is_simple() || m.vertex() == n.value(); }

bool is_injective(const Indec& m) { return !m.is_simple() || m.vertex() == 1; }

HomologicalDims hom_dims(const Indec& m, Rank n) {
  if (!m.is_simple()) return {0, 0};
  return {n.value() - m.vertex(), m.vertex() - 1};
}

int hom_dim(const Indec& m, const Indec& n) {
  const int x = m.vertex();
  const int y = n.vertex();
  if (m.is_simple() && n.is_simple()) return x == y ? 1 : 0;
  if (m.is_simple()) return x == y + 1 ? 1 : 0;  // into the socle of [y,y+1]
  if (n.is_simple()) return x == y ? 1 : 0;      // onto the top of [x,x+1]
  return (x == y || x == y + 1) ? 1 : 0;
}

int ext_dim(int k, const Indec& m, const Indec& n) {
  if (k < 1) throw std::domain_error("ext degree must be at least 1");
  if (!m.is_simple() || !n.is_simple()) return 0;
  return n.vertex() - m.vertex() == k ? 1 : 0;
}

}  // namespace nakayama
