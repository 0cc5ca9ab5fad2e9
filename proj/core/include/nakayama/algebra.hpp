#pragma once

// The radical-square-zero Nakayama algebra on the linear quiver
// 1 -> 2 -> ... -> n and its 2n-1 indecomposable modules.
//
// Every indecomposable is thin: a simple [v] or a length-two interval
// [v,v+1], the latter being both the projective cover of [v] and the
// injective envelope of [v+1]. All Hom/Ext dimensions are 0 or 1 and are
// given here in closed form; representation.hpp holds an independent
// linear-algebra oracle for the same numbers.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace nakayama {

/// Number of vertices of the quiver. Always >= 1.
class Rank {
 public:
  explicit Rank(int n);

  int value() const noexcept { return n_; }

  friend bool operator==(Rank, Rank) = default;

 private:
  int n_;
};

enum class IndecKind : std::uint8_t { Simple, ProjInj };

/// Isomorphism class of an indecomposable module.
///
/// Ordering is the canonical one: by vertex, simple before interval, so
/// [1] < [1,2] < [2] < [2,3] < ... < [n].
class Indec {
 public:
  static Indec simple(int v) { return Indec(IndecKind::Simple, v); }
  static Indec interval(int v) { return Indec(IndecKind::ProjInj, v); }

  IndecKind kind() const noexcept { return kind_; }
  int vertex() const noexcept { return vertex_; }
  bool is_simple() const noexcept { return kind_ == IndecKind::Simple; }

  /// Lowest and highest vertex in the support.
  int first() const noexcept { return vertex_; }
  int last() const noexcept { return is_simple() ? vertex_ : vertex_ + 1; }

  bool valid_for(Rank n) const noexcept;

  /// Position in the canonical order, 0-based: [v] -> 2v-2, [v,v+1] -> 2v-1.
  int ordinal() const noexcept { return 2 * (vertex_ - 1) + (is_simple() ? 0 : 1); }

  friend bool operator==(const Indec&, const Indec&) = default;
  friend std::strong_ordering operator<=>(const Indec& a, const Indec& b) {
    return a.ordinal() <=> b.ordinal();
  }

 private:
  Indec(IndecKind kind, int vertex) : kind_(kind), vertex_(vertex) {}

  IndecKind kind_;
  int vertex_;
};

std::string to_string(const Indec& m);

/// Parses "[v]" or "[v,v+1]" with no interior whitespace. Throws ParseError.
Indec parse_indec(std::string_view text);

/// The 2n-1 indecomposables in canonical order.
std::vector<Indec> all_indecomposables(Rank n);

Indec top(const Indec& m);
Indec socle(const Indec& m);
Indec projective_cover(const Indec& m, Rank n);
Indec injective_envelope(const Indec& m);

/// First syzygy of the minimal projective resolution; empty when m is
/// projective.
std::optional<Indec> syzygy(const Indec& m, Rank n);

/// First cosyzygy of the minimal injective resolution; empty when m is
/// injective.
std::optional<Indec> cosyzygy(const Indec& m);

bool is_projective(const Indec& m, Rank n);
bool is_injective(const Indec& m);

struct HomologicalDims {
  int projective;
  int injective;

  friend bool operator==(const HomologicalDims&, const HomologicalDims&) = default;
};

HomologicalDims hom_dims(const Indec& m, Rank n);

/// dim Hom(m, n).
int hom_dim(const Indec& m, const Indec& n);

/// dim Ext^k(m, n) for k >= 1. Total in k: returns 0 past the global dimension.
int ext_dim(int k, const Indec& m, const Indec& n);

}  // namespace nakayama
