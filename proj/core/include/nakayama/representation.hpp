#pragma once

// Quiver representations of the radical-square-zero linear Nakayama algebra
// over Q, with exact linear algebra. This is the verification oracle for the
// closed-form Hom/Ext tables in algebra.hpp: it knows nothing about those
// tables and recomputes dimensions from first principles (commutativity
// systems for Hom, a minimal projective resolution for Ext).

#include <cstddef>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "nakayama/algebra.hpp"

namespace nakayama::rep {

using Scalar = boost::multiprecision::cpp_rational;

/// Dense row-major matrix over Q.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

std::size_t rank(Matrix m);

/// Columns form a basis of the null space.
Matrix null_space(const Matrix& m);

/// Solves basis * x = target for x, where basis has full column rank and
/// every column of target lies in its column span. Throws otherwise.
Matrix solve_in_span(const Matrix& basis, const Matrix& target);

/// Vector spaces at vertices 1..n (stored 0-based) and linear maps along the
/// arrows v -> v+1. `arrows[v]` is dims[v+1] x dims[v].
struct Representation {
  std::vector<std::size_t> dims;
  std::vector<Matrix> arrows;

  std::size_t vertex_count() const noexcept { return dims.size(); }
  std::size_t total_dim() const;
};

/// Family of vertex maps, `components[v]` is target.dims[v] x source.dims[v].
struct Morphism {
  std::vector<Matrix> components;
};

Representation zero_representation(Rank n);
Representation from_indec(const Indec& m, Rank n);

/// Indecomposable projective at 1-based vertex v.
Representation indecomposable_projective(int v, Rank n);

/// True when every path of length two acts as zero and all shapes agree.
bool is_valid(const Representation& r);

bool is_morphism(const Representation& source, const Representation& target, const Morphism& f);

Morphism compose(const Morphism& g, const Morphism& f);  // g after f

/// Basis of Hom(source, target), from the kernel of the commutativity system.
std::vector<Morphism> hom_basis(const Representation& source, const Representation& target);

struct ProjectiveCover {
  Representation projective;
  Morphism cover;  // projective -> module, surjective
};

ProjectiveCover projective_cover(const Representation& module);

struct Kernel {
  Representation kernel;
  Morphism inclusion;
};

Kernel kernel(const Representation& source, const Morphism& f);

/// Minimal projective resolution ... -> P_1 -> P_0 -> M -> 0.
/// `differentials[0]` is P_0 -> M, `differentials[i]` is P_i -> P_{i-1}.
struct ProjectiveResolution {
  std::vector<Representation> terms;
  std::vector<Morphism> differentials;
};

ProjectiveResolution projective_resolution(const Representation& module);

/// dim Ext^k(module, target) from the cohomology of Hom(P_*, target).
std::size_t ext_dim(std::size_t k, const Representation& module, const Representation& target);

std::size_t hom_dim_oracle(const Indec& m, const Indec& n, Rank rank);
std::size_t ext_dim_oracle(int k, const Indec& m, const Indec& n, Rank rank);

}  // namespace nakayama::rep
