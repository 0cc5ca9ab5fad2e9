#include "nakayama/representation.hpp"

#include <stdexcept>
#include <utility>

namespace nakayama::rep {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (x != 0) return false;
  return true;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
  Matrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix difference shape mismatch");
  Matrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
  return out;
}

namespace {

// Reduced row echelon form in place; returns the pivot columns in order.
std::vector<std::size_t> reduce(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && m(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(pivot, c), m(row, c));
    const Scalar lead = m(row, col);
    for (std::size_t c = 0; c < m.cols(); ++c) m(row, c) /= lead;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == 0) continue;
      const Scalar factor = m(r, col);
      for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) -= factor * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

Matrix zero_matrix(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }

Matrix hstack(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hstack row mismatch");
  Matrix out(a.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
    for (std::size_t c = 0; c < b.cols(); ++c) out(r, a.cols() + c) = b(r, c);
  }
  return out;
}

std::vector<Scalar> flatten(const Morphism& f) {
  std::vector<Scalar> out;
  for (const auto& comp : f.components)
    for (std::size_t r = 0; r < comp.rows(); ++r)
      for (std::size_t c = 0; c < comp.cols(); ++c) out.push_back(comp(r, c));
  return out;
}

std::size_t rank_of_columns(const std::vector<std::vector<Scalar>>& columns) {
  if (columns.empty()) return 0;
  Matrix m(columns.front().size(), columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c)
    for (std::size_t r = 0; r < columns[c].size(); ++r) m(r, c) = columns[c][r];
  return rank(std::move(m));
}

}  // namespace

std::size_t rank(Matrix m) { return reduce(m).size(); }

Matrix null_space(const Matrix& m) {
  Matrix reduced = m;
  const auto pivots = reduce(reduced);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;

  Matrix basis(m.cols(), m.cols() - pivots.size());
  std::size_t out_col = 0;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    basis(free, out_col) = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) basis(pivots[i], out_col) = -reduced(i, free);
    ++out_col;
  }
  return basis;
}

Matrix solve_in_span(const Matrix& basis, const Matrix& target) {
  if (basis.rows() != target.rows()) throw std::invalid_argument("solve_in_span row mismatch");
  const std::size_t k = basis.cols();
  Matrix augmented = hstack(basis, target);
  const auto pivots = reduce(augmented);
  if (pivots.size() != k) throw std::invalid_argument("target not in span of a full-rank basis");
  for (std::size_t i = 0; i < k; ++i)
    if (pivots[i] != i) throw std::invalid_argument("basis does not have full column rank");
  Matrix x(k, target.cols());
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < target.cols(); ++c) x(r, c) = augmented(r, k + c);
  return x;
}

std::size_t Representation::total_dim() const {
  std::size_t total = 0;
  for (auto d : dims) total += d;
  return total;
}

Representation zero_representation(Rank n) {
  const auto count = static_cast<std::size_t>(n.value());
  Representation r;
  r.dims.assign(count, 0);
  r.arrows.assign(count - 1, Matrix{});
  return r;
}

Representation from_indec(const Indec& m, Rank n) {
  if (!m.valid_for(n)) throw std::domain_error("module " + to_string(m) + " is not valid for this rank");
  Representation r = zero_representation(n);
  for (int v = m.first(); v <= m.last(); ++v) r.dims[static_cast<std::size_t>(v - 1)] = 1;
  for (std::size_t a = 0; a < r.arrows.size(); ++a) r.arrows[a] = zero_matrix(r.dims[a + 1], r.dims[a]);
  if (!m.is_simple()) r.arrows[static_cast<std::size_t>(m.first() - 1)] = Matrix::identity(1);
  return r;
}

Representation indecomposable_projective(int v, Rank n) {
  return from_indec(v < n.value() ? Indec::interval(v) : Indec::simple(v), n);
}

bool is_valid(const Representation& r) {
  if (r.dims.empty() || r.arrows.size() + 1 != r.dims.size()) return false;
  for (std::size_t a = 0; a < r.arrows.size(); ++a)
    if (r.arrows[a].rows() != r.dims[a + 1] || r.arrows[a].cols() != r.dims[a]) return false;
  for (std::size_t a = 0; a + 1 < r.arrows.size(); ++a)
    if (!(r.arrows[a + 1] * r.arrows[a]).is_zero()) return false;
  return true;
}

bool is_morphism(const Representation& source, const Representation& target, const Morphism& f) {
  if (f.components.size() != source.vertex_count()) return false;
  for (std::size_t v = 0; v < source.vertex_count(); ++v)
    if (f.components[v].rows() != target.dims[v] || f.components[v].cols() != source.dims[v]) return false;
  for (std::size_t a = 0; a < source.arrows.size(); ++a) {
    const Matrix lhs = target.arrows[a] * f.components[a];
    const Matrix rhs = f.components[a + 1] * source.arrows[a];
    if (lhs != rhs) return false;
  }
  return true;
}

Morphism compose(const Morphism& g, const Morphism& f) {
  if (g.components.size() != f.components.size()) throw std::invalid_argument("compose vertex mismatch");
  Morphism out;
  out.components.reserve(f.components.size());
  for (std::size_t v = 0; v < f.components.size(); ++v) out.components.push_back(g.components[v] * f.components[v]);
  return out;
}

std::vector<Morphism> hom_basis(const Representation& source, const Representation& target) {
  const std::size_t vertices = source.vertex_count();
  std::vector<std::size_t> offset(vertices + 1, 0);
  for (std::size_t v = 0; v < vertices; ++v) offset[v + 1] = offset[v] + target.dims[v] * source.dims[v];
  const std::size_t unknowns = offset[vertices];

  auto var = [&](std::size_t v, std::size_t r, std::size_t c) { return offset[v] + r * source.dims[v] + c; };

  std::size_t equations = 0;
  for (std::size_t a = 0; a + 1 < vertices; ++a) equations += target.dims[a + 1] * source.dims[a];

  // target.arrow[a] * f_a - f_{a+1} * source.arrow[a] = 0, one row per entry.
  Matrix system(equations, unknowns);
  std::size_t row = 0;
  for (std::size_t a = 0; a + 1 < vertices; ++a) {
    const Matrix& t_arrow = target.arrows[a];
    const Matrix& s_arrow = source.arrows[a];
    for (std::size_t r = 0; r < target.dims[a + 1]; ++r)
      for (std::size_t c = 0; c < source.dims[a]; ++c, ++row) {
        for (std::size_t j = 0; j < target.dims[a]; ++j) system(row, var(a, j, c)) += t_arrow(r, j);
        for (std::size_t j = 0; j < source.dims[a + 1]; ++j) system(row, var(a + 1, r, j)) -= s_arrow(j, c);
      }
  }

  const Matrix kernel_basis = null_space(system);
  std::vector<Morphism> out;
  for (std::size_t b = 0; b < kernel_basis.cols(); ++b) {
    Morphism f;
    for (std::size_t v = 0; v < vertices; ++v) {
      Matrix comp(target.dims[v], source.dims[v]);
      for (std::size_t r = 0; r < comp.rows(); ++r)
        for (std::size_t c = 0; c < comp.cols(); ++c) comp(r, c) = kernel_basis(var(v, r, c), b);
      f.components.push_back(std::move(comp));
    }
    out.push_back(std::move(f));
  }
  return out;
}

ProjectiveCover projective_cover(const Representation& module) {
  const std::size_t vertices = module.vertex_count();

  // Top generators: vectors at each vertex completing the image of the
  // incoming arrow (the radical) to a basis.
  struct Generator {
    std::size_t vertex;
    Matrix vector;
  };
  std::vector<Generator> generators;
  for (std::size_t v = 0; v < vertices; ++v) {
    Matrix span = v > 0 ? module.arrows[v - 1] : Matrix(module.dims[v], 0);
    std::size_t span_rank = rank(span);
    for (std::size_t j = 0; j < module.dims[v] && span_rank < module.dims[v]; ++j) {
      Matrix e(module.dims[v], 1);
      e(j, 0) = 1;
      Matrix extended = hstack(span, e);
      const std::size_t extended_rank = rank(extended);
      if (extended_rank > span_rank) {
        span = std::move(extended);
        span_rank = extended_rank;
        generators.push_back({v, std::move(e)});
      }
    }
  }

  // Each generator at v spans a copy of P_v: one coordinate at v and, below
  // the sink, one at v+1.
  Representation proj;
  proj.dims.assign(vertices, 0);
  std::vector<std::size_t> slot_at_base(generators.size());
  std::vector<std::size_t> slot_at_next(generators.size());
  for (std::size_t g = 0; g < generators.size(); ++g) {
    const std::size_t base = generators[g].vertex;
    slot_at_base[g] = proj.dims[base]++;
    if (base + 1 < vertices) slot_at_next[g] = proj.dims[base + 1]++;
  }
  for (std::size_t a = 0; a + 1 < vertices; ++a) proj.arrows.push_back(Matrix(proj.dims[a + 1], proj.dims[a]));
  for (std::size_t g = 0; g < generators.size(); ++g) {
    const std::size_t base = generators[g].vertex;
    if (base + 1 < vertices) proj.arrows[base](slot_at_next[g], slot_at_base[g]) = 1;
  }

  Morphism cover;
  for (std::size_t v = 0; v < vertices; ++v) cover.components.push_back(Matrix(module.dims[v], proj.dims[v]));
  for (std::size_t g = 0; g < generators.size(); ++g) {
    const std::size_t base = generators[g].vertex;
    const Matrix& vec = generators[g].vector;
    for (std::size_t r = 0; r < vec.rows(); ++r) cover.components[base](r, slot_at_base[g]) = vec(r, 0);
    if (base + 1 < vertices) {
      const Matrix image = module.arrows[base] * vec;
      for (std::size_t r = 0; r < image.rows(); ++r) cover.components[base + 1](r, slot_at_next[g]) = image(r, 0);
    }
  }
  return {std::move(proj), std::move(cover)};
}

Kernel kernel(const Representation& source, const Morphism& f) {
  const std::size_t vertices = source.vertex_count();
  Kernel out;
  std::vector<Matrix> bases;
  for (std::size_t v = 0; v < vertices; ++v) {
    bases.push_back(null_space(f.components[v]));
    out.kernel.dims.push_back(bases.back().cols());
  }
  for (std::size_t a = 0; a + 1 < vertices; ++a)
    out.kernel.arrows.push_back(solve_in_span(bases[a + 1], source.arrows[a] * bases[a]));
  out.inclusion.components = std::move(bases);
  return out;
}

ProjectiveResolution projective_resolution(const Representation& module) {
  ProjectiveResolution res;
  auto step = projective_cover(module);
  res.terms.push_back(step.projective);
  res.differentials.push_back(step.cover);
  auto syz = kernel(step.projective, step.cover);

  // Global dimension is n-1, so at most n terms.
  while (syz.kernel.total_dim() > 0) {
    if (res.terms.size() > module.vertex_count())
      throw std::logic_error("projective resolution did not terminate within the global dimension");
    step = projective_cover(syz.kernel);
    res.terms.push_back(step.projective);
    res.differentials.push_back(compose(syz.inclusion, step.cover));
    syz = kernel(step.projective, step.cover);
  }
  return res;
}

std::size_t ext_dim(std::size_t k, const Representation& module, const Representation& target) {
  if (k < 1) throw std::domain_error("ext degree must be at least 1");
  const auto res = projective_resolution(module);

  auto cochains = [&](std::size_t i) {
    return i < res.terms.size() ? hom_basis(res.terms[i], target) : std::vector<Morphism>{};
  };
  // Rank of Hom(P_i, N) -> Hom(P_{i+1}, N), g |-> g . d_{i+1}.
  auto coboundary_rank = [&](std::size_t i, const std::vector<Morphism>& basis) -> std::size_t {
    if (i + 1 >= res.terms.size()) return 0;
    std::vector<std::vector<Scalar>> columns;
    for (const auto& g : basis) columns.push_back(flatten(compose(g, res.differentials[i + 1])));
    return rank_of_columns(columns);
  };

  const auto here = cochains(k);
  const auto before = cochains(k - 1);
  return here.size() - coboundary_rank(k, here) - coboundary_rank(k - 1, before);
}

std::size_t hom_dim_oracle(const Indec& m, const Indec& n, Rank rank) {
  return hom_basis(from_indec(m, rank), from_indec(n, rank)).size();
}

std::size_t ext_dim_oracle(int k, const Indec& m, const Indec& n, Rank rank) {
  if (k < 1) throw std::domain_error("ext degree must be at least 1");
  return ext_dim(static_cast<std::size_t>(k), from_indec(m, rank), from_indec(n, rank));
}

}  // namespace nakayama::rep
