#include <crossbraid/morphisms.hpp>

#include <crossbraid/linalg.hpp>
#include <crossbraid/polysystem.hpp>

#include <algorithm>

namespace crossbraid {

namespace {

SparseMatrix conjugation(const HopfData& h, std::span<const Scalar> g) {
  return SparseMatrix(h.left_mult(grouplike_inverse(h, g)) * h.right_mult(g));
}

// Appends the entries of m (row-major) to column `col` of `out`, from row `row0`.
void put_flat(Matrix& out, std::size_t row0, std::size_t col, const SparseMatrix& m) {
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (const auto& [i, c] : m.column(j)) out(row0 + i * m.cols() + j, col) = c;
}

// Linear constraints on vec(F) (F(i,j) is variable i·dim + j):
//   (C_g ⊗ F)Δ = ΔF  (left, source H^g)  and  (F ⊗ id)Δ = ΔF  (right).
Matrix bicomodule_constraints(const HopfData& h, std::span<const Scalar> g) {
  const std::size_t n = h.dim;
  const SparseMatrix delta(h.comult_matrix());
  const SparseMatrix conj = conjugation(h, g);
  const SparseMatrix id = SparseMatrix::identity(n);
  const std::size_t block = n * n * n;
  Matrix out(2 * block, n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      SparseMatrix e(n, n);
      e.set_column(j, {{i, 1}});
      const SparseMatrix delta_e = delta * e;
      put_flat(out, 0, i * n + j, kron(conj, e) * delta - delta_e);
      put_flat(out, block, i * n + j, kron(e, id) * delta - delta_e);
    }
  }
  return out;
}

bool less_by_entries(const ComoduleAlgebraMap& a, const ComoduleAlgebraMap& b) {
  return a.matrix.entries() < b.matrix.entries();
}

}  // namespace

ComoduleAlgebraMap classify_map(const HopfData& h, Matrix f, std::span<const Scalar> g) {
  ComoduleAlgebraMap out;
  out.source_twist.assign(g.begin(), g.end());
  const Bicomodule source = twisted_regular_bicomodule(h, g);
  const Bicomodule target = regular_bicomodule(h);
  out.is_left_comodule = check_comodule_morphism(h, f, source, target, Side::left).passed();
  out.is_right_comodule = check_comodule_morphism(h, f, source, target, Side::right).passed();
  bool mult = f * h.unit == h.unit;
  for (std::size_t i = 0; i < h.dim && mult; ++i) {
    const Vector fi = f * h.basis(i);
    for (std::size_t j = 0; j < h.dim && mult; ++j)
      mult = f * h.multiply(h.basis(i), h.basis(j)) == h.multiply(fi, f * h.basis(j));
  }
  out.is_algebra_map = mult;
  out.is_invertible = inverse(f).has_value();
  out.matrix = std::move(f);
  return out;
}

std::size_t bicomodule_map_space_dimension(const HopfData& h, std::span<const Scalar> g) {
  return kernel_basis(bicomodule_constraints(h, g)).size();
}

std::vector<ComoduleAlgebraMap> enumerate_bigalois_isos(const HopfData& h, std::span<const Scalar> g) {
  if (!is_grouplike(h, g)) throw std::invalid_argument("enumerate_bigalois_isos: twist is not grouplike");
  const std::size_t n = h.dim;
  const auto basis = kernel_basis(bicomodule_constraints(h, g));
  const std::size_t k = basis.size();
  if (k > kMaxFreeParameters) {
    throw EnumerationLimitExceeded("bicomodule maps H^g -> H form a " + std::to_string(k) +
                                   "-dimensional space; at most " + std::to_string(kMaxFreeParameters) +
                                   " free parameters are supported");
  }

  // F(r, s) as a linear polynomial in the parameters t_0..t_{k-1}
  std::vector<Polynomial> entry(n * n, Polynomial(k));
  for (std::size_t p = 0; p < k; ++p)
    for (std::size_t v = 0; v < n * n; ++v)
      if (!is_zero(basis[p][v])) entry[v] += Polynomial::variable(k, p) * basis[p][v];
  auto F = [&](std::size_t r, std::size_t s) -> const Polynomial& { return entry[r * n + s]; };

  std::vector<Polynomial> equations;
  for (std::size_t r = 0; r < n; ++r) {  // F(1) = 1
    Polynomial e(k);
    for (std::size_t s = 0; s < n; ++s)
      if (!is_zero(h.unit[s])) e += F(r, s) * h.unit[s];
    e -= Polynomial::constant(k, h.unit[r]);
    if (!e.is_zero()) equations.push_back(std::move(e));
  }
  for (std::size_t i = 0; i < n; ++i) {  // F(b_i b_j) = F(b_i) F(b_j)
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t r = 0; r < n; ++r) {
        Polynomial e(k);
        for (std::size_t s = 0; s < n; ++s)
          if (!is_zero(h.m(i, j, s))) e += F(r, s) * h.m(i, j, s);
        for (std::size_t p = 0; p < n; ++p) {
          if (F(p, i).is_zero()) continue;
          for (std::size_t q = 0; q < n; ++q)
            if (!is_zero(h.m(p, q, r)) && !F(q, j).is_zero()) e -= F(p, i) * F(q, j) * h.m(p, q, r);
        }
        if (!e.is_zero()) equations.push_back(std::move(e));
      }
    }
  }

  std::vector<ComoduleAlgebraMap> out;
  for (const auto& t : solve_polynomial_system(k, std::move(equations))) {
    Matrix f(n, n);
    for (std::size_t p = 0; p < k; ++p)
      for (std::size_t v = 0; v < n * n; ++v)
        if (!is_zero(basis[p][v])) f(v / n, v % n) += t[p] * basis[p][v];
    auto m = classify_map(h, std::move(f), g);
    if (!m.is_algebra_map || !m.is_bicomodule())
      throw std::logic_error("enumerate_bigalois_isos: solution failed independent re-verification");
    if (m.is_invertible) out.push_back(std::move(m));
  }
  std::sort(out.begin(), out.end(), less_by_entries);
  return out;
}

std::vector<ComoduleAlgebraMap> enumerate_bicomodule_algebra_autos(const HopfData& h) {
  return enumerate_bigalois_isos(h, h.unit);
}

Matrix functional_induced_map(const HopfData& h, const Functional& lambda) {
  return kron(Matrix::identity(h.dim), Matrix::row(lambda.values)) * h.comult_matrix();
}

std::vector<ComoduleAlgebraMap> character_induced_maps(const HopfData& h) {
  std::vector<ComoduleAlgebraMap> out;
  for (const auto& chi : enumerate_characters(h)) out.push_back(classify_map(h, functional_induced_map(h, chi), h.unit));
  std::sort(out.begin(), out.end(), less_by_entries);
  return out;
}

std::vector<Functional> lazy_functionals(const HopfData& h) {
  const std::size_t n = h.dim;
  const Matrix delta = h.comult_matrix();
  Matrix constraints(n * n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const Matrix e = Matrix::row(unit_vector(n, k));
    const Matrix diff = kron(e, Matrix::identity(n)) * delta - kron(Matrix::identity(n), e) * delta;
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) constraints(r * n + c, k) = diff(r, c);
  }
  std::vector<Functional> out;
  for (auto& v : kernel_basis(constraints)) out.push_back(Functional{std::move(v)});
  return out;
}

Functional counit_composite(const HopfData& h, const Matrix& f) {
  return Functional{(Matrix::row(h.counit) * f).row_vector(0)};
}

}  // namespace crossbraid
