#include <crossbraid/comodule.hpp>

#include <crossbraid/linalg.hpp>

namespace crossbraid {

namespace {

// products[i][j] = b_i b_j as a sparse vector.
std::vector<std::vector<SparseVector>> product_table(const HopfData& h) {
  std::vector<std::vector<SparseVector>> t(h.dim, std::vector<SparseVector>(h.dim));
  for (std::size_t i = 0; i < h.dim; ++i)
    for (std::size_t j = 0; j < h.dim; ++j)
      for (std::size_t k = 0; k < h.dim; ++k)
        if (!is_zero(h.m(i, j, k))) t[i][j].emplace_back(k, h.m(i, j, k));
  return t;
}

SparseMatrix counit_row(const HopfData& h) { return SparseMatrix(h.counit_matrix()); }

// h ↦ g⁻¹ h g as a sparse map H -> H.
SparseMatrix conjugation(const HopfData& h, std::span<const Scalar> g) {
  const Vector g_inv = grouplike_inverse(h, g);
  return SparseMatrix(h.left_mult(g_inv) * h.right_mult(g));
}

// Throws unless the right coaction has shape (dim X · dim H) × dim X.
void check_right_shape(const HopfData& h, const Bicomodule& b) {
  if (b.right.rows() != b.left.dim() * h.dim || b.right.cols() != b.left.dim())
    throw ComoduleError("bicomodule right coaction has the wrong shape");
}

// x ↦ x₀ ⊗ S(x₋₁), X -> X ⊗ H.
SparseMatrix antipode_right_coaction(const HopfData& h, const Comodule& x) {
  const SparseMatrix s(h.antipode);
  SparseMatrix out(x.dim() * h.dim, x.dim());
  for (std::size_t j = 0; j < x.dim(); ++j) {
    SparseVector col;
    for (const auto& [flat, c] : x.coact(j)) {
      const std::size_t hi = flat / x.dim();
      const std::size_t xi = flat % x.dim();
      for (const auto& [si, sc] : s.column(hi)) col.emplace_back(xi * h.dim + si, c * sc);
    }
    out.set_column(j, std::move(col));
  }
  return out;
}

CotensorResult cotensor_from_right(const SparseMatrix& right, std::size_t dim_x,
                                   const Comodule& y) {
  // (ρʳ ⊗ id_Y) - (id_X ⊗ ρ_Y) : X⊗Y -> X⊗H⊗Y
  const SparseMatrix lhs = kron(right, SparseMatrix::identity(y.dim()));
  const SparseMatrix rhs = kron(SparseMatrix::identity(dim_x), y.coaction());
  const auto basis = kernel_basis((lhs - rhs).dense());
  CotensorResult out;
  out.dim = basis.size();
  out.inclusion = Matrix(dim_x * y.dim(), basis.size());
  for (std::size_t k = 0; k < basis.size(); ++k) out.inclusion.set_col(k, basis[k]);
  return out;
}

}  // namespace

Report verify_comodule_axioms(const HopfData& h, const SparseMatrix& coaction) {
  Report rep("comodule axioms");
  const std::size_t d = coaction.cols();
  if (coaction.rows() != h.dim * d) {
    rep.failures.push_back({"coaction shape", {coaction.rows(), coaction.cols()}, "expected (dim H · dim X) × dim X",
                            {}, {}});
    return rep;
  }
  const SparseMatrix delta(h.comult_matrix());
  const SparseMatrix id_x = SparseMatrix::identity(d);
  compare_columns(rep, "coassociativity", kron(delta, id_x) * coaction,
                  kron(SparseMatrix::identity(h.dim), coaction) * coaction, {d});
  compare_columns(rep, "counit", kron(counit_row(h), id_x) * coaction, id_x, {d});
  return rep;
}

Comodule::Comodule(const HopfData& h, SparseMatrix coaction, std::string name)
    : hopf_dim_(h.dim), coaction_(std::move(coaction)), name_(std::move(name)) {
  const Report rep = verify_comodule_axioms(h, coaction_);
  if (!rep.passed()) {
    throw ComoduleError("not a comodule" + (name_.empty() ? std::string() : " (" + name_ + ")") + ": " +
                        rep.summary());
  }
}

Comodule regular_comodule(const HopfData& h) { return Comodule(h, SparseMatrix(h.comult_matrix()), "H"); }

Comodule grouplike_comodule(const HopfData& h, std::span<const Scalar> g, std::string name) {
  if (!is_grouplike(h, g)) throw std::invalid_argument("grouplike_comodule: element is not grouplike");
  SparseMatrix rho(h.dim, 1);
  rho.set_column(0, to_sparse(g));
  if (name.empty()) name = "k_" + h.format(g);
  return Comodule(h, std::move(rho), std::move(name));
}

Comodule tensor_comodules(const HopfData& h, const Comodule& x, const Comodule& y) {
  const auto prod = product_table(h);
  const std::size_t dx = x.dim();
  const std::size_t dy = y.dim();
  const std::size_t d = dx * dy;
  SparseMatrix rho(h.dim * d, d);
  for (std::size_t i = 0; i < dx; ++i) {
    for (std::size_t j = 0; j < dy; ++j) {
      SparseVector col;
      for (const auto& [fx, cx] : x.coact(i)) {
        const std::size_t hx = fx / dx;
        const std::size_t xi = fx % dx;
        for (const auto& [fy, cy] : y.coact(j)) {
          const std::size_t hy = fy / dy;
          const std::size_t yi = fy % dy;
          const Scalar c = cx * cy;
          for (const auto& [k, ck] : prod[hx][hy]) col.emplace_back(k * d + xi * dy + yi, c * ck);
        }
      }
      rho.set_column(i * dy + j, std::move(col));
    }
  }
  std::string name;
  if (!x.name().empty() && !y.name().empty()) name = x.name() + "⊗" + y.name();
  return Comodule(h, std::move(rho), std::move(name));
}

Comodule twist_coaction(const HopfData& h, const Comodule& a, std::span<const Scalar> g) {
  if (!is_grouplike(h, g)) throw std::invalid_argument("twist_coaction: element is not grouplike");
  SparseMatrix rho = kron(conjugation(h, g), SparseMatrix::identity(a.dim())) * a.coaction();
  std::string name = a.name().empty() ? std::string() : a.name() + "^" + h.format(g);
  return Comodule(h, std::move(rho), std::move(name));
}

Bicomodule regular_bicomodule(const HopfData& h) {
  Bicomodule b{regular_comodule(h), SparseMatrix(h.comult_matrix())};
  return b;
}

Bicomodule twisted_regular_bicomodule(const HopfData& h, std::span<const Scalar> g) {
  Bicomodule b{twist_coaction(h, regular_comodule(h), g), SparseMatrix(h.comult_matrix())};
  return b;
}

Report verify_bicomodule_axioms(const HopfData& h, const Bicomodule& b) {
  check_right_shape(h, b);
  Report rep("bicomodule axioms");
  const std::size_t d = b.left.dim();
  const SparseMatrix delta(h.comult_matrix());
  const SparseMatrix id_x = SparseMatrix::identity(d);
  const SparseMatrix id_h = SparseMatrix::identity(h.dim);
  compare_columns(rep, "right coassociativity", kron(b.right, id_h) * b.right, kron(id_x, delta) * b.right, {d});
  compare_columns(rep, "right counit", kron(id_x, counit_row(h)) * b.right, id_x, {d});
  compare_columns(rep, "coactions commute", kron(id_h, b.right) * b.left.coaction(),
                  kron(b.left.coaction(), id_h) * b.right, {d});
  return rep;
}

CotensorResult cotensor(const HopfData& h, const Comodule& x, const Comodule& y) {
  return cotensor_from_right(antipode_right_coaction(h, x), x.dim(), y);
}

CotensorResult cotensor(const HopfData& h, const Bicomodule& a, const Comodule& y) {
  check_right_shape(h, a);
  return cotensor_from_right(a.right, a.left.dim(), y);
}

SparseMatrix regular_cotensor_embedding(const HopfData& h, const Comodule& x) {
  const auto s_inv = inverse(h.antipode);
  if (!s_inv) throw std::invalid_argument("regular_cotensor_embedding: antipode is not invertible");
  return kron(SparseMatrix(*s_inv), SparseMatrix::identity(x.dim())) * x.coaction();
}

SparseMatrix natural_endo_from_functional(const HopfData& h, const Functional& lambda, const Comodule& x) {
  if (lambda.values.size() != h.dim) throw std::invalid_argument("natural_endo_from_functional: functional size");
  return kron(SparseMatrix(Matrix::row(lambda.values)), SparseMatrix::identity(x.dim())) * x.coaction();
}

Report check_comodule_morphism(const HopfData& h, const SparseMatrix& f, const Comodule& x, const Comodule& y) {
  Report rep("left comodule morphism");
  if (f.rows() != y.dim() || f.cols() != x.dim()) {
    rep.failures.push_back({"shape", {f.rows(), f.cols()}, "map shape does not match comodules", {}, {}});
    return rep;
  }
  compare_columns(rep, "(id⊗f)ρ = ρf", kron(SparseMatrix::identity(h.dim), f) * x.coaction(), y.coaction() * f,
                  {x.dim()});
  return rep;
}

Report check_comodule_morphism(const HopfData& h, const Matrix& f, const Comodule& x, const Comodule& y) {
  return check_comodule_morphism(h, SparseMatrix(f), x, y);
}

Report check_comodule_morphism(const HopfData& h, const Matrix& f, const Bicomodule& x, const Bicomodule& y,
                               Side side) {
  check_right_shape(h, x);
  check_right_shape(h, y);
  const SparseMatrix sf(f);
  Report rep(side == Side::left ? "left comodule morphism"
             : side == Side::right ? "right comodule morphism"
                                   : "bicomodule morphism");
  if (side != Side::right) rep.merge(check_comodule_morphism(h, sf, x.left, y.left));
  if (side != Side::left) {
    if (f.rows() != y.left.dim() || f.cols() != x.left.dim()) {
      rep.failures.push_back({"shape", {f.rows(), f.cols()}, "map shape does not match comodules", {}, {}});
      return rep;
    }
    compare_columns(rep, "(f⊗id)ρʳ = ρʳf", kron(sf, SparseMatrix::identity(h.dim)) * x.right, y.right * sf,
                    {x.left.dim()});
  }
  return rep;
}

}  // namespace crossbraid
