#include <crossbraid/hopf.hpp>

#include <crossbraid/linalg.hpp>
#include <crossbraid/polysystem.hpp>
#include <crossbraid/sparse.hpp>

#include <algorithm>
#include <sstream>

namespace crossbraid {

void HopfData::check_shapes() const {
  const std::size_t n3 = dim * dim * dim;
  auto fail = [](const std::string& what) { throw StructuralError("HopfData: " + what); };
  if (dim == 0) fail("dimension must be positive");
  if (labels.size() != dim) fail("expected " + std::to_string(dim) + " labels");
  if (mult.size() != n3) fail("mult must have dim^3 entries");
  if (comult.size() != n3) fail("comult must have dim^3 entries");
  if (unit.size() != dim) fail("unit must have dim entries");
  if (counit.size() != dim) fail("counit must have dim entries");
  if (antipode.rows() != dim || antipode.cols() != dim) fail("antipode must be dim x dim");
}

std::size_t HopfData::index_of(const std::string& label) const {
  const auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) throw std::out_of_range("unknown basis label '" + label + "'");
  return static_cast<std::size_t>(it - labels.begin());
}

Vector HopfData::multiply(std::span<const Scalar> a, std::span<const Scalar> b) const {
  Vector out(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    if (is_zero(a[i])) continue;
    for (std::size_t j = 0; j < dim; ++j) {
      if (is_zero(b[j])) continue;
      const Scalar c = a[i] * b[j];
      for (std::size_t k = 0; k < dim; ++k)
        if (!is_zero(m(i, j, k))) out[k] += c * m(i, j, k);
    }
  }
  return out;
}

Vector HopfData::coproduct(std::span<const Scalar> a) const {
  Vector out(dim * dim);
  for (std::size_t i = 0; i < dim; ++i) {
    if (is_zero(a[i])) continue;
    for (std::size_t jk = 0; jk < dim * dim; ++jk) {
      const Scalar& c = comult[i * dim * dim + jk];
      if (!is_zero(c)) out[jk] += a[i] * c;
    }
  }
  return out;
}

Scalar HopfData::epsilon(std::span<const Scalar> a) const {
  Scalar s = 0;
  for (std::size_t i = 0; i < dim; ++i) s += a[i] * counit[i];
  return s;
}

Matrix HopfData::mult_matrix() const {
  Matrix out(dim, dim * dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      for (std::size_t k = 0; k < dim; ++k) out(k, i * dim + j) = m(i, j, k);
  return out;
}

Matrix HopfData::comult_matrix() const {
  Matrix out(dim * dim, dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t jk = 0; jk < dim * dim; ++jk) out(jk, i) = comult[i * dim * dim + jk];
  return out;
}

Matrix HopfData::counit_matrix() const { return Matrix::row(counit); }
Matrix HopfData::unit_matrix() const { return Matrix::column(unit); }

Matrix HopfData::left_mult(std::span<const Scalar> a) const {
  Matrix out(dim, dim);
  for (std::size_t j = 0; j < dim; ++j) out.set_col(j, multiply(a, basis(j)));
  return out;
}

Matrix HopfData::right_mult(std::span<const Scalar> a) const {
  Matrix out(dim, dim);
  for (std::size_t j = 0; j < dim; ++j) out.set_col(j, multiply(basis(j), a));
  return out;
}

Vector HopfData::tensor_multiply(std::span<const Scalar> a, std::span<const Scalar> b, std::size_t k) const {
  const TensorIndex idx(std::vector<std::size_t>(k, dim));
  if (a.size() != idx.size() || b.size() != idx.size()) throw std::invalid_argument("tensor_multiply: length mismatch");
  Vector out(idx.size());
  for (std::size_t fa = 0; fa < a.size(); ++fa) {
    if (is_zero(a[fa])) continue;
    const auto ia = idx.unflatten(fa);
    for (std::size_t fb = 0; fb < b.size(); ++fb) {
      if (is_zero(b[fb])) continue;
      const auto ib = idx.unflatten(fb);
      Vector acc{a[fa] * b[fb]};
      for (std::size_t s = 0; s < k; ++s) {
        Vector slot(dim);
        for (std::size_t t = 0; t < dim; ++t) slot[t] = m(ia[s], ib[s], t);
        acc = kron(acc, slot);
      }
      for (std::size_t f = 0; f < out.size(); ++f)
        if (!is_zero(acc[f])) out[f] += acc[f];
    }
  }
  return out;
}

std::string HopfData::format(std::span<const Scalar> v) const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (is_zero(v[i])) continue;
    Scalar c = v[i];
    if (!first) {
      os << (sgn(c) < 0 ? " - " : " + ");
      c = abs(c);
    } else if (sgn(c) < 0 && c == -1) {
      os << '-';
      c = 1;
    }
    if (c != 1) os << c.get_str() << '*';
    os << (i < labels.size() ? labels[i] : "b" + std::to_string(i));
    first = false;
  }
  return first ? "0" : os.str();
}

Scalar Functional::operator()(std::span<const Scalar> x) const {
  Scalar s = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!is_zero(x[i])) s += values.at(i) * x[i];
  return s;
}

namespace {

constexpr std::size_t kMaxRecordedFailures = 16;

// Records one Failure per differing column; columns are indexed by a tensor
// of `col_dims` so witnesses come out as basis index tuples.
void compare(Report& rep, const std::string& name, const Matrix& lhs, const Matrix& rhs,
             std::vector<std::size_t> col_dims) {
  rep.checks.push_back(name);
  const TensorIndex idx(std::move(col_dims));
  const auto cols = lhs.differing_columns(rhs);
  for (std::size_t n = 0; n < cols.size() && n < kMaxRecordedFailures; ++n) {
    rep.failures.push_back({name, idx.unflatten(cols[n]), "", lhs.col(cols[n]), rhs.col(cols[n])});
  }
  if (cols.size() > kMaxRecordedFailures) {
    rep.notes.push_back(name + ": " + std::to_string(cols.size()) + " failing columns, first " +
                        std::to_string(kMaxRecordedFailures) + " recorded");
  }
}

}  // namespace

Report verify_bialgebra_axioms(const HopfData& h) {
  h.check_shapes();
  const std::size_t n = h.dim;
  const SparseMatrix id = SparseMatrix::identity(n);
  const SparseMatrix mu(h.mult_matrix());
  const SparseMatrix delta(h.comult_matrix());
  const SparseMatrix eps(h.counit_matrix());
  const SparseMatrix eta(h.unit_matrix());
  Report rep{"bialgebra axioms"};

  compare_columns(rep, "associativity", mu * kron(mu, id), mu * kron(id, mu), {n, n, n});
  compare_columns(rep, "left unit", mu * kron(eta, id), id, {n});
  compare_columns(rep, "right unit", mu * kron(id, eta), id, {n});
  compare_columns(rep, "coassociativity", kron(delta, id) * delta, kron(id, delta) * delta, {n});
  compare_columns(rep, "left counit", kron(eps, id) * delta, id, {n});
  compare_columns(rep, "right counit", kron(id, eps) * delta, id, {n});

  // Δ(ab) = Δ(a)Δ(b): (m⊗m)(1 3 2 4)(Δ⊗Δ)
  const std::size_t dims4[] = {n, n, n, n};
  const std::size_t middle_swap[] = {0, 2, 1, 3};
  const SparseMatrix dd = permute_row_factors(kron(delta, delta), dims4, middle_swap);
  compare_columns(rep, "comultiplication multiplicative", delta * mu, kron(mu, mu) * dd, {n, n});
  compare_columns(rep, "comultiplication unital", delta * eta, kron(eta, eta), {1});
  compare_columns(rep, "counit multiplicative", eps * mu, kron(eps, eps), {n, n});
  compare_columns(rep, "counit unital", eps * eta, SparseMatrix::identity(1), {1});
  return rep;
}

Report verify_antipode(const HopfData& h) {
  h.check_shapes();
  const std::size_t n = h.dim;
  const Matrix id = Matrix::identity(n);
  const Matrix mu = h.mult_matrix();
  const Matrix delta = h.comult_matrix();
  const Matrix target = h.unit_matrix() * h.counit_matrix();
  Report rep{"antipode"};
  compare(rep, "m(S⊗id)Δ = ηε", mu * kron(h.antipode, id) * delta, target, {n});
  compare(rep, "m(id⊗S)Δ = ηε", mu * kron(id, h.antipode) * delta, target, {n});
  return rep;
}

Report verify_antipode_antihomomorphism(const HopfData& h) {
  const std::size_t n = h.dim;
  const Matrix mu = h.mult_matrix();
  const std::size_t dims[] = {n, n};
  const std::size_t swap[] = {1, 0};
  // S∘m versus m∘(S⊗S)∘τ
  const Matrix rhs = permute_col_factors(mu * kron(h.antipode, h.antipode), dims, swap);
  Report rep{"antipode anti-homomorphism"};
  compare(rep, "S(ab) = S(b)S(a)", h.antipode * mu, rhs, {n, n});
  compare(rep, "S(1) = 1", h.antipode * h.unit_matrix(), h.unit_matrix(), {1});
  return rep;
}

bool is_grouplike(const HopfData& h, std::span<const Scalar> x) {
  return h.epsilon(x) == 1 && h.coproduct(x) == kron(x, x);
}

Vector grouplike_inverse(const HopfData& h, std::span<const Scalar> g) {
  if (!is_grouplike(h, g)) throw std::invalid_argument("grouplike_inverse: not a grouplike element");
  return h.apply_antipode(g);
}

std::vector<Vector> enumerate_grouplikes(const HopfData& h) {
  h.check_shapes();
  const std::size_t n = h.dim;
  std::vector<Polynomial> eqs;
  Polynomial norm = Polynomial::constant(n, -1);
  for (std::size_t i = 0; i < n; ++i) norm += Polynomial::variable(n, i) * h.counit[i];
  eqs.push_back(norm);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      Polynomial e = Polynomial::variable(n, j) * Polynomial::variable(n, k) * Scalar(-1);
      for (std::size_t i = 0; i < n; ++i) e += Polynomial::variable(n, i) * h.d(i, j, k);
      eqs.push_back(std::move(e));
    }
  }
  return solve_polynomial_system(n, std::move(eqs));
}

std::vector<Functional> enumerate_characters(const HopfData& h) {
  h.check_shapes();
  const std::size_t n = h.dim;
  std::vector<Polynomial> eqs;
  Polynomial unital = Polynomial::constant(n, -1);
  for (std::size_t i = 0; i < n; ++i) unital += Polynomial::variable(n, i) * h.unit[i];
  eqs.push_back(unital);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Polynomial e = Polynomial::variable(n, i) * Polynomial::variable(n, j);
      for (std::size_t k = 0; k < n; ++k) e -= Polynomial::variable(n, k) * h.m(i, j, k);
      eqs.push_back(std::move(e));
    }
  }
  std::vector<Functional> out;
  for (auto& v : solve_polynomial_system(n, std::move(eqs))) out.push_back({std::move(v)});
  return out;
}

Functional counit_functional(const HopfData& h) { return {h.counit}; }

Functional convolve(const Functional& p, const Functional& q, const HopfData& h) {
  Functional out{Vector(h.dim)};
  for (std::size_t i = 0; i < h.dim; ++i)
    for (std::size_t j = 0; j < h.dim; ++j) {
      if (is_zero(p.values[j])) continue;
      for (std::size_t k = 0; k < h.dim; ++k)
        if (!is_zero(h.d(i, j, k))) out.values[i] += h.d(i, j, k) * p.values[j] * q.values[k];
    }
  return out;
}

std::optional<Functional> convolution_inverse(const Functional& p, const HopfData& h) {
  // (p * q)(b_i) = sum_k [sum_j d(i,j,k) p_j] q_k
  Matrix a(h.dim, h.dim);
  for (std::size_t i = 0; i < h.dim; ++i)
    for (std::size_t j = 0; j < h.dim; ++j)
      for (std::size_t k = 0; k < h.dim; ++k) a(i, k) += h.d(i, j, k) * p.values[j];
  const auto sol = solve_affine(a, h.counit);
  if (!sol) return std::nullopt;
  Functional q{sol->particular};
  if (convolve(q, p, h).values != h.counit) return std::nullopt;
  return q;
}

Vector embed_pair(const HopfData& h, std::span<const Scalar> element, std::size_t k, std::size_t first,
                  std::size_t second) {
  if (first >= second || second >= k) throw std::invalid_argument("embed_pair: need first < second < k");
  const std::size_t n = h.dim;
  const TensorIndex out_idx(std::vector<std::size_t>(k, n));
  Vector out(out_idx.size());
  for (std::size_t f = 0; f < element.size(); ++f) {
    if (is_zero(element[f])) continue;
    Vector acc{element[f]};
    for (std::size_t s = 0; s < k; ++s) {
      if (s == first) {
        acc = kron(acc, h.basis(f / n));
      } else if (s == second) {
        acc = kron(acc, h.basis(f % n));
      } else {
        acc = kron(acc, h.unit);
      }
    }
    for (std::size_t t = 0; t < out.size(); ++t) out[t] += acc[t];
  }
  return out;
}

namespace {

void compare_vectors(Report& rep, const std::string& name, std::vector<std::size_t> witness, const Vector& lhs,
                     const Vector& rhs) {
  if (lhs != rhs) rep.failures.push_back({name, std::move(witness), "", lhs, rhs});
}

}  // namespace

Report verify_qt(const HopfData& h, const RMatrix& r) {
  h.check_shapes();
  const std::size_t n = h.dim;
  Report rep{"quasi-triangular structure"};
  if (r.element.size() != n * n) throw StructuralError("RMatrix: expected dim^2 coordinates");

  rep.checks.push_back("R invertible");
  const Vector one2 = kron(h.unit, h.unit);
  Matrix left(n * n, n * n);
  for (std::size_t c = 0; c < n * n; ++c) left.set_col(c, h.tensor_multiply(r.element, unit_vector(n * n, c), 2));
  const auto sol = solve_affine(left, one2);
  if (!sol || h.tensor_multiply(sol->particular, r.element, 2) != one2) {
    rep.failures.push_back({"R invertible", {}, "R has no two-sided inverse in H⊗H", r.element, one2});
    rep.notes.push_back("remaining QT identities skipped");
    return rep;
  }
  const Vector r_inv = sol->particular;

  const Matrix id = Matrix::identity(n);
  const Matrix delta = h.comult_matrix();
  const Vector r13 = embed_pair(h, r.element, 3, 0, 2);
  const Vector r23 = embed_pair(h, r.element, 3, 1, 2);
  const Vector r12 = embed_pair(h, r.element, 3, 0, 1);

  rep.checks.push_back("(Δ⊗id)R = R13 R23");
  compare_vectors(rep, "(Δ⊗id)R = R13 R23", {}, kron(delta, id) * r.element, h.tensor_multiply(r13, r23, 3));
  rep.checks.push_back("(id⊗Δ)R = R13 R12");
  compare_vectors(rep, "(id⊗Δ)R = R13 R12", {}, kron(id, delta) * r.element, h.tensor_multiply(r13, r12, 3));

  rep.checks.push_back("Δop(h) = R Δ(h) R^-1");
  const std::size_t dims[] = {n, n};
  const std::size_t swap[] = {1, 0};
  const Matrix delta_op = permute_row_factors(delta, dims, swap);
  for (std::size_t i = 0; i < n; ++i) {
    const Vector conj = h.tensor_multiply(h.tensor_multiply(r.element, delta.col(i), 2), r_inv, 2);
    compare_vectors(rep, "Δop(h) = R Δ(h) R^-1", {i}, delta_op.col(i), conj);
  }
  return rep;
}

Report verify_yang_baxter(const HopfData& h, const RMatrix& r) {
  const Vector r12 = embed_pair(h, r.element, 3, 0, 1);
  const Vector r13 = embed_pair(h, r.element, 3, 0, 2);
  const Vector r23 = embed_pair(h, r.element, 3, 1, 2);
  Report rep{"Yang-Baxter"};
  rep.checks.push_back("R12 R13 R23 = R23 R13 R12");
  compare_vectors(rep, "R12 R13 R23 = R23 R13 R12", {},
                  h.tensor_multiply(h.tensor_multiply(r12, r13, 3), r23, 3),
                  h.tensor_multiply(h.tensor_multiply(r23, r13, 3), r12, 3));
  return rep;
}

Report verify_cqt(const HopfData& h, const RForm& r) {
  h.check_shapes();
  const std::size_t n = h.dim;
  if (r.values.rows() != n || r.values.cols() != n) throw StructuralError("RForm: expected dim x dim values");
  const Matrix& rv = r.values;
  Report rep{"coquasi-triangular structure"};

  // convolution inverse on the coalgebra H⊗H, solved as a linear system
  rep.checks.push_back("r convolution invertible");
  const Vector eps2 = kron(h.counit, h.counit);
  Matrix left(n * n, n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          if (is_zero(h.d(a, i, j))) continue;
          for (std::size_t k = 0; k < n; ++k)
            for (std::size_t l = 0; l < n; ++l) {
              if (is_zero(h.d(b, k, l))) continue;
              left(a * n + b, j * n + l) += h.d(a, i, j) * h.d(b, k, l) * rv(i, k);
            }
        }
  const auto sol = solve_affine(left, eps2);
  bool invertible = sol.has_value();
  if (invertible) {
    // right inverse check: r̄(a1⊗b1) r(a2⊗b2) = ε(a)ε(b)
    const Vector& rbar = sol->particular;
    for (std::size_t a = 0; a < n && invertible; ++a)
      for (std::size_t b = 0; b < n && invertible; ++b) {
        Scalar s = 0;
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
              for (std::size_t l = 0; l < n; ++l)
                if (!is_zero(h.d(a, i, j)) && !is_zero(h.d(b, k, l)))
                  s += h.d(a, i, j) * h.d(b, k, l) * rbar[i * n + k] * rv(j, l);
        invertible = s == eps2[a * n + b];
      }
  }
  if (!invertible) {
    rep.failures.push_back({"r convolution invertible", {}, "no two-sided convolution inverse", {}, {}});
    rep.notes.push_back("remaining CQT identities skipped");
    return rep;
  }

  rep.checks.push_back("r(c⊗ab) = r(c1⊗b) r(c2⊗a)");
  rep.checks.push_back("r(ab⊗c) = r(a⊗c1) r(b⊗c2)");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        Scalar lhs1 = 0, rhs1 = 0, lhs2 = 0, rhs2 = 0;
        for (std::size_t k = 0; k < n; ++k) {
          lhs1 += h.m(a, b, k) * rv(c, k);
          lhs2 += h.m(a, b, k) * rv(k, c);
        }
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j) {
            if (is_zero(h.d(c, i, j))) continue;
            rhs1 += h.d(c, i, j) * rv(i, b) * rv(j, a);
            rhs2 += h.d(c, i, j) * rv(a, i) * rv(b, j);
          }
        compare_vectors(rep, "r(c⊗ab) = r(c1⊗b) r(c2⊗a)", {a, b, c}, {lhs1}, {rhs1});
        compare_vectors(rep, "r(ab⊗c) = r(a⊗c1) r(b⊗c2)", {a, b, c}, {lhs2}, {rhs2});
      }

  rep.checks.push_back("r(a1⊗b1) a2 b2 = r(a2⊗b2) b1 a1");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      Vector lhs(n), rhs(n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          if (is_zero(h.d(a, i, j))) continue;
          for (std::size_t k = 0; k < n; ++k)
            for (std::size_t l = 0; l < n; ++l) {
              if (is_zero(h.d(b, k, l))) continue;
              const Scalar c = h.d(a, i, j) * h.d(b, k, l);
              for (std::size_t t = 0; t < n; ++t) {
                lhs[t] += c * rv(i, k) * h.m(j, l, t);  // r(a1⊗b1) a2 b2
                rhs[t] += c * rv(j, l) * h.m(k, i, t);  // r(a2⊗b2) b1 a1
              }
            }
        }
      compare_vectors(rep, "r(a1⊗b1) a2 b2 = r(a2⊗b2) b1 a1", {a, b}, lhs, rhs);
    }
  return rep;
}

}  // namespace crossbraid
