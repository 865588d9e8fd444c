#include <crossbraid/supergroup.hpp>

#include <crossbraid/linalg.hpp>

#include <bit>
#include <stdexcept>

namespace crossbraid {

namespace {

// sign of the permutation sorting the concatenation x_S x_T (S ∩ T = ∅)
int shuffle_sign(std::uint32_t s, std::uint32_t t) {
  unsigned inversions = 0;
  for (unsigned i = 0; i < 32; ++i) {
    if ((s >> i) & 1U) inversions += static_cast<unsigned>(std::popcount(t & ((1U << i) - 1U)));
  }
  return inversions % 2 == 0 ? 1 : -1;
}

}  // namespace

std::string SupergroupBasis::label(std::size_t index) const {
  std::string out = parity_of(index) ? "u" : "";
  const auto s = subset_of(index);
  for (std::size_t i = 0; i < n; ++i)
    if ((s >> i) & 1U) out += "x" + std::to_string(i + 1);
  return out.empty() ? "1" : out;
}

HopfData build_supergroup(std::size_t n) {
  if (n < 1 || n > 8) throw std::invalid_argument("build_supergroup: need 1 <= n <= 8");
  const SupergroupBasis basis{n};
  const std::size_t dim = basis.dim();
  HopfData h;
  h.dim = dim;
  for (std::size_t i = 0; i < dim; ++i) h.labels.push_back(basis.label(i));
  h.mult.assign(dim * dim * dim, Scalar(0));
  h.comult.assign(dim * dim * dim, Scalar(0));
  h.unit = unit_vector(dim, SupergroupBasis::index(0, 0));
  h.counit = Vector(dim);
  h.antipode = Matrix(dim, dim);

  for (std::size_t a = 0; a < dim; ++a) {
    const unsigned e = SupergroupBasis::parity_of(a);
    const auto s = SupergroupBasis::subset_of(a);
    for (std::size_t b = 0; b < dim; ++b) {
      const unsigned d = SupergroupBasis::parity_of(b);
      const auto t = SupergroupBasis::subset_of(b);
      if (s & t) continue;
      int sign = shuffle_sign(s, t);
      if (d == 1 && std::popcount(s) % 2 == 1) sign = -sign;
      h.m(a, b, SupergroupBasis::index(e ^ d, s | t)) = sign;
    }
    h.counit[a] = s == 0 ? 1 : 0;
  }

  // Δ and S on generators, extended (anti)multiplicatively
  const std::size_t one = SupergroupBasis::index(0, 0);
  const std::size_t u = SupergroupBasis::index(1, 0);
  const auto gen_x = [&](std::size_t i) { return SupergroupBasis::index(0, 1U << i); };
  std::vector<Vector> delta_gen(n + 1), antipode_gen(n + 1);
  delta_gen[0] = kron(h.basis(u), h.basis(u));
  antipode_gen[0] = h.basis(u);
  for (std::size_t i = 0; i < n; ++i) {
    Vector dx = kron(h.basis(gen_x(i)), h.basis(one));
    const Vector second = kron(h.basis(u), h.basis(gen_x(i)));
    for (std::size_t k = 0; k < dx.size(); ++k) dx[k] += second[k];
    delta_gen[i + 1] = std::move(dx);
    Vector sx = h.multiply(h.basis(u), h.basis(gen_x(i)));
    for (auto& c : sx) c = -c;
    antipode_gen[i + 1] = std::move(sx);
  }
  for (std::size_t a = 0; a < dim; ++a) {
    const unsigned e = SupergroupBasis::parity_of(a);
    const auto s = SupergroupBasis::subset_of(a);
    Vector delta = kron(h.unit, h.unit);
    Vector anti = h.unit;
    if (e) {
      delta = delta_gen[0];
      anti = antipode_gen[0];
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (!((s >> i) & 1U)) continue;
      delta = h.tensor_multiply(delta, delta_gen[i + 1], 2);
      anti = h.multiply(antipode_gen[i + 1], anti);
    }
    for (std::size_t jk = 0; jk < dim * dim; ++jk) h.comult[a * dim * dim + jk] = delta[jk];
    h.antipode.set_col(a, anti);
  }
  return h;
}

RMatrix standard_r_matrix(std::size_t n) {
  const std::size_t dim = SupergroupBasis{n}.dim();
  const std::size_t one = SupergroupBasis::index(0, 0);
  const std::size_t u = SupergroupBasis::index(1, 0);
  RMatrix r{Vector(dim * dim)};
  const Scalar half(1, 2);
  r.element[one * dim + one] = half;
  r.element[one * dim + u] = half;
  r.element[u * dim + one] = half;
  r.element[u * dim + u] = -half;
  return r;
}

RForm standard_r_form(std::size_t n) {
  const std::size_t dim = SupergroupBasis{n}.dim();
  RForm r{Matrix(dim, dim)};
  for (unsigned a = 0; a < 2; ++a)
    for (unsigned b = 0; b < 2; ++b)
      r.values(SupergroupBasis::index(a, 0), SupergroupBasis::index(b, 0)) = (a & b) ? -1 : 1;
  return r;
}

Matrix build_iota(std::size_t n) {
  const std::size_t dim = SupergroupBasis{n}.dim();
  Matrix iota(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    const auto degree = SupergroupBasis::parity_of(i) + std::popcount(SupergroupBasis::subset_of(i));
    iota(i, i) = degree % 2 == 0 ? 1 : -1;
  }
  return iota;
}

HopfData build_group_algebra(const std::vector<std::vector<std::size_t>>& table,
                             const std::vector<std::string>& labels) {
  const std::size_t dim = table.size();
  HopfData h;
  h.dim = dim;
  h.labels = labels;
  h.mult.assign(dim * dim * dim, Scalar(0));
  h.comult.assign(dim * dim * dim, Scalar(0));
  h.unit = unit_vector(dim, 0);
  h.counit = Vector(dim, Scalar(1));
  h.antipode = Matrix(dim, dim);
  for (std::size_t g = 0; g < dim; ++g) {
    if (table[g].size() != dim) throw StructuralError("group table must be square");
    for (std::size_t k = 0; k < dim; ++k) {
      h.m(g, k, table[g][k]) = 1;
      if (table[g][k] == 0) h.antipode(k, g) = 1;
    }
    h.d(g, g, g) = 1;
  }
  h.check_shapes();
  return h;
}

HopfData build_c2_group_algebra() { return build_group_algebra({{0, 1}, {1, 0}}, {"1", "u"}); }

}  // namespace crossbraid
