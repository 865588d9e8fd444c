#include <crossbraid/crossed.hpp>

#include <crossbraid/linalg.hpp>
#include <crossbraid/polysystem.hpp>
#include <crossbraid/supergroup.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace crossbraid {

// ---------------------------------------------------------------- groups

std::size_t FiniteGroup::inverse(std::size_t a) const {
  for (std::size_t b = 0; b < size(); ++b)
    if (mul(a, b) == 0) return b;
  throw std::invalid_argument("FiniteGroup: element without inverse");
}

bool FiniteGroup::is_abelian() const {
  for (std::size_t a = 0; a < size(); ++a)
    for (std::size_t b = 0; b < size(); ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::size_t FiniteGroup::index_of(const std::string& label) const {
  const auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) throw std::out_of_range("unknown group element '" + label + "'");
  return static_cast<std::size_t>(it - labels.begin());
}

void FiniteGroup::validate() const {
  const std::size_t n = size();
  if (n == 0 || table.size() != n) throw std::invalid_argument("FiniteGroup: table size mismatch");
  for (const auto& row : table) {
    if (row.size() != n) throw std::invalid_argument("FiniteGroup: table size mismatch");
    std::vector<bool> seen(n, false);
    for (auto v : row) {
      if (v >= n || seen[v]) throw std::invalid_argument("FiniteGroup: rows must be permutations");
      seen[v] = true;
    }
  }
  for (std::size_t a = 0; a < n; ++a)
    if (mul(0, a) != a || mul(a, 0) != a) throw std::invalid_argument("FiniteGroup: element 0 is not the identity");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) throw std::invalid_argument("FiniteGroup: not associative");
}

FiniteGroup FiniteGroup::cyclic2() { return FiniteGroup{{"e", "u"}, {{0, 1}, {1, 0}}}; }

bool CrossedDatum::instantiable() const {
  return std::all_of(bigalois.begin(), bigalois.end(), [](const BiGaloisFlag& f) { return f.trivial; });
}

// ---------------------------------------------------------------- validation

namespace {

std::string triple_label(const FiniteGroup& g, std::initializer_list<std::size_t> xs) {
  std::string s = "(";
  bool first = true;
  for (auto x : xs) {
    if (!first) s += ",";
    s += g.labels[x];
    first = false;
  }
  return s + ")";
}

void check_datum_shapes(const CrossedDatum& d) {
  const std::size_t n = d.group.size();
  if (d.gmap.size() != n * n || d.fmaps.size() != n * n || d.gamma.size() != n * n * n || d.bigalois.size() != n)
    throw std::invalid_argument("CrossedDatum: component sizes do not match the group order");
}

void require_instantiable(const CrossedDatum& d) {
  for (std::size_t a = 0; a < d.bigalois.size(); ++a) {
    if (!d.bigalois[a].trivial) {
      throw NotInstantiable("tensor products in this category need the biGalois object " + d.bigalois[a].label +
                            " (grade " + d.group.labels[a] + "), whose structure is not available");
    }
  }
}

}  // namespace

Report validate_datum(const HopfData& h, const CrossedDatum& d) {
  d.group.validate();
  check_datum_shapes(d);
  const FiniteGroup& G = d.group;
  const std::size_t n = G.size();
  Report rep("crossed datum");

  rep.checks.push_back("L_e = H");
  if (!d.bigalois[0].trivial) rep.failures.push_back({"L_e = H", {0}, "identity grade carries " + d.bigalois[0].label, {}, {}});
  if (!d.instantiable()) {
    rep.notes.push_back("nontrivial biGalois object present; only flag-level checks were run");
    return rep;
  }

  const Vector one = h.unit;
  const Matrix id = Matrix::identity(h.dim);

  rep.checks.push_back("g grouplike");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (!is_grouplike(h, d.g(a, b)))
        rep.failures.push_back({"g grouplike", {a, b}, "g" + triple_label(G, {a, b}) + " = " + h.format(d.g(a, b)), d.g(a, b), {}});

  rep.checks.push_back("normalization");
  for (std::size_t a = 0; a < n; ++a) {
    for (const auto& [x, y] : {std::pair{std::size_t{0}, a}, std::pair{a, std::size_t{0}}}) {
      if (d.g(x, y) != one)
        rep.failures.push_back({"normalization", {x, y}, "g" + triple_label(G, {x, y}) + " ≠ 1", d.g(x, y), one});
      if (d.f(x, y) != id)
        rep.failures.push_back({"normalization", {x, y}, "f" + triple_label(G, {x, y}) + " ≠ id", {}, {}});
    }
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if ((a == 0 || b == 0 || c == 0) && d.gam(a, b, c) != 1)
          rep.failures.push_back({"normalization", {a, b, c}, "γ" + triple_label(G, {a, b, c}) + " ≠ 1",
                                  {d.gam(a, b, c)}, {1}});

  rep.checks.push_back("g 2-cocycle");
  rep.checks.push_back("f composition");
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        const Vector lhs = h.multiply(d.g(b, c), d.g(a, G.mul(b, c)));
        const Vector rhs = h.multiply(d.g(a, b), d.g(G.mul(a, b), c));
        if (lhs != rhs)
          rep.failures.push_back({"g 2-cocycle", {a, b, c}, "g(b,c)g(a,bc) ≠ g(a,b)g(ab,c) at " + triple_label(G, {a, b, c}),
                                  lhs, rhs});
        const Matrix fl = d.f(G.mul(a, b), c) * d.f(a, b);
        const Matrix fr = d.f(a, G.mul(b, c)) * d.f(b, c);
        if (fl != fr) {
          const auto cols = fl.differing_columns(fr);
          rep.failures.push_back({"f composition", {a, b, c},
                                  "f(ab,c)f(a,b) ≠ f(a,bc)f(b,c) at " + triple_label(G, {a, b, c}) + ", basis " +
                                      h.labels[cols.front()],
                                  fl.col(cols.front()), fr.col(cols.front())});
        }
      }
    }
  }

  rep.checks.push_back("γ 3-cocycle");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t e = 0; e < n; ++e) {
          const Scalar lhs = d.gam(b, c, e) * d.gam(a, G.mul(b, c), e) * d.gam(a, b, c);
          const Scalar rhs = d.gam(G.mul(a, b), c, e) * d.gam(a, b, G.mul(c, e));
          if (lhs != rhs)
            rep.failures.push_back({"γ 3-cocycle", {a, b, c, e}, "at " + triple_label(G, {a, b, c, e}), {lhs}, {rhs}});
        }

  rep.checks.push_back("f bicomodule algebra isomorphism");
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (!is_grouplike(h, d.g(a, b))) continue;
      const auto m = classify_map(h, d.f(a, b), d.g(a, b));
      if (m.is_algebra_map && m.is_bicomodule() && m.is_invertible) continue;
      std::string why;
      if (!m.is_algebra_map) why += " not multiplicative;";
      if (!m.is_left_comodule) why += " not a left comodule map;";
      if (!m.is_right_comodule) why += " not a right comodule map;";
      if (!m.is_invertible) why += " not invertible;";
      why.pop_back();
      rep.failures.push_back({"f bicomodule algebra isomorphism", {a, b},
                              "f" + triple_label(G, {a, b}) + ": H^" + h.format(d.g(a, b)) + " -> H" + why, {}, {}});
    }
  }
  return rep;
}

// ---------------------------------------------------------------- objects

GradedObject make_graded(const Comodule& v, std::size_t grade, const FiniteGroup& group) {
  if (grade >= group.size()) throw std::out_of_range("make_graded: grade outside the group");
  return GradedObject{v, grade, "[" + v.name() + "," + group.labels[grade] + "]"};
}

GradedObject tensor_graded(const HopfData& h, const CrossedDatum& d, const GradedObject& x, const GradedObject& y) {
  require_instantiable(d);
  const Vector& g = d.g(x.grade, y.grade);
  Comodule vw = tensor_comodules(h, x.comodule, y.comodule);
  if (g != h.unit) vw = tensor_comodules(h, vw, grouplike_comodule(h, g));
  GradedObject out{std::move(vw), d.group.mul(x.grade, y.grade), {}};
  out.label = x.label + "⊗" + y.label;
  return out;
}

// ---------------------------------------------------------------- operators

SparseVector LocalOp::apply(const SparseVector& v) const {
  const std::size_t c = core.cols();
  const std::size_t block = c * right;
  SparseVector out;
  for (const auto& [idx, val] : v) {
    const std::size_t l = idx / block;
    const std::size_t m = (idx % block) / right;
    const std::size_t r = idx % right;
    for (const auto& [i, a] : core.column(m)) out.emplace_back((l * c + i) * right + r, scale * a * val);
  }
  return normalize(std::move(out));
}

SparseMatrix LocalOp::materialize() const {
  return kron(kron(SparseMatrix::identity(left), core), SparseMatrix::identity(right)) * scale;
}

SparseMatrix sigma_half_braiding(const HopfData& h, const CrossedDatum& d, std::size_t a, std::size_t b,
                                 const Comodule& x) {
  return natural_endo_from_functional(h, counit_composite(h, d.f(a, b)), x);
}

LocalOp associator_component(const HopfData& h, const CrossedDatum& d, const GradedObject& x, const GradedObject& y,
                             const GradedObject& z, AssociatorModel model) {
  const std::size_t a = x.grade, b = y.grade, c = z.grade;
  LocalOp op;
  op.scale = d.gam(a, b, c);
  op.left = x.dim() * y.dim();
  const bool active = model == AssociatorModel::sigma || (a != 0 && b != 0 && c != 0);
  op.core = active ? sigma_half_braiding(h, d, a, b, z.comodule) : SparseMatrix::identity(z.dim());
  return op;
}

LocalOp inverse(const LocalOp& op) {
  const auto core_inv = inverse(op.core.dense());
  if (!core_inv || is_zero(op.scale)) throw std::invalid_argument("inverse: operator is not invertible");
  return LocalOp{1 / op.scale, op.left, SparseMatrix(*core_inv), op.right};
}

namespace {

struct PentagonOps {
  std::vector<LocalOp> lhs;  // applied in order
  std::vector<LocalOp> rhs;
  std::size_t dim = 0;
};

// LHS: α_{W,X,Y⊗Z} ∘ α_{W⊗X,Y,Z};  RHS: (id_W ⊗ α_{X,Y,Z}) ∘ α_{W,X⊗Y,Z} ∘ (α_{W,X,Y} ⊗ id_Z)
PentagonOps pentagon_ops(const HopfData& h, const CrossedDatum& d, const std::vector<GradedObject>& t,
                         const std::vector<std::vector<GradedObject>>& pair, std::size_t w, std::size_t x,
                         std::size_t y, std::size_t z, AssociatorModel model) {
  PentagonOps p;
  p.dim = t[w].dim() * t[x].dim() * t[y].dim() * t[z].dim();
  p.lhs.push_back(associator_component(h, d, pair[w][x], t[y], t[z], model));
  p.lhs.push_back(associator_component(h, d, t[w], t[x], pair[y][z], model));
  LocalOp first = associator_component(h, d, t[w], t[x], t[y], model);
  first.right = t[z].dim();
  p.rhs.push_back(std::move(first));
  p.rhs.push_back(associator_component(h, d, t[w], pair[x][y], t[z], model));
  LocalOp last = associator_component(h, d, t[x], t[y], t[z], model);
  last.left *= t[w].dim();
  p.rhs.push_back(std::move(last));
  return p;
}

SparseVector run(const std::vector<LocalOp>& ops, SparseVector v) {
  for (const auto& op : ops) v = op.apply(v);
  return v;
}

std::vector<std::vector<GradedObject>> pair_products(const HopfData& h, const CrossedDatum& d,
                                                     const std::vector<GradedObject>& t) {
  std::vector<std::vector<GradedObject>> pair(t.size());
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = 0; j < t.size(); ++j) pair[i].push_back(tensor_graded(h, d, t[i], t[j]));
  return pair;
}

// ρ with lhs = ρ·rhs on every column, if it exists.
std::optional<Scalar> proportionality(const PentagonOps& p, bool unit_scales) {
  auto strip = [&](std::vector<LocalOp> ops) {
    if (unit_scales)
      for (auto& op : ops) op.scale = 1;
    return ops;
  };
  const auto lops = strip(p.lhs), rops = strip(p.rhs);
  std::optional<Scalar> ratio;
  for (std::size_t col = 0; col < p.dim; ++col) {
    const SparseVector e{{col, Scalar(1)}};
    const SparseVector l = run(lops, e), r = run(rops, e);
    if (l.size() != r.size()) return std::nullopt;
    for (std::size_t k = 0; k < l.size(); ++k) {
      if (l[k].first != r[k].first) return std::nullopt;
      const Scalar q = l[k].second / r[k].second;
      if (!ratio) ratio = q;
      else if (*ratio != q) return std::nullopt;
    }
  }
  return ratio.value_or(Scalar(1));
}

std::string describe_vector(const SparseVector& v) {
  std::ostringstream os;
  os << "{";
  for (std::size_t k = 0; k < v.size(); ++k) os << (k ? ", " : "") << v[k].first << ": " << to_string(v[k].second);
  os << "}";
  return os.str();
}

}  // namespace

GradedMorphism associator(const HopfData& h, const CrossedDatum& d, const GradedObject& x, const GradedObject& y,
                          const GradedObject& z, AssociatorModel model) {
  require_instantiable(d);
  GradedMorphism m{associator_component(h, d, x, y, z, model), tensor_graded(h, d, tensor_graded(h, d, x, y), z),
                   tensor_graded(h, d, x, tensor_graded(h, d, y, z))};
  return m;
}

Report verify_associator_morphisms(const HopfData& h, const CrossedDatum& d, const std::vector<GradedObject>& t,
                                   AssociatorModel model) {
  require_instantiable(d);
  const auto pair = pair_products(h, d, t);
  Report rep("associators are comodule morphisms");
  rep.checks.push_back("associator comodule morphism");
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = 0; j < t.size(); ++j)
      for (std::size_t k = 0; k < t.size(); ++k) {
        const auto source = tensor_graded(h, d, pair[i][j], t[k]);
        const auto target = tensor_graded(h, d, t[i], pair[j][k]);
        const auto op = associator_component(h, d, t[i], t[j], t[k], model);
        const Report r = check_comodule_morphism(h, op.materialize(), source.comodule, target.comodule);
        if (!r.passed()) {
          Failure f = r.failures.front();
          f.identity = "associator comodule morphism";
          f.detail = "α on " + t[i].label + ", " + t[j].label + ", " + t[k].label + " (basis " +
                     std::to_string(f.witness.empty() ? 0 : f.witness.front()) + ")";
          f.witness = {i, j, k};
          rep.failures.push_back(std::move(f));
        }
      }
  return rep;
}

Report verify_pentagon(const HopfData& h, const CrossedDatum& d, const std::vector<GradedObject>& t,
                       AssociatorModel model) {
  require_instantiable(d);
  constexpr std::size_t kMaxRecorded = 16;
  const auto pair = pair_products(h, d, t);
  Report rep("pentagon");
  rep.checks.push_back("pentagon");
  std::size_t failing = 0;
  const std::size_t n = t.size();
  for (std::size_t w = 0; w < n; ++w)
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t z = 0; z < n; ++z) {
          const auto p = pentagon_ops(h, d, t, pair, w, x, y, z, model);
          for (std::size_t col = 0; col < p.dim; ++col) {
            const SparseVector e{{col, Scalar(1)}};
            const SparseVector l = run(p.lhs, e), r = run(p.rhs, e);
            if (l == r) continue;
            if (failing++ < kMaxRecorded) {
              std::string detail = t[w].label + ", " + t[x].label + ", " + t[y].label + ", " + t[z].label +
                                   ": basis vector " + std::to_string(col) + " maps to " + describe_vector(l) +
                                   " vs " + describe_vector(r);
              if (const auto ratio = proportionality(p, false)) detail += "; sides differ by the scalar " + to_string(*ratio);
              rep.failures.push_back({"pentagon", {w, x, y, z}, detail, to_dense(l, p.dim), to_dense(r, p.dim)});
            }
            break;
          }
        }
  if (failing > kMaxRecorded)
    rep.notes.push_back("pentagon: " + std::to_string(failing) + " failing quadruples, first " +
                        std::to_string(kMaxRecorded) + " recorded");
  return rep;
}

Report verify_unit_coherence(const HopfData& h, const CrossedDatum& d, const std::vector<GradedObject>& t) {
  require_instantiable(d);
  const GradedObject unit = make_graded(grouplike_comodule(h, h.unit, "k1"), 0, d.group);
  Report rep("unit coherence");
  rep.checks.push_back("unit tensor");
  rep.checks.push_back("unit associators");
  for (std::size_t i = 0; i < t.size(); ++i) {
    const auto& x = t[i];
    for (const auto& ux : {tensor_graded(h, d, unit, x), tensor_graded(h, d, x, unit)}) {
      if (ux.grade != x.grade || !(ux.comodule.coaction() == x.comodule.coaction()))
        rep.failures.push_back({"unit tensor", {i}, x.label, {}, {}});
    }
    for (std::size_t j = 0; j < t.size(); ++j) {
      const auto& y = t[j];
      for (const auto& op : {associator_component(h, d, unit, x, y, AssociatorModel::sigma),
                             associator_component(h, d, x, unit, y, AssociatorModel::sigma),
                             associator_component(h, d, x, y, unit, AssociatorModel::sigma)}) {
        if (!(op.scale == 1 && op.core.is_identity()))
          rep.failures.push_back({"unit associators", {i, j}, x.label + ", " + y.label, {}, {}});
      }
    }
  }
  return rep;
}

PentagonObstruction pentagon_obstruction(const HopfData& h, const CrossedDatum& d, const std::vector<GradedObject>& t,
                                         AssociatorModel model) {
  require_instantiable(d);
  const FiniteGroup& G = d.group;
  const std::size_t n = G.size();
  PentagonObstruction out;

  std::map<std::size_t, std::size_t> var_of;  // flat γ index -> variable
  for (std::size_t a = 1; a < n; ++a)
    for (std::size_t b = 1; b < n; ++b)
      for (std::size_t c = 1; c < n; ++c) {
        var_of[(a * n + b) * n + c] = out.unknowns.size();
        out.unknowns.push_back("γ" + triple_label(G, {a, b, c}));
      }
  const std::size_t nv = out.unknowns.size();
  auto gamma_poly = [&](std::size_t a, std::size_t b, std::size_t c) {
    const auto it = var_of.find((a * n + b) * n + c);
    return it == var_of.end() ? Polynomial::constant(nv, d.gam(a, b, c)) : Polynomial::variable(nv, it->second);
  };

  const auto pair = pair_products(h, d, t);
  std::vector<Polynomial> equations;
  std::set<std::string> seen;
  for (std::size_t w = 0; w < t.size(); ++w)
    for (std::size_t x = 0; x < t.size(); ++x)
      for (std::size_t y = 0; y < t.size(); ++y)
        for (std::size_t z = 0; z < t.size(); ++z) {
          const auto p = pentagon_ops(h, d, t, pair, w, x, y, z, model);
          const auto ratio = proportionality(p, true);
          if (!ratio) {
            out.proportional = false;
            continue;
          }
          const std::size_t gw = t[w].grade, gx = t[x].grade, gy = t[y].grade, gz = t[z].grade;
          const Polynomial mon_l = gamma_poly(G.mul(gw, gx), gy, gz) * gamma_poly(gw, gx, G.mul(gy, gz));
          const Polynomial mon_r =
              gamma_poly(gw, gx, gy) * gamma_poly(gw, G.mul(gx, gy), gz) * gamma_poly(gx, gy, gz);
          Polynomial eq = mon_l * *ratio - mon_r;
          if (eq.is_zero()) continue;
          if (seen.insert(eq.to_string()).second) {
            out.equations.push_back(eq.to_string() + " = 0");
            equations.push_back(std::move(eq));
          }
        }
  if (!out.proportional) {
    out.status = "not proportional";
    out.message = "on some quadruple the two pentagon composites are not scalar multiples of each other";
    return out;
  }
  try {
    out.solutions = solve_polynomial_system(nv, equations);
    out.status = out.solutions.empty() ? "inconsistent" : "solvable";
  } catch (const OutsideRationals& e) {
    out.status = "no rational solution";
    out.message = e.what();
  } catch (const PositiveDimensional& e) {
    out.status = "undetermined";
    out.message = e.what();
  } catch (const IrreducibleSystem& e) {
    out.status = "undetermined";
    out.message = e.what();
  }
  return out;
}

// ---------------------------------------------------------------- duals

GradedObject dual_data(const HopfData& h, const CrossedDatum& d, const GradedObject& x) {
  const FiniteGroup& G = d.group;
  if (x.grade == 0) {
    const std::size_t dim = x.dim();
    const SparseMatrix s(h.antipode);
    std::vector<SparseVector> cols(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      for (const auto& [flat, c] : x.comodule.coact(i)) {
        const std::size_t hi = flat / dim, k = flat % dim;
        for (const auto& [si, sc] : s.column(hi)) cols[k].emplace_back(si * dim + i, c * sc);
      }
    }
    SparseMatrix rho(h.dim * dim, dim);
    for (std::size_t k = 0; k < dim; ++k) rho.set_column(k, std::move(cols[k]));
    return make_graded(Comodule(h, std::move(rho), x.comodule.name() + "*"), 0, G);
  }
  const bool is_unit = x.dim() == 1 && x.comodule.coact(0) == to_sparse(h.unit);
  if (!is_unit) throw std::invalid_argument("dual data not specified for " + x.label);
  const std::size_t inv = G.inverse(x.grade);
  const Vector& g = d.g(x.grade, inv);
  const std::string name = g == h.unit ? "k1" : "k_" + h.format(g);
  return make_graded(grouplike_comodule(h, g, name), inv, G);
}

// ---------------------------------------------------------------- presets

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names = {
      "C0-1-id-plus", "C0-1-id-minus", "C0-u-iota-plus", "C0-u-iota-minus",
      "D-1-id-plus",  "D-1-id-minus",  "D-u-iota-plus",  "D-u-iota-minus",
  };
  return names;
}

CategoryPreset preset(const std::string& name) {
  const auto& names = preset_names();
  if (std::find(names.begin(), names.end(), name) == names.end())
    throw std::invalid_argument("unknown preset '" + name + "'");
  const bool c0 = name.rfind("C0-", 0) == 0;
  const bool twisted = name.find("-u-iota-") != std::string::npos;
  const bool minus = name.ends_with("-minus");

  const HopfData h = build_supergroup(2);
  CrossedDatum d;
  d.group = FiniteGroup::cyclic2();
  d.gmap.assign(4, h.unit);
  d.fmaps.assign(4, Matrix::identity(h.dim));
  d.gamma.assign(8, Scalar(1));
  d.bigalois.assign(2, BiGaloisFlag{});
  if (twisted) {
    d.g(1, 1) = h.element("u");
    d.f(1, 1) = build_iota(2);
  }
  d.gam(1, 1, 1) = minus ? -1 : 1;
  if (c0) d.bigalois[1] = BiGaloisFlag{false, "U₀"};

  CategoryPreset p;
  p.name = name;
  p.display = std::string(c0 ? "C₀" : "D") + (twisted ? "(u,ι," : "(1,id,") + (minus ? "−1)" : "1)");
  p.datum = std::move(d);
  p.instantiable = !c0;
  return p;
}

std::optional<Testset> parse_testset(const std::string& name) {
  if (name == "minimal") return Testset::minimal;
  if (name == "default") return Testset::standard;
  if (name == "extended") return Testset::extended;
  return std::nullopt;
}

std::string to_string(Testset t) {
  switch (t) {
    case Testset::minimal: return "minimal";
    case Testset::standard: return "default";
    case Testset::extended: return "extended";
  }
  return "default";
}

std::vector<GradedObject> make_testset(const HopfData& h, const CrossedDatum& d, Testset t) {
  const FiniteGroup& G = d.group;
  const Comodule k1 = grouplike_comodule(h, h.unit, "k1");
  std::vector<Comodule> base = {k1};
  for (const auto& g : enumerate_grouplikes(h))
    if (g != h.unit) base.push_back(grouplike_comodule(h, g));
  if (t != Testset::minimal) base.push_back(regular_comodule(h));
  if (t == Testset::extended)
    for (const auto& g : enumerate_grouplikes(h))
      if (g != h.unit) base.push_back(twist_coaction(h, regular_comodule(h), g));
  std::vector<GradedObject> out;
  for (std::size_t a = 0; a < G.size(); ++a)
    for (const auto& c : base) out.push_back(make_graded(c, a, G));
  return out;
}

}  // namespace crossbraid
