#include <crossbraid/braiding.hpp>

#include <crossbraid/linalg.hpp>
#include <crossbraid/supergroup.hpp>

#include <algorithm>

namespace crossbraid {

namespace {

constexpr std::size_t kMaxRecorded = 16;

std::vector<Comodule> probes_or_regular(const HopfData& h, const std::vector<Comodule>& probes) {
  return probes.empty() ? std::vector<Comodule>{regular_comodule(h)} : probes;
}

// Records a failure unless ψ and φ induce the same natural endomorphism on
// every probe. Witness = (probe index, basis index).
void compare_functionals(const HopfData& h, Report& rep, const std::string& name, const std::string& context,
                         const Functional& lhs, const Functional& rhs, const std::vector<Comodule>& probes) {
  if (std::find(rep.checks.begin(), rep.checks.end(), name) == rep.checks.end()) rep.checks.push_back(name);
  for (std::size_t p = 0; p < probes.size(); ++p) {
    const SparseMatrix l = natural_endo_from_functional(h, lhs, probes[p]);
    const SparseMatrix r = natural_endo_from_functional(h, rhs, probes[p]);
    for (std::size_t j = 0; j < l.cols(); ++j) {
      if (l.column(j) == r.column(j)) continue;
      rep.failures.push_back({name, {p, j},
                              context + (context.empty() ? "" : ", ") + "on " + probes[p].name() + " at basis " +
                                  std::to_string(j),
                              to_dense(l.column(j), l.rows()), to_dense(r.column(j), r.rows())});
      return;
    }
  }
}

void compare_scalars(Report& rep, const std::string& name, const std::string& context, const Scalar& lhs,
                     const Scalar& rhs, std::vector<std::size_t> witness) {
  if (std::find(rep.checks.begin(), rep.checks.end(), name) == rep.checks.end()) rep.checks.push_back(name);
  if (lhs != rhs)
    rep.failures.push_back({name, std::move(witness), context + ": " + to_string(lhs) + " ≠ " + to_string(rhs), {lhs},
                            {rhs}});
}

Functional inverse_or_throw(const HopfData& h, const Functional& f) {
  auto inv = convolution_inverse(f, h);
  if (!inv) throw std::invalid_argument("candidate functional is not convolution invertible");
  return *inv;
}

std::string grades(const FiniteGroup& g, std::initializer_list<std::size_t> xs) {
  std::string s = "(";
  for (auto x : xs) s += (s.size() > 1 ? "," : "") + g.labels[x];
  return s + ")";
}

}  // namespace

// ---------------------------------------------------------------- candidates

BraidingCandidate trivial_candidate(const HopfData& h, const FiniteGroup& group) {
  BraidingCandidate c;
  c.theta.assign(group.size(), counit_functional(h));
  c.tau.assign(group.size(), counit_functional(h));
  c.t.assign(group.size() * group.size(), Scalar(1));
  c.label = "trivial (θ = τ = id, t ≡ 1)";
  return c;
}

BraidingCandidate c2_candidate(const HopfData& h, const Functional& theta_u, const Functional& tau_u,
                               CandidateClass provenance, std::string label) {
  BraidingCandidate c = trivial_candidate(h, FiniteGroup::cyclic2());
  c.theta[1] = theta_u;
  c.tau[1] = tau_u;
  c.provenance = provenance;
  c.label = std::move(label);
  return c;
}

SparseMatrix rform_braiding(const HopfData& h, const RForm& r, const Comodule& x, const Comodule& y) {
  const std::size_t dx = x.dim(), dy = y.dim();
  SparseMatrix out(dy * dx, dx * dy);
  for (std::size_t i = 0; i < dx; ++i) {
    for (std::size_t j = 0; j < dy; ++j) {
      SparseVector col;
      for (const auto& [fx, cx] : x.coact(i)) {
        const std::size_t hx = fx / dx, xi = fx % dx;
        for (const auto& [fy, cy] : y.coact(j)) {
          const std::size_t hy = fy / dy, yj = fy % dy;
          const Scalar& rv = r.values(hy, hx);
          if (!is_zero(rv)) col.emplace_back(yj * dx + xi, rv * cx * cy);
        }
      }
      out.set_column(i * dy + j, std::move(col));
    }
  }
  (void)h;
  return out;
}

Functional r_left_slot(const HopfData& h, const RForm& r, std::span<const Scalar> g) {
  Functional f{Vector(h.dim)};
  for (std::size_t i = 0; i < h.dim; ++i)
    for (std::size_t j = 0; j < h.dim; ++j) f.values[i] += r.values(i, j) * g[j];
  return f;
}

Functional r_right_slot(const HopfData& h, const RForm& r, std::span<const Scalar> g) {
  Functional f{Vector(h.dim)};
  for (std::size_t i = 0; i < h.dim; ++i)
    for (std::size_t j = 0; j < h.dim; ++j) f.values[j] += g[i] * r.values(i, j);
  return f;
}

// ---------------------------------------------------------------- conditions

Report check_general_conditions(const HopfData& h, const RForm& r, const CrossedDatum& d, const BraidingCandidate& c,
                                const std::vector<Comodule>& probes_in) {
  const FiniteGroup& G = d.group;
  const std::size_t n = G.size();
  Report rep("braiding conditions (braid1)–(braid5)");
  if (!G.is_abelian()) {
    rep.checks.push_back("Γ abelian");
    rep.failures.push_back({"Γ abelian", {}, "Γ non-abelian", {}, {}});
    return rep;
  }
  const auto probes = probes_or_regular(h, probes_in);
  const Functional eps = counit_functional(h);

  rep.checks.push_back("normalization");
  if (!(c.theta[0] == eps) || !(c.tau[0] == eps))
    rep.failures.push_back({"normalization", {0}, "θᵉ, τᵉ must be the identity", {}, {}});
  for (std::size_t a = 0; a < n; ++a)
    if (c.t_at(a, 0) != 1 || c.t_at(0, a) != 1)
      rep.failures.push_back({"normalization", {a}, "t" + grades(G, {a, 0}) + " and t" + grades(G, {0, a}) + " must be 1",
                              {c.t_at(a, 0), c.t_at(0, a)}, {1, 1}});

  rep.checks.push_back("braid1");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (d.g(a, b) != d.g(b, a) || d.f(a, b) != d.f(b, a))
        rep.failures.push_back({"braid1", {a, b}, "(g, f) at " + grades(G, {a, b}) + " differs from " + grades(G, {b, a}),
                                d.g(a, b), d.g(b, a)});

  std::vector<Functional> theta_inv, tau_inv;
  for (std::size_t a = 0; a < n; ++a) {
    theta_inv.push_back(inverse_or_throw(h, c.theta[a]));
    tau_inv.push_back(inverse_or_throw(h, c.tau[a]));
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t ab = G.mul(a, b);
      const Functional F = counit_composite(h, d.f(a, b));
      const Functional rg = r_left_slot(h, r, d.g(a, b));
      const std::string at = "at " + grades(G, {a, b});
      compare_functionals(h, rep, "braid2", at,
                          convolve(convolve(c.tau[b], c.tau[a], h), tau_inv[ab], h), convolve(F, rg, h), probes);
      compare_functionals(h, rep, "braid3", at,
                          convolve(convolve(c.theta[b], c.theta[a], h), theta_inv[ab], h), convolve(rg, F, h), probes);
    }
  }
  // γ_{a,b,c} V^a(g(b,c)) t_{bc,a} γ_{b,c,a} = t_{b,c} γ_{b,a,c} t_{c,a}
  // γ⁻¹_{c,a,b} W^b(g(c,a)) t_{b,ca} γ⁻¹_{b,c,a} = t_{b,a} γ⁻¹_{c,b,a} t_{b,c}
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t cc = 0; cc < n; ++cc) {
        const std::string at = "at " + grades(G, {a, b, cc});
        compare_scalars(rep, "braid4", at,
                        d.gam(a, b, cc) * c.theta[a](d.g(b, cc)) * c.t_at(G.mul(b, cc), a) * d.gam(b, cc, a),
                        c.t_at(b, cc) * d.gam(b, a, cc) * c.t_at(cc, a), {a, b, cc});
        compare_scalars(rep, "braid5", at,
                        c.tau[b](d.g(cc, a)) * c.t_at(b, G.mul(cc, a)) / (d.gam(cc, a, b) * d.gam(b, cc, a)),
                        c.t_at(b, a) * c.t_at(b, cc) / d.gam(cc, b, a), {a, b, cc});
      }
  return rep;
}

Report check_c2_conditions(const HopfData& h, const RForm& r, const CrossedDatum& d, const BraidingCandidate& c,
                           const std::vector<Comodule>& probes_in) {
  if (d.group.size() != 2) throw std::invalid_argument("check_c2_conditions: the grading group must be C2");
  const auto probes = probes_or_regular(h, probes_in);
  Report rep("C2 braiding criterion a–f");
  const Functional eps = counit_functional(h);
  const Functional& v = c.theta[1];
  const Functional& w = c.tau[1];
  const Functional F = counit_composite(h, d.f(1, 1));
  const Functional rg = r_left_slot(h, r, d.g(1, 1));
  const Scalar gamma = d.gam(1, 1, 1);

  const auto v_inv = convolution_inverse(v, h);
  const auto w_inv = convolution_inverse(w, h);
  if (!w_inv) {
    rep.checks.push_back("a");
    rep.failures.push_back({"a", {}, "w is not invertible", {}, {}});
  } else {
    compare_functionals(h, rep, "a", "", convolve(w, *w_inv, h), eps, probes);
  }
  compare_functionals(h, rep, "b", "", convolve(w, w, h), convolve(F, rg, h), probes);
  if (!v_inv) {
    rep.checks.push_back("c");
    rep.failures.push_back({"c", {}, "v is not invertible", {}, {}});
  } else {
    compare_functionals(h, rep, "c", "", convolve(v, *v_inv, h), eps, probes);
  }
  compare_functionals(h, rep, "d", "", convolve(v, v, h), convolve(rg, F, h), probes);
  compare_scalars(rep, "e", "ε(v(g)) = γ⁻¹", v(d.g(1, 1)), 1 / gamma, {1});
  compare_scalars(rep, "f", "ε(w(g)) = γ", w(d.g(1, 1)), gamma, {1});
  return rep;
}

Report check_reduced_conditions(const HopfData& h, const RForm& r, const CrossedDatum& d,
                                const std::vector<Comodule>& probes_in) {
  if (d.group.size() != 2) throw std::invalid_argument("check_reduced_conditions: the grading group must be C2");
  const auto probes = probes_or_regular(h, probes_in);
  Report rep("C2 braiding criterion a′–e′ (v = w = id)");
  const Functional eps = counit_functional(h);
  const Functional F = counit_composite(h, d.f(1, 1));
  const Functional rg = r_left_slot(h, r, d.g(1, 1));
  const Scalar gamma = d.gam(1, 1, 1);
  const Scalar eps_g = eps(d.g(1, 1));
  compare_functionals(h, rep, "a′", "", convolve(eps, eps, h), eps, probes);
  compare_functionals(h, rep, "b′", "", eps, convolve(F, rg, h), probes);
  compare_functionals(h, rep, "c′", "", eps, convolve(rg, F, h), probes);
  compare_scalars(rep, "d′", "ε(g) = γ⁻¹", eps_g, 1 / gamma, {1});
  compare_scalars(rep, "e′", "ε(g) = γ", eps_g, gamma, {1});
  if (gamma != 1) rep.notes.push_back("d′ and e′ together require γ = 1");
  return rep;
}

Report corollary_check(const HopfData& h, const RForm& r, const Matrix& f, std::span<const Scalar> g) {
  Report rep("r(f(x₋₁)⊗g)x₀ = x");
  const Functional rg = r_left_slot(h, r, g);
  const Functional composite{(Matrix::row(rg.values) * f).row_vector(0)};
  // Every basis element is checked, not just the first failure.
  rep.checks.push_back("corollary");
  const SparseMatrix endo = natural_endo_from_functional(h, composite, regular_comodule(h));
  for (std::size_t j = 0; j < h.dim; ++j) {
    const SparseVector expected{{j, Scalar(1)}};
    if (endo.column(j) == expected) continue;
    rep.failures.push_back({"corollary", {j}, "at x = " + h.labels[j], to_dense(endo.column(j), h.dim),
                            to_dense(expected, h.dim)});
  }
  return rep;
}

// ---------------------------------------------------------------- graded braiding

SparseMatrix graded_braiding(const HopfData& h, const RForm& r, const CrossedDatum& d, const BraidingCandidate& c,
                             const GradedObject& x, const GradedObject& y, TauIndex tau) {
  const std::size_t a = x.grade, b = y.grade;
  const Functional& tau_f = c.tau[tau == TauIndex::first_grade ? a : b];
  const SparseMatrix theta_x = natural_endo_from_functional(h, c.theta[a], x.comodule);
  const SparseMatrix tau_y = natural_endo_from_functional(h, tau_f, y.comodule);
  SparseMatrix out = rform_braiding(h, r, x.comodule, y.comodule) * kron(theta_x, tau_y);
  if (c.t_at(a, b) != 1) out = out * c.t_at(a, b);
  (void)d;
  return out;
}

BraidingFamily build_graded_braiding(const HopfData& h, const RForm& r, const CrossedDatum& d,
                                     const BraidingCandidate& c, const std::vector<GradedObject>& testset,
                                     TauIndex tau) {
  BraidingFamily fam;
  fam.objects = testset;
  for (const auto& x : testset)
    for (const auto& y : testset) fam.components.push_back(graded_braiding(h, r, d, c, x, y, tau));
  return fam;
}

Report verify_hexagons(const HopfData& h, const RForm& r, const CrossedDatum& d, const BraidingCandidate& c,
                       const std::vector<GradedObject>& t, TauIndex tau) {
  const std::size_t n = t.size();
  Report rep("hexagons");
  rep.checks = {"braiding comodule morphism", "naturality", "bra1", "bra2"};

  std::vector<std::vector<GradedObject>> pair(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) pair[i].push_back(tensor_graded(h, d, t[i], t[j]));
  auto braid = [&](const GradedObject& x, const GradedObject& y) { return graded_braiding(h, r, d, c, x, y, tau); };
  auto assoc = [&](const GradedObject& x, const GradedObject& y, const GradedObject& z) {
    return associator_component(h, d, x, y, z);
  };
  auto id = [](std::size_t k) { return SparseMatrix::identity(k); };

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Report m = check_comodule_morphism(h, braid(t[i], t[j]), pair[i][j].comodule, pair[j][i].comodule);
      if (!m.passed())
        rep.failures.push_back({"braiding comodule morphism", {i, j}, "c on " + t[i].label + ", " + t[j].label,
                                m.failures.front().lhs, m.failures.front().rhs});
    }

  // naturality against j: [k_g, a] -> [H, a], 1 ↦ g
  const SparseMatrix regular = regular_comodule(h).coaction();
  for (std::size_t s = 0; s < n; ++s) {
    if (t[s].dim() != 1) continue;
    for (std::size_t big = 0; big < n; ++big) {
      if (t[big].grade != t[s].grade || !(t[big].comodule.coaction() == regular)) continue;
      SparseMatrix jm(h.dim, 1);
      jm.set_column(0, t[s].comodule.coact(0));
      for (std::size_t y = 0; y < n; ++y) {
        const std::size_t dy = t[y].dim();
        const bool first = braid(t[big], t[y]) * kron(jm, id(dy)) == kron(id(dy), jm) * braid(t[s], t[y]);
        const bool second = braid(t[y], t[big]) * kron(id(dy), jm) == kron(jm, id(dy)) * braid(t[y], t[s]);
        if (!first || !second)
          rep.failures.push_back({"naturality", {s, big, y},
                                  "embedding " + t[s].label + " -> " + t[big].label + " against " + t[y].label, {}, {}});
      }
    }
  }

  std::size_t failing1 = 0, failing2 = 0;
  auto record = [&](const char* name, std::size_t& count, std::size_t i, std::size_t j, std::size_t k,
                    const SparseMatrix& lhs, const SparseMatrix& rhs) {
    if (lhs == rhs) return;
    if (count++ >= kMaxRecorded) return;
    std::size_t col = 0;
    while (lhs.column(col) == rhs.column(col)) ++col;
    std::string detail = t[i].label + ", " + t[j].label + ", " + t[k].label + ": basis vector " + std::to_string(col);
    rep.failures.push_back({name, {i, j, k}, detail, to_dense(lhs.column(col), lhs.rows()),
                            to_dense(rhs.column(col), rhs.rows())});
  };

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const GradedObject &U = t[i], &V = t[j], &W = t[k];
        const std::size_t du = U.dim(), dv = V.dim(), dw = W.dim();
        // α_{V,W,U} c_{U,V⊗W} α_{U,V,W} = (id⊗c_{U,W}) α_{V,U,W} (c_{U,V}⊗id)
        const SparseMatrix lhs1 =
            assoc(V, W, U).materialize() * braid(U, pair[j][k]) * assoc(U, V, W).materialize();
        const SparseMatrix rhs1 =
            kron(id(dv), braid(U, W)) * assoc(V, U, W).materialize() * kron(braid(U, V), id(dw));
        record("bra1", failing1, i, j, k, lhs1, rhs1);
        // α⁻¹_{W,U,V} c_{U⊗V,W} α⁻¹_{U,V,W} = (c_{U,W}⊗id) α⁻¹_{U,W,V} (id⊗c_{V,W})
        const SparseMatrix lhs2 = inverse(assoc(W, U, V)).materialize() * braid(pair[i][j], W) *
                                  inverse(assoc(U, V, W)).materialize();
        const SparseMatrix rhs2 = kron(braid(U, W), id(dv)) * inverse(assoc(U, W, V)).materialize() *
                                  kron(id(du), braid(V, W));
        record("bra2", failing2, i, j, k, lhs2, rhs2);
      }
  for (const auto& [name, count] : {std::pair{"bra1", failing1}, std::pair{"bra2", failing2}})
    if (count > 0)
      rep.notes.push_back(std::string(name) + ": " + std::to_string(count) + " failing triples of " +
                          std::to_string(n * n * n));
  return rep;
}

RestrictionResult restrict_to_identity_component(const HopfData& h, const RForm& r, const BraidingFamily& family) {
  RestrictionResult out;
  out.report = Report("restriction to the identity component");
  Report& rep = out.report;
  rep.checks = {"restriction equals r-form braiding", "bra1 in Comod(H)", "bra2 in Comod(H)"};
  std::vector<std::size_t> e;
  for (std::size_t i = 0; i < family.objects.size(); ++i)
    if (family.objects[i].grade == 0) e.push_back(i);
  auto comod = [&](std::size_t i) -> const Comodule& { return family.objects[i].comodule; };
  auto id = [](std::size_t k) { return SparseMatrix::identity(k); };

  for (auto i : e)
    for (auto j : e) {
      const SparseMatrix& c = family.at(i, j);
      if (!(c == rform_braiding(h, r, comod(i), comod(j))))
        rep.failures.push_back({"restriction equals r-form braiding", {i, j},
                                family.objects[i].label + ", " + family.objects[j].label, {}, {}});
      if (out.symmetric && !(family.at(j, i) * c).is_identity()) {
        out.symmetric = false;
        out.asymmetry_witness = {i, j};
      }
    }
  for (auto i : e)
    for (auto j : e)
      for (auto k : e) {
        const Comodule vw = tensor_comodules(h, comod(j), comod(k));
        const Comodule uv = tensor_comodules(h, comod(i), comod(j));
        const std::size_t du = comod(i).dim(), dv = comod(j).dim(), dw = comod(k).dim();
        const std::string at = family.objects[i].label + ", " + family.objects[j].label + ", " + family.objects[k].label;
        if (!(rform_braiding(h, r, comod(i), vw) == kron(id(dv), family.at(i, k)) * kron(family.at(i, j), id(dw))))
          rep.failures.push_back({"bra1 in Comod(H)", {i, j, k}, at, {}, {}});
        if (!(rform_braiding(h, r, uv, comod(k)) == kron(family.at(i, k), id(dv)) * kron(id(du), family.at(j, k))))
          rep.failures.push_back({"bra2 in Comod(H)", {i, j, k}, at, {}, {}});
      }
  if (!out.symmetric)
    rep.notes.push_back("not symmetric: c∘c ≠ id on " + family.objects[out.asymmetry_witness[0]].label + ", " +
                        family.objects[out.asymmetry_witness[1]].label);
  return out;
}

// ---------------------------------------------------------------- verdicts

std::string to_string(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::braidable: return "braidable";
    case VerdictStatus::non_braidable: return "non-braidable";
    case VerdictStatus::filtered: return "filtered";
  }
  return "non-braidable";
}

namespace {

std::string functional_name(const HopfData& h, const Functional& f, const std::vector<Functional>& characters) {
  if (f == counit_functional(h)) return "ε";
  std::size_t k = 0;
  for (const auto& c : characters) {
    if (c == counit_functional(h)) continue;
    ++k;
    if (c == f) return k == 1 ? "χ" : "χ" + std::to_string(k);
  }
  return "λ";
}

void set_violation(Verdict& v, const Report& rep) {
  const Failure& f = rep.failures.front();
  v.condition = f.identity;
  v.witness = f.witness;
}

}  // namespace

Verdict braidability_report(const std::string& preset_name, const BraidabilityOptions& options) {
  const CategoryPreset p = preset(preset_name);
  const CrossedDatum& d = p.datum;
  Verdict v;
  v.preset = p.name;
  v.display = p.display;

  for (std::size_t a = 0; a < d.bigalois.size(); ++a) {
    if (!d.bigalois[a].trivial) {
      v.status = VerdictStatus::filtered;
      v.reason = "filtered: condition (1), biGalois nontrivial";
      v.condition = "(1) L_a ≅ H";
      v.witness = {a};
      return v;
    }
  }
  if (!d.group.is_abelian()) {
    v.status = VerdictStatus::filtered;
    v.reason = "filtered: condition (2), Γ non-abelian";
    v.condition = "(2) Γ abelian";
    return v;
  }

  const HopfData h = build_supergroup(2);
  const RForm r = standard_r_form(2);
  const auto testset = make_testset(h, d, options.testset);

  // Candidates from bicomodule algebra automorphisms v, w of H.
  const auto autos = enumerate_bicomodule_algebra_autos(h);
  const Matrix id = Matrix::identity(h.dim);
  std::vector<BraidingCandidate> candidates;
  for (const auto& va : autos)
    for (const auto& wa : autos) {
      const bool trivial = va.matrix == id && wa.matrix == id;
      candidates.push_back(trivial ? trivial_candidate(h, d.group)
                                   : c2_candidate(h, counit_composite(h, va.matrix), counit_composite(h, wa.matrix),
                                                  CandidateClass::bicomodule, "bicomodule automorphism pair"));
    }

  bool found = false;
  for (const auto& c : candidates) {
    const bool trivial = c.theta == trivial_candidate(h, d.group).theta && c.tau == trivial_candidate(h, d.group).tau;
    Report conds = trivial ? check_reduced_conditions(h, r, d) : check_c2_conditions(h, r, d, c);
    conds.merge(check_general_conditions(h, r, d, c));
    if (!conds.passed()) {
      if (!found && v.conditions.checks.empty()) {
        v.conditions = conds;
        set_violation(v, conds);
      }
      continue;
    }
    Report hex = verify_hexagons(h, r, d, c, testset, options.tau);
    if (!hex.passed()) {
      if (!found) {
        v.conditions = conds;
        v.hexagons = hex;
        set_violation(v, hex);
      }
      continue;
    }
    const auto family = build_graded_braiding(h, r, d, c, testset, options.tau);
    v.restriction = restrict_to_identity_component(h, r, family);
    if (!v.restriction->report.passed())
      throw std::logic_error("braidability_report: verified braiding does not restrict to a braiding of Comod(H)");
    v.status = VerdictStatus::braidable;
    v.reason = c.provenance == CandidateClass::bicomodule && c.label.starts_with("trivial")
                   ? "braidable with the trivial braiding"
                   : "braidable";
    v.candidate = c;
    v.conditions = conds;
    v.hexagons = hex;
    v.condition.clear();
    v.witness.clear();
    found = true;
    break;
  }
  if (!found) {
    v.status = VerdictStatus::non_braidable;
    v.reason = v.hexagons.checks.empty() ? "non-braidable: no candidate satisfies the conditions"
                                         : "non-braidable: hexagon identities fail";
    if (v.condition == "d′" || v.condition == "e′") v.reason = "non-braidable: γ = 1 required";
  }

  if (options.exploratory && d.group.size() == 2) {
    const auto characters = enumerate_characters(h);
    for (const auto& lt : characters)
      for (const auto& lw : characters) {
        if (lt == counit_functional(h) && lw == counit_functional(h)) continue;
        const std::string label = "θᵘ = " + functional_name(h, lt, characters) +
                                  ", τᵘ = " + functional_name(h, lw, characters) + ", t ≡ 1";
        const auto c = c2_candidate(h, lt, lw, CandidateClass::character, label);
        ExploratoryResult e;
        e.candidate = label;
        e.conditions = check_c2_conditions(h, r, d, c);
        e.hexagons = verify_hexagons(h, r, d, c, testset, options.tau);
        e.braiding = e.conditions.passed() && e.hexagons.passed();
        v.exploratory.push_back(std::move(e));
      }
  }
  return v;
}

}  // namespace crossbraid
