#include <crossbraid/braiding.hpp>
#include <crossbraid/linalg.hpp>
#include <crossbraid/supergroup.hpp>

#include <doctest.h>

#include <algorithm>

using namespace crossbraid;

namespace {

const HopfData& h2() {
  static const HopfData h = build_supergroup(2);
  return h;
}

const RForm& r2() {
  static const RForm r = standard_r_form(2);
  return r;
}

Functional chi() {
  Functional f{Vector(8)};
  f.values[h2().index_of("1")] = 1;
  f.values[h2().index_of("u")] = -1;
  return f;
}

CrossedDatum datum(const std::string& name) { return preset(name).datum; }

Vector negated(Vector v) {
  for (auto& x : v) x = -x;
  return v;
}

BraidingCandidate trivial() { return trivial_candidate(h2(), FiniteGroup::cyclic2()); }

BraidingCandidate chi_chi() { return c2_candidate(h2(), chi(), chi(), CandidateClass::character, "χ, χ"); }

std::vector<Comodule> faithful_probes() {
  const auto& h = h2();
  return {grouplike_comodule(h, h.unit, "k1"), grouplike_comodule(h, h.element("u")),
          tensor_comodules(h, regular_comodule(h), regular_comodule(h))};
}

}  // namespace

TEST_CASE("r-form braiding") {
  const auto& h = h2();
  const Comodule k1 = grouplike_comodule(h, h.unit, "k1");
  const Comodule ku = grouplike_comodule(h, h.element("u"));
  CHECK(rform_braiding(h, r2(), k1, k1).dense() == Matrix{{1}});
  CHECK(rform_braiding(h, r2(), ku, ku).dense() == Matrix{{-1}});
  CHECK(rform_braiding(h, r2(), k1, ku).dense() == Matrix{{1}});
  const Comodule reg = regular_comodule(h);
  const SparseMatrix c = rform_braiding(h, r2(), reg, reg);
  CHECK(check_comodule_morphism(h, c, tensor_comodules(h, reg, reg), tensor_comodules(h, reg, reg)).passed());
  // c(x1⊗x1): only r(u⊗u) = −1 survives
  const std::size_t x1 = h.index_of("x1");
  CHECK(c.column(x1 * 8 + x1) == SparseVector{{x1 * 8 + x1, Scalar(-1)}});
}

TEST_CASE("r(·⊗u) and r(u⊗·) are the parity character") {
  CHECK(r_left_slot(h2(), r2(), h2().element("u")) == chi());
  CHECK(r_right_slot(h2(), r2(), h2().element("u")) == chi());
  CHECK(r_left_slot(h2(), r2(), h2().unit) == counit_functional(h2()));
}

TEST_CASE("R is triangular, so the r-form braiding is symmetric") {
  const auto& h = h2();
  const Vector& R = standard_r_matrix(2).element;
  Vector flipped(R.size());
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) flipped[j * 8 + i] = R[i * 8 + j];
  CHECK(h.tensor_multiply(flipped, R, 2) == kron(h.unit, h.unit));
  const Comodule reg = regular_comodule(h);
  const SparseMatrix c = rform_braiding(h, r2(), reg, reg);
  CHECK((c * c).is_identity());
}

TEST_CASE("general conditions (braid1)–(braid5)") {
  const auto& h = h2();
  SUBCASE("trivial candidate on D(1,id,1) passes") {
    CHECK(check_general_conditions(h, r2(), datum("D-1-id-plus"), trivial()).passed());
  }
  SUBCASE("trivial candidate on D(u,ι,1) passes") {
    CHECK(check_general_conditions(h, r2(), datum("D-u-iota-plus"), trivial()).passed());
  }
  SUBCASE("trivial candidate on D(u,ι,−1): V^u(u) = 1 ≠ γ⁻¹") {
    const Report r = check_general_conditions(h, r2(), datum("D-u-iota-minus"), trivial());
    const Failure* f = r.first_failure("braid4");
    REQUIRE(f != nullptr);
    CHECK(f->witness == std::vector<std::size_t>{1, 1, 1});
    CHECK(f->lhs == Vector{1});
    CHECK(f->rhs == Vector{-1});
  }
  SUBCASE("non-symmetric g fails braid1") {
    auto d = datum("D-1-id-plus");
    d.g(0, 1) = h.element("u");
    const Report r = check_general_conditions(h, r2(), d, trivial());
    REQUIRE(r.failed("braid1"));
    CHECK(r.first_failure("braid1")->witness == std::vector<std::size_t>{0, 1});
  }
  SUBCASE("non-abelian grading group is reported") {
    // S3 as permutations of {0,1,2}
    std::vector<std::array<int, 3>> perms = {{0, 1, 2}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}, {1, 2, 0}, {2, 0, 1}};
    FiniteGroup s3;
    for (std::size_t i = 0; i < 6; ++i) s3.labels.push_back("s" + std::to_string(i));
    s3.table.assign(6, std::vector<std::size_t>(6));
    for (std::size_t a = 0; a < 6; ++a)
      for (std::size_t b = 0; b < 6; ++b) {
        std::array<int, 3> p{};
        for (int k = 0; k < 3; ++k) p[k] = perms[a][perms[b][k]];
        s3.table[a][b] = std::find(perms.begin(), perms.end(), p) - perms.begin();
      }
    REQUIRE_NOTHROW(s3.validate());
    CrossedDatum d{s3, {}, {}, {}, {}};
    const Report r = check_general_conditions(h, r2(), d, trivial_candidate(h, s3));
    CHECK(r.failed("Γ abelian"));
  }
  SUBCASE("t-scalars: normalization and (braid4) with c = e force t ≡ 1") {
    auto c = trivial();
    c.t[1 * 2 + 0] = 2;
    CHECK(check_general_conditions(h, r2(), datum("D-1-id-plus"), c).failed("normalization"));
    auto c2 = trivial();
    c2.t[1 * 2 + 1] = -1;
    const Report r = check_general_conditions(h, r2(), datum("D-1-id-plus"), c2);
    REQUIRE(r.failed("braid4"));
    const auto it = std::find_if(r.failures.begin(), r.failures.end(), [](const Failure& f) {
      return f.identity == "braid4" && f.witness == std::vector<std::size_t>{1, 1, 0};
    });
    CHECK(it != r.failures.end());
  }
}

TEST_CASE("C2 conditions a–f") {
  const auto& h = h2();
  CHECK(check_c2_conditions(h, r2(), datum("D-u-iota-plus"), trivial()).passed());
  CHECK(check_c2_conditions(h, r2(), datum("D-1-id-plus"), trivial()).passed());
  const Report minus = check_c2_conditions(h, r2(), datum("D-u-iota-minus"), trivial());
  CHECK(minus.failed("e"));
  CHECK(minus.failed("f"));
  for (const auto* item : {"a", "b", "c", "d"}) CHECK_FALSE(minus.failed(item));
  // the exploratory character candidate passes every item
  CHECK(check_c2_conditions(h, r2(), datum("D-u-iota-minus"), chi_chi()).passed());
}

TEST_CASE("reduced conditions a′–e′") {
  const auto& h = h2();
  CHECK(check_reduced_conditions(h, r2(), datum("D-1-id-plus")).passed());
  CHECK(check_reduced_conditions(h, r2(), datum("D-u-iota-plus")).passed());
  for (const auto* name : {"D-1-id-minus", "D-u-iota-minus"}) {
    const Report r = check_reduced_conditions(h, r2(), datum(name));
    CHECK(r.failures.front().identity == "d′");
    CHECK(r.failed("e′"));
    CHECK_FALSE(r.failed("b′"));
    CHECK_FALSE(r.failed("c′"));
  }
  SUBCASE("f = id with g = u breaks b′ and c′") {
    auto d = datum("D-u-iota-plus");
    d.f(1, 1) = Matrix::identity(8);
    const Report r = check_reduced_conditions(h, r2(), d);
    CHECK(r.failed("b′"));
    CHECK(r.failed("c′"));
  }
}

TEST_CASE("conditions checked on the regular comodule agree with a faithful testset") {
  const auto& h = h2();
  const auto probes = faithful_probes();
  auto same = [](const Report& a, const Report& b) {
    REQUIRE(a.checks == b.checks);
    for (const auto& name : a.checks) CHECK(a.failed(name) == b.failed(name));
  };
  auto broken = datum("D-u-iota-plus");
  broken.f(1, 1) = Matrix::identity(8);
  for (const auto& d : {datum("D-1-id-plus"), datum("D-u-iota-minus"), broken}) {
    same(check_reduced_conditions(h, r2(), d), check_reduced_conditions(h, r2(), d, probes));
    for (const auto& c : {trivial(), chi_chi()}) {
      same(check_c2_conditions(h, r2(), d, c), check_c2_conditions(h, r2(), d, c, probes));
      same(check_general_conditions(h, r2(), d, c), check_general_conditions(h, r2(), d, c, probes));
    }
  }
}

TEST_CASE("corollary identity r(f(x₋₁)⊗g)x₀ = x") {
  const auto& h = h2();
  CHECK(corollary_check(h, r2(), Matrix::identity(8), h.unit).passed());
  CHECK(corollary_check(h, r2(), build_iota(2), h.element("u")).passed());
  const Report r = corollary_check(h, r2(), Matrix::identity(8), h.element("u"));
  const Failure* f = r.first_failure("corollary");
  REQUIRE(f != nullptr);
  CHECK(f->witness == std::vector<std::size_t>{h.index_of("u")});  // first failing basis element
  std::vector<std::string> reported;
  for (const auto& x : r.failures) reported.push_back(h.labels[x.witness[0]]);
  // exhaustively: r(x₋₁⊗u)x₀ is the parity ι, so exactly the odd-degree uᵉx_S fail, x among them
  const SparseMatrix endo = natural_endo_from_functional(h, chi(), regular_comodule(h));
  const std::size_t x1 = h.index_of("x1");
  CHECK(to_dense(endo.column(x1), 8) == negated(h.element("x1")));
  std::vector<std::string> failing;
  for (std::size_t j = 0; j < 8; ++j)
    if (endo.column(j) != SparseVector{{j, Scalar(1)}}) failing.push_back(h.labels[j]);
  CHECK(failing == std::vector<std::string>{"u", "x1", "x2", "ux1x2"});
  CHECK(reported == failing);
}

TEST_CASE("graded braiding components") {
  const auto& h = h2();
  const auto d = datum("D-1-id-plus");
  const auto t = make_testset(h, d, Testset::standard);
  const auto fam = build_graded_braiding(h, r2(), d, trivial(), t);
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = 0; j < t.size(); ++j)
      CHECK(fam.at(i, j) == rform_braiding(h, r2(), t[i].comodule, t[j].comodule));
  CHECK(fam.at(1, 1).dense() == Matrix{{-1}});  // ([k_u,e],[k_u,e])

  const auto dm = datum("D-u-iota-minus");
  const auto tm = make_testset(h, dm, Testset::standard);
  const SparseMatrix plain = rform_braiding(h, r2(), tm[5].comodule, tm[0].comodule);
  const SparseMatrix chi_c = graded_braiding(h, r2(), dm, chi_chi(), tm[5], tm[0]);  // ([H,u],[k1,e])
  const SparseMatrix parity = natural_endo_from_functional(h, chi(), regular_comodule(h));
  CHECK(chi_c == plain * kron(parity, SparseMatrix::identity(1)));
  CHECK_FALSE(chi_c == plain);
}

TEST_CASE("associator and braiding factors commute") {
  const auto& h = h2();
  const auto d = datum("D-u-iota-plus");
  const auto t = make_testset(h, d, Testset::standard);
  const SparseMatrix a = associator_component(h, d, t[5], t[5], t[5]).materialize();
  const SparseMatrix c = graded_braiding(h, r2(), d, trivial(), t[5], t[2]);
  const auto id = [](std::size_t k) { return SparseMatrix::identity(k); };
  CHECK(kron(a, id(64)) * kron(id(512), c) == kron(id(512), c) * kron(a, id(64)));
}

TEST_CASE("hexagons") {
  const auto& h = h2();
  for (const auto* name : {"D-1-id-plus", "D-u-iota-plus"}) {
    CAPTURE(name);
    const auto d = datum(name);
    const auto t = make_testset(h, d, Testset::standard);
    for (auto tau : {TauIndex::first_grade, TauIndex::second_grade})
      CHECK(verify_hexagons(h, r2(), d, trivial(), t, tau).passed());
  }
  SUBCASE("D(u,ι,−1) with the trivial braiding fails bra1 on all-u triples") {
    const auto d = datum("D-u-iota-minus");
    const auto t = make_testset(h, d, Testset::standard);
    const Report r = verify_hexagons(h, r2(), d, trivial(), t);
    const Failure* f = r.first_failure("bra1");
    REQUIRE(f != nullptr);
    CHECK(f->witness == std::vector<std::size_t>{3, 3, 3});  // [k1,u] three times
    CHECK(f->lhs == negated(f->rhs));
    for (const auto& fail : r.failures)
      for (auto i : fail.witness) CHECK(t[i].grade == 1);
    CHECK_FALSE(r.failed("naturality"));
    CHECK_FALSE(r.failed("braiding comodule morphism"));
  }
  SUBCASE("pass/fail does not depend on the order of the testset") {
    const auto d = datum("D-u-iota-minus");
    auto t = make_testset(h, d, Testset::standard);
    const Report forward = verify_hexagons(h, r2(), d, trivial(), t);
    std::reverse(t.begin(), t.end());
    const Report backward = verify_hexagons(h, r2(), d, trivial(), t);
    CHECK(forward.notes == backward.notes);
    CHECK(forward.passed() == backward.passed());
  }
  SUBCASE("a character candidate is not a family of comodule maps") {
    const auto d = datum("D-u-iota-minus");
    const Report r = verify_hexagons(h, r2(), d, chi_chi(), make_testset(h, d, Testset::standard));
    CHECK(r.failed("braiding comodule morphism"));
  }
}

TEST_CASE("restriction to the identity component") {
  const auto& h = h2();
  for (const auto* name : {"D-1-id-plus", "D-u-iota-plus"}) {
    CAPTURE(name);
    const auto d = datum(name);
    const auto fam = build_graded_braiding(h, r2(), d, trivial(), make_testset(h, d, Testset::standard));
    const auto res = restrict_to_identity_component(h, r2(), fam);
    CHECK(res.report.passed());
    CHECK(res.symmetric);  // the r-form comes from a triangular R
  }
  SUBCASE("a wrong grade-e component is caught") {
    const auto d = datum("D-1-id-plus");
    auto fam = build_graded_braiding(h, r2(), d, trivial(), make_testset(h, d, Testset::standard));
    fam.components[1 * fam.objects.size() + 1] = SparseMatrix::identity(1);
    const auto res = restrict_to_identity_component(h, r2(), fam);
    CHECK(res.report.failed("restriction equals r-form braiding"));
    CHECK(res.report.failed("bra1 in Comod(H)"));
  }
}

TEST_CASE("braidability verdicts") {
  for (const auto* name : {"C0-1-id-plus", "C0-1-id-minus", "C0-u-iota-plus", "C0-u-iota-minus"}) {
    const Verdict v = braidability_report(name);
    CHECK(v.status == VerdictStatus::filtered);
    CHECK(v.reason == "filtered: condition (1), biGalois nontrivial");
    CHECK(v.exploratory.empty());
  }
  for (const auto* name : {"D-1-id-plus", "D-u-iota-plus"}) {
    CAPTURE(name);
    const Verdict v = braidability_report(name, {Testset::standard, TauIndex::first_grade, false});
    CHECK(v.status == VerdictStatus::braidable);
    REQUIRE(v.candidate.has_value());
    CHECK(v.candidate->label.starts_with("trivial"));
    CHECK(v.hexagons.passed());
    REQUIRE(v.restriction.has_value());
    CHECK(v.restriction->report.passed());
  }
  for (const auto* name : {"D-1-id-minus", "D-u-iota-minus"}) {
    CAPTURE(name);
    const Verdict v = braidability_report(name, {Testset::standard, TauIndex::first_grade, false});
    CHECK(v.status == VerdictStatus::non_braidable);
    CHECK(v.reason == "non-braidable: γ = 1 required");
    CHECK(v.condition == "d′");
    CHECK_FALSE(v.candidate.has_value());
  }
}

TEST_CASE("exploratory character candidates on D(u,ι,−1)") {
  const Verdict v = braidability_report("D-u-iota-minus");
  CHECK(v.status == VerdictStatus::non_braidable);
  REQUIRE(v.exploratory.size() == 3);
  const auto it = std::find_if(v.exploratory.begin(), v.exploratory.end(),
                               [](const ExploratoryResult& e) { return e.candidate == "θᵘ = χ, τᵘ = χ, t ≡ 1"; });
  REQUIRE(it != v.exploratory.end());
  CHECK(it->flag == std::string(kExploratoryFlag));
  CHECK(it->conditions.passed());
  CHECK_FALSE(it->hexagons.checks.empty());
  CHECK_FALSE(it->hexagons.passed());
  CHECK_FALSE(it->braiding);
}
