#include <crossbraid/crossed.hpp>
#include <crossbraid/linalg.hpp>
#include <crossbraid/supergroup.hpp>

#include <doctest.h>

#include <algorithm>
#include <string>

using namespace crossbraid;

namespace {

const HopfData& h2() {
  static const HopfData h = build_supergroup(2);
  return h;
}

CrossedDatum datum(const std::string& name) { return preset(name).datum; }

std::vector<GradedObject> standard(const CrossedDatum& d) { return make_testset(h2(), d, Testset::standard); }

}  // namespace

TEST_CASE("presets") {
  CHECK(preset_names().size() == 8);
  for (const auto& name : preset_names()) {
    const auto p = preset(name);
    CHECK(p.instantiable == (name.rfind("C0-", 0) != 0));
    CHECK(p.datum.instantiable() == p.instantiable);
  }
  CHECK(preset("D-u-iota-minus").display == "D(u,ι,−1)");
  CHECK(preset("C0-1-id-plus").display == "C₀(1,id,1)");
  CHECK_THROWS_AS(preset("D-x"), std::invalid_argument);

  const auto d = datum("D-u-iota-minus");
  CHECK(d.g(1, 1) == h2().element("u"));
  CHECK(d.f(1, 1) == build_iota(2));
  CHECK(d.gam(1, 1, 1) == -1);
  CHECK(d.gam(0, 1, 1) == 1);
}

TEST_CASE("group helpers") {
  const FiniteGroup g = FiniteGroup::cyclic2();
  CHECK_NOTHROW(g.validate());
  CHECK(g.inverse(1) == 1);
  CHECK(g.is_abelian());
  CHECK(g.index_of("u") == 1);
  CHECK_THROWS_AS(g.index_of("v"), std::out_of_range);
  const FiniteGroup bad{{"e", "u"}, {{0, 1}, {1, 1}}};
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("validate_datum on the instantiable presets") {
  for (const auto* name : {"D-1-id-plus", "D-1-id-minus", "D-u-iota-plus", "D-u-iota-minus"}) {
    CAPTURE(name);
    const Report r = validate_datum(h2(), datum(name));
    CHECK(r.passed());
    CHECK(std::find(r.checks.begin(), r.checks.end(), "γ 3-cocycle") != r.checks.end());
  }
}

TEST_CASE("non-instantiable presets only get flag checks") {
  const auto d = datum("C0-u-iota-plus");
  const Report r = validate_datum(h2(), d);
  CHECK(r.passed());
  REQUIRE(r.notes.size() == 1);
  const auto t = make_testset(h2(), d, Testset::minimal);
  CHECK_THROWS_AS(tensor_graded(h2(), d, t[0], t[0]), NotInstantiable);
  CHECK_THROWS_AS(verify_pentagon(h2(), d, t), NotInstantiable);
}

TEST_CASE("mutations are rejected by validate_datum") {
  SUBCASE("γ(u,u,u) = 2 breaks the 3-cocycle identity") {
    auto d = datum("D-1-id-plus");
    d.gam(1, 1, 1) = 2;
    const Report r = validate_datum(h2(), d);
    CHECK(r.failed("γ 3-cocycle"));
    CHECK_FALSE(verify_pentagon(h2(), d, make_testset(h2(), d, Testset::minimal)).passed());
  }
  SUBCASE("f(u,u) = id with g(u,u) = u is not a bicomodule map H^u -> H") {
    auto d = datum("D-u-iota-plus");
    d.f(1, 1) = Matrix::identity(h2().dim);
    const Report r = validate_datum(h2(), d);
    CHECK(r.failed("f bicomodule algebra isomorphism"));
    CHECK_FALSE(verify_associator_morphisms(h2(), d, standard(d)).passed());
  }
  SUBCASE("g(u,u) = 1 with f(u,u) = ι is not a left comodule map") {
    auto d = datum("D-u-iota-plus");
    d.g(1, 1) = h2().unit;
    const Report r = validate_datum(h2(), d);
    REQUIRE(r.failed("f bicomodule algebra isomorphism"));
    CHECK(r.first_failure("f bicomodule algebra isomorphism")->detail.find("left comodule") != std::string::npos);
  }
  SUBCASE("non-normalized g") {
    auto d = datum("D-1-id-plus");
    d.g(0, 1) = h2().element("u");
    CHECK(validate_datum(h2(), d).failed("normalization"));
  }
}

TEST_CASE("tensor products of graded objects") {
  const auto d = datum("D-u-iota-plus");
  const auto t = standard(d);  // k1e kue He k1u kuu Hu
  REQUIRE(t.size() == 6);
  CHECK(t[5].label == "[H,u]");
  const auto kk = tensor_graded(h2(), d, t[4], t[4]);  // k_u ⊗ k_u ⊗ k_{g(u,u)} = k_u, grade e
  CHECK(kk.grade == 0);
  CHECK(kk.comodule.coact(0) == to_sparse(h2().element("u")));
  const auto hh = tensor_graded(h2(), d, t[5], t[5]);
  CHECK(hh.dim() == 64);
  CHECK(hh.grade == 0);
  const auto mixed = tensor_graded(h2(), d, t[0], t[3]);
  CHECK(mixed.grade == 1);
  CHECK(mixed.comodule.coact(0) == to_sparse(h2().unit));
}

TEST_CASE("σ half-braidings") {
  const auto d = datum("D-u-iota-plus");
  const auto& h = h2();
  CHECK(sigma_half_braiding(h, d, 1, 1, grouplike_comodule(h, h.element("u"))).dense() == Matrix{{-1}});
  CHECK(sigma_half_braiding(h, d, 1, 1, regular_comodule(h)).dense() == build_iota(2));
  CHECK(sigma_half_braiding(h, d, 0, 1, regular_comodule(h)).is_identity());
  const auto trivial = datum("D-1-id-minus");
  CHECK(sigma_half_braiding(h, trivial, 1, 1, regular_comodule(h)).is_identity());
}

TEST_CASE("associators") {
  const auto d = datum("D-u-iota-minus");
  const auto t = standard(d);
  const auto a = associator(h2(), d, t[3], t[3], t[4]);  // [k1,u],[k1,u],[k_u,u]
  CHECK(a.op.materialize().dense() == Matrix{{1}});       // γ = −1, σ = −1
  CHECK(a.source.dim() == 1);
  const auto b = associator(h2(), d, t[3], t[3], t[5]);
  CHECK(b.op.materialize().dense() == build_iota(2) * Scalar(-1));
  const auto lit = associator(h2(), d, t[0], t[3], t[5], AssociatorModel::literal);
  CHECK(lit.op.materialize().is_identity());
}

TEST_CASE("LocalOp applies like its materialized matrix") {
  LocalOp op{Scalar(3), 2, SparseMatrix(Matrix{{0, 1}, {1, 0}}), 2};
  const SparseMatrix m = op.materialize();
  CHECK(op.dim() == 8);
  for (std::size_t j = 0; j < 8; ++j) CHECK(op.apply({{j, Scalar(1)}}) == m.column(j));
}

TEST_CASE("associators are comodule morphisms for valid data") {
  for (const auto* name : {"D-1-id-plus", "D-u-iota-plus"}) {
    CAPTURE(name);
    const auto d = datum(name);
    CHECK(verify_associator_morphisms(h2(), d, standard(d)).passed());
  }
}

TEST_CASE("literal associator on D(u,ι) is not a comodule morphism") {
  // Dropping σ on a (u,u,e) triple leaves k_u on the wrong side of Z.
  const auto d = datum("D-u-iota-plus");
  const auto t = standard(d);
  const Report r = verify_associator_morphisms(h2(), d, t, AssociatorModel::literal);
  const Failure* f = r.first_failure("associator comodule morphism");
  REQUIRE(f != nullptr);
  REQUIRE(f->witness.size() == 3);
  CHECK(t[f->witness[0]].grade == 1);
  CHECK(t[f->witness[1]].grade == 1);
  CHECK(t[f->witness[2]].grade == 0);
}

TEST_CASE("pentagon holds for D(1,id,±1)") {
  for (const auto* name : {"D-1-id-plus", "D-1-id-minus"}) {
    CAPTURE(name);
    const auto d = datum(name);
    CHECK(verify_pentagon(h2(), d, standard(d)).passed());
  }
}

TEST_CASE("pentagon for D(u,ι,±1) fails by the scalar −γ(u,u,u)²") {
  for (const auto* name : {"D-u-iota-plus", "D-u-iota-minus"}) {
    CAPTURE(name);
    const auto d = datum(name);
    const auto t = make_testset(h2(), d, Testset::minimal);  // k1e kue k1u kuu
    const Report r = verify_pentagon(h2(), d, t);
    const Failure* f = r.first_failure("pentagon");
    REQUIRE(f != nullptr);
    for (auto i : f->witness) CHECK(t[i].grade == 1);
    CHECK(f->detail.find("differ by the scalar -1") != std::string::npos);
  }
}

TEST_CASE("pentagon obstruction") {
  SUBCASE("D(1,id): γ(u,u,u)² = 1") {
    const auto d = datum("D-1-id-plus");
    const auto ob = pentagon_obstruction(h2(), d, standard(d));
    CHECK(ob.proportional);
    CHECK(ob.status == "solvable");
    REQUIRE(ob.unknowns == std::vector<std::string>{"γ(u,u,u)"});
    std::vector<Vector> expected{{-1}, {1}};
    auto got = ob.solutions;
    std::sort(got.begin(), got.end());
    CHECK(got == expected);
  }
  SUBCASE("D(u,ι): γ(u,u,u)² = −1 has no rational solution") {
    const auto d = datum("D-u-iota-minus");
    const auto ob = pentagon_obstruction(h2(), d, standard(d));
    CHECK(ob.proportional);
    CHECK(ob.status == "no rational solution");
    CHECK(ob.solutions.empty());
    CHECK(ob.message.find("outside the rationals") != std::string::npos);
  }
}

TEST_CASE("unit coherence") {
  for (const auto* name : {"D-1-id-minus", "D-u-iota-plus"}) {
    const auto d = datum(name);
    CHECK(verify_unit_coherence(h2(), d, standard(d)).passed());
  }
}

TEST_CASE("dual data") {
  const auto& h = h2();
  const auto d = datum("D-u-iota-plus");
  const auto t = standard(d);
  const auto hd = dual_data(h, d, t[2]);  // [H,e]*
  CHECK(hd.grade == 0);
  CHECK(hd.dim() == 8);
  // the coaction of the dual basis vector of 1 is Σ S(h)⊗φ over the column of each basis vector
  CHECK(dual_data(h, d, t[1]).comodule.coact(0) == to_sparse(h.element("u")));  // k_u* = k_{u⁻¹}
  const auto k1u = dual_data(h, d, t[3]);
  CHECK(k1u.grade == 1);
  CHECK(k1u.comodule.coact(0) == to_sparse(h.element("u")));
  const auto trivial = datum("D-1-id-plus");
  CHECK(dual_data(h, trivial, t[3]).comodule.coact(0) == to_sparse(h.unit));
  CHECK_THROWS_AS(dual_data(h, d, t[5]), std::invalid_argument);
  CHECK_THROWS_AS(dual_data(h, d, t[4]), std::invalid_argument);
}

TEST_CASE("testsets") {
  const auto d = datum("D-1-id-plus");
  CHECK(make_testset(h2(), d, Testset::minimal).size() == 4);
  CHECK(make_testset(h2(), d, Testset::standard).size() == 6);
  const auto ext = make_testset(h2(), d, Testset::extended);
  REQUIRE(ext.size() == 8);
  CHECK(ext[3].label == "[H^u,e]");
  CHECK(parse_testset("default") == Testset::standard);
  CHECK(parse_testset("extended") == Testset::extended);
  CHECK_FALSE(parse_testset("huge").has_value());
  CHECK(to_string(Testset::minimal) == "minimal");
}
