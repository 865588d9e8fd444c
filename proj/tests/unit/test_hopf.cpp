#include <crossbraid/hopf.hpp>
#include <crossbraid/linalg.hpp>
#include <crossbraid/supergroup.hpp>

#include <doctest.h>

#include <algorithm>

using namespace crossbraid;

namespace {

HopfData klein_four() {
  // C2 × C2 = {1, a, b, ab}
  return build_group_algebra({{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}}, {"1", "a", "b", "ab"});
}

// Exterior algebra on two generators; only the algebra part matters here.
HopfData exterior_fixture() {
  const HopfData h2 = build_supergroup(2);
  HopfData l;
  l.dim = 4;
  const std::size_t idx[] = {0, 2, 4, 6};  // 1, x1, x2, x1x2
  for (auto i : idx) l.labels.push_back(h2.labels[i]);
  l.mult.assign(64, 0);
  l.comult.assign(64, 0);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      for (std::size_t k = 0; k < 4; ++k) l.m(i, j, k) = h2.m(idx[i], idx[j], idx[k]);
  l.unit = unit_vector(4, 0);
  l.counit = unit_vector(4, 0);
  l.antipode = Matrix::identity(4);
  return l;
}

bool has_witness(const Report& rep, const std::string& id, const std::vector<std::size_t>& w) {
  return std::any_of(rep.failures.begin(), rep.failures.end(),
                     [&](const Failure& f) { return f.identity == id && f.witness == w; });
}

}  // namespace

TEST_CASE("group algebras are Hopf algebras") {
  for (const auto& h : {build_c2_group_algebra(), klein_four()}) {
    CHECK(verify_bialgebra_axioms(h).passed());
    CHECK(verify_antipode(h).passed());
    CHECK(verify_antipode_antihomomorphism(h).passed());
  }
}

TEST_CASE("shape errors are structural") {
  HopfData h = build_c2_group_algebra();
  h.mult.pop_back();
  CHECK_THROWS_AS(verify_bialgebra_axioms(h), StructuralError);
}

TEST_CASE("perturbed multiplication is caught as an associativity failure") {
  HopfData h = build_supergroup(2);
  h.m(h.index_of("x1"), h.index_of("x2"), h.index_of("x1x2")) += 1;
  const Report rep = verify_bialgebra_axioms(h);
  CHECK(rep.failed("associativity"));
  const Failure* f = rep.first_failure("associativity");
  REQUIRE(f != nullptr);
  CHECK(f->witness.size() == 3);
  CHECK(f->lhs != f->rhs);
}

TEST_CASE("antipode replaced by identity fails on x") {
  HopfData h = build_supergroup(2);
  h.antipode = Matrix::identity(h.dim);
  const Report rep = verify_antipode(h);
  CHECK(has_witness(rep, "m(S⊗id)Δ = ηε", {h.index_of("x1")}));
  const Failure* f = rep.first_failure("m(S⊗id)Δ = ηε");
  REQUIRE(f != nullptr);
}

TEST_CASE("grouplikes") {
  const HopfData c2 = build_c2_group_algebra();
  const auto g = enumerate_grouplikes(c2);
  REQUIRE(g.size() == 2);
  CHECK(std::find(g.begin(), g.end(), c2.element("1")) != g.end());
  CHECK(std::find(g.begin(), g.end(), c2.element("u")) != g.end());
  CHECK(enumerate_grouplikes(klein_four()).size() == 4);
}

TEST_CASE("grouplikes form a group") {
  for (const auto& h : {build_c2_group_algebra(), klein_four(), build_supergroup(2)}) {
    const auto gs = enumerate_grouplikes(h);
    for (const auto& a : gs) {
      CHECK(std::find(gs.begin(), gs.end(), grouplike_inverse(h, a)) != gs.end());
      for (const auto& b : gs) CHECK(std::find(gs.begin(), gs.end(), h.multiply(a, b)) != gs.end());
    }
  }
}

TEST_CASE("characters") {
  const HopfData c2 = build_c2_group_algebra();
  const auto ch = enumerate_characters(c2);
  REQUIRE(ch.size() == 2);
  const Functional chi{{1, -1}};
  CHECK(std::find(ch.begin(), ch.end(), counit_functional(c2)) != ch.end());
  CHECK(std::find(ch.begin(), ch.end(), chi) != ch.end());

  const auto ext = enumerate_characters(exterior_fixture());
  REQUIRE(ext.size() == 1);
  CHECK(ext[0].values == Vector{1, 0, 0, 0});
}

TEST_CASE("characters are multiplicative on every basis pair") {
  for (const auto& h : {build_c2_group_algebra(), klein_four(), build_supergroup(2)}) {
    for (const auto& chi : enumerate_characters(h)) {
      CHECK(chi(h.unit) == 1);
      for (std::size_t i = 0; i < h.dim; ++i)
        for (std::size_t j = 0; j < h.dim; ++j)
          CHECK(chi(h.multiply(h.basis(i), h.basis(j))) == chi.values[i] * chi.values[j]);
    }
  }
}

TEST_CASE("convolution") {
  const HopfData h = build_supergroup(2);
  const Functional eps = counit_functional(h);
  Functional chi{Vector(h.dim)};
  chi.values[h.index_of("1")] = 1;
  chi.values[h.index_of("u")] = -1;
  CHECK(convolve(eps, chi, h) == chi);
  CHECK(convolve(chi, eps, h) == chi);
  CHECK(convolve(chi, chi, h) == eps);
  const auto inv = convolution_inverse(chi, h);
  REQUIRE(inv);
  CHECK(*inv == chi);
  CHECK_FALSE(convolution_inverse(Functional{Vector(h.dim)}, h));
}

TEST_CASE("trivial R-matrix and r-form on kC2") {
  const HopfData c2 = build_c2_group_algebra();
  CHECK(verify_qt(c2, RMatrix{kron(c2.unit, c2.unit)}).passed());
  CHECK(verify_cqt(c2, RForm{kron(Matrix::column(c2.counit), Matrix::row(c2.counit))}).passed());
}

TEST_CASE("R = 1⊗1 on H(2) fails the conjugation identity at x") {
  const HopfData h = build_supergroup(2);
  const Report rep = verify_qt(h, RMatrix{kron(h.unit, h.unit)});
  CHECK(has_witness(rep, "Δop(h) = R Δ(h) R^-1", {h.index_of("x1")}));
}

TEST_CASE("r with r(u⊗u) = +1 fails quasi-cocommutativity at (x, u)") {
  const HopfData h = build_supergroup(2);
  RForm r = standard_r_form(2);
  r.values(h.index_of("u"), h.index_of("u")) = 1;
  const Report rep = verify_cqt(h, r);
  CHECK(has_witness(rep, "r(a1⊗b1) a2 b2 = r(a2⊗b2) b1 a1", {h.index_of("x1"), h.index_of("u")}));
}
