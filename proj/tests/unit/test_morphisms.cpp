#include <crossbraid/linalg.hpp>
#include <crossbraid/morphisms.hpp>
#include <crossbraid/supergroup.hpp>

#include <doctest.h>

#include <algorithm>

using namespace crossbraid;

namespace {

const HopfData& h2() {
  static const HopfData h = build_supergroup(2);
  return h;
}

Functional chi(const HopfData& h) {
  Functional f{Vector(h.dim)};
  f.values[h.index_of("1")] = 1;
  f.values[h.index_of("u")] = -1;
  return f;
}

}  // namespace

TEST_CASE("natural endomorphisms (morphisms-module examples)") {
  const HopfData& h = h2();
  const Comodule reg = regular_comodule(h);
  CHECK(natural_endo_from_functional(h, counit_functional(h), reg).is_identity());
  const SparseMatrix p = natural_endo_from_functional(h, chi(h), reg);
  CHECK(p.apply(to_sparse(h.element("x1"))) == to_sparse(Vector{0, 0, -1, 0, 0, 0, 0, 0}));
  CHECK(p.apply(to_sparse(h.element("ux1"))) == to_sparse(h.element("ux1")));
  const Functional eps_iota = counit_composite(h, build_iota(2));
  CHECK(natural_endo_from_functional(h, eps_iota, grouplike_comodule(h, h.element("u"))).dense() == Matrix{{-1}});
}

TEST_CASE("bicomodule algebra automorphisms of kC2: id and the lazy character map") {
  const HopfData c2 = build_c2_group_algebra();
  const auto autos = enumerate_bicomodule_algebra_autos(c2);
  REQUIRE(autos.size() == 2);
  const Vector d = {1, -1};
  CHECK(autos[0].matrix == Matrix::diagonal(d));
  CHECK(autos[1].matrix == Matrix::identity(2));
  // every character of a cocommutative algebra is lazy: both maps are φ_λ
  for (const auto& m : character_induced_maps(c2)) CHECK(m.is_bicomodule());
}

TEST_CASE("bicomodule algebra automorphisms of H(2) = {id}") {
  const HopfData& h = h2();
  const auto autos = enumerate_bicomodule_algebra_autos(h);
  REQUIRE(autos.size() == 1);
  CHECK(autos[0].matrix == Matrix::identity(8));
  CHECK(bicomodule_map_space_dimension(h, h.unit) <= kMaxFreeParameters);
}

TEST_CASE("bicomodule algebra isomorphisms H^u -> H = {ι}") {
  const HopfData& h = h2();
  const auto isos = enumerate_bigalois_isos(h, h.element("u"));
  REQUIRE(isos.size() == 1);
  CHECK(isos[0].matrix == build_iota(2));
  CHECK(isos[0].matrix * h.element("u") == Vector{0, -1, 0, 0, 0, 0, 0, 0});
  CHECK(isos[0].matrix * isos[0].matrix == Matrix::identity(8));
  CHECK(bicomodule_map_space_dimension(h, h.element("u")) <= kMaxFreeParameters);
}

TEST_CASE("every enumerated map survives independent re-verification") {
  const HopfData& h = h2();
  for (const auto& g : enumerate_grouplikes(h)) {
    for (const auto& m : enumerate_bigalois_isos(h, g)) {
      const auto again = classify_map(h, m.matrix, g);
      CHECK(again.is_algebra_map);
      CHECK(again.is_bicomodule());
      CHECK(again.is_invertible);
    }
  }
}

TEST_CASE("the g = 1 class is closed under composition and ι is a torsor point") {
  const HopfData& h = h2();
  const auto autos = enumerate_bicomodule_algebra_autos(h);
  for (const auto& a : autos)
    for (const auto& b : autos) {
      const Matrix ab = a.matrix * b.matrix;
      CHECK(std::any_of(autos.begin(), autos.end(), [&](const auto& c) { return c.matrix == ab; }));
    }
  const Matrix iota = enumerate_bigalois_isos(h, h.element("u"))[0].matrix;
  CHECK(std::any_of(autos.begin(), autos.end(), [&](const auto& c) { return c.matrix == iota * iota; }));
}

TEST_CASE("the character-induced map φ_χ is excluded: left but not right comodule map") {
  const HopfData& h = h2();
  const auto chars = character_induced_maps(h);
  REQUIRE(chars.size() == 2);
  const Matrix phi = functional_induced_map(h, chi(h));
  const auto m = classify_map(h, phi, h.unit);
  CHECK(m.is_algebra_map);
  CHECK(m.is_left_comodule);
  CHECK_FALSE(m.is_right_comodule);
  const auto autos = enumerate_bicomodule_algebra_autos(h);
  CHECK(std::none_of(autos.begin(), autos.end(), [&](const auto& a) { return a.matrix == phi; }));
}

TEST_CASE("lazy functionals of H(2)") {
  const HopfData& h = h2();
  const auto lazy = lazy_functionals(h);
  CHECK_FALSE(lazy.empty());
  // χ is not lazy, ε is
  Matrix span(h.dim, lazy.size() + 1);
  for (std::size_t k = 0; k < lazy.size(); ++k) span.set_col(k, lazy[k].values);
  span.set_col(lazy.size(), h.counit);
  CHECK(rank(span) == lazy.size());
  span.set_col(lazy.size(), chi(h).values);
  CHECK(rank(span) == lazy.size() + 1);
}
