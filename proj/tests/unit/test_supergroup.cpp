#include <crossbraid/supergroup.hpp>

#include <doctest.h>

#include <algorithm>

using namespace crossbraid;

namespace {

Vector el(const HopfData& h, std::initializer_list<std::pair<const char*, int>> terms) {
  Vector v(h.dim);
  for (const auto& [label, c] : terms) v[h.index_of(label)] += c;
  return v;
}

Vector el2(const HopfData& h, std::initializer_list<std::tuple<const char*, const char*, int>> terms) {
  Vector v(h.dim * h.dim);
  for (const auto& [a, b, c] : terms) v[h.index_of(a) * h.dim + h.index_of(b)] += c;
  return v;
}

}  // namespace

TEST_CASE("H(2) has dimension 8 and the documented label order") {
  const HopfData h = build_supergroup(2);
  CHECK(h.dim == 8);
  CHECK(h.labels == std::vector<std::string>{"1", "u", "x1", "ux1", "x2", "ux2", "x1x2", "ux1x2"});
  CHECK(h.unit == h.element("1"));
}

TEST_CASE("H(n) passes every Hopf verifier for n = 1, 2, 3") {
  for (std::size_t n = 1; n <= 3; ++n) {
    const HopfData h = build_supergroup(n);
    CHECK(h.dim == (std::size_t{2} << n));
    CHECK(verify_bialgebra_axioms(h).passed());
    CHECK(verify_antipode(h).passed());
    CHECK(verify_antipode_antihomomorphism(h).passed());
    const auto g = enumerate_grouplikes(h);
    REQUIRE(g.size() == 2);
    CHECK(std::find(g.begin(), g.end(), h.element("1")) != g.end());
    CHECK(std::find(g.begin(), g.end(), h.element("u")) != g.end());
  }
}

TEST_CASE("relations: ux = -xu, x_i x_j = -x_j x_i, x^2 = 0") {
  const HopfData h = build_supergroup(2);
  const Vector u = h.element("u"), x1 = h.element("x1"), x2 = h.element("x2");
  CHECK(h.multiply(u, x1) == h.element("ux1"));
  CHECK(h.multiply(x1, u) == el(h, {{"ux1", -1}}));
  CHECK(h.multiply(x2, x1) == el(h, {{"x1x2", -1}}));
  CHECK(h.multiply(x1, x1) == zero_vector(8));
  CHECK(h.multiply(u, u) == h.element("1"));
}

TEST_CASE("coproduct on generators and on x1x2") {
  const HopfData h = build_supergroup(2);
  CHECK(h.coproduct(h.element("u")) == el2(h, {{"u", "u", 1}}));
  CHECK(h.coproduct(h.element("x1")) == el2(h, {{"x1", "1", 1}, {"u", "x1", 1}}));
  CHECK(h.coproduct(h.element("x1x2")) ==
        el2(h, {{"x1x2", "1", 1}, {"ux1", "x2", -1}, {"ux2", "x1", 1}, {"1", "x1x2", 1}}));
}

TEST_CASE("antipode on generators") {
  const HopfData h = build_supergroup(2);
  CHECK(h.apply_antipode(h.element("x1")) == el(h, {{"ux1", -1}}));
  CHECK(h.apply_antipode(h.element("u")) == h.element("u"));
  CHECK(h.apply_antipode(h.element("1")) == h.element("1"));
}

TEST_CASE("standard R-matrix") {
  const HopfData h = build_supergroup(2);
  const RMatrix r = standard_r_matrix(2);
  CHECK(r.element[0] == Scalar(1, 2));
  CHECK(r.element[h.index_of("u") * 8 + h.index_of("u")] == Scalar(-1, 2));
  CHECK(r.element[h.index_of("1") * 8 + h.index_of("u")] == Scalar(1, 2));
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j)
      if (SupergroupBasis::subset_of(i) != 0 || SupergroupBasis::subset_of(j) != 0) CHECK(is_zero(r.element[i * 8 + j]));
  const Report qt = verify_qt(h, r);
  CHECK(qt.passed());
  CHECK(verify_yang_baxter(h, r).passed());
}

TEST_CASE("the printed R (missing u in the third term) is not quasi-triangular") {
  const HopfData h = build_supergroup(2);
  RMatrix r = standard_r_matrix(2);
  r.element[h.index_of("u") * 8] = 0;  // drop u⊗1
  r.element[0] += Scalar(1, 2);        // read "⊗1" as 1⊗1
  CHECK_FALSE(verify_qt(h, r).passed());
}

TEST_CASE("standard r-form") {
  const HopfData h = build_supergroup(2);
  const RForm r = standard_r_form(2);
  const auto u = h.index_of("u"), one = h.index_of("1"), x1 = h.index_of("x1");
  CHECK(r.values(u, u) == -1);
  CHECK(r.values(one, u) == 1);
  CHECK(r.values(u, one) == 1);
  CHECK(r.values(one, one) == 1);
  CHECK(r.values(x1, x1) == 0);
  CHECK(verify_cqt(h, r).passed());
  for (std::size_t n = 1; n <= 3; ++n) CHECK(verify_cqt(build_supergroup(n), standard_r_form(n)).passed());
}

TEST_CASE("iota") {
  const HopfData h = build_supergroup(2);
  const Matrix iota = build_iota(2);
  CHECK(iota * h.element("u") == el(h, {{"u", -1}}));
  CHECK(iota * h.element("x1x2") == h.element("x1x2"));
  CHECK(iota * h.element("ux1") == h.element("ux1"));
  CHECK(iota * iota == Matrix::identity(8));
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j)
      CHECK(iota * h.multiply(h.basis(i), h.basis(j)) == h.multiply(iota * h.basis(i), iota * h.basis(j)));
  // ε∘ι is the parity functional δ_{S,∅}(−1)^e
  for (std::size_t i = 0; i < 8; ++i) {
    const Scalar expected = SupergroupBasis::subset_of(i) != 0 ? 0 : (SupergroupBasis::parity_of(i) ? -1 : 1);
    CHECK(h.epsilon(iota * h.basis(i)) == expected);
  }
}

TEST_CASE("characters of H(2) are ε and χ") {
  const HopfData h = build_supergroup(2);
  const auto ch = enumerate_characters(h);
  REQUIRE(ch.size() == 2);
  Functional chi{Vector(8)};
  chi.values[0] = 1;
  chi.values[1] = -1;
  CHECK(std::find(ch.begin(), ch.end(), counit_functional(h)) != ch.end());
  CHECK(std::find(ch.begin(), ch.end(), chi) != ch.end());
}
