#pragma once

// Algebra maps H^g -> H that respect comodule structures: the isomorphisms
// f^{a,b}, v, w quantified over by the braiding conditions.

#include <crossbraid/comodule.hpp>

#include <stdexcept>
#include <vector>

namespace crossbraid {

/// The linear phase left more free parameters than the enumeration allows.
class EnumerationLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Maximum number of free parameters accepted after the linear phase.
inline constexpr std::size_t kMaxFreeParameters = 4;

struct ComoduleAlgebraMap {
  Matrix matrix;         ///< H -> H in the basis of H
  Vector source_twist;   ///< g: the source is H^g (left coaction twisted by g)
  bool is_algebra_map = false;
  bool is_left_comodule = false;
  bool is_right_comodule = false;
  bool is_invertible = false;

  bool is_bicomodule() const { return is_left_comodule && is_right_comodule; }
};

/// Computes every flag by exhaustive evaluation: multiplicativity and unit on
/// all basis pairs, left comodule map H^g -> H, right comodule map H -> H.
ComoduleAlgebraMap classify_map(const HopfData& h, Matrix f, std::span<const Scalar> g);

/// All bicomodule algebra isomorphisms H^g -> H. Two-phase: the comodule
/// conditions are solved linearly, then multiplicativity is imposed on the
/// remaining (at most kMaxFreeParameters) parameters. Sorted by matrix entries.
std::vector<ComoduleAlgebraMap> enumerate_bigalois_isos(const HopfData& h, std::span<const Scalar> g);

/// enumerate_bigalois_isos with g = 1.
std::vector<ComoduleAlgebraMap> enumerate_bicomodule_algebra_autos(const HopfData& h);

/// Dimension of the space of linear bicomodule maps H^g -> H (the linear phase).
std::size_t bicomodule_map_space_dimension(const HopfData& h, std::span<const Scalar> g);

/// φ_λ(h) = h₁ λ(h₂): a left comodule map H -> H for every functional λ,
/// an algebra map when λ is a character.
Matrix functional_induced_map(const HopfData& h, const Functional& lambda);

/// φ_λ for every character λ of H (the exploratory candidate class).
std::vector<ComoduleAlgebraMap> character_induced_maps(const HopfData& h);

/// Lazy functionals: λ(h₁)h₂ = h₁λ(h₂). Basis of the solution space.
std::vector<Functional> lazy_functionals(const HopfData& h);

/// ε∘f as a functional.
Functional counit_composite(const HopfData& h, const Matrix& f);

}  // namespace crossbraid
