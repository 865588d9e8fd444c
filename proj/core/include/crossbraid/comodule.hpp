#pragma once

// Left H-comodules (X, ρ), ρ(x) = x₋₁ ⊗ x₀, with ρ stored as a sparse
// (dim H · dim X) × dim X matrix in the TensorIndex convention (H factor
// slowest).

#include <crossbraid/hopf.hpp>
#include <crossbraid/sparse.hpp>

#include <stdexcept>
#include <string>

namespace crossbraid {

/// A proposed coaction violates coassociativity or the counit axiom.
class ComoduleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Comodule {
 public:
  Comodule() = default;

  /// Validates coassociativity and counitality; throws ComoduleError.
  Comodule(const HopfData& h, SparseMatrix coaction, std::string name = {});

  std::size_t dim() const { return coaction_.cols(); }
  std::size_t hopf_dim() const { return hopf_dim_; }
  const SparseMatrix& coaction() const { return coaction_; }
  const std::string& name() const { return name_; }

  /// ρ(b_j) as a sparse vector in H ⊗ X.
  const SparseVector& coact(std::size_t j) const { return coaction_.column(j); }

 private:
  std::size_t hopf_dim_ = 0;
  SparseMatrix coaction_;
  std::string name_;
};

/// Coassociativity and counit checks, without throwing.
Report verify_comodule_axioms(const HopfData& h, const SparseMatrix& coaction);

/// H with ρ = Δ.
Comodule regular_comodule(const HopfData& h);

/// k_g, ρ(1) = g ⊗ 1. Throws std::invalid_argument unless g is grouplike.
Comodule grouplike_comodule(const HopfData& h, std::span<const Scalar> g, std::string name = {});

/// ρ(x ⊗ y) = x₋₁y₋₁ ⊗ x₀ ⊗ y₀.
Comodule tensor_comodules(const HopfData& h, const Comodule& x, const Comodule& y);

/// λ^g(a) = g⁻¹ a₋₁ g ⊗ a₀.
Comodule twist_coaction(const HopfData& h, const Comodule& a, std::span<const Scalar> g);

/// An (H,H)-bicomodule: a left comodule together with a commuting right
/// coaction X → X ⊗ H (stored as a (dim X · dim H) × dim X matrix).
struct Bicomodule {
  Comodule left;
  SparseMatrix right;
};

/// H with left and right coaction Δ.
Bicomodule regular_bicomodule(const HopfData& h);

/// H^g: left coaction twisted by g, right coaction Δ.
Bicomodule twisted_regular_bicomodule(const HopfData& h, std::span<const Scalar> g);

/// Right-comodule axioms plus commutation with the left coaction.
Report verify_bicomodule_axioms(const HopfData& h, const Bicomodule& b);

struct CotensorResult {
  std::size_t dim = 0;
  Matrix inclusion;  ///< (dim X · dim Y) × dim, columns span X □_H Y
};

/// X □_H Y with X regarded as a right comodule through x ↦ x₀ ⊗ S(x₋₁).
CotensorResult cotensor(const HopfData& h, const Comodule& x, const Comodule& y);

/// A □_H Y using the right coaction of the bicomodule A.
CotensorResult cotensor(const HopfData& h, const Bicomodule& a, const Comodule& y);

/// x ↦ S⁻¹(x₋₁) ⊗ x₀, the inclusion X → H □_H X for the S-twisted right
/// structure on H (inverse: ε ⊗ id).
SparseMatrix regular_cotensor_embedding(const HopfData& h, const Comodule& x);

/// x ↦ λ(x₋₁) x₀.
SparseMatrix natural_endo_from_functional(const HopfData& h, const Functional& lambda, const Comodule& x);

/// (id ⊗ f) ρ_X = ρ_Y f.
Report check_comodule_morphism(const HopfData& h, const Matrix& f, const Comodule& x, const Comodule& y);
Report check_comodule_morphism(const HopfData& h, const SparseMatrix& f, const Comodule& x, const Comodule& y);

enum class Side { left, right, bi };

/// Left: as above on the left comodules. Right: (f ⊗ id) ρʳ_X = ρʳ_Y f.
Report check_comodule_morphism(const HopfData& h, const Matrix& f, const Bicomodule& x, const Bicomodule& y,
                               Side side);

}  // namespace crossbraid
