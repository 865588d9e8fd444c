#pragma once

// Γ-graded crossed-product extensions of Comod(H) with trivial biGalois
// objects: objects [V, a], tensor [V,a]⊗[W,b] = [V⊗W⊗k_{g(a,b)}, ab],
// associators built from (g, f, γ).
//
// All one-dimensional k_g factors are carried only through coactions; in
// flattened indices [V,a]⊗[W,b] has the basis of V⊗W, so tensor products are
// strict on matrices.

#include <crossbraid/comodule.hpp>
#include <crossbraid/morphisms.hpp>

#include <optional>
#include <string>
#include <vector>

namespace crossbraid {

struct FiniteGroup {
  std::vector<std::string> labels;              ///< element 0 is the identity
  std::vector<std::vector<std::size_t>> table;  ///< table[a][b] = ab

  std::size_t size() const { return labels.size(); }
  std::size_t mul(std::size_t a, std::size_t b) const { return table[a][b]; }
  std::size_t inverse(std::size_t a) const;
  bool is_abelian() const;
  std::size_t index_of(const std::string& label) const;

  /// Throws std::invalid_argument unless the table is a group with identity 0.
  void validate() const;

  static FiniteGroup cyclic2();  ///< {e, u}
};

struct BiGaloisFlag {
  bool trivial = true;
  std::string label;  ///< name of the nontrivial biGalois object
};

/// (L_a, g(a,b), f^{a,b}, γ(a,b,c)) over a finite group Γ.
struct CrossedDatum {
  FiniteGroup group;
  std::vector<Vector> gmap;            ///< index a·|Γ| + b; grouplikes of H
  std::vector<Matrix> fmaps;           ///< index a·|Γ| + b; f^{a,b}: H^{g(a,b)} -> H
  std::vector<Scalar> gamma;           ///< index (a·|Γ| + b)·|Γ| + c
  std::vector<BiGaloisFlag> bigalois;  ///< per a

  const Vector& g(std::size_t a, std::size_t b) const { return gmap[a * group.size() + b]; }
  const Matrix& f(std::size_t a, std::size_t b) const { return fmaps[a * group.size() + b]; }
  const Scalar& gam(std::size_t a, std::size_t b, std::size_t c) const {
    return gamma[(a * group.size() + b) * group.size() + c];
  }
  Vector& g(std::size_t a, std::size_t b) { return gmap[a * group.size() + b]; }
  Matrix& f(std::size_t a, std::size_t b) { return fmaps[a * group.size() + b]; }
  Scalar& gam(std::size_t a, std::size_t b, std::size_t c) { return gamma[(a * group.size() + b) * group.size() + c]; }

  /// True iff every biGalois object is trivial (L_a = H).
  bool instantiable() const;
};

/// Raised when tensor data is requested for a category whose biGalois
/// objects are not available.
class NotInstantiable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Normalization, 2-cocycle identity for g, composition identity for f,
/// 3-cocycle identity for γ, and each f^{a,b} being a bicomodule algebra
/// isomorphism H^{g(a,b)} -> H. For non-instantiable data only the
/// flag-level checks run (noted in the report).
Report validate_datum(const HopfData& h, const CrossedDatum& d);

struct GradedObject {
  Comodule comodule;
  std::size_t grade = 0;
  std::string label;  ///< e.g. "[H,u]"

  std::size_t dim() const { return comodule.dim(); }
};

GradedObject make_graded(const Comodule& v, std::size_t grade, const FiniteGroup& group);

/// [V⊗W⊗k_{g(a,b)}, ab].
GradedObject tensor_graded(const HopfData& h, const CrossedDatum& d, const GradedObject& x, const GradedObject& y);

/// scale · (I_left ⊗ core ⊗ I_right). The shape every structure morphism of
/// the category takes, so operators on quadruple products never need dense
/// storage.
struct LocalOp {
  Scalar scale = 1;
  std::size_t left = 1;
  SparseMatrix core;
  std::size_t right = 1;

  std::size_t dim() const { return left * core.cols() * right; }
  SparseVector apply(const SparseVector& v) const;
  SparseMatrix materialize() const;
};

enum class AssociatorModel {
  /// α_{X,Y,Z} = γ(a,b,c)·(id_{X⊗Y} ⊗ σ^{a,b}_Z) for every triple, with
  /// σ^{a,b}_Z: k_{g(a,b)}⊗Z -> Z⊗k_{g(a,b)}, z ↦ ε(f^{a,b}(z₋₁)) z₀.
  sigma,
  /// Identity unless all three grades are nontrivial; then
  /// γ(a,b,c)·(id_{X⊗Y} ⊗ σ^{a,b}_Z).
  literal,
};

struct GradedMorphism {
  LocalOp op;
  GradedObject source;
  GradedObject target;
};

/// x ↦ ε(f^{a,b}(x₋₁)) x₀ on X (the one-dimensional swap is invisible).
SparseMatrix sigma_half_braiding(const HopfData& h, const CrossedDatum& d, std::size_t a, std::size_t b,
                                 const Comodule& x);

/// The operator of α_{X,Y,Z} alone, without building source and target.
LocalOp associator_component(const HopfData& h, const CrossedDatum& d, const GradedObject& x, const GradedObject& y,
                             const GradedObject& z, AssociatorModel model = AssociatorModel::sigma);

/// The inverse operator: scale⁻¹ and core⁻¹.
LocalOp inverse(const LocalOp& op);

/// α: (X⊗Y)⊗Z -> X⊗(Y⊗Z).
GradedMorphism associator(const HopfData& h, const CrossedDatum& d, const GradedObject& x, const GradedObject& y,
                          const GradedObject& z, AssociatorModel model = AssociatorModel::sigma);

/// Checks that each associator on triples from the testset is a comodule
/// morphism between its source and target.
Report verify_associator_morphisms(const HopfData& h, const CrossedDatum& d, const std::vector<GradedObject>& testset,
                                   AssociatorModel model = AssociatorModel::sigma);

/// Pentagon on every quadruple of the testset, exact. Witness = object
/// indices (w, x, y, z); detail records the first differing basis vector.
Report verify_pentagon(const HopfData& h, const CrossedDatum& d, const std::vector<GradedObject>& testset,
                       AssociatorModel model = AssociatorModel::sigma);

/// Unit coherence: tensoring with [k₁, e] is strictly the identity.
Report verify_unit_coherence(const HopfData& h, const CrossedDatum& d, const std::vector<GradedObject>& testset);

/// Treats γ(a,b,c) with a, b, c ≠ e as unknowns and solves the pentagon
/// equations over the testset for them.
struct PentagonObstruction {
  std::vector<std::string> unknowns;   ///< "γ(u,u,u)"
  std::vector<std::string> equations;  ///< polynomial equations = 0
  std::vector<Vector> solutions;       ///< rational solutions (if any)
  bool proportional = true;            ///< both sides agree up to a scalar on every quadruple
  std::string status;                  ///< "solvable", "no rational solution", "not proportional", ...
  std::string message;                 ///< solver message (e.g. "solution outside the rationals: ...")
};

PentagonObstruction pentagon_obstruction(const HopfData& h, const CrossedDatum& d,
                                         const std::vector<GradedObject>& testset,
                                         AssociatorModel model = AssociatorModel::sigma);

/// Dual objects as data: [V,e]* = [V*, e] (coaction through S),
/// [k₁,a]* = [k_{g(a,a⁻¹)}, a⁻¹]. Anything else is not specified.
GradedObject dual_data(const HopfData& h, const CrossedDatum& d, const GradedObject& x);

struct CategoryPreset {
  std::string name;     ///< CLI spelling, e.g. "D-u-iota-minus"
  std::string display;  ///< e.g. "D(u,ι,−1)"
  CrossedDatum datum;
  bool instantiable = false;
};

/// The eight named presets over H(2) and Γ = C₂.
const std::vector<std::string>& preset_names();
CategoryPreset preset(const std::string& name);

enum class Testset { minimal, standard, extended };

std::optional<Testset> parse_testset(const std::string& name);
std::string to_string(Testset t);

/// minimal: [k₁,e],[k_u,e],[k₁,u],[k_u,u];
/// standard: [k₁,e],[k_u,e],[H,e],[k₁,u],[k_u,u],[H,u];
/// extended: standard plus [H^u,e],[H^u,u] (H^u = regular coaction twisted by u).
std::vector<GradedObject> make_testset(const HopfData& h, const CrossedDatum& d, Testset t);

}  // namespace crossbraid
