#pragma once

// Braidings on crossed-product extensions: candidate data (θᵃ, τᵃ, t_{a,b}),
// the conditions they must satisfy, the graded braiding built from them, and
// the hexagon identities that decide whether it really is a braiding.
//
// Every left comodule map w: H -> H has the form w = (id⊗εw)Δ, so a candidate
// is stored through the functionals εvᵃ, εwᵃ; composition and inversion of
// the maps become convolution and convolution inverse of the functionals.

#include <crossbraid/crossed.hpp>

#include <optional>
#include <string>
#include <vector>

namespace crossbraid {

enum class CandidateClass {
  bicomodule,  ///< built from bicomodule algebra automorphisms of H
  character,   ///< built from characters of H (exploratory)
};

struct BraidingCandidate {
  std::vector<Functional> theta;  ///< per grade: εvᵃ, inducing θᵃ
  std::vector<Functional> tau;    ///< per grade: εwᵃ, inducing τᵃ
  std::vector<Scalar> t;          ///< index a·|Γ| + b
  CandidateClass provenance = CandidateClass::bicomodule;
  std::string label;

  const Scalar& t_at(std::size_t a, std::size_t b) const { return t[a * theta.size() + b]; }
};

/// θᵃ = τᵃ = id for every a, t ≡ 1.
BraidingCandidate trivial_candidate(const HopfData& h, const FiniteGroup& group);

/// C₂ candidate with θᵘ, τᵘ induced by the given functionals, t ≡ 1.
BraidingCandidate c2_candidate(const HopfData& h, const Functional& theta_u, const Functional& tau_u,
                               CandidateClass provenance, std::string label);

/// c(x⊗y) = r(y₋₁⊗x₋₁) y₀⊗x₀, as a map X⊗Y -> Y⊗X.
SparseMatrix rform_braiding(const HopfData& h, const RForm& r, const Comodule& x, const Comodule& y);

/// y ↦ r(y⊗g) and y ↦ r(g⊗y).
Functional r_left_slot(const HopfData& h, const RForm& r, std::span<const Scalar> g);
Functional r_right_slot(const HopfData& h, const RForm& r, std::span<const Scalar> g);

/// Conditions (braid1)–(braid5) together with the normalization of the
/// candidate. Functional identities are compared as natural endomorphisms on
/// each comodule in `probes` (the regular comodule by default).
Report check_general_conditions(const HopfData& h, const RForm& r, const CrossedDatum& d, const BraidingCandidate& c,
                                const std::vector<Comodule>& probes = {});

/// Items a–f of the C₂ criterion for the candidate at grade u.
Report check_c2_conditions(const HopfData& h, const RForm& r, const CrossedDatum& d, const BraidingCandidate& c,
                           const std::vector<Comodule>& probes = {});

/// Items a′–e′: the C₂ criterion with v = w = id.
Report check_reduced_conditions(const HopfData& h, const RForm& r, const CrossedDatum& d,
                                const std::vector<Comodule>& probes = {});

/// r(f(x₋₁)⊗g)x₀ = x, checked on every basis element of the regular
/// comodule; one failure per failing element, witness {index}.
Report corollary_check(const HopfData& h, const RForm& r, const Matrix& f, std::span<const Scalar> g);

/// Which τ the graded braiding applies to the second factor of [V,a]⊗[W,b].
enum class TauIndex {
  first_grade,   ///< τᵃ_W, as printed
  second_grade,  ///< τᵇ_W
};

/// c_{[V,a],[W,b]} = t_{a,b} · c_{V,W}(θᵃ_V ⊗ τ_W) ⊗ id_{k_{g(a,b)}} as a map X⊗Y -> Y⊗X
/// in flattened indices.
SparseMatrix graded_braiding(const HopfData& h, const RForm& r, const CrossedDatum& d, const BraidingCandidate& c,
                             const GradedObject& x, const GradedObject& y, TauIndex tau = TauIndex::first_grade);

/// All components on ordered pairs of the testset, index i·n + j.
struct BraidingFamily {
  std::vector<GradedObject> objects;
  std::vector<SparseMatrix> components;

  const SparseMatrix& at(std::size_t i, std::size_t j) const { return components[i * objects.size() + j]; }
};

BraidingFamily build_graded_braiding(const HopfData& h, const RForm& r, const CrossedDatum& d,
                                     const BraidingCandidate& c, const std::vector<GradedObject>& testset,
                                     TauIndex tau = TauIndex::first_grade);

/// bra1/bra2 on every triple of the testset with the crossed associators,
/// each component a comodule morphism, and naturality against the
/// embeddings k_g -> H (1 ↦ g) where both objects are in the testset.
Report verify_hexagons(const HopfData& h, const RForm& r, const CrossedDatum& d, const BraidingCandidate& c,
                       const std::vector<GradedObject>& testset, TauIndex tau = TauIndex::first_grade);

struct RestrictionResult {
  Report report;
  bool symmetric = true;
  std::vector<std::size_t> asymmetry_witness;  ///< object indices (i, j) with c_{j,i}c_{i,j} ≠ id
};

/// Grade-(e,e) components: equal to the r-form braiding and satisfying the
/// hexagons of Comod(H) (trivial associators). Also records whether c² = id.
RestrictionResult restrict_to_identity_component(const HopfData& h, const RForm& r, const BraidingFamily& family);

enum class VerdictStatus { braidable, non_braidable, filtered };
std::string to_string(VerdictStatus s);

inline constexpr const char* kExploratoryFlag = "beyond paper's candidate class";

struct ExploratoryResult {
  std::string candidate;
  std::string flag = kExploratoryFlag;
  Report conditions;
  Report hexagons;
  bool braiding = false;  ///< conditions and hexagons both pass
};

struct Verdict {
  std::string preset;
  std::string display;
  VerdictStatus status = VerdictStatus::non_braidable;
  std::string reason;
  std::string condition;              ///< first violated condition, if any
  std::vector<std::size_t> witness;
  std::optional<BraidingCandidate> candidate;  ///< set for braidable verdicts
  Report conditions;
  Report hexagons;
  std::optional<RestrictionResult> restriction;
  std::vector<ExploratoryResult> exploratory;  ///< character-induced candidates, reported separately
};

struct BraidabilityOptions {
  Testset testset = Testset::standard;
  TauIndex tau = TauIndex::first_grade;
  bool exploratory = true;
};

Verdict braidability_report(const std::string& preset_name, const BraidabilityOptions& options = {});

}  // namespace crossbraid
