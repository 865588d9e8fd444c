#pragma once

#include <crossbraid/matrix.hpp>
#include <crossbraid/report.hpp>

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace crossbraid {

/// Inconsistent tensor shapes in user-supplied structure constants.
class StructuralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A finite-dimensional Hopf algebra given by structure constants.
///
///   b_i b_j = sum_k mult(i,j,k) b_k
///   Δ b_i   = sum_{j,k} comult(i,j,k) b_j ⊗ b_k
///   S b_j   = sum_i antipode(i,j) b_i
///
/// Tensor powers use the TensorIndex convention (leftmost factor slowest).
struct HopfData {
  std::size_t dim = 0;
  std::vector<std::string> labels;
  std::vector<Scalar> mult;    // dim^3
  Vector unit;                 // coordinates of 1
  std::vector<Scalar> comult;  // dim^3
  Vector counit;               // ε(b_i)
  Matrix antipode;

  const Scalar& m(std::size_t i, std::size_t j, std::size_t k) const { return mult[(i * dim + j) * dim + k]; }
  Scalar& m(std::size_t i, std::size_t j, std::size_t k) { return mult[(i * dim + j) * dim + k]; }
  const Scalar& d(std::size_t i, std::size_t j, std::size_t k) const { return comult[(i * dim + j) * dim + k]; }
  Scalar& d(std::size_t i, std::size_t j, std::size_t k) { return comult[(i * dim + j) * dim + k]; }

  /// Throws StructuralError on any shape mismatch.
  void check_shapes() const;

  std::size_t index_of(const std::string& label) const;
  Vector basis(std::size_t i) const { return unit_vector(dim, i); }
  Vector element(const std::string& label) const { return basis(index_of(label)); }

  Vector multiply(std::span<const Scalar> a, std::span<const Scalar> b) const;
  Vector coproduct(std::span<const Scalar> a) const;
  Scalar epsilon(std::span<const Scalar> a) const;
  Vector apply_antipode(std::span<const Scalar> a) const { return antipode * a; }

  Matrix mult_matrix() const;    // dim x dim^2
  Matrix comult_matrix() const;  // dim^2 x dim
  Matrix counit_matrix() const;  // 1 x dim
  Matrix unit_matrix() const;    // dim x 1
  Matrix left_mult(std::span<const Scalar> a) const;   // x -> a x
  Matrix right_mult(std::span<const Scalar> a) const;  // x -> x a

  /// Product in the algebra H^{⊗k} (componentwise).
  Vector tensor_multiply(std::span<const Scalar> a, std::span<const Scalar> b, std::size_t k) const;

  /// Pretty form of a vector in H, e.g. "x1 - ux1".
  std::string format(std::span<const Scalar> v) const;
};

/// Element of H*.
struct Functional {
  Vector values;  ///< values on the basis

  Scalar operator()(std::span<const Scalar> x) const;
  friend bool operator==(const Functional&, const Functional&) = default;
};

/// R ∈ H ⊗ H, coordinates in the flattened basis b_i ⊗ b_j.
struct RMatrix {
  Vector element;
};

/// r : H ⊗ H -> k, values(i, j) = r(b_i ⊗ b_j).
struct RForm {
  Matrix values;
};

Report verify_bialgebra_axioms(const HopfData& h);
Report verify_antipode(const HopfData& h);

/// S(ab) = S(b)S(a) on every basis pair.
Report verify_antipode_antihomomorphism(const HopfData& h);

/// All x with Δx = x⊗x, ε(x) = 1.
std::vector<Vector> enumerate_grouplikes(const HopfData& h);

/// All algebra maps H -> k.
std::vector<Functional> enumerate_characters(const HopfData& h);

Functional counit_functional(const HopfData& h);
Functional convolve(const Functional& p, const Functional& q, const HopfData& h);
std::optional<Functional> convolution_inverse(const Functional& p, const HopfData& h);

bool is_grouplike(const HopfData& h, std::span<const Scalar> x);

/// Inverse of a grouplike (S(g)).
Vector grouplike_inverse(const HopfData& h, std::span<const Scalar> g);

Report verify_qt(const HopfData& h, const RMatrix& r);
Report verify_yang_baxter(const HopfData& h, const RMatrix& r);
Report verify_cqt(const HopfData& h, const RForm& r);

/// Places an element of H⊗H into slots (first, second) of H^{⊗k}, 1 elsewhere.
Vector embed_pair(const HopfData& h, std::span<const Scalar> element, std::size_t k, std::size_t first,
                  std::size_t second);

}  // namespace crossbraid
