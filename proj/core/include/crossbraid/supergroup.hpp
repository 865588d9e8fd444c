#pragma once

// The supergroup algebra H(n) = kC2 ⋉ ΛV, dim V = n, in the basis u^e x_S
// (e ∈ {0,1}, S ⊆ {1..n}, x_S the increasing product). u x = -x u and the
// x_i anticommute.

#include <crossbraid/hopf.hpp>

#include <cstdint>
#include <vector>

namespace crossbraid {

struct SupergroupBasis {
  std::size_t n = 0;

  std::size_t dim() const { return std::size_t{2} << n; }
  static std::size_t index(unsigned e, std::uint32_t subset) { return 2 * std::size_t{subset} + e; }
  static unsigned parity_of(std::size_t index) { return static_cast<unsigned>(index & 1U); }
  static std::uint32_t subset_of(std::size_t index) { return static_cast<std::uint32_t>(index >> 1U); }
  std::string label(std::size_t index) const;
};

HopfData build_supergroup(std::size_t n);

/// R = ½(1⊗1 + 1⊗u + u⊗1 − u⊗u).
RMatrix standard_r_matrix(std::size_t n);

/// r(u^a x_S ⊗ u^b x_T) = δ_{S,∅} δ_{T,∅} (−1)^{ab}.
RForm standard_r_form(std::size_t n);

/// ι(u^e x_S) = (−1)^{e+|S|} u^e x_S.
Matrix build_iota(std::size_t n);

/// Group algebra kG from a multiplication table (element 0 is the identity).
HopfData build_group_algebra(const std::vector<std::vector<std::size_t>>& table,
                             const std::vector<std::string>& labels);

HopfData build_c2_group_algebra();

}  // namespace crossbraid
