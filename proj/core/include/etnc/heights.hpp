#pragma once

#include <vector>

#include "etnc/dataset.hpp"
#include "etnc/decimal.hpp"
#include "etnc/dihedral.hpp"

namespace etnc {

// Gram(g, h) = <gQ, hQ>_F = translates(g^-1 h).
class GramMatrix {
 public:
  GramMatrix(const DihedralGroup& G, const HeightData& heights);
  GramMatrix(const DihedralGroup& G, std::vector<DecimalWithError> translates_by_index);

  const DihedralGroup& group() const { return G_; }
  const DecimalWithError& translate(const GroupElement& g) const;
  const DecimalWithError& entry(const GroupElement& g, const GroupElement& h) const;

 private:
  DihedralGroup G_;
  std::vector<DecimalWithError> translates_;
};

// h_{F,psi}(Q) = psi(1)/(2|G|) sum_{g,h} psi(g^-1) psi(h^-1) Gram(g, h).
// Throws inconsistency if the imaginary part survives the error bound.
DecimalWithError equivariant_height(const DihedralGroup& G, const Character& psi, const GramMatrix& gram);

struct RegulatorResult {
  DecimalWithError value;
  bool rank_deficient = false;
};
// Determinant with interval bounds; the empty matrix has regulator 1.
RegulatorResult regulator(const std::vector<std::vector<DecimalWithError>>& gram);

// 1 for psi = rho_A, h_{F,psi}(Q) otherwise.
DecimalWithError H_value(const DihedralGroup& G, const Character& psi, const Character& rho, const GramMatrix& gram);

// Reg(k); Reg(K)/Reg(k); Reg(L)/Reg(k).
DecimalWithError H_tilde_value(const Character& eta, const DecimalWithError& reg_k, const DecimalWithError& reg_K,
                               const DecimalWithError& reg_L);

// Omega(A, psi) for k = Q.
DecimalWithError omega_value(const Character& psi, const DecimalWithError& omega_plus,
                             const DecimalWithError& omega_minus, bool real_place_splits_in_K);

}  // namespace etnc
