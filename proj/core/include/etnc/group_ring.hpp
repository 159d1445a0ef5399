#pragma once

#include <map>

#include "etnc/cyclotomic.hpp"
#include "etnc/dihedral.hpp"

namespace etnc {

// Finitely supported sum of group elements with cyclotomic coefficients.
class GroupRingElement {
 public:
  explicit GroupRingElement(DihedralGroup G);
  static GroupRingElement basis(const DihedralGroup& G, const GroupElement& g, const CyclotomicNumber& c = 1);

  const DihedralGroup& group() const { return G_; }
  const std::map<GroupElement, CyclotomicNumber>& terms() const { return terms_; }
  CyclotomicNumber coefficient(const GroupElement& g) const;
  void add(const GroupElement& g, const CyclotomicNumber& c);

  friend GroupRingElement operator+(const GroupRingElement& a, const GroupRingElement& b);
  friend GroupRingElement operator-(const GroupRingElement& a, const GroupRingElement& b);
  friend GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b);
  friend GroupRingElement operator*(const CyclotomicNumber& c, const GroupRingElement& a);
  friend bool operator==(const GroupRingElement& a, const GroupRingElement& b);

 private:
  DihedralGroup G_;
  std::map<GroupElement, CyclotomicNumber> terms_;
};

// T_rho = sum_{h in G} rho(h^-1) h.
GroupRingElement trace_element(const DihedralGroup& G, const Character& rho);
// T_chi = sum_{h in P} chi(h^-1) h.
GroupRingElement trace_element(const DihedralGroup& G, const PCharacter& chi);
// e_psi = psi(1)/|G| sum_g psi(g^-1) g.
GroupRingElement idempotent(const DihedralGroup& G, const Character& psi);

// m sigma^((m+1)/2) = Tr + (sigma - 1) sum_{i=1}^{(m-1)/2} i (sigma^i - sigma^-i) in Z[C_m].
// Throws invalid-input for even m or m < 3.
bool kolyvagin_identity(long m);

using CharacterMap = std::map<Character, CyclotomicNumber>;
using PCharacterMap = std::map<PCharacter, CyclotomicNumber>;

// xi -> (xi_1 xi_eps at the trivial chi, xi_{Ind chi} at chi and conj(chi)).
PCharacterMap res_map(const DihedralGroup& G, const CharacterMap& xi);

// c_pi = |P|^-1 sum_chi chi(pi)^-1 E_chi: the coefficients of the element of Q(zeta)[P]
// with character values E. Throws incomplete-input if some chi is missing.
std::map<GroupElement, CyclotomicNumber> group_ring_coefficients(const DihedralGroup& G, const PCharacterMap& E);

// E lies in Z_p[P]^x. Throws precondition-violation if some E_chi is not a p-unit and
// galois-inconsistency if some c_pi is irrational.
bool zp_P_membership(const DihedralGroup& G, const PCharacterMap& E);

struct CenterIntegrality {
  bool integral = false;     // A(psi) p-integral in Q(psi)
  bool equivariant = false;  // sigma_a(A(psi)) = A(psi^a)
  bool congruent = false;    // sum_psi psi(1) psi(g^-1) A(psi) in |G| Z_p for all g
  explicit operator bool() const { return integral && equivariant && congruent; }
};
CenterIntegrality center_integrality(const DihedralGroup& G, const CharacterMap& A);

}  // namespace etnc
