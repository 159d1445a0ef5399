#pragma once

#include <array>
#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "etnc/cyclotomic.hpp"

namespace etnc {

// pi * tau^t with pi = prod s_i^exponents[i].
struct GroupElement {
  std::vector<unsigned long> exponents;
  bool tau = false;
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

// G = P x| <tau> with P = prod Z/cyclic_factors[i], tau inverting P.
class DihedralGroup {
 public:
  DihedralGroup(unsigned long p, std::vector<unsigned long> cyclic_factors);

  unsigned long p() const { return p_; }
  const std::vector<unsigned long>& cyclic_factors() const { return factors_; }
  // Exponent p^n of P.
  unsigned long exponent() const { return exponent_; }
  unsigned n() const { return n_; }
  unsigned long order_P() const { return order_P_; }
  unsigned long order() const { return 2 * order_P_; }
  bool is_cyclic() const { return factors_.size() == 1; }

  GroupElement identity() const;
  GroupElement tau() const;
  GroupElement generator(size_t i) const;

  GroupElement multiply(const GroupElement& a, const GroupElement& b) const;
  GroupElement inverse(const GroupElement& a) const;
  GroupElement power(const GroupElement& a, long k) const;

  // P first (mixed-radix order), then P*tau.
  std::vector<GroupElement> elements() const;
  std::vector<GroupElement> p_elements() const;
  size_t index(const GroupElement& g) const;

  // "1", "t", "s1^2*s2", "s1^3*t"
  GroupElement parse_element(std::string_view text) const;
  std::string format(const GroupElement& g) const;

  friend bool operator==(const DihedralGroup&, const DihedralGroup&) = default;

 private:
  void check(const GroupElement& g) const;

  unsigned long p_;
  std::vector<unsigned long> factors_;
  unsigned long exponent_;
  unsigned n_;
  unsigned long order_P_;
};

// Character of P by exponents b: chi(prod s_i^a_i) = zeta_{p^n}^(sum a_i b_i p^n / f_i).
using PCharacter = std::vector<unsigned long>;

enum class CharacterKind { trivial, epsilon, induced };

struct Character {
  CharacterKind kind = CharacterKind::trivial;
  // Lexicographically smaller of {chi, conj(chi)}; empty unless induced.
  PCharacter chi;

  unsigned dimension() const { return kind == CharacterKind::induced ? 2 : 1; }
  // "1", "eps", "psi[b1,b2,...]"
  std::string key() const;
  friend auto operator<=>(const Character&, const Character&) = default;
};

Character trivial_character();
Character epsilon_character();

std::vector<PCharacter> p_characters(const DihedralGroup& G);
bool is_trivial(const PCharacter& chi);
PCharacter conjugate(const DihedralGroup& G, const PCharacter& chi);
PCharacter scale(const DihedralGroup& G, const PCharacter& chi, long a);
unsigned long character_order(const DihedralGroup& G, const PCharacter& chi);
CyclotomicNumber chi_value(const DihedralGroup& G, const PCharacter& chi, const GroupElement& pi);
// Ind_P^G chi; throws invalid-input for the trivial chi.
Character induced(const DihedralGroup& G, const PCharacter& chi);

// 1, eps, then the induced characters ordered by key.
std::vector<Character> irreducible_characters(const DihedralGroup& G);
CyclotomicNumber character_value(const DihedralGroup& G, const Character& psi, const GroupElement& g);

using Matrix2 = std::array<std::array<CyclotomicNumber, 2>, 2>;
Matrix2 operator*(const Matrix2& a, const Matrix2& b);
// pi -> diag(chi(pi), chi(pi)^-1), tau -> [[0,1],[1,0]]. Throws dimension-error unless induced.
Matrix2 rep_matrix(const DihedralGroup& G, const Character& psi, const GroupElement& g);

// psi^a = psi composed with sigma_a, i.e. Ind(chi^a).
Character galois_conjugate(const DihedralGroup& G, const Character& psi, long a);
// Orbits of the induced characters under (Z/p^n)^x, each sorted by key.
std::vector<std::vector<Character>> induced_orbits(const DihedralGroup& G);
Character parse_character(const DihedralGroup& G, std::string_view key);

}  // namespace etnc
