#include "etnc/group_ring.hpp"

#include <numeric>

#include "etnc/error.hpp"

namespace etnc {

GroupRingElement::GroupRingElement(DihedralGroup G) : G_(std::move(G)) {}

GroupRingElement GroupRingElement::basis(const DihedralGroup& G, const GroupElement& g, const CyclotomicNumber& c) {
  GroupRingElement x(G);
  x.add(g, c);
  return x;
}

CyclotomicNumber GroupRingElement::coefficient(const GroupElement& g) const {
  auto it = terms_.find(g);
  return it == terms_.end() ? CyclotomicNumber() : it->second;
}

void GroupRingElement::add(const GroupElement& g, const CyclotomicNumber& c) {
  G_.index(g);
  auto& slot = terms_[g];
  slot += c;
  if (slot.is_zero()) terms_.erase(g);
}

GroupRingElement operator+(const GroupRingElement& a, const GroupRingElement& b) {
  if (!(a.G_ == b.G_)) fail(Errc::invalid_input, "group ring elements over different groups");
  GroupRingElement r = a;
  for (const auto& [g, c] : b.terms_) r.add(g, c);
  return r;
}

GroupRingElement operator-(const GroupRingElement& a, const GroupRingElement& b) {
  return a + CyclotomicNumber(-1) * b;
}

GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
  if (!(a.G_ == b.G_)) fail(Errc::invalid_input, "group ring elements over different groups");
  GroupRingElement r(a.G_);
  for (const auto& [g, c] : a.terms_)
    for (const auto& [h, d] : b.terms_) r.add(a.G_.multiply(g, h), c * d);
  return r;
}

GroupRingElement operator*(const CyclotomicNumber& c, const GroupRingElement& a) {
  GroupRingElement r(a.G_);
  if (c.is_zero()) return r;
  for (const auto& [g, d] : a.terms_) r.add(g, c * d);
  return r;
}

bool operator==(const GroupRingElement& a, const GroupRingElement& b) {
  return a.G_ == b.G_ && a.terms_ == b.terms_;
}

GroupRingElement trace_element(const DihedralGroup& G, const Character& rho) {
  GroupRingElement x(G);
  for (const auto& h : G.elements()) x.add(h, character_value(G, rho, G.inverse(h)));
  return x;
}

GroupRingElement trace_element(const DihedralGroup& G, const PCharacter& chi) {
  GroupRingElement x(G);
  for (const auto& h : G.p_elements()) x.add(h, chi_value(G, chi, G.inverse(h)));
  return x;
}

GroupRingElement idempotent(const DihedralGroup& G, const Character& psi) {
  Rational scale = make_rational(Integer(psi.dimension()), Integer(G.order()));
  return CyclotomicNumber(scale) * trace_element(G, psi);
}

bool kolyvagin_identity(long m) {
  if (m < 3 || m % 2 == 0) fail(Errc::invalid_input, "kolyvagin_identity needs odd m >= 3, got " + std::to_string(m));
  const auto idx = [m](long k) { return static_cast<size_t>(((k % m) + m) % m); };
  std::vector<Integer> lhs(static_cast<size_t>(m)), sum(static_cast<size_t>(m)), rhs(static_cast<size_t>(m));
  lhs[idx((m + 1) / 2)] = m;
  for (long i = 1; i <= (m - 1) / 2; ++i) {
    sum[idx(i)] += i;
    sum[idx(-i)] -= i;
  }
  // (sigma - 1) * sum
  for (long k = 0; k < m; ++k) {
    rhs[idx(k + 1)] += sum[idx(k)];
    rhs[idx(k)] -= sum[idx(k)];
  }
  for (auto& c : rhs) c += 1;
  return lhs == rhs;
}

PCharacterMap res_map(const DihedralGroup& G, const CharacterMap& xi) {
  const auto lookup = [&](const Character& psi) -> const CyclotomicNumber& {
    auto it = xi.find(psi);
    if (it == xi.end()) fail(Errc::incomplete_input, "no value for character " + psi.key());
    return it->second;
  };
  PCharacterMap out;
  for (const auto& chi : p_characters(G)) {
    if (is_trivial(chi))
      out[chi] = lookup(trivial_character()) * lookup(epsilon_character());
    else
      out[chi] = lookup(induced(G, chi));
  }
  return out;
}

std::map<GroupElement, CyclotomicNumber> group_ring_coefficients(const DihedralGroup& G, const PCharacterMap& E) {
  const auto chars = p_characters(G);
  for (const auto& chi : chars)
    if (!E.count(chi)) fail(Errc::incomplete_input, "no value for a character of P");
  const CyclotomicNumber inv_order(make_rational(1, Integer(G.order_P())));
  std::map<GroupElement, CyclotomicNumber> c;
  for (const auto& pi : G.p_elements()) {
    CyclotomicNumber acc;
    GroupElement pinv = G.inverse(pi);
    for (const auto& chi : chars) acc += chi_value(G, chi, pinv) * E.at(chi);
    c[pi] = acc * inv_order;
  }
  return c;
}

bool zp_P_membership(const DihedralGroup& G, const PCharacterMap& E) {
  for (const auto& [chi, value] : E)
    if (!is_p_unit(value, G.p())) fail(Errc::precondition_violation, "an entry is not a p-unit");
  bool integral = true;
  for (const auto& [pi, c] : group_ring_coefficients(G, E)) {
    if (!c.is_rational())
      fail(Errc::galois_inconsistency, "coefficient at " + G.format(pi) + " is " + c.to_string());
    if (!c.is_zero() && valuation(c.to_rational(), G.p()) < 0) integral = false;
  }
  return integral;
}

CenterIntegrality center_integrality(const DihedralGroup& G, const CharacterMap& A) {
  const auto chars = irreducible_characters(G);
  for (const auto& psi : chars)
    if (!A.count(psi)) fail(Errc::incomplete_input, "no value for character " + psi.key());
  const unsigned long p = G.p(), m = G.exponent();
  CenterIntegrality r{true, true, true};
  for (const auto& psi : chars) {
    const CyclotomicNumber& a = A.at(psi);
    if (!a.is_zero() && a.conductor() != 1 && odd_prime_power(a.conductor())->first != p) {
      r.integral = false;
      continue;
    }
    if (!is_p_integral(a, p)) r.integral = false;
    for (unsigned long u = 1; u < m; ++u) {
      if (u % p == 0) continue;
      CyclotomicNumber image = galois_apply(a, static_cast<long>(u), m);
      Character target = galois_conjugate(G, psi, static_cast<long>(u));
      if (!(image == A.at(target))) r.equivariant = false;
      // membership in Q(psi): the stabiliser of psi fixes A(psi)
      if (target == psi && !(image == a)) r.integral = false;
    }
  }
  const long vG = valuation(Integer(G.order()), p);
  for (const auto& g : G.elements()) {
    CyclotomicNumber acc;
    GroupElement ginv = G.inverse(g);
    for (const auto& psi : chars)
      acc += CyclotomicNumber(static_cast<long>(psi.dimension())) * character_value(G, psi, ginv) * A.at(psi);
    if (!acc.is_zero() && p_valuation(acc, p) < vG) r.congruent = false;
  }
  return r;
}

}  // namespace etnc
