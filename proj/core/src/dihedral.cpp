#include "etnc/dihedral.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>

#include "etnc/error.hpp"

namespace etnc {

namespace {

long parse_long(std::string_view s, const std::string& context) {
  long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    fail(Errc::invalid_input, "malformed integer '" + std::string(s) + "' in " + context);
  return v;
}

unsigned long reduce(long a, unsigned long f) {
  long r = a % static_cast<long>(f);
  return static_cast<unsigned long>(r < 0 ? r + static_cast<long>(f) : r);
}

}  // namespace

DihedralGroup::DihedralGroup(unsigned long p, std::vector<unsigned long> cyclic_factors)
    : p_(p), factors_(std::move(cyclic_factors)), exponent_(1), n_(0), order_P_(1) {
  if (p < 3 || !is_prime(p)) fail(Errc::invalid_input, "p = " + std::to_string(p) + " is not an odd prime");
  if (factors_.empty()) fail(Errc::invalid_input, "P needs at least one cyclic factor");
  for (unsigned long f : factors_) {
    auto pp = odd_prime_power(f);
    if (!pp || pp->first != p)
      fail(Errc::invalid_input, "cyclic factor " + std::to_string(f) + " is not a power of " + std::to_string(p));
    exponent_ = std::max(exponent_, f);
    order_P_ *= f;
  }
  n_ = odd_prime_power(exponent_)->second;
}

GroupElement DihedralGroup::identity() const { return {std::vector<unsigned long>(factors_.size(), 0), false}; }

GroupElement DihedralGroup::tau() const { return {std::vector<unsigned long>(factors_.size(), 0), true}; }

GroupElement DihedralGroup::generator(size_t i) const {
  if (i >= factors_.size()) fail(Errc::invalid_input, "no generator s" + std::to_string(i + 1));
  GroupElement g = identity();
  g.exponents[i] = 1;
  return g;
}

void DihedralGroup::check(const GroupElement& g) const {
  if (g.exponents.size() != factors_.size()) fail(Errc::invalid_input, "element has the wrong number of exponents");
  for (size_t i = 0; i < factors_.size(); ++i)
    if (g.exponents[i] >= factors_[i]) fail(Errc::invalid_input, "unreduced exponent");
}

GroupElement DihedralGroup::multiply(const GroupElement& a, const GroupElement& b) const {
  check(a);
  check(b);
  GroupElement r = identity();
  for (size_t i = 0; i < factors_.size(); ++i) {
    unsigned long f = factors_[i];
    unsigned long bi = a.tau ? (f - b.exponents[i]) % f : b.exponents[i];
    r.exponents[i] = (a.exponents[i] + bi) % f;
  }
  r.tau = a.tau != b.tau;
  return r;
}

GroupElement DihedralGroup::inverse(const GroupElement& a) const {
  check(a);
  if (a.tau) return a;  // reflections are involutions
  GroupElement r = a;
  for (size_t i = 0; i < factors_.size(); ++i) r.exponents[i] = (factors_[i] - a.exponents[i]) % factors_[i];
  return r;
}

GroupElement DihedralGroup::power(const GroupElement& a, long k) const {
  GroupElement base = k < 0 ? inverse(a) : a;
  GroupElement r = identity();
  for (long i = 0; i < std::labs(k); ++i) r = multiply(r, base);
  return r;
}

std::vector<GroupElement> DihedralGroup::p_elements() const {
  std::vector<GroupElement> out;
  out.reserve(order_P_);
  GroupElement g = identity();
  for (unsigned long count = 0; count < order_P_; ++count) {
    out.push_back(g);
    for (size_t i = 0; i < factors_.size(); ++i) {
      if (++g.exponents[i] < factors_[i]) break;
      g.exponents[i] = 0;
    }
  }
  return out;
}

std::vector<GroupElement> DihedralGroup::elements() const {
  std::vector<GroupElement> out = p_elements();
  size_t half = out.size();
  for (size_t i = 0; i < half; ++i) {
    GroupElement g = out[i];
    g.tau = true;
    out.push_back(g);
  }
  return out;
}

size_t DihedralGroup::index(const GroupElement& g) const {
  check(g);
  size_t idx = 0, stride = 1;
  for (size_t i = 0; i < factors_.size(); ++i) {
    idx += g.exponents[i] * stride;
    stride *= factors_[i];
  }
  return g.tau ? idx + order_P_ : idx;
}

GroupElement DihedralGroup::parse_element(std::string_view text) const {
  const std::string context = "group element '" + std::string(text) + "'";
  GroupElement g = identity();
  if (text == "1") return g;
  size_t pos = 0;
  bool seen_tau = false;
  while (pos <= text.size()) {
    size_t star = text.find('*', pos);
    std::string_view tok = text.substr(pos, star == std::string_view::npos ? std::string_view::npos : star - pos);
    if (seen_tau) fail(Errc::invalid_input, "'t' must be the last factor in " + context);
    if (tok == "t") {
      seen_tau = true;
    } else if (tok.size() >= 2 && tok[0] == 's') {
      size_t caret = tok.find('^');
      long idx = parse_long(tok.substr(1, caret == std::string_view::npos ? std::string_view::npos : caret - 1), context);
      long e = caret == std::string_view::npos ? 1 : parse_long(tok.substr(caret + 1), context);
      if (idx < 1 || static_cast<size_t>(idx) > factors_.size())
        fail(Errc::invalid_input, "no generator s" + std::to_string(idx) + " in " + context);
      size_t i = static_cast<size_t>(idx - 1);
      g.exponents[i] = reduce(static_cast<long>(g.exponents[i]) + e, factors_[i]);
    } else if (tok != "1") {
      fail(Errc::invalid_input, "unrecognised factor '" + std::string(tok) + "' in " + context);
    }
    if (star == std::string_view::npos) break;
    pos = star + 1;
  }
  g.tau = seen_tau;
  return g;
}

std::string DihedralGroup::format(const GroupElement& g) const {
  check(g);
  std::string out;
  for (size_t i = 0; i < factors_.size(); ++i) {
    if (g.exponents[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += "s" + std::to_string(i + 1);
    if (g.exponents[i] != 1) out += "^" + std::to_string(g.exponents[i]);
  }
  if (g.tau) out += out.empty() ? "t" : "*t";
  return out.empty() ? "1" : out;
}

std::string Character::key() const {
  switch (kind) {
    case CharacterKind::trivial: return "1";
    case CharacterKind::epsilon: return "eps";
    case CharacterKind::induced: break;
  }
  std::string out = "psi[";
  for (size_t i = 0; i < chi.size(); ++i) out += (i ? "," : "") + std::to_string(chi[i]);
  return out + "]";
}

Character trivial_character() { return {CharacterKind::trivial, {}}; }
Character epsilon_character() { return {CharacterKind::epsilon, {}}; }

std::vector<PCharacter> p_characters(const DihedralGroup& G) {
  std::vector<PCharacter> out;
  for (const auto& g : G.p_elements()) out.push_back(g.exponents);
  return out;
}

bool is_trivial(const PCharacter& chi) {
  return std::all_of(chi.begin(), chi.end(), [](unsigned long b) { return b == 0; });
}

PCharacter conjugate(const DihedralGroup& G, const PCharacter& chi) { return scale(G, chi, -1); }

PCharacter scale(const DihedralGroup& G, const PCharacter& chi, long a) {
  const auto& f = G.cyclic_factors();
  if (chi.size() != f.size()) fail(Errc::invalid_input, "character has the wrong number of exponents");
  PCharacter r(chi.size());
  for (size_t i = 0; i < chi.size(); ++i)
    r[i] = reduce(static_cast<long>((static_cast<long>(chi[i]) * (a % static_cast<long>(f[i]))) %
                                    static_cast<long>(f[i])),
                  f[i]);
  return r;
}

unsigned long character_order(const DihedralGroup& G, const PCharacter& chi) {
  unsigned long order = 1;
  const auto& f = G.cyclic_factors();
  for (size_t i = 0; i < chi.size(); ++i) {
    unsigned long o = f[i] / std::gcd(f[i], chi[i] == 0 ? f[i] : chi[i]);
    order = std::max(order, o);
  }
  return order;
}

CyclotomicNumber chi_value(const DihedralGroup& G, const PCharacter& chi, const GroupElement& pi) {
  if (pi.tau) fail(Errc::invalid_input, "characters of P take arguments in P");
  const auto& f = G.cyclic_factors();
  if (chi.size() != f.size() || pi.exponents.size() != f.size())
    fail(Errc::invalid_input, "character or element has the wrong number of exponents");
  unsigned long m = G.exponent();
  unsigned long e = 0;
  for (size_t i = 0; i < f.size(); ++i) e = (e + (pi.exponents[i] * chi[i] % f[i]) * (m / f[i])) % m;
  return CyclotomicNumber::zeta(m, static_cast<long>(e));
}

Character induced(const DihedralGroup& G, const PCharacter& chi) {
  if (is_trivial(chi)) fail(Errc::invalid_input, "the trivial character of P does not induce an irreducible");
  PCharacter bar = conjugate(G, chi);
  return {CharacterKind::induced, std::min(chi, bar)};
}

std::vector<Character> irreducible_characters(const DihedralGroup& G) {
  std::set<Character> induced_set;
  for (const auto& chi : p_characters(G))
    if (!is_trivial(chi)) induced_set.insert(induced(G, chi));
  std::vector<Character> out{trivial_character(), epsilon_character()};
  std::vector<Character> ind(induced_set.begin(), induced_set.end());
  std::sort(ind.begin(), ind.end(), [](const Character& a, const Character& b) { return a.chi < b.chi; });
  out.insert(out.end(), ind.begin(), ind.end());
  return out;
}

CyclotomicNumber character_value(const DihedralGroup& G, const Character& psi, const GroupElement& g) {
  switch (psi.kind) {
    case CharacterKind::trivial: return 1;
    case CharacterKind::epsilon: return g.tau ? -1 : 1;
    case CharacterKind::induced: break;
  }
  if (g.tau) return 0;
  CyclotomicNumber z = chi_value(G, psi.chi, g);
  return z + chi_value(G, psi.chi, G.inverse(g));
}

Matrix2 operator*(const Matrix2& a, const Matrix2& b) {
  Matrix2 c;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
  return c;
}

Matrix2 rep_matrix(const DihedralGroup& G, const Character& psi, const GroupElement& g) {
  if (psi.kind != CharacterKind::induced) fail(Errc::dimension_error, "rep_matrix needs a two-dimensional character");
  GroupElement pi = g;
  pi.tau = false;
  CyclotomicNumber z = chi_value(G, psi.chi, pi);
  CyclotomicNumber zbar = chi_value(G, psi.chi, G.inverse(pi));
  if (!g.tau) return Matrix2{{{z, 0}, {0, zbar}}};
  return Matrix2{{{0, z}, {zbar, 0}}};
}

Character galois_conjugate(const DihedralGroup& G, const Character& psi, long a) {
  if (std::gcd(static_cast<unsigned long>(std::labs(a)), G.p()) != 1)
    fail(Errc::invalid_automorphism, std::to_string(a) + " is not a unit mod " + std::to_string(G.exponent()));
  if (psi.kind != CharacterKind::induced) return psi;
  return induced(G, scale(G, psi.chi, a));
}

std::vector<std::vector<Character>> induced_orbits(const DihedralGroup& G) {
  std::vector<std::vector<Character>> orbits;
  std::set<Character> seen;
  unsigned long m = G.exponent();
  for (const auto& psi : irreducible_characters(G)) {
    if (psi.kind != CharacterKind::induced || seen.count(psi)) continue;
    std::set<Character> orbit;
    for (unsigned long a = 1; a < m; ++a)
      if (a % G.p() != 0) orbit.insert(galois_conjugate(G, psi, static_cast<long>(a)));
    seen.insert(orbit.begin(), orbit.end());
    std::vector<Character> o(orbit.begin(), orbit.end());
    std::sort(o.begin(), o.end(), [](const Character& x, const Character& y) { return x.chi < y.chi; });
    orbits.push_back(std::move(o));
  }
  return orbits;
}

Character parse_character(const DihedralGroup& G, std::string_view key) {
  if (key == "1") return trivial_character();
  if (key == "eps") return epsilon_character();
  const std::string context = "character key '" + std::string(key) + "'";
  if (key.size() < 6 || key.substr(0, 4) != "psi[" || key.back() != ']')
    fail(Errc::invalid_input, "malformed " + context);
  std::string_view body = key.substr(4, key.size() - 5);
  std::vector<long> raw;
  size_t pos = 0;
  while (true) {
    size_t comma = body.find(',', pos);
    raw.push_back(parse_long(body.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos),
                             context));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  const auto& f = G.cyclic_factors();
  if (raw.size() != f.size()) fail(Errc::invalid_input, "wrong number of exponents in " + context);
  PCharacter chi(raw.size());
  for (size_t i = 0; i < raw.size(); ++i) chi[i] = reduce(raw[i], f[i]);
  if (is_trivial(chi)) fail(Errc::invalid_input, "trivial exponent vector in " + context);
  return induced(G, chi);
}

}  // namespace etnc
