#include "etnc/local_factors.hpp"

#include "etnc/error.hpp"

namespace etnc {

namespace {

using Vec2 = std::array<CyclotomicNumber, 2>;

Vec2 mat_apply(const Matrix2& m, const Vec2& v) { return {m[0][0] * v[0] + m[0][1] * v[1], m[1][0] * v[0] + m[1][1] * v[1]}; }

bool is_zero(const Vec2& v) { return v[0].is_zero() && v[1].is_zero(); }

// Basis of the common kernel of the rows, dimension 0, 1 or 2.
std::vector<Vec2> common_kernel(const std::vector<Vec2>& rows) {
  // Row-reduce over Q(zeta).
  std::vector<Vec2> r;
  for (const auto& row : rows)
    if (!is_zero(row)) r.push_back(row);
  if (r.empty()) return {Vec2{1, 0}, Vec2{0, 1}};
  const Vec2& pivot = r.front();
  Vec2 kernel = pivot[1].is_zero() ? Vec2{0, 1} : Vec2{CyclotomicNumber(1), -(pivot[0] / pivot[1])};
  // kernel of the first non-zero row is the line through `kernel`; check the rest
  for (const auto& row : r)
    if (!(row[0] * kernel[0] + row[1] * kernel[1]).is_zero()) return {};
  return {kernel};
}

}  // namespace

LocalEigenData invariant_eigenvalues(const DihedralGroup& G, const Character& psi, const PlaceData& place) {
  if (!place.frobenius) fail(Errc::incomplete_input, "place " + place.label + " has no frobenius");
  const GroupElement& fr = *place.frobenius;
  if (psi.kind != CharacterKind::induced) {
    for (const auto& h : place.inertia)
      if (!(character_value(G, psi, h) == CyclotomicNumber(1))) return {};
    return {{character_value(G, psi, fr)}};
  }
  std::vector<Vec2> rows;
  for (const auto& h : place.inertia) {
    Matrix2 m = rep_matrix(G, psi, h);
    m[0][0] -= 1;
    m[1][1] -= 1;
    rows.push_back(m[0]);
    rows.push_back(m[1]);
  }
  auto basis = common_kernel(rows);
  Matrix2 F = rep_matrix(G, psi, fr);
  if (basis.empty()) return {};
  if (basis.size() == 2) {
    if (!fr.tau) return {{F[0][0], F[1][1]}};
    // reflection: order 2 with trace 0
    return {{CyclotomicNumber(1), CyclotomicNumber(-1)}};
  }
  const Vec2& v = basis.front();
  Vec2 w = mat_apply(F, v);
  CyclotomicNumber lambda = v[0].is_zero() ? w[1] / v[1] : w[0] / v[0];
  if (!(w[0] == lambda * v[0]) || !(w[1] == lambda * v[1]))
    fail(Errc::inconsistency, "frobenius does not preserve the inertia invariants at " + place.label);
  return {{lambda}};
}

CorrectionPair local_correction(const LocalEigenData& eig, const Integer& a, const Integer& q) {
  CorrectionPair c;
  const CyclotomicNumber aq(make_rational(a, q)), invq(make_rational(1, q));
  for (const auto& lambda : eig.eigenvalues) {
    CyclotomicNumber inv = lambda.inverse();
    c.u *= -inv;
    c.t *= CyclotomicNumber(1) - inv * aq + inv * inv * invq;
  }
  return c;
}

CorrectionPair local_correction(const DihedralGroup& G, const Character& psi, const PlaceData& place) {
  return local_correction(invariant_eigenvalues(G, psi, place), place.a, place.q);
}

CorrectionPair global_correction(const Dataset& d, const Character& psi) {
  const auto& entry = d.analytic.characters.at(psi);
  std::optional<CorrectionPair> computed;
  bool all_galois = true;
  CorrectionPair acc;
  for (const auto& label : d.tower.S_r) {
    const PlaceData* pl = d.find_place(label);
    if (!pl) fail(Errc::incomplete_input, "no local data at " + label);
    if (!pl->has_galois_data()) {
      all_galois = false;
      continue;
    }
    CorrectionPair local = local_correction(d.group, psi, *pl);
    acc.u *= local.u;
    acc.t *= local.t;
  }
  if (all_galois) computed = acc;
  if (!entry.pinned) {
    if (!computed) fail(Errc::incomplete_input, "no Galois data at S_r and no pinned correction for " + psi.key());
    return *computed;
  }
  const PinnedCorrection& pin = *entry.pinned;
  CorrectionPair pinned;
  if (pin.ut) {
    pinned.u = 1;
    pinned.t = *pin.ut;
  } else {
    pinned.u = *pin.u;
    pinned.t = *pin.t;
  }
  if (computed && !(computed->product() == pinned.product()))
    fail(Errc::inconsistency, "pinned correction " + pinned.product().to_string() + " for " + psi.key() +
                                  " disagrees with the local data value " + computed->product().to_string());
  if (computed && !pin.ut && (!(computed->u == pinned.u) || !(computed->t == pinned.t)))
    fail(Errc::inconsistency, "pinned (u, t) for " + psi.key() + " disagrees with the local data");
  return computed ? *computed : pinned;
}

Integer d_psi(const TowerData& tower, const Character& psi) {
  switch (psi.kind) {
    case CharacterKind::trivial: return abs(tower.d_k);
    case CharacterKind::epsilon:
      if (tower.d_K % tower.d_k != 0) fail(Errc::data_error, "d_K/d_k is not integral");
      return abs(tower.d_K / tower.d_k);
    case CharacterKind::induced: break;
  }
  auto it = tower.conductor_norms.find(psi);
  if (it == tower.conductor_norms.end()) fail(Errc::incomplete_input, "no conductor norm for " + psi.key());
  return abs(tower.d_K) * it->second;
}

GaussRatio gauss_ratio(const Dataset& d, const Character& psi) {
  const auto& tower = d.tower;
  GaussRatio g;
  switch (psi.kind) {
    case CharacterKind::trivial:
      g.unit = tower.S_r.size() % 2 ? -1 : 1;
      break;
    case CharacterKind::epsilon:
      g.unit = tower.S_r_split.size() % 2 ? -1 : 1;
      break;
    case CharacterKind::induced:
      g.unit = global_correction(d, psi).u;
      break;
  }
  g.radicand = d_psi(tower, psi);
  return g;
}

Integer quadratic_point_count(const Integer& N_v, const Integer& q_v) {
  Integer a = q_v + 1 - N_v;
  if (q_v < 2 || a * a > 4 * q_v) fail(Errc::data_error, "N_v = " + N_v.get_str() + " is outside the Hasse range for q = " + q_v.get_str());
  return N_v * (2 * q_v + 2 - N_v);
}

}  // namespace etnc
