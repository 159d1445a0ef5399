#include "etnc/heights.hpp"

#include <functional>
#include <map>

#include "etnc/error.hpp"

namespace etnc {

GramMatrix::GramMatrix(const DihedralGroup& G, const HeightData& heights) : G_(G), translates_(G.order()) {
  for (const auto& g : G.elements()) {
    auto it = heights.translates.find(g);
    if (it == heights.translates.end()) fail(Errc::incomplete_input, "no translate for " + G.format(g));
    translates_[G.index(g)] = it->second.parse();
  }
}

GramMatrix::GramMatrix(const DihedralGroup& G, std::vector<DecimalWithError> translates_by_index)
    : G_(G), translates_(std::move(translates_by_index)) {
  if (translates_.size() != G.order()) fail(Errc::dimension_error, "one translate per group element expected");
}

const DecimalWithError& GramMatrix::translate(const GroupElement& g) const { return translates_[G_.index(g)]; }

const DecimalWithError& GramMatrix::entry(const GroupElement& g, const GroupElement& h) const {
  return translate(G_.multiply(G_.inverse(g), h));
}

DecimalWithError equivariant_height(const DihedralGroup& G, const Character& psi, const GramMatrix& gram) {
  // Collect the exact coefficient of each translate x = g^-1 h before contracting numerically.
  std::map<GroupElement, CyclotomicNumber> weight;
  const auto elems = G.elements();
  std::vector<CyclotomicNumber> values;
  for (const auto& g : elems) values.push_back(character_value(G, psi, G.inverse(g)));
  for (size_t i = 0; i < elems.size(); ++i) {
    if (values[i].is_zero()) continue;
    GroupElement ginv = G.inverse(elems[i]);
    for (size_t j = 0; j < elems.size(); ++j) {
      if (values[j].is_zero()) continue;
      weight[G.multiply(ginv, elems[j])] += values[i] * values[j];
    }
  }
  DecimalWithError re, im;
  for (const auto& [x, w] : weight) {
    if (w.is_zero()) continue;
    auto [wr, wi] = complex_embedding(w, 1);
    const DecimalWithError& t = gram.translate(x);
    re = re + wr * t;
    im = im + wi * t;
  }
  if (im.excludes_zero()) fail(Errc::inconsistency, "equivariant height has a non-real part for " + psi.key());
  Rational scale = make_rational(Integer(psi.dimension()), Integer(2 * G.order()));
  return DecimalWithError::exact(scale) * re;
}

RegulatorResult regulator(const std::vector<std::vector<DecimalWithError>>& gram) {
  const size_t n = gram.size();
  for (const auto& row : gram)
    if (row.size() != n) fail(Errc::dimension_error, "regulator needs a square matrix");
  if (n == 0) return {DecimalWithError::exact(1), false};
  // Laplace expansion keeps the interval bookkeeping exact in structure; sizes here are tiny.
  std::function<DecimalWithError(const std::vector<size_t>&, size_t)> det =
      [&](const std::vector<size_t>& cols, size_t row) -> DecimalWithError {
    if (cols.size() == 1) return gram[row][cols[0]];
    DecimalWithError acc;
    for (size_t k = 0; k < cols.size(); ++k) {
      std::vector<size_t> rest;
      for (size_t j = 0; j < cols.size(); ++j)
        if (j != k) rest.push_back(cols[j]);
      DecimalWithError term = gram[row][cols[k]] * det(rest, row + 1);
      acc = k % 2 ? acc - term : acc + term;
    }
    return acc;
  };
  if (n > 8) fail(Errc::out_of_scope, "regulator of rank above 8");
  std::vector<size_t> cols(n);
  for (size_t i = 0; i < n; ++i) cols[i] = i;
  DecimalWithError value = det(cols, 0);
  return {value, !value.excludes_zero()};
}

DecimalWithError H_value(const DihedralGroup& G, const Character& psi, const Character& rho, const GramMatrix& gram) {
  if (psi == rho) return DecimalWithError::exact(1);
  return equivariant_height(G, psi, gram);
}

DecimalWithError H_tilde_value(const Character& eta, const DecimalWithError& reg_k, const DecimalWithError& reg_K,
                               const DecimalWithError& reg_L) {
  switch (eta.kind) {
    case CharacterKind::trivial: return reg_k;
    case CharacterKind::epsilon: return reg_K / reg_k;
    case CharacterKind::induced: return reg_L / reg_k;
  }
  return reg_k;
}

DecimalWithError omega_value(const Character& psi, const DecimalWithError& omega_plus,
                             const DecimalWithError& omega_minus, bool real_place_splits_in_K) {
  switch (psi.kind) {
    case CharacterKind::trivial: return omega_plus;
    case CharacterKind::epsilon: return real_place_splits_in_K ? omega_plus : omega_minus;
    case CharacterKind::induced: break;
  }
  // psi^+(1) = dim V_psi^{c}: complex conjugation acts through tau when K is imaginary (fixed line),
  // and trivially when the real place splits in K.
  return real_place_splits_in_K ? omega_plus * omega_plus : omega_plus * omega_minus;
}

}  // namespace etnc
