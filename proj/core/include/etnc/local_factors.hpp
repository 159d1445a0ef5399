#pragma once

#include <vector>

#include "etnc/cyclotomic.hpp"
#include "etnc/dataset.hpp"
#include "etnc/dihedral.hpp"

namespace etnc {

// Spectrum of Frobenius on the inertia invariants V_psi^I.
struct LocalEigenData {
  std::vector<CyclotomicNumber> eigenvalues;
};

struct CorrectionPair {
  CyclotomicNumber u = 1;
  CyclotomicNumber t = 1;
  CyclotomicNumber product() const { return u * t; }
};

// Needs inertia and frobenius on the place.
LocalEigenData invariant_eigenvalues(const DihedralGroup& G, const Character& psi, const PlaceData& place);

// u = prod(-1/lambda), t = prod(1 - a/(lambda q) + 1/(lambda^2 q)); (1, 1) for an empty spectrum.
CorrectionPair local_correction(const LocalEigenData& eig, const Integer& a, const Integer& q);
CorrectionPair local_correction(const DihedralGroup& G, const Character& psi, const PlaceData& place);

// Product over S_r. A pinned value replaces the product when the places carry no Galois data and must
// agree with it when they do (else inconsistency). Throws incomplete-input for missing local data.
CorrectionPair global_correction(const Dataset& d, const Character& psi);

// tau*(Q, Ind rho)/w_inf(rho) = unit * sqrt(radicand).
struct GaussRatio {
  CyclotomicNumber unit = 1;
  Integer radicand = 1;
};
GaussRatio gauss_ratio(const Dataset& d, const Character& psi);

// |d_k|, |d_K/d_k| or |d_K| Nf(chi).
Integer d_psi(const TowerData& tower, const Character& psi);

// |A(kappa_w)| over the quadratic residue extension: N (2q + 2 - N). Throws data-error off the Hasse range.
Integer quadratic_point_count(const Integer& N_v, const Integer& q_v);

}  // namespace etnc
