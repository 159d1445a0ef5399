#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "etnc/cyclotomic.hpp"
#include "etnc/decimal.hpp"
#include "etnc/dihedral.hpp"
#include "etnc/rational.hpp"

namespace etnc {

inline constexpr int kDatasetVersion = 1;

// Decimal kept in its source spelling so that serialisation is byte-stable.
struct DecimalInput {
  std::string value;
  std::string error = "0";
  DecimalWithError parse() const { return DecimalWithError::parse(value, error); }
  friend bool operator==(const DecimalInput&, const DecimalInput&) = default;
};

struct CurveData {
  std::string label;
  Integer conductor = 1;
  Integer manin_constant = 1;
  int c_infinity = 1;
  Integer k_unit_count = 2;
  bool heegner = false;
  // field name (k, K, L, F) -> |A(E)_tor|
  std::map<std::string, Integer> torsion;
  // field name -> place label -> product of Tamagawa numbers above the place
  std::map<std::string, std::map<std::string, Integer>> tamagawa;
  friend bool operator==(const CurveData&, const CurveData&) = default;
};

struct TowerData {
  Integer d_k = 1;
  Integer d_K = 1;
  std::map<Character, Integer> conductor_norms;
  std::vector<std::string> S_r, S_b, S_r_split;
  bool F_over_K_unramified = false;
  bool real_place_splits_in_K = true;
  friend bool operator==(const TowerData&, const TowerData&) = default;
};

struct PlaceData {
  std::string label;
  Integer q = 2;
  Integer a = 0;
  std::vector<GroupElement> inertia;
  std::optional<GroupElement> frobenius;
  bool splits_in_K = false;
  bool ramified_in_K = false;
  std::optional<std::string> kodaira;

  Integer N() const { return q + 1 - a; }
  bool has_galois_data() const { return frobenius.has_value(); }
  friend bool operator==(const PlaceData&, const PlaceData&) = default;
};

struct PinnedCorrection {
  std::optional<Rational> u, t, ut;
  friend bool operator==(const PinnedCorrection&, const PinnedCorrection&) = default;
};

struct CharacterAnalytic {
  int order = 0;
  std::optional<DecimalInput> leading_term;
  bool truncated = false;
  std::optional<DecimalInput> qhat;
  std::optional<PinnedCorrection> pinned;
  friend bool operator==(const CharacterAnalytic&, const CharacterAnalytic&) = default;
};

struct AnalyticData {
  int rank_k = 0;
  std::optional<int> rank_K;
  std::optional<DecimalInput> omega_plus, omega_minus;
  std::map<Character, CharacterAnalytic> characters;
  friend bool operator==(const AnalyticData&, const AnalyticData&) = default;
};

struct HeightData {
  std::string normalization;
  // g -> <Q, gQ>_F
  std::map<GroupElement, DecimalInput> translates;
  bool point_is_verified_generator = true;
  friend bool operator==(const HeightData&, const HeightData&) = default;
};

struct BSDPlace {
  std::string label;
  bool infinite = false;
  Integer q = 1;
  unsigned decomposition_order = 1;
  std::string kodaira;
  // field -> Tamagawa numbers of the places above
  std::map<std::string, std::vector<Integer>> tamagawa;
  // v(omega_A / omega_Neron) at v, and per field the exponents e_w with
  // |omega_A/omega_w|_w = |omega_A/omega_v|_v^(e_w)
  long differential_valuation = 0;
  std::map<std::string, std::vector<long>> differential_exponents;
  friend bool operator==(const BSDPlace&, const BSDPlace&) = default;
};

struct BSDField {
  std::map<Character, int> multiplicities;
  Rational lhs_scale = 1;
  friend bool operator==(const BSDField&, const BSDField&) = default;
};

struct BSDData {
  std::map<std::string, BSDField> fields;
  std::vector<BSDPlace> places;
  // k, K, L -> Gram matrix on a generating set; an empty matrix means rank 0
  std::map<std::string, std::vector<std::vector<DecimalInput>>> regulators;
  friend bool operator==(const BSDData&, const BSDData&) = default;
};

struct DatasetOptions {
  Integer den_bound = 1000000;
  std::optional<std::string> tol;
  std::string route = "auto";
  std::optional<unsigned> n;
  friend bool operator==(const DatasetOptions&, const DatasetOptions&) = default;
};

struct Dataset {
  std::string name;
  std::vector<std::string> notes;
  DihedralGroup group{3, {3}};
  CurveData curve;
  TowerData tower;
  std::vector<PlaceData> places;
  AnalyticData analytic;
  std::optional<HeightData> heights;
  DatasetOptions options;
  std::optional<BSDData> bsd;

  const PlaceData* find_place(const std::string& label) const;
  friend bool operator==(const Dataset&, const Dataset&) = default;
};

// Throws schema-violation (with a field path) or data-error.
Dataset parse_dataset(std::string_view text);
Dataset load_dataset(const std::string& path);
// Canonical form: sorted keys, two-space indentation, trailing newline.
std::string serialize_dataset(const Dataset& d);

}  // namespace etnc
