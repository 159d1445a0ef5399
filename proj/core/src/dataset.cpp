#include "etnc/dataset.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "etnc/error.hpp"

namespace etnc {

using nlohmann::json;

namespace {

[[noreturn]] void schema(const std::string& path, const std::string& what) {
  fail(Errc::schema_violation, path + ": " + what);
}

const json& field(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) schema(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) schema(path + "." + key, "missing");
  return *it;
}

const json* optional_field(const json& obj, const std::string& key) {
  auto it = obj.find(key);
  return it == obj.end() || it->is_null() ? nullptr : &*it;
}

void only_keys(const json& obj, std::initializer_list<const char*> keys, const std::string& path) {
  if (!obj.is_object()) schema(path, "expected an object");
  for (const auto& [k, v] : obj.items()) {
    if (std::none_of(keys.begin(), keys.end(), [&](const char* allowed) { return k == allowed; }))
      schema(path + "." + k, "unknown key");
  }
}

std::string as_string(const json& j, const std::string& path) {
  if (!j.is_string()) schema(path, "expected a string");
  return j.get<std::string>();
}

bool as_bool(const json& j, const std::string& path) {
  if (!j.is_boolean()) schema(path, "expected a boolean");
  return j.get<bool>();
}

Integer as_integer(const json& j, const std::string& path) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()), 10);
  if (j.is_number_unsigned()) return Integer(std::to_string(j.get<unsigned long long>()), 10);
  if (j.is_string()) {
    try {
      return Integer(j.get<std::string>(), 10);
    } catch (const std::invalid_argument&) {
    }
  }
  schema(path, "expected an integer");
}

long as_long(const json& j, const std::string& path) {
  Integer v = as_integer(j, path);
  if (!v.fits_slong_p()) schema(path, "integer out of range");
  return v.get_si();
}

Integer positive_integer(const json& j, const std::string& path) {
  Integer v = as_integer(j, path);
  if (v <= 0) fail(Errc::data_error, path + ": must be positive");
  return v;
}

Rational as_rational(const json& j, const std::string& path) {
  if (j.is_number_integer() || j.is_number_unsigned()) return Rational(as_integer(j, path));
  if (!j.is_string()) schema(path, "expected a rational string");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const Error& e) {
    schema(path, e.what());
  }
}

std::vector<std::string> string_list(const json& j, const std::string& path) {
  if (!j.is_array()) schema(path, "expected an array");
  std::vector<std::string> out;
  for (size_t i = 0; i < j.size(); ++i) out.push_back(as_string(j[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

DecimalInput as_decimal(const json& j, const std::string& path) {
  DecimalInput d;
  if (j.is_string()) {
    d.value = j.get<std::string>();
  } else if (j.is_object()) {
    only_keys(j, {"value", "error"}, path);
    d.value = as_string(field(j, "value", path), path + ".value");
    if (const json* e = optional_field(j, "error")) d.error = as_string(*e, path + ".error");
  } else {
    schema(path, "expected a decimal string or {value, error}");
  }
  try {
    d.parse();
  } catch (const Error& e) {
    schema(path, e.what());
  }
  return d;
}

GroupElement as_element(const DihedralGroup& G, const json& j, const std::string& path) {
  std::string s = as_string(j, path);
  try {
    return G.parse_element(s);
  } catch (const Error& e) {
    schema(path, e.what());
  }
}

Character as_character(const DihedralGroup& G, const std::string& key, const std::string& path) {
  Character c;
  try {
    c = parse_character(G, key);
  } catch (const Error& e) {
    schema(path, e.what());
  }
  if (c.key() != key) schema(path, "non-canonical character key, expected '" + c.key() + "'");
  return c;
}

json integer_json(const Integer& n) {
  if (n.fits_slong_p()) return json(n.get_si());
  return json(n.get_str());
}

json decimal_json(const DecimalInput& d) {
  if (d.error == "0") return json(d.value);
  return json{{"value", d.value}, {"error", d.error}};
}

// Subgroup generated by gens.
std::set<GroupElement> closure(const DihedralGroup& G, const std::vector<GroupElement>& gens) {
  std::set<GroupElement> out{G.identity()};
  std::vector<GroupElement> frontier{G.identity()};
  while (!frontier.empty()) {
    GroupElement x = frontier.back();
    frontier.pop_back();
    for (const auto& g : gens) {
      GroupElement y = G.multiply(x, g);
      if (out.insert(y).second) frontier.push_back(y);
    }
  }
  return out;
}

CurveData parse_curve(const json& j, const std::string& path) {
  only_keys(j, {"label", "conductor", "manin_constant", "c_infinity", "k_unit_count", "heegner", "torsion", "tamagawa"},
            path);
  CurveData c;
  c.label = as_string(field(j, "label", path), path + ".label");
  c.conductor = positive_integer(field(j, "conductor", path), path + ".conductor");
  if (const json* v = optional_field(j, "manin_constant")) c.manin_constant = positive_integer(*v, path + ".manin_constant");
  if (const json* v = optional_field(j, "c_infinity")) {
    c.c_infinity = static_cast<int>(as_long(*v, path + ".c_infinity"));
    if (c.c_infinity != 1 && c.c_infinity != 2) fail(Errc::data_error, path + ".c_infinity: must be 1 or 2");
  }
  if (const json* v = optional_field(j, "k_unit_count")) c.k_unit_count = positive_integer(*v, path + ".k_unit_count");
  if (const json* v = optional_field(j, "heegner")) c.heegner = as_bool(*v, path + ".heegner");
  if (const json* t = optional_field(j, "torsion")) {
    if (!t->is_object()) schema(path + ".torsion", "expected an object");
    for (const auto& [k, v] : t->items()) c.torsion[k] = positive_integer(v, path + ".torsion." + k);
  }
  if (const json* t = optional_field(j, "tamagawa")) {
    if (!t->is_object()) schema(path + ".tamagawa", "expected an object");
    for (const auto& [fieldname, places] : t->items()) {
      if (!places.is_object()) schema(path + ".tamagawa." + fieldname, "expected an object");
      for (const auto& [label, v] : places.items())
        c.tamagawa[fieldname][label] = positive_integer(v, path + ".tamagawa." + fieldname + "." + label);
    }
  }
  return c;
}

TowerData parse_tower(const DihedralGroup& G, const json& j, const std::string& path) {
  only_keys(j, {"d_k", "d_K", "conductor_norms", "S_r", "S_b", "S_r_split", "F_over_K_unramified",
                "real_place_splits_in_K"},
            path);
  TowerData t;
  if (const json* v = optional_field(j, "d_k")) t.d_k = positive_integer(*v, path + ".d_k");
  t.d_K = positive_integer(field(j, "d_K", path), path + ".d_K");
  if (const json* v = optional_field(j, "conductor_norms")) {
    if (!v->is_object()) schema(path + ".conductor_norms", "expected an object");
    for (const auto& [key, n] : v->items()) {
      Character c = as_character(G, key, path + ".conductor_norms." + key);
      if (c.kind != CharacterKind::induced) schema(path + ".conductor_norms." + key, "only induced characters");
      t.conductor_norms[c] = positive_integer(n, path + ".conductor_norms." + key);
    }
  }
  if (const json* v = optional_field(j, "S_r")) t.S_r = string_list(*v, path + ".S_r");
  if (const json* v = optional_field(j, "S_b")) t.S_b = string_list(*v, path + ".S_b");
  if (const json* v = optional_field(j, "S_r_split")) t.S_r_split = string_list(*v, path + ".S_r_split");
  if (const json* v = optional_field(j, "F_over_K_unramified"))
    t.F_over_K_unramified = as_bool(*v, path + ".F_over_K_unramified");
  if (const json* v = optional_field(j, "real_place_splits_in_K"))
    t.real_place_splits_in_K = as_bool(*v, path + ".real_place_splits_in_K");
  return t;
}

PlaceData parse_place(const DihedralGroup& G, const json& j, const std::string& path) {
  only_keys(j, {"label", "q", "a", "inertia", "frobenius", "splits_in_K", "ramified_in_K", "kodaira"}, path);
  PlaceData pl;
  pl.label = as_string(field(j, "label", path), path + ".label");
  pl.q = positive_integer(field(j, "q", path), path + ".q");
  pl.a = as_integer(field(j, "a", path), path + ".a");
  if (pl.a * pl.a > 4 * pl.q) fail(Errc::data_error, path + ".a: violates the Hasse bound");
  if (const json* v = optional_field(j, "inertia")) {
    if (!v->is_array()) schema(path + ".inertia", "expected an array");
    for (size_t i = 0; i < v->size(); ++i)
      pl.inertia.push_back(as_element(G, (*v)[i], path + ".inertia[" + std::to_string(i) + "]"));
  }
  if (const json* v = optional_field(j, "frobenius")) pl.frobenius = as_element(G, *v, path + ".frobenius");
  if (const json* v = optional_field(j, "splits_in_K")) pl.splits_in_K = as_bool(*v, path + ".splits_in_K");
  if (const json* v = optional_field(j, "ramified_in_K")) pl.ramified_in_K = as_bool(*v, path + ".ramified_in_K");
  if (const json* v = optional_field(j, "kodaira")) pl.kodaira = as_string(*v, path + ".kodaira");
  if (pl.splits_in_K && pl.ramified_in_K) fail(Errc::data_error, path + ": a place cannot both split and ramify in K");
  if (!pl.inertia.empty() && !pl.frobenius) schema(path + ".frobenius", "required when inertia is given");
  if (pl.frobenius) {
    auto I = closure(G, pl.inertia);
    GroupElement fr = *pl.frobenius, frinv = G.inverse(fr);
    for (const auto& h : pl.inertia)
      if (!I.count(G.multiply(G.multiply(fr, h), frinv)))
        fail(Errc::data_error, path + ": frobenius does not normalise the inertia subgroup");
  }
  return pl;
}

PinnedCorrection parse_pinned(const json& j, const std::string& path) {
  only_keys(j, {"u", "t", "ut"}, path);
  PinnedCorrection p;
  if (const json* v = optional_field(j, "u")) p.u = as_rational(*v, path + ".u");
  if (const json* v = optional_field(j, "t")) p.t = as_rational(*v, path + ".t");
  if (const json* v = optional_field(j, "ut")) p.ut = as_rational(*v, path + ".ut");
  if (p.ut && (p.u || p.t)) schema(path, "give either ut or the pair u, t");
  if (!p.ut && (!p.u || !p.t)) schema(path, "give either ut or both u and t");
  return p;
}

AnalyticData parse_analytic(const DihedralGroup& G, const json& j, const std::string& path) {
  only_keys(j, {"rank_k", "rank_K", "omega_plus", "omega_minus", "characters"}, path);
  AnalyticData a;
  a.rank_k = static_cast<int>(as_long(field(j, "rank_k", path), path + ".rank_k"));
  if (a.rank_k < 0) fail(Errc::data_error, path + ".rank_k: negative");
  if (const json* v = optional_field(j, "rank_K")) a.rank_K = static_cast<int>(as_long(*v, path + ".rank_K"));
  if (const json* v = optional_field(j, "omega_plus")) a.omega_plus = as_decimal(*v, path + ".omega_plus");
  if (const json* v = optional_field(j, "omega_minus")) a.omega_minus = as_decimal(*v, path + ".omega_minus");
  const json& chars = field(j, "characters", path);
  if (!chars.is_object()) schema(path + ".characters", "expected an object");
  for (const auto& [key, entry] : chars.items()) {
    const std::string cpath = path + ".characters." + key;
    Character c = as_character(G, key, cpath);
    only_keys(entry, {"order", "leading_term", "truncated", "qhat", "pinned"}, cpath);
    CharacterAnalytic ca;
    ca.order = static_cast<int>(as_long(field(entry, "order", cpath), cpath + ".order"));
    if (ca.order < 0) fail(Errc::data_error, cpath + ".order: negative");
    if (const json* v = optional_field(entry, "leading_term")) {
      ca.leading_term = as_decimal(*v, cpath + ".leading_term");
      if (!ca.leading_term->parse().excludes_zero())
        fail(Errc::data_error, cpath + ".leading_term: not distinguishable from zero");
    }
    if (const json* v = optional_field(entry, "truncated")) ca.truncated = as_bool(*v, cpath + ".truncated");
    if (const json* v = optional_field(entry, "qhat")) {
      ca.qhat = as_decimal(*v, cpath + ".qhat");
      if (!ca.qhat->parse().excludes_zero()) fail(Errc::data_error, cpath + ".qhat: not distinguishable from zero");
    }
    if (const json* v = optional_field(entry, "pinned")) ca.pinned = parse_pinned(*v, cpath + ".pinned");
    a.characters[c] = ca;
  }
  return a;
}

HeightData parse_heights(const DihedralGroup& G, const json& j, const std::string& path) {
  only_keys(j, {"normalization", "translates", "point_is_verified_generator"}, path);
  HeightData h;
  h.normalization = as_string(field(j, "normalization", path), path + ".normalization");
  const json& tr = field(j, "translates", path);
  if (!tr.is_object()) schema(path + ".translates", "expected an object");
  for (const auto& [key, v] : tr.items()) {
    GroupElement g = as_element(G, json(key), path + ".translates." + key);
    if (G.format(g) != key) schema(path + ".translates." + key, "non-canonical element, expected '" + G.format(g) + "'");
    h.translates[g] = as_decimal(v, path + ".translates." + key);
  }
  if (const json* v = optional_field(j, "point_is_verified_generator"))
    h.point_is_verified_generator = as_bool(*v, path + ".point_is_verified_generator");
  for (const auto& g : G.elements())
    if (!h.translates.count(g)) schema(path + ".translates." + G.format(g), "missing");
  for (const auto& [g, d] : h.translates) {
    if (!d.parse().overlaps(h.translates.at(G.inverse(g)).parse()))
      fail(Errc::data_error, path + ".translates: Gram matrix asymmetric beyond error at " + G.format(g));
  }
  DecimalWithError diag = h.translates.at(G.identity()).parse();
  if (diag.upper() <= 0) fail(Errc::data_error, path + ".translates.1: height of the point must be positive");
  return h;
}

BSDData parse_bsd(const DihedralGroup& G, const json& j, const std::string& path) {
  only_keys(j, {"fields", "places", "regulators"}, path);
  BSDData b;
  if (const json* fs = optional_field(j, "fields")) {
    if (!fs->is_object()) schema(path + ".fields", "expected an object");
    for (const auto& [name, f] : fs->items()) {
      const std::string fpath = path + ".fields." + name;
      only_keys(f, {"characters", "lhs_scale"}, fpath);
      BSDField bf;
      const json& chars = field(f, "characters", fpath);
      if (!chars.is_object()) schema(fpath + ".characters", "expected an object");
      for (const auto& [key, mult] : chars.items()) {
        Character c = as_character(G, key, fpath + ".characters." + key);
        bf.multiplicities[c] = static_cast<int>(as_long(mult, fpath + ".characters." + key));
      }
      if (const json* v = optional_field(f, "lhs_scale")) bf.lhs_scale = as_rational(*v, fpath + ".lhs_scale");
      if (bf.lhs_scale == 0) fail(Errc::data_error, fpath + ".lhs_scale: zero");
      b.fields[name] = bf;
    }
  }
  if (const json* ps = optional_field(j, "places")) {
    if (!ps->is_array()) schema(path + ".places", "expected an array");
    for (size_t i = 0; i < ps->size(); ++i) {
      const json& pj = (*ps)[i];
      const std::string ppath = path + ".places[" + std::to_string(i) + "]";
      only_keys(pj, {"label", "infinite", "q", "decomposition_order", "kodaira", "tamagawa", "differential_valuation",
                     "differential_exponents"},
                ppath);
      BSDPlace bp;
      bp.label = as_string(field(pj, "label", ppath), ppath + ".label");
      if (const json* v = optional_field(pj, "infinite")) bp.infinite = as_bool(*v, ppath + ".infinite");
      if (const json* v = optional_field(pj, "q")) bp.q = positive_integer(*v, ppath + ".q");
      if (!bp.infinite && !optional_field(pj, "q")) schema(ppath + ".q", "required for finite places");
      if (const json* v = optional_field(pj, "decomposition_order"))
        bp.decomposition_order = static_cast<unsigned>(positive_integer(*v, ppath + ".decomposition_order").get_ui());
      if (const json* v = optional_field(pj, "kodaira")) bp.kodaira = as_string(*v, ppath + ".kodaira");
      if (const json* tj = optional_field(pj, "tamagawa")) {
        if (!tj->is_object()) schema(ppath + ".tamagawa", "expected an object");
        for (const auto& [name, list] : tj->items()) {
          if (!list.is_array()) schema(ppath + ".tamagawa." + name, "expected an array");
          for (size_t k = 0; k < list.size(); ++k)
            bp.tamagawa[name].push_back(
                positive_integer(list[k], ppath + ".tamagawa." + name + "[" + std::to_string(k) + "]"));
        }
      }
      if (const json* v = optional_field(pj, "differential_valuation"))
        bp.differential_valuation = as_long(*v, ppath + ".differential_valuation");
      if (const json* dj = optional_field(pj, "differential_exponents")) {
        if (!dj->is_object()) schema(ppath + ".differential_exponents", "expected an object");
        for (const auto& [name, list] : dj->items()) {
          if (!list.is_array()) schema(ppath + ".differential_exponents." + name, "expected an array");
          for (size_t k = 0; k < list.size(); ++k)
            bp.differential_exponents[name].push_back(
                as_long(list[k], ppath + ".differential_exponents." + name + "[" + std::to_string(k) + "]"));
        }
      }
      b.places.push_back(bp);
    }
  }
  if (const json* rs = optional_field(j, "regulators")) {
    if (!rs->is_object()) schema(path + ".regulators", "expected an object");
    for (const auto& [name, mat] : rs->items()) {
      const std::string rpath = path + ".regulators." + name;
      if (!mat.is_array()) schema(rpath, "expected a matrix");
      std::vector<std::vector<DecimalInput>> rows;
      for (size_t r = 0; r < mat.size(); ++r) {
        if (!mat[r].is_array() || mat[r].size() != mat.size()) schema(rpath, "expected a square matrix");
        std::vector<DecimalInput> row;
        for (size_t c = 0; c < mat[r].size(); ++c)
          row.push_back(as_decimal(mat[r][c], rpath + "[" + std::to_string(r) + "][" + std::to_string(c) + "]"));
        rows.push_back(row);
      }
      for (size_t r = 0; r < rows.size(); ++r)
        for (size_t c = 0; c < r; ++c)
          if (!rows[r][c].parse().overlaps(rows[c][r].parse()))
            fail(Errc::data_error, rpath + ": asymmetric beyond error");
      b.regulators[name] = rows;
    }
  }
  return b;
}

DatasetOptions parse_options(const json& j, const std::string& path) {
  only_keys(j, {"den_bound", "tol", "route", "n"}, path);
  DatasetOptions o;
  if (const json* v = optional_field(j, "den_bound")) o.den_bound = positive_integer(*v, path + ".den_bound");
  if (const json* v = optional_field(j, "tol")) {
    o.tol = as_string(*v, path + ".tol");
    try {
      DecimalWithError::parse(*o.tol);
    } catch (const Error& e) {
      schema(path + ".tol", e.what());
    }
  }
  if (const json* v = optional_field(j, "route")) {
    o.route = as_string(*v, path + ".route");
    if (o.route != "auto" && o.route != "direct" && o.route != "qhat" && o.route != "gz")
      schema(path + ".route", "expected auto, direct, qhat or gz");
  }
  if (const json* v = optional_field(j, "n")) o.n = static_cast<unsigned>(positive_integer(*v, path + ".n").get_ui());
  return o;
}

void cross_check(const Dataset& d) {
  const DihedralGroup& G = d.group;
  const auto chars = irreducible_characters(G);
  if (d.analytic.characters.size() != chars.size())
    fail(Errc::data_error, "analytic.characters: " + std::to_string(d.analytic.characters.size()) +
                               " entries, but |P| = " + std::to_string(G.order_P()) + " has " +
                               std::to_string(chars.size()) + " irreducible characters");
  for (const auto& c : chars)
    if (!d.analytic.characters.count(c)) fail(Errc::data_error, "analytic.characters." + c.key() + ": missing");
  for (const auto& c : chars) {
    if (c.kind != CharacterKind::induced) continue;
    if (!d.tower.conductor_norms.empty() && !d.tower.conductor_norms.count(c))
      fail(Errc::data_error, "tower.conductor_norms." + c.key() + ": missing");
  }
  if (d.tower.F_over_K_unramified)
    for (const auto& [c, n] : d.tower.conductor_norms)
      if (n != 1) fail(Errc::data_error, "tower.conductor_norms." + c.key() + ": must be 1 when F/K is unramified");
  if (d.tower.d_K % d.tower.d_k != 0) fail(Errc::data_error, "tower: d_k does not divide d_K");
  std::set<std::string> labels;
  for (const auto& pl : d.places)
    if (!labels.insert(pl.label).second) fail(Errc::data_error, "places: duplicate label " + pl.label);
  for (const auto& s : d.tower.S_r)
    if (!labels.count(s)) fail(Errc::data_error, "tower.S_r: place " + s + " has no entry in places");
  for (const auto& s : d.tower.S_r_split)
    if (std::find(d.tower.S_r.begin(), d.tower.S_r.end(), s) == d.tower.S_r.end())
      fail(Errc::data_error, "tower.S_r_split: " + s + " is not in S_r");
}

}  // namespace

const PlaceData* Dataset::find_place(const std::string& label) const {
  for (const auto& pl : places)
    if (pl.label == label) return &pl;
  return nullptr;
}

Dataset parse_dataset(std::string_view text) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    fail(Errc::schema_violation, std::string("malformed JSON: ") + e.what());
  }
  only_keys(root, {"dataset_version", "name", "notes", "group", "curve", "tower", "places", "analytic", "heights", "options",
                   "bsd"},
            "$");
  if (as_long(field(root, "dataset_version", "$"), "$.dataset_version") != kDatasetVersion)
    schema("$.dataset_version", "unsupported version");
  Dataset d;
  d.name = as_string(field(root, "name", "$"), "$.name");
  if (const json* v = optional_field(root, "notes")) d.notes = string_list(*v, "$.notes");
  const json& gj = field(root, "group", "$");
  only_keys(gj, {"p", "cyclic_factors"}, "$.group");
  long p = as_long(field(gj, "p", "$.group"), "$.group.p");
  const json& fj = field(gj, "cyclic_factors", "$.group");
  if (!fj.is_array()) schema("$.group.cyclic_factors", "expected an array");
  std::vector<unsigned long> factors;
  for (size_t i = 0; i < fj.size(); ++i) {
    long f = as_long(fj[i], "$.group.cyclic_factors[" + std::to_string(i) + "]");
    if (f <= 0) schema("$.group.cyclic_factors", "factors must be positive");
    factors.push_back(static_cast<unsigned long>(f));
  }
  if (p <= 0) schema("$.group.p", "must be positive");
  try {
    d.group = DihedralGroup(static_cast<unsigned long>(p), factors);
  } catch (const Error& e) {
    schema("$.group", e.what());
  }
  d.curve = parse_curve(field(root, "curve", "$"), "$.curve");
  d.tower = parse_tower(d.group, field(root, "tower", "$"), "$.tower");
  if (const json* ps = optional_field(root, "places")) {
    if (!ps->is_array()) schema("$.places", "expected an array");
    for (size_t i = 0; i < ps->size(); ++i)
      d.places.push_back(parse_place(d.group, (*ps)[i], "$.places[" + std::to_string(i) + "]"));
  }
  d.analytic = parse_analytic(d.group, field(root, "analytic", "$"), "$.analytic");
  if (const json* v = optional_field(root, "heights")) d.heights = parse_heights(d.group, *v, "$.heights");
  if (const json* v = optional_field(root, "options")) d.options = parse_options(*v, "$.options");
  if (const json* v = optional_field(root, "bsd")) d.bsd = parse_bsd(d.group, *v, "$.bsd");
  cross_check(d);
  return d;
}

Dataset load_dataset(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::data_error, "cannot open dataset " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_dataset(buf.str());
}

std::string serialize_dataset(const Dataset& d) {
  const DihedralGroup& G = d.group;
  json root;
  root["dataset_version"] = kDatasetVersion;
  root["name"] = d.name;
  if (!d.notes.empty()) root["notes"] = d.notes;
  root["group"] = {{"p", G.p()}, {"cyclic_factors", G.cyclic_factors()}};

  json curve;
  curve["label"] = d.curve.label;
  curve["conductor"] = integer_json(d.curve.conductor);
  curve["manin_constant"] = integer_json(d.curve.manin_constant);
  curve["c_infinity"] = d.curve.c_infinity;
  curve["k_unit_count"] = integer_json(d.curve.k_unit_count);
  curve["heegner"] = d.curve.heegner;
  json torsion = json::object();
  for (const auto& [k, v] : d.curve.torsion) torsion[k] = integer_json(v);
  curve["torsion"] = torsion;
  json tam = json::object();
  for (const auto& [f, places] : d.curve.tamagawa)
    for (const auto& [label, v] : places) tam[f][label] = integer_json(v);
  curve["tamagawa"] = tam;
  root["curve"] = curve;

  json tower;
  tower["d_k"] = integer_json(d.tower.d_k);
  tower["d_K"] = integer_json(d.tower.d_K);
  json norms = json::object();
  for (const auto& [c, n] : d.tower.conductor_norms) norms[c.key()] = integer_json(n);
  tower["conductor_norms"] = norms;
  tower["S_r"] = d.tower.S_r;
  tower["S_b"] = d.tower.S_b;
  tower["S_r_split"] = d.tower.S_r_split;
  tower["F_over_K_unramified"] = d.tower.F_over_K_unramified;
  tower["real_place_splits_in_K"] = d.tower.real_place_splits_in_K;
  root["tower"] = tower;

  json places = json::array();
  for (const auto& pl : d.places) {
    json pj;
    pj["label"] = pl.label;
    pj["q"] = integer_json(pl.q);
    pj["a"] = integer_json(pl.a);
    if (pl.frobenius) {
      json inertia = json::array();
      for (const auto& g : pl.inertia) inertia.push_back(G.format(g));
      pj["inertia"] = inertia;
      pj["frobenius"] = G.format(*pl.frobenius);
    }
    pj["splits_in_K"] = pl.splits_in_K;
    pj["ramified_in_K"] = pl.ramified_in_K;
    if (pl.kodaira) pj["kodaira"] = *pl.kodaira;
    places.push_back(pj);
  }
  root["places"] = places;

  json analytic;
  analytic["rank_k"] = d.analytic.rank_k;
  if (d.analytic.rank_K) analytic["rank_K"] = *d.analytic.rank_K;
  if (d.analytic.omega_plus) analytic["omega_plus"] = decimal_json(*d.analytic.omega_plus);
  if (d.analytic.omega_minus) analytic["omega_minus"] = decimal_json(*d.analytic.omega_minus);
  json chars = json::object();
  for (const auto& [c, ca] : d.analytic.characters) {
    json cj;
    cj["order"] = ca.order;
    if (ca.leading_term) {
      cj["leading_term"] = decimal_json(*ca.leading_term);
      cj["truncated"] = ca.truncated;
    }
    if (ca.qhat) cj["qhat"] = decimal_json(*ca.qhat);
    if (ca.pinned) {
      json pin = json::object();
      if (ca.pinned->u) pin["u"] = ca.pinned->u->get_str();
      if (ca.pinned->t) pin["t"] = ca.pinned->t->get_str();
      if (ca.pinned->ut) pin["ut"] = ca.pinned->ut->get_str();
      cj["pinned"] = pin;
    }
    chars[c.key()] = cj;
  }
  analytic["characters"] = chars;
  root["analytic"] = analytic;

  if (d.heights) {
    json hj;
    hj["normalization"] = d.heights->normalization;
    json tr = json::object();
    for (const auto& [g, v] : d.heights->translates) tr[G.format(g)] = decimal_json(v);
    hj["translates"] = tr;
    hj["point_is_verified_generator"] = d.heights->point_is_verified_generator;
    root["heights"] = hj;
  }

  json options;
  options["den_bound"] = integer_json(d.options.den_bound);
  if (d.options.tol) options["tol"] = *d.options.tol;
  options["route"] = d.options.route;
  if (d.options.n) options["n"] = *d.options.n;
  root["options"] = options;

  if (d.bsd) {
    json bj;
    json fields = json::object();
    for (const auto& [name, f] : d.bsd->fields) {
      json mult = json::object();
      for (const auto& [c, m] : f.multiplicities) mult[c.key()] = m;
      fields[name] = {{"characters", mult}, {"lhs_scale", f.lhs_scale.get_str()}};
    }
    bj["fields"] = fields;
    json places_j = json::array();
    for (const auto& bp : d.bsd->places) {
      json pj;
      pj["label"] = bp.label;
      pj["infinite"] = bp.infinite;
      if (!bp.infinite) pj["q"] = integer_json(bp.q);
      pj["decomposition_order"] = bp.decomposition_order;
      if (!bp.kodaira.empty()) pj["kodaira"] = bp.kodaira;
      json tj = json::object();
      for (const auto& [name, list] : bp.tamagawa) {
        json arr = json::array();
        for (const auto& c : list) arr.push_back(integer_json(c));
        tj[name] = arr;
      }
      pj["tamagawa"] = tj;
      if (bp.differential_valuation != 0 || !bp.differential_exponents.empty()) {
        pj["differential_valuation"] = bp.differential_valuation;
        pj["differential_exponents"] = bp.differential_exponents;
      }
      places_j.push_back(pj);
    }
    bj["places"] = places_j;
    json regs = json::object();
    for (const auto& [name, mat] : d.bsd->regulators) {
      json m = json::array();
      for (const auto& row : mat) {
        json r = json::array();
        for (const auto& e : row) r.push_back(decimal_json(e));
        m.push_back(r);
      }
      regs[name] = m;
    }
    bj["regulators"] = regs;
    root["bsd"] = bj;
  }
  return root.dump(2) + "\n";
}

}  // namespace etnc
