#include "etnc/hypotheses.hpp"

#include <algorithm>

#include "etnc/error.hpp"
#include "etnc/local_factors.hpp"

namespace etnc {

std::string to_string(HypothesisStatus s) {
  switch (s) {
    case HypothesisStatus::holds: return "holds";
    case HypothesisStatus::fails: return "fails";
    case HypothesisStatus::undetermined: return "undetermined";
  }
  return "undetermined";
}

Character rho_A(int rank_k) {
  if (rank_k == 0) return trivial_character();
  if (rank_k == 1) return epsilon_character();
  fail(Errc::out_of_scope, "rank over k must be 0 or 1, got " + std::to_string(rank_k));
}

std::map<Character, int> expected_vanishing_orders(const DihedralGroup& G, int rank_k) {
  Character rho = rho_A(rank_k);
  std::map<Character, int> out;
  for (const auto& psi : irreducible_characters(G)) out[psi] = psi == rho ? 0 : 1;
  return out;
}

namespace {

bool divides(unsigned long p, const Integer& n) { return mpz_divisible_ui_p(n.get_mpz_t(), p) != 0; }

HypothesisResult torsion_check(const Dataset& d, unsigned long p) {
  auto it = d.curve.torsion.find("K");
  if (it == d.curve.torsion.end()) return {"a", HypothesisStatus::undetermined, "no torsion order over K"};
  if (divides(p, it->second))
    return {"a", HypothesisStatus::fails, "p divides |A(K)_tor| = " + it->second.get_str()};
  return {"a", HypothesisStatus::holds, "|A(K)_tor| = " + it->second.get_str()};
}

HypothesisResult tamagawa_check(const Dataset& d, unsigned long p) {
  auto it = d.curve.tamagawa.find("K");
  if (it == d.curve.tamagawa.end()) return {"b", HypothesisStatus::undetermined, "no Tamagawa numbers over K"};
  for (const auto& label : d.tower.S_b) {
    auto c = it->second.find(label);
    if (c == it->second.end())
      return {"b", HypothesisStatus::undetermined, "no Tamagawa number over K at " + label};
    if (divides(p, c->second))
      return {"b", HypothesisStatus::fails, "p divides the Tamagawa number " + c->second.get_str() + " at " + label};
  }
  return {"b", HypothesisStatus::holds, "Tamagawa numbers over K at S_b are prime to p"};
}

bool p_unramified(const Dataset& d, unsigned long p, std::string& why) {
  if (divides(p, d.tower.d_K)) {
    why = "p divides d_K";
    return false;
  }
  const std::string plabel = std::to_string(p);
  if (std::find(d.tower.S_r.begin(), d.tower.S_r.end(), plabel) != d.tower.S_r.end()) {
    why = "p lies in S_r";
    return false;
  }
  for (const auto& [c, n] : d.tower.conductor_norms)
    if (divides(p, n)) {
      why = "p divides Nf at " + c.key();
      return false;
    }
  why = "p is prime to d_K, the conductor norms and S_r";
  return true;
}

}  // namespace

std::vector<HypothesisResult> check_hypotheses(const Dataset& d) {
  const unsigned long p = d.group.p();
  std::vector<HypothesisResult> out;
  out.push_back(torsion_check(d, p));
  out.push_back(tamagawa_check(d, p));
  if (divides(p, d.curve.conductor))
    out.push_back({"c", HypothesisStatus::fails, "p divides the conductor"});
  else
    out.push_back({"c", HypothesisStatus::holds, "good reduction at p"});

  std::string hwhy;
  const bool h = p_unramified(d, p, hwhy);
  out.push_back({"d", h ? HypothesisStatus::holds : HypothesisStatus::undetermined,
                 h ? "no p-adic place ramifies in F/K" : "p-adic ramification present"});

  std::vector<std::string> both;
  for (const auto& s : d.tower.S_b)
    if (std::find(d.tower.S_r.begin(), d.tower.S_r.end(), s) != d.tower.S_r.end()) both.push_back(s);
  if (both.empty())
    out.push_back({"e", HypothesisStatus::holds, "S_b and S_r are disjoint"});
  else
    out.push_back({"e", HypothesisStatus::fails, "place " + both.front() + " lies in S_b and S_r"});

  HypothesisResult f{"f", HypothesisStatus::holds, "p is prime to |A(kappa_w)| at every place of S_r"};
  for (const auto& label : d.tower.S_r) {
    const PlaceData* pl = d.find_place(label);
    if (!pl) {
      f = {"f", HypothesisStatus::undetermined, "no local data at " + label};
      break;
    }
    Integer N = pl->N();
    bool inert = !pl->splits_in_K && !pl->ramified_in_K;
    if (inert) N = quadratic_point_count(pl->N(), pl->q);
    if (divides(p, N)) {
      f = {"f", HypothesisStatus::fails, "p divides |A(kappa_w)| = " + N.get_str() + " at " + label};
      break;
    }
  }
  out.push_back(f);
  out.push_back({"g", HypothesisStatus::undetermined, "finiteness of Sha is not decidable from data"});
  out.push_back({"h", h ? HypothesisStatus::holds : HypothesisStatus::fails, hwhy});

  if (d.analytic.rank_k != 0 && d.analytic.rank_k != 1) {
    out.push_back({"i", HypothesisStatus::undetermined, "rank over k outside {0, 1}"});
  } else {
    auto expected = expected_vanishing_orders(d.group, d.analytic.rank_k);
    HypothesisResult i{"i", HypothesisStatus::holds, "analytic orders match the expected r_psi"};
    for (const auto& [psi, r] : expected) {
      int got = d.analytic.characters.at(psi).order;
      if (got != r) {
        i = {"i", HypothesisStatus::fails,
             "order at " + psi.key() + " is " + std::to_string(got) + ", expected " + std::to_string(r)};
        break;
      }
    }
    out.push_back(i);
  }
  return out;
}

}  // namespace etnc
