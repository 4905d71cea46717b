#pragma once

// Text and JSON renderings of scan results, exclusion witnesses and the
// verification report. Key order is fixed; rationals render as "p/q".

#include <string>

#include "json.hpp"

#include "cremona/classify.hpp"

namespace cremona {

inline constexpr const char* kVersion = "1.0.0";

using ordered_json = nlohmann::ordered_json;

inline ordered_json integer_json(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

inline ordered_json to_json(const ConfigTuple& t) {
  ordered_json j;
  j["n"] = t.n;
  j["a"] = integer_json(t.a);
  j["c"] = integer_json(t.c);
  j["d"] = integer_json(t.d);
  j["m1"] = t.m1;
  j["m2"] = t.m2;
  return j;
}

inline ordered_json tuples_json(const std::vector<ConfigTuple>& ts) {
  ordered_json arr = ordered_json::array();
  for (const auto& t : ts) arr.push_back(to_json(t));
  return arr;
}

inline ordered_json to_json(const ScanResult& s) {
  ordered_json j;
  j["survivors"] = tuples_json(s.survivors);
  j["hc_extras"] = tuples_json(s.hc_extras);
  j["visited"] = s.visited;
  j["identity_failures"] = s.identity_failures;
  ordered_json rej = ordered_json::object();
  for (const auto& [k, v] : s.rejections) rej[k] = v;
  j["rejections"] = rej;
  return j;
}

inline ordered_json to_json(const ExclusionWitness& w) {
  ordered_json j;
  j["alpha"] = integer_json(w.alpha);
  ordered_json betas = ordered_json::array();
  for (const auto& b : w.beta_candidates) betas.push_back(integer_json(b));
  j["beta_candidates"] = betas;
  j["d2_bound"] = to_string(w.d2_bound);
  j["contradiction"] = w.contradiction;
  j["x"] = w.top.x.str();
  j["y"] = w.top.y.str();
  j["eliminant"] = w.eliminant.str();
  j["modulus"] = integer_json(w.modulus);
  j["brute_feasible"] = w.brute_feasible;
  ordered_json steps = ordered_json::array();
  for (const auto& s : w.steps) {
    ordered_json st;
    st["id"] = s.id;
    st["status"] = s.ok ? "pass" : "fail";
    st["statement"] = s.statement;
    steps.push_back(st);
  }
  j["steps"] = steps;
  j["verdict"] = w.ok ? "excluded" : "not excluded";
  return j;
}

inline ordered_json to_json(const VerificationReport& r) {
  ordered_json j;
  ordered_json config;
  config["n_max"] = r.options.n_max;
  config["ineq_max"] = r.options.ineq_max;
  config["hc_axiom"] = r.options.hc_axiom;
  config["threads"] = r.options.threads;
  j["meta"]["version"] = kVersion;
  j["meta"]["config"] = config;
  j["meta"]["scope"] = "finite checks: inequality for n <= " + std::to_string(std::max(r.options.ineq_max, 19)) +
                       ", tuple scan for n <= " + std::to_string(r.options.n_max);
  j["meta"]["axioms"] = {"hc_gate (a = 1 when m2 <= 2n/3)", "barth_larsen", "hard_lefschetz"};
  j["meta"]["notes"] = {"betti difference relation uses offset n-m2-1 on the second center"};
  ordered_json steps = ordered_json::array();
  for (const auto& s : r.steps) {
    ordered_json st;
    st["id"] = s.id;
    st["status"] = s.passed ? "pass" : "fail";
    ordered_json w = ordered_json::object();
    for (const auto& [k, v] : s.witness) w[k] = v;
    st["witness"] = w;
    steps.push_back(st);
  }
  j["steps"] = steps;
  j["survivors"] = tuples_json(r.survivors);
  j["conclusion"] = r.conclusion;
  return j;
}

inline std::string to_text(const VerificationReport& r) {
  std::string s = "cremona " + std::string(kVersion) + " verify n_max=" + std::to_string(r.options.n_max) +
                  " ineq_max=" + std::to_string(r.options.ineq_max) +
                  " hc_axiom=" + (r.options.hc_axiom ? "on" : "off") + "\n";
  for (const auto& st : r.steps) {
    s += "[" + std::string(st.passed ? "pass" : "FAIL") + "] " + st.id + "\n";
    for (const auto& [k, v] : st.witness) s += "    " + k + ": " + v + "\n";
  }
  s += "survivors: " + detail::join(r.survivors) + "\n";
  s += "conclusion: " + r.conclusion + "\n";
  return s;
}

inline std::string to_text(const ExclusionWitness& w) {
  std::string s;
  for (const auto& st : w.steps) s += "[" + std::string(st.ok ? "pass" : "FAIL") + "] " + st.id + ": " + st.statement + "\n";
  s += "verdict: " + std::string(w.ok ? "excluded" : "not excluded") + " (" + w.contradiction + ")\n";
  return s;
}

}  // namespace cremona
