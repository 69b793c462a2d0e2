#pragma once
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "critpoints.hpp"
#include "envelope.hpp"
#include "errors.hpp"
#include "invariance.hpp"
#include "multiparam.hpp"
#include "scalar.hpp"
#include "table.hpp"

namespace tradeoff::io {

using json = nlohmann::ordered_json;

/// Exact values print as "p/q" unless `decimal` >= 0 asks for rounded digits.
struct ScalarFormat {
  int decimal = -1;
};

template <Scalar S>
std::string scalar_text(const S& x, const ScalarFormat& fmt = {}) {
  if constexpr (scalar_traits<S>::exact) {
    return fmt.decimal >= 0 ? x.decimal(fmt.decimal) : x.str();
  } else {
    std::ostringstream os;
    os.precision(fmt.decimal >= 0 ? fmt.decimal : 17);
    if (fmt.decimal >= 0) os << std::fixed;
    os << x.value();
    return os.str();
  }
}

template <Scalar S>
json scalar_json(const S& x, const ScalarFormat& fmt = {}) {
  if constexpr (scalar_traits<S>::exact) return scalar_text(x, fmt);
  else return x.value();
}

template <Scalar S>
S scalar_from_json(const json& j, double tol) {
  if (j.is_string()) return scalar_traits<S>::from_rational(Rational::parse(j.get<std::string>()), tol);
  if (j.is_number_integer()) return scalar_traits<S>::from_rational(Rational(j.get<long>()), tol);
  if (j.is_number_float()) {
    if constexpr (scalar_traits<S>::exact) return Rational::parse(j.dump());
    else return Approx(j.get<double>(), tol);
  }
  throw input_error("expected a number or a numeric string, got " + j.dump());
}

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw input_error(path + ": " + e.what());
  }
}

/// "exact" unless the document says "approx".
inline std::string table_backend(const json& doc) {
  const std::string b = doc.value("backend", std::string("exact"));
  if (b != "exact" && b != "approx") throw input_error("backend must be \"exact\" or \"approx\"");
  return b;
}

template <Scalar S>
ObjectiveTable<S> table_from_json(const json& doc, double tol = kDefaultTolerance) {
  if (!doc.is_object()) throw input_error("table file must hold a JSON object");
  if (!doc.contains("m") || !doc["m"].is_number_integer() || doc["m"].get<long>() < 1)
    throw input_error("table field 'm' must be a positive integer");
  if (!doc.contains("candidates") || !doc["candidates"].is_array())
    throw input_error("table field 'candidates' must be an array");
  const auto m = static_cast<std::size_t>(doc["m"].get<long>());
  std::vector<Candidate<S>> cands;
  std::size_t index = 0;
  for (const auto& c : doc["candidates"]) {
    const std::string where = "candidates[" + std::to_string(index) + "]";
    try {
      if (!c.is_object()) throw input_error("not an object");
      Candidate<S> cand;
      cand.id = c.contains("id") ? (c["id"].is_string() ? c["id"].get<std::string>() : c["id"].dump())
                                 : std::to_string(index);
      if (c.contains("u") && !c["u"].is_null()) {
        std::vector<S> u;
        for (const auto& x : c.at("u")) u.push_back(scalar_from_json<S>(x, tol));
        cand.u = std::move(u);
      }
      if (!c.contains("f")) throw input_error("missing field 'f'");
      if (c["f"].is_string() && (c["f"] == "+inf" || c["f"] == "inf")) {
        cand.f_infinite = true;
        cand.f = S(0);
      } else {
        cand.f = scalar_from_json<S>(c["f"], tol);
      }
      if (!c.contains("g") || !c["g"].is_array()) throw input_error("field 'g' must be an array");
      for (const auto& x : c["g"]) cand.g.push_back(scalar_from_json<S>(x, tol));
      cands.push_back(std::move(cand));
    } catch (const input_error& e) {
      throw input_error(where + ": " + e.what());
    }
    ++index;
  }
  return ObjectiveTable<S>(m, std::move(cands));
}

template <Scalar S>
json table_to_json(const ObjectiveTable<S>& table, const ScalarFormat& fmt = {}) {
  json doc;
  doc["m"] = table.regularizers();
  doc["backend"] = std::string(scalar_traits<S>::name);
  json cands = json::array();
  for (const auto& c : table.candidates()) {
    json jc;
    jc["id"] = c.id;
    if (c.u) {
      json u = json::array();
      for (const auto& x : *c.u) u.push_back(scalar_json(x, fmt));
      jc["u"] = std::move(u);
    }
    jc["f"] = c.f_infinite ? json("+inf") : scalar_json(c.f, fmt);
    json g = json::array();
    for (const auto& x : c.g) g.push_back(scalar_json(x, fmt));
    jc["g"] = std::move(g);
    cands.push_back(std::move(jc));
  }
  doc["candidates"] = std::move(cands);
  return doc;
}

template <Scalar S>
PLRayDomain<S> ray_from_json(const json& doc, double tol = kDefaultTolerance) {
  PLRayDomain<S> ray;
  try {
    for (const auto& x : doc.at("breakpoints")) ray.breakpoints.push_back(scalar_from_json<S>(x, tol));
    for (const auto& x : doc.at("slopes")) ray.slopes.push_back(scalar_from_json<S>(x, tol));
    ray.c = scalar_from_json<S>(doc.at("c"), tol);
    ray.f0 = scalar_from_json<S>(doc.value("f0", json(0)), tol);
  } catch (const json::exception& e) {
    throw input_error(std::string("ray file: ") + e.what());
  }
  ray.validate();
  return ray;
}

template <Scalar S>
json envelope_to_json(const ConcavePLFunction<S>& env, const ScalarFormat& fmt = {}) {
  json doc;
  doc["anchor"] = scalar_json(env.anchor(), fmt);
  json bps = json::array(), slopes = json::array(), active = json::array();
  for (const auto& b : env.breakpoints()) bps.push_back(scalar_json(b, fmt));
  for (const auto& s : env.slopes()) slopes.push_back(scalar_json(s, fmt));
  for (const auto& a : env.active()) active.push_back(a);
  doc["breakpoints"] = std::move(bps);
  doc["slopes"] = std::move(slopes);
  doc["active"] = std::move(active);
  doc["domain_end"] = env.domain_end() ? scalar_json(*env.domain_end(), fmt) : json("inf");
  return doc;
}

template <Scalar S>
json report_to_json(const ObjectiveTable<S>& table, const InvarianceReport<S>& r, const ScalarFormat& fmt = {}) {
  json doc;
  doc["alpha"] = scalar_json(r.alpha, fmt);
  json ids = json::array();
  for (std::size_t i : r.argmin) ids.push_back(table[i].id);
  doc["argmin"] = std::move(ids);
  doc["g_min"] = scalar_json(r.g_min, fmt);
  doc["g_max"] = scalar_json(r.g_max, fmt);
  doc["g_plus"] = scalar_json(r.g_plus, fmt);
  doc["g_minus"] = scalar_json(r.g_minus, fmt);
  doc["exceptional"] = r.exceptional;
  if (!r.certified) doc["indicative"] = true;
  return doc;
}

/// alpha,g_plus,g_minus,spread
template <Scalar S>
std::string exceptional_csv(const std::vector<InvarianceReport<S>>& reports, const ScalarFormat& fmt = {}) {
  std::string out = "alpha,g_plus,g_minus,spread\n";
  for (const auto& r : reports)
    out += scalar_text(r.alpha, fmt) + "," + scalar_text(r.g_plus, fmt) + "," + scalar_text(r.g_minus, fmt) +
           "," + scalar_text(r.spread(), fmt) + "\n";
  return out;
}

template <Scalar S>
json gstep_to_json(const GStepFunction<S>& step, const ScalarFormat& fmt = {}) {
  json doc;
  json bps = json::array(), values = json::array(), jumps = json::array();
  for (const auto& b : step.breakpoints()) bps.push_back(scalar_json(b, fmt));
  for (const auto& v : step.values()) values.push_back(scalar_json(v, fmt));
  for (std::size_t k = 0; k < step.breakpoints().size(); ++k) {
    const auto [gp, gm] = step.jump(k);
    jumps.push_back({{"alpha", scalar_json(step.breakpoints()[k], fmt)},
                     {"g_plus", scalar_json(gp, fmt)},
                     {"g_minus", scalar_json(gm, fmt)}});
  }
  doc["breakpoints"] = std::move(bps);
  doc["values"] = std::move(values);
  doc["jumps"] = std::move(jumps);
  return doc;
}

template <Scalar S>
json sequence_to_json(const ObjectiveTable<S>& table, const EpsSequence<S>& seq, const SequenceVerdict<S>& v,
                      const ScalarFormat& fmt = {}) {
  json doc;
  doc["alpha"] = scalar_json(seq.alpha, fmt);
  doc["policy"] = std::string(policy_name(seq.policy));
  doc["seed"] = seq.seed;
  json entries = json::array();
  for (const auto& e : seq.entries)
    entries.push_back({{"candidate", table[e.candidate].id},
                       {"eps", scalar_json(e.eps, fmt)},
                       {"h", scalar_json(e.h_value, fmt)},
                       {"g", scalar_json(e.g_value, fmt)},
                       {"eps_set_size", e.eps_set_size}});
  doc["entries"] = std::move(entries);
  json verdict;
  verdict["stable_from"] = v.stable_from ? json(*v.stable_from) : json(nullptr);
  verdict["bracket_holds"] = v.bracket_holds;
  verdict["eventually_constant"] = v.eventually_constant;
  verdict["convergence_asserted"] = v.convergence_asserted;
  if (auto osc = v.oscillation()) verdict["limsup_minus_liminf"] = scalar_json(*osc, fmt);
  doc["verdict"] = std::move(verdict);
  return doc;
}

/// fixed,exceptional,count  (lists are ';'-separated)
template <Scalar S>
std::string slices_csv(const ExceptionalMeasure<S>& m, const ScalarFormat& fmt = {}) {
  auto join = [&](const std::vector<S>& xs) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ";" : "") + scalar_text(xs[i], fmt);
    return s;
  };
  std::string out = "fixed,exceptional,count\n";
  for (const auto& l : m.lines)
    out += join(l.fixed) + "," + join(l.exceptional) + "," + std::to_string(l.exceptional.size()) + "\n";
  return out;
}

template <Scalar S>
json multiscan_summary(const ExceptionalMeasure<S>& m, const std::vector<Rational>& refinement,
                       const ScalarFormat& fmt = {}) {
  json doc;
  doc["axis"] = m.axis + 1;
  doc["lines"] = m.lines.size();
  doc["max_count"] = m.max_count;
  doc["measure_estimate"] = scalar_json(m.measure_estimate, fmt);
  json fr = json::array();
  for (const auto& f : refinement) fr.push_back(scalar_json(f, fmt));
  doc["cell_fraction"] = std::move(fr);
  return doc;
}

inline json critical_to_json(const CriticalReport& r, const ScalarFormat& fmt = {}) {
  auto interval = [&](const Interval& iv) { return json::array({scalar_text(iv.lo, fmt), scalar_text(iv.hi, fmt)}); };
  json doc;
  doc["alpha"] = scalar_text(r.alpha, fmt);
  json pts = json::array();
  for (const auto& p : r.points)
    pts.push_back({{"root", interval(p.root)}, {"h", interval(p.h)}, {"g", interval(p.g)}});
  doc["critical_points"] = std::move(pts);
  json groups = json::array();
  for (const auto& g : r.groups) {
    json jg;
    jg["members"] = g.members;
    jg["certified_violation"] = g.certified;
    if (g.certified) jg["g_gap"] = scalar_text(g.g_gap, fmt);
    groups.push_back(std::move(jg));
  }
  doc["equal_h_groups"] = std::move(groups);
  doc["flagged"] = r.flagged();
  return doc;
}

}  // namespace tradeoff::io
