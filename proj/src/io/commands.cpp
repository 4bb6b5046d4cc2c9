#include "rrclosure/report.hpp"

#include <chrono>

#include "rrclosure/bounds.hpp"
#include "rrclosure/error.hpp"

namespace rrc {

namespace {

struct Effective {
  Mode mode;
  std::uint64_t seed;
  std::optional<std::int64_t> k;
  std::optional<std::vector<Polynomial>> reduction;
};

Effective effective(const Problem& p, const RunOptions& o) {
  Effective e;
  e.mode = o.mode.value_or(p.mode.value_or(Mode::Heuristic));
  e.seed = o.seed.value_or(p.seed.value_or(0));
  e.k = o.k ? o.k : p.k;
  if (o.use_file_reduction) {
    if (!p.reduction)
      throw Error(ErrorCode::InvalidArgument, "the problem file has no 'reduction:' line");
    e.reduction = p.reduction;
  }
  return e;
}

Json strings(const std::vector<Polynomial>& fs) {
  Json a = Json::array();
  for (const auto& f : fs) a.push_back(f.to_string());
  return a;
}

Json ideal_json(const Ideal& I) {
  Json j;
  j["generators"] = strings(I.minimal_generators());
  j["basis"] = strings(I.basis().elements());
  Colength c = I.colength();
  j["colength"] = c ? Json(*c) : Json(nullptr);
  return j;
}

Json poincare_json(const PoincareData& pd) {
  Json j;
  j["numerator"] = pd.numerator;
  j["numerator_text"] = numerator_text(pd.numerator);
  j["d_effective"] = pd.d_effective;
  j["e0"] = pd.e0;
  j["pn"] = pd.pn;
  j["hilbert_coefficients"] = hilbert_coefficients(pd);
  j["mode"] = std::string(mode_name(pd.mode));
  j["window_used"] = pd.window_used;
  j["samples"] = pd.samples;
  return j;
}

Json certificate_json(const ReductionCertificate& c) {
  Json j;
  j["elements"] = strings(c.elements);
  j["source"] = c.source;
  j["colength"] = c.colength_of_j;
  j["e0"] = c.e0_of_i;
  j["seed"] = c.seed;
  j["attempts"] = c.attempts;
  return j;
}

Json closure_json(const ClosureReport& r) {
  Json j;
  j["poincare"] = poincare_json(r.poincare);
  j["reduction"] = certificate_json(r.certificate);
  j["quotients"] = Json::array();
  for (const auto& q : r.quotients) j["quotients"].push_back(poincare_json(q));
  j["pn_reduction"] = r.pn_reduction;
  j["k_used"] = r.k_used;
  Json c;
  c["generators"] = strings(r.closure_generators);
  c["basis"] = strings(r.closure.basis().elements());
  c["colength"] = *r.closure.colength();
  j["closure"] = c;
  j["is_closed"] = r.is_closed;
  j["window_doublings"] = r.window_doublings;
  j["checks"] = Json::array();
  for (const auto& ch : r.checks)
    j["checks"].push_back(Json{{"name", ch.name}, {"passed", ch.passed}, {"detail", ch.detail}});
  Json t = Json::object();
  for (const auto& [step, s] : r.timings) t[step] = s;
  j["timings"] = t;
  return j;
}

ClosureOptions closure_options(const Effective& e, const RunOptions& o) {
  ClosureOptions c;
  c.mode = e.mode;
  c.seed = e.seed;
  c.reduction = e.reduction;
  c.bound_cap = o.bound_cap;
  return c;
}

std::string join(const Json& arr, const char* sep = ", ") {
  std::string s;
  for (const auto& v : arr) {
    if (!s.empty()) s += sep;
    s += v.is_string() ? v.get<std::string>() : v.dump();
  }
  return s;
}

std::string ring_text(const Json& ring) {
  return ring["field"].get<std::string>() + "[" + join(ring["variables"], ",") + "]";
}

void line(std::string& out, const std::string& key, const std::string& value) {
  out += key + ": " + value + "\n";
}

void render_poincare(std::string& out, const Json& p, const std::string& prefix) {
  line(out, prefix + "numerator", p["numerator_text"].get<std::string>());
  line(out, prefix + "e0", p["e0"].dump());
  line(out, prefix + "pn", p["pn"].dump());
  line(out, prefix + "hilbert coefficients", join(p["hilbert_coefficients"]));
}

void render_closure(std::string& out, const Json& r) {
  render_poincare(out, r["poincare"], "");
  const Json& red = r["reduction"];
  line(out, "reduction", join(red["elements"]));
  line(out, "reduction source", red["source"].get<std::string>());
  line(out, "reduction colength", red["colength"].dump());
  std::size_t i = 1;
  for (const auto& q : r["quotients"]) {
    std::string prefix = "quotient x" + std::to_string(i++) + " ";
    line(out, prefix + "numerator", q["numerator_text"].get<std::string>());
    line(out, prefix + "pn", q["pn"].dump());
  }
  line(out, "pn(I;xs)", r["pn_reduction"].dump());
  line(out, "k_used", r["k_used"].dump());
  line(out, "closure", join(r["closure"]["generators"]));
  line(out, "closure colength", r["closure"]["colength"].dump());
  line(out, "closed", r["is_closed"].get<bool>() ? "true" : "false");
  std::size_t passed = 0;
  for (const auto& c : r["checks"]) passed += c["passed"].get<bool>();
  line(out, "checks", std::to_string(passed) + " of " + std::to_string(r["checks"].size()) + " passed");
}

}  // namespace

std::string_view command_name(Command command) {
  switch (command) {
    case Command::Closure: return "closure";
    case Command::ClosurePower: return "closure-power";
    case Command::Poincare: return "poincare";
    case Command::Hilbert: return "hilbert";
    case Command::Reduction: return "reduction";
    case Command::CheckClosed: return "check-closed";
    case Command::ColonPowers: return "colon-powers";
  }
  return "closure";
}

std::optional<Command> command_from_name(std::string_view name) {
  for (Command c : {Command::Closure, Command::ClosurePower, Command::Poincare, Command::Hilbert,
                    Command::Reduction, Command::CheckClosed, Command::ColonPowers})
    if (command_name(c) == name) return c;
  return std::nullopt;
}

std::string numerator_text(const std::vector<std::int64_t>& coeffs) {
  std::string out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    std::int64_t a = coeffs[i];
    if (a == 0) continue;
    std::uint64_t mag = a < 0 ? 0 - static_cast<std::uint64_t>(a) : static_cast<std::uint64_t>(a);
    if (out.empty()) out += a < 0 ? "-" : "";
    else out += a < 0 ? " - " : " + ";
    std::string x = i == 0 ? "" : i == 1 ? "X" : "X^" + std::to_string(i);
    if (x.empty()) out += std::to_string(mag);
    else if (mag == 1) out += x;
    else out += std::to_string(mag) + "*" + x;
  }
  return out.empty() ? "0" : out;
}

Json run_command(const Problem& problem, const RunOptions& opts) {
  const Effective e = effective(problem, opts);
  const Ideal I = problem.ideal();
  const auto start = std::chrono::steady_clock::now();

  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["command"] = std::string(command_name(opts.command));
  doc["provenance"] = Json{{"tool", "rrclosure"},
                           {"version", kToolVersion},
                           {"mode", std::string(mode_name(e.mode))},
                           {"seed", e.seed}};
  const Ring& ring = *problem.ring;
  doc["ring"] = Json{{"field", ring.field().descriptor()},
                     {"variables", ring.variables()},
                     {"order", ring.order().name()}};
  doc["input"] = ideal_json(I);
  I.require_m_primary(std::string(command_name(opts.command)));

  Json result;
  switch (opts.command) {
    case Command::Closure:
      result = closure_json(closure(I, closure_options(e, opts)));
      break;
    case Command::CheckClosed: {
      ClosureReport r = closure(I, closure_options(e, opts));
      result = closure_json(r);
      result["closed"] = r.is_closed;
      break;
    }
    case Command::ClosurePower: {
      if (!opts.n) throw Error(ErrorCode::InvalidArgument, "closure-power needs --n");
      if (*opts.n < 1) throw Error(ErrorCode::InvalidArgument, "--n must be at least 1");
      if (e.reduction)
        throw Error(ErrorCode::InvalidArgument, "a file reduction refers to I, not to its power");
      Ideal P = ideal_power(I, *opts.n);
      Json pj;
      pj["generator_count"] = P.minimal_generators().size();
      pj["colength"] = *P.colength();
      result["power"] = *opts.n;
      result["power_ideal"] = pj;
      result.update(closure_json(closure(P, closure_options(e, opts))));
      break;
    }
    case Command::Poincare: {
      IdealPowers powers(I);
      result["poincare"] = poincare_json(poincare(powers, PoincareOptions{e.mode, 0, opts.bound_cap}));
      break;
    }
    case Command::Hilbert: {
      std::int64_t n = opts.n.value_or(5);
      if (n < 0) throw Error(ErrorCode::InvalidArgument, "--n must be nonnegative");
      IdealPowers powers(I);
      Json values = Json::array();
      for (std::int64_t i = 0; i <= n; ++i) values.push_back(hilbert_samuel(powers, i));
      result["n"] = n;
      result["values"] = values;
      break;
    }
    case Command::Reduction: {
      IdealPowers powers(I);
      PoincareData pd = poincare(powers, PoincareOptions{e.mode, 0, opts.bound_cap});
      ReductionCertificate cert =
          e.reduction ? certify_sequence(powers, *e.reduction, pd.e0)
                      : find_superficial_sequence(powers, pd.e0, SuperficialOptions{e.seed});
      Ideal J(problem.ring, cert.elements);
      result["e0"] = pd.e0;
      result["reduction"] = certificate_json(cert);
      result["reduction_number"] = reduction_number(powers, J, pd.e0, opts.r_max);
      result["f_bound"] = f_bound(pd.e0, static_cast<std::int64_t>(ring.nvars())).get_str();
      break;
    }
    case Command::ColonPowers: {
      ColonPowersOptions co;
      co.base = closure_options(e, opts);
      co.k_override = e.k;
      co.k_cap = opts.k_cap;
      ColonPowersResult r = closure_via_colon_powers(I, co);
      result["k"] = r.k;
      result["certified"] = r.certified;
      result["certified_k"] = r.certified_k.get_str();
      result["f_value"] = r.f_value.get_str();
      result["e"] = r.e;
      result["closure"] = ideal_json(r.closure);
      result["is_closed"] = r.closure == I;
      break;
    }
  }
  result["seconds"] =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  doc["result"] = result;
  return doc;
}

std::string render_text(const Json& doc) {
  std::string out;
  const Json& r = doc["result"];
  const std::string cmd = doc["command"].get<std::string>();
  line(out, "command", cmd);
  line(out, "ring", ring_text(doc["ring"]));
  line(out, "mode", doc["provenance"]["mode"].get<std::string>());
  line(out, "input", join(doc["input"]["generators"]));
  line(out, "input colength", doc["input"]["colength"].dump());

  if (cmd == "closure" || cmd == "check-closed") {
    render_closure(out, r);
  } else if (cmd == "closure-power") {
    line(out, "power", r["power"].dump());
    line(out, "power generators", r["power_ideal"]["generator_count"].dump());
    line(out, "power colength", r["power_ideal"]["colength"].dump());
    render_closure(out, r);
  } else if (cmd == "poincare") {
    render_poincare(out, r["poincare"], "");
    line(out, "d", r["poincare"]["d_effective"].dump());
  } else if (cmd == "hilbert") {
    for (std::size_t i = 0; i < r["values"].size(); ++i)
      line(out, "h(" + std::to_string(i) + ")", r["values"][i].dump());
  } else if (cmd == "reduction") {
    line(out, "e0", r["e0"].dump());
    line(out, "reduction", join(r["reduction"]["elements"]));
    line(out, "reduction source", r["reduction"]["source"].get<std::string>());
    line(out, "reduction colength", r["reduction"]["colength"].dump());
    line(out, "reduction number", r["reduction_number"].dump());
    line(out, "f(e0, d)", r["f_bound"].get<std::string>());
  } else if (cmd == "colon-powers") {
    line(out, "k", r["k"].dump());
    line(out, "certified", r["certified"].get<bool>() ? "true" : "false");
    line(out, "certified k", r["certified_k"].get<std::string>());
    line(out, "f(e, d)", r["f_value"].get<std::string>());
    line(out, "closure", join(r["closure"]["generators"]));
    line(out, "closure colength", r["closure"]["colength"].dump());
    line(out, "closed", r["is_closed"].get<bool>() ? "true" : "false");
  }
  return out;
}

std::string cache_key(const Problem& problem, const RunOptions& opts) {
  const Effective e = effective(problem, opts);
  const Ring& ring = *problem.ring;
  std::string key = "rrclosure/" + std::to_string(kSchemaVersion) + "\n";
  key += "field=" + ring.field().descriptor() + "\n";
  key += "vars=";
  for (const auto& v : ring.variables()) key += v + ",";
  key += "\norder=" + ring.order().name() + "\nbasis=";
  const Ideal I = problem.ideal();
  for (const auto& g : I.basis().elements()) key += g.to_string() + ";";
  key += "\ncommand=" + std::string(command_name(opts.command));
  key += "\nmode=" + std::string(mode_name(e.mode));
  key += "\nseed=" + std::to_string(e.seed);
  key += "\nk=" + (e.k ? std::to_string(*e.k) : "-");
  key += "\nn=" + (opts.n ? std::to_string(*opts.n) : "-");
  key += "\nreduction=";
  if (e.reduction)
    for (const auto& x : *e.reduction) key += x.to_string() + ";";
  key += "\nbound_cap=" + std::to_string(opts.bound_cap);
  key += "\nr_max=" + std::to_string(opts.r_max);
  key += "\nk_cap=" + std::to_string(opts.k_cap) + "\n";
  return key;
}

}  // namespace rrc
