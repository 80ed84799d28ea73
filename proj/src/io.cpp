#include "inscribe/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace inscribe {

using nlohmann::json;

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw InputError("malformed file: expected [re, im] pair");
  return {j[0].get<double>(), j[1].get<double>()};
}

json parse(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw InputError("malformed file: not valid JSON");
  return j;
}

PeriodicCurve curve_from_json(const json& j) {
  if (!j.is_object() || !j.contains("type") || !j["type"].is_string())
    throw InputError("malformed curve: missing \"type\"");
  const std::string type = j["type"].get<std::string>();
  try {
    if (type == "vertical") {
      if (!j.contains("alpha") || !j["alpha"].is_number())
        throw InputError("malformed curve: vertical needs numeric \"alpha\"");
      return PeriodicCurve::vertical(j["alpha"].get<double>());
    }
    if (type == "fourier") {
      if (!j.contains("coeffs") || !j["coeffs"].is_array() || j["coeffs"].empty())
        throw InputError("malformed curve: fourier needs \"coeffs\"");
      const int kmin = j.value("kmin", -(static_cast<int>(j["coeffs"].size()) - 1) / 2);
      std::vector<Complex> coeffs;
      for (const auto& item : j["coeffs"]) coeffs.push_back(complex_from_json(item));
      return PeriodicCurve::fourier(kmin, std::move(coeffs));
    }
    if (type == "polyline") {
      if (!j.contains("samples") || !j["samples"].is_array())
        throw InputError("malformed curve: polyline needs \"samples\"");
      std::vector<Complex> samples;
      for (const auto& item : j["samples"]) samples.push_back(complex_from_json(item));
      return PeriodicCurve::polyline(std::move(samples));
    }
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("invalid curve: ") + e.what());
  }
  throw InputError("malformed curve: unknown type \"" + type + "\"");
}

json curve_to_json(const PeriodicCurve& curve) {
  json j;
  if (const auto* v = std::get_if<VerticalLine>(&curve.rep())) {
    j["type"] = "vertical";
    j["alpha"] = v->alpha;
  } else if (const auto* f = std::get_if<FourierSeries>(&curve.rep())) {
    j["type"] = "fourier";
    j["kmin"] = f->kmin;
    json coeffs = json::array();
    for (const Complex& c : f->coeffs) coeffs.push_back(complex_to_json(c));
    j["coeffs"] = std::move(coeffs);
  } else {
    const auto& p = std::get<Polyline>(curve.rep());
    j["type"] = "polyline";
    json samples = json::array();
    for (const Complex& s : p.samples) samples.push_back(complex_to_json(s));
    j["samples"] = std::move(samples);
  }
  return j;
}

json inscription_to_json(const Inscription& ins) {
  json j;
  j["t"] = json::array({ins.params.t1, ins.params.t2, ins.params.t3, ins.params.t4});
  j["z"] = complex_to_json(ins.z);
  j["w"] = complex_to_json(ins.w);
  json verts = json::array();
  for (const Complex& v : ins.vertices) verts.push_back(complex_to_json(v));
  j["vertices"] = std::move(verts);
  j["residual_norm"] = ins.residual_norm;
  j["jac_min_singular_value"] = ins.jac_min_singular_value;
  j["family"] = ins.family;
  if (ins.family) {
    j["family_samples"] = ins.family_samples;
    j["family_span"] = ins.family_span;
  }
  return j;
}

Inscription inscription_from_json(const json& j) {
  Inscription ins;
  const auto& t = j.at("t");
  ins.params = {t.at(0).get<double>(), t.at(1).get<double>(), t.at(2).get<double>(),
                t.at(3).get<double>()};
  ins.z = complex_from_json(j.at("z"));
  ins.w = complex_from_json(j.at("w"));
  for (int i = 0; i < 4; ++i) ins.vertices[i] = complex_from_json(j.at("vertices").at(i));
  ins.residual_norm = j.value("residual_norm", 0.0);
  ins.jac_min_singular_value = j.value("jac_min_singular_value", 0.0);
  ins.family = j.value("family", false);
  ins.family_samples = j.value("family_samples", 0);
  ins.family_span = j.value("family_span", 0.0);
  return ins;
}

}  // namespace

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open file: " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << content;
}

PeriodicCurve curve_from_json_text(const std::string& text) {
  return curve_from_json(parse(text));
}

std::string curve_to_json_text(const PeriodicCurve& curve) {
  return curve_to_json(curve).dump(2) + "\n";
}

CurvePair pair_from_json_text(const std::string& text, bool validate, double tol) {
  const json j = parse(text);
  if (!j.is_object() || !j.contains("gamma1") || !j.contains("gamma2"))
    throw InputError("malformed pair file: needs \"gamma1\" and \"gamma2\"");
  CurvePair pair{curve_from_json(j["gamma1"]), curve_from_json(j["gamma2"])};
  if (validate) {
    if (!is_embedded(pair.gamma1, tol)) throw InputError("curve gamma1 not embedded");
    if (!is_embedded(pair.gamma2, tol)) throw InputError("curve gamma2 not embedded");
    if (!is_disjoint(pair.gamma1, pair.gamma2, tol)) throw InputError("curves not disjoint");
  }
  return pair;
}

CurvePair load_pair_file(const std::string& path, bool validate, double tol) {
  return pair_from_json_text(read_text_file(path), validate, tol);
}

std::string pair_to_json_text(const CurvePair& pair) {
  json j;
  j["gamma1"] = curve_to_json(pair.gamma1);
  j["gamma2"] = curve_to_json(pair.gamma2);
  return j.dump(2) + "\n";
}

QuadSimilarityType quad_from_json_text(const std::string& text) {
  const json j = parse(text);
  if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array() ||
      j["vertices"].size() != 4)
    throw InputError("malformed quad file: needs \"vertices\" with four [x, y] entries");
  std::array<Complex, 4> v;
  for (int i = 0; i < 4; ++i) v[i] = complex_from_json(j["vertices"][i]);
  try {
    return QuadSimilarityType::from_vertices(v[0], v[1], v[2], v[3]);
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("invalid quad type: ") + e.what());
  }
}

QuadSimilarityType load_quad_file(const std::string& path) {
  return quad_from_json_text(read_text_file(path));
}

std::string inscriptions_to_json_text(const std::vector<Inscription>& inscriptions,
                                      const SolveDiagnostics& diagnostics) {
  json j;
  j["count"] = inscriptions.size();
  json rows = json::array();
  for (const auto& ins : inscriptions) rows.push_back(inscription_to_json(ins));
  j["inscriptions"] = std::move(rows);
  j["diagnostics"] = {{"strip_halfwidth", diagnostics.strip_halfwidth},
                      {"w_max", diagnostics.w_max},
                      {"window_halfwidth", diagnostics.window_halfwidth},
                      {"seeds", diagnostics.seeds},
                      {"converged", diagnostics.converged},
                      {"bound_violations", diagnostics.bound_violations},
                      {"theorem_violation", diagnostics.theorem_violation}};
  return j.dump(2) + "\n";
}

std::vector<Inscription> inscriptions_from_json_text(const std::string& text) {
  const json j = parse(text);
  if (!j.contains("inscriptions") || !j["inscriptions"].is_array())
    throw InputError("malformed inscriptions file: needs \"inscriptions\"");
  std::vector<Inscription> out;
  try {
    for (const auto& row : j["inscriptions"]) out.push_back(inscription_from_json(row));
  } catch (const json::exception&) {
    throw InputError("malformed inscriptions file: bad inscription entry");
  }
  return out;
}

std::string inscriptions_to_csv_text(const std::vector<Inscription>& inscriptions) {
  std::string out =
      "t1,t2,t3,t4,z_re,z_im,w_re,w_im,p1_re,p1_im,p2_re,p2_im,p3_re,p3_im,p4_re,p4_im,"
      "residual_norm,jac_min_singular_value,family,family_samples,family_span\n";
  for (const auto& ins : inscriptions) {
    out += fmt(ins.params.t1) + "," + fmt(ins.params.t2) + "," + fmt(ins.params.t3) + "," +
           fmt(ins.params.t4) + "," + fmt(ins.z.real()) + "," + fmt(ins.z.imag()) + "," +
           fmt(ins.w.real()) + "," + fmt(ins.w.imag());
    for (const Complex& v : ins.vertices) out += "," + fmt(v.real()) + "," + fmt(v.imag());
    out += "," + fmt(ins.residual_norm) + "," + fmt(ins.jac_min_singular_value) + "," +
           (ins.family ? std::string("1") : std::string("0")) + "," +
           std::to_string(ins.family_samples) + "," + fmt(ins.family_span) + "\n";
  }
  return out;
}

std::string sweep_report_to_json_text(const SweepReport& report) {
  json j;
  j["pair_seed"] = report.pair_seed;
  j["strip_halfwidth"] = report.strip_halfwidth;
  j["c_values"] = report.c_values;
  j["theta_values"] = report.theta_values;
  json cells = json::array();
  for (const auto& cell : report.cells) {
    json c = {{"c", cell.c},
              {"theta", cell.theta},
              {"count", cell.count},
              {"transverse_count", cell.transverse_count},
              {"all_transverse", cell.all_transverse},
              {"family_present", cell.family_present},
              {"min_residual", cell.min_residual},
              {"min_singular", cell.min_singular}};
    if (cell.solver_error) c["error"] = cell.error;
    cells.push_back(std::move(c));
  }
  j["cells"] = std::move(cells);
  return j.dump(2) + "\n";
}

std::string sweep_report_to_csv_text(const SweepReport& report) {
  std::string out =
      "c,theta,count,transverse_count,all_transverse,family_present,min_residual,min_singular,"
      "error\n";
  for (const auto& cell : report.cells) {
    out += fmt(cell.c) + "," + fmt(cell.theta) + "," + std::to_string(cell.count) + "," +
           std::to_string(cell.transverse_count) + "," + (cell.all_transverse ? "1" : "0") + "," +
           (cell.family_present ? "1" : "0") + "," + fmt(cell.min_residual) + "," +
           fmt(cell.min_singular) + "," + cell.error + "\n";
  }
  return out;
}

std::string convergence_report_to_json_text(const ConvergenceReport& report) {
  json j;
  j["theorem_violation"] = report.theorem_violation;
  json stages = json::array();
  for (const auto& st : report.stages) {
    json s = {{"sigma", st.stage.sigma},
              {"kmax", st.stage.kmax},
              {"solved", st.solved},
              {"count", st.inscriptions.size()}};
    if (!st.error.empty()) s["error"] = st.error;
    json rows = json::array();
    for (const auto& ins : st.inscriptions) rows.push_back(inscription_to_json(ins));
    s["inscriptions"] = std::move(rows);
    stages.push_back(std::move(s));
  }
  j["stages"] = std::move(stages);
  json limits = json::array();
  for (const auto& lim : report.limits) {
    json l;
    l["drifts"] = lim.drifts;
    l["final_drift"] = lim.final_drift;
    l["cauchy"] = lim.cauchy;
    l["final_inscription"] = inscription_to_json(lim.final_inscription);
    json verts = json::array();
    for (const Complex& v : lim.limit_vertices) verts.push_back(complex_to_json(v));
    l["limit_vertices"] = std::move(verts);
    l["limit_class"] = {{"ok", lim.limit_class.ok},
                        {"c", lim.limit_class.c},
                        {"theta", lim.limit_class.theta},
                        {"balanced", lim.limit_class.balanced},
                        {"reason", lim.limit_class.reason}};
    limits.push_back(std::move(l));
  }
  j["limits"] = std::move(limits);
  return j.dump(2) + "\n";
}

std::string convergence_report_to_csv_text(const ConvergenceReport& report) {
  std::string out = "stage,sigma,kmax,solved,count,error\n";
  for (std::size_t i = 0; i < report.stages.size(); ++i) {
    const auto& st = report.stages[i];
    out += std::to_string(i) + "," + fmt(st.stage.sigma) + "," + std::to_string(st.stage.kmax) +
           "," + (st.solved ? "1" : "0") + "," + std::to_string(st.inscriptions.size()) + "," +
           st.error + "\n";
  }
  return out;
}

std::string conjecture_report_to_json_text(const ConjectureReport& report) {
  json j;
  json ref = json::array();
  for (const Complex& v : report.reference) ref.push_back(complex_to_json(v));
  j["reference"] = std::move(ref);
  j["trials"] = report.trials;
  j["zero_inscription_trials"] = report.zero_inscription_trials;
  json rows = json::array();
  for (const auto& row : report.rows) {
    json r = {{"seed", row.seed}, {"count", row.count}, {"min_residual", row.min_residual}};
    if (row.solver_error) r["error"] = row.error;
    rows.push_back(std::move(r));
  }
  j["rows"] = std::move(rows);
  return j.dump(2) + "\n";
}

std::string conjecture_report_to_csv_text(const ConjectureReport& report) {
  std::string out = "seed,count,min_residual,error\n";
  for (const auto& row : report.rows)
    out += std::to_string(row.seed) + "," + std::to_string(row.count) + "," +
           fmt(row.min_residual) + "," + row.error + "\n";
  return out;
}

SolveConfig config_from_json_text(const std::string& text, SolveConfig base) {
  const json j = parse(text);
  if (!j.is_object()) throw InputError("malformed config: expected a JSON object");
  auto get_int = [&](const char* key, int& slot) {
    if (j.contains(key)) {
      if (!j[key].is_number_integer()) throw InputError(std::string("config: ") + key);
      slot = j[key].get<int>();
    }
  };
  auto get_double = [&](const char* key, double& slot) {
    if (j.contains(key)) {
      if (!j[key].is_number()) throw InputError(std::string("config: ") + key);
      slot = j[key].get<double>();
    }
  };
  get_int("grid_per_unit", base.grid_per_unit);
  get_double("newton_tol", base.newton_tol);
  get_int("newton_max_iter", base.newton_max_iter);
  get_double("dedup_tol", base.dedup_tol);
  get_double("max_param_window", base.max_param_window);
  get_int("scan_per_unit", base.scan_per_unit);
  get_double("degenerate_tol", base.degenerate_tol);
  if (j.contains("use_grid_seeding")) {
    if (!j["use_grid_seeding"].is_boolean()) throw InputError("config: use_grid_seeding");
    base.use_grid_seeding = j["use_grid_seeding"].get<bool>();
  }
  try {
    base.validate();
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("invalid config: ") + e.what());
  }
  return base;
}

SolveConfig load_config_file(const std::string& path, SolveConfig base) {
  return config_from_json_text(read_text_file(path), base);
}

}  // namespace inscribe
