#include "runner.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <ostream>
#include <sstream>

#include "hbl/boundary_diagnostics.hpp"
#include "hbl/conformal_invariants.hpp"
#include "hbl/errors.hpp"
#include "hbl/hyperbolic.hpp"
#include "hbl/koebe.hpp"
#include "hbl/local_expansion.hpp"
#include "hbl/ring_capacity.hpp"
#include "parallel.hpp"

namespace hbl::cli {

namespace {

json num(double x) {
  if (std::isfinite(x)) return x;
  return format_double(x);
}

json cnum(Complex z) { return json::array({num(z.real()), num(z.imag())}); }

class Csv {
 public:
  explicit Csv(std::initializer_list<const char*> columns) {
    text_ += "schema_version";
    for (const char* c : columns) {
      text_ += ',';
      text_ += c;
    }
    text_ += '\n';
  }

  Csv& row() {
    text_ += std::to_string(kSchemaVersion);
    return *this;
  }
  Csv& operator<<(double x) {
    text_ += ',';
    text_ += format_double(x);
    return *this;
  }
  Csv& operator<<(Complex z) { return *this << z.real() << z.imag(); }
  Csv& operator<<(int x) {
    text_ += ',';
    text_ += std::to_string(x);
    return *this;
  }
  Csv& operator<<(const std::string& s) {
    text_ += ',';
    text_ += s;
    return *this;
  }
  Csv& operator<<(const char* s) { return *this << std::string(s); }
  void end() { text_ += '\n'; }

  std::string str() const { return text_; }

 private:
  std::string text_;
};

const char* method_name(CapacityMethod m) {
  switch (m) {
    case CapacityMethod::closed_form: return "closed-form";
    case CapacityMethod::elliptic: return "elliptic";
    case CapacityMethod::grid_oracle: return "grid-oracle";
  }
  return "closed-form";
}

Complex complex_at(const json& v) {
  if (v.is_number()) return {v.get<double>(), 0.0};
  return {v[0].get<double>(), v[1].get<double>()};
}

LmOptions lm_options(const Thresholds& t) {
  LmOptions o;
  o.slope_threshold = t.slope;
  o.cauchy_tolerance = t.cauchy;
  o.fit_tolerance = t.fit;
  return o;
}

json lm_json(const LmEstimate& e) {
  json partial = json::array();
  for (const auto& [d, v] : e.partial_values) partial.push_back(json::array({num(d), num(v)}));
  return json{{"zeta_angle", num(e.zeta_angle)},
              {"m", num(e.m)},
              {"verdict", to_string(e.verdict.cls)},
              {"limit_or_rate", num(e.verdict.limit_or_rate)},
              {"slope", num(e.verdict.slope)},
              {"fit_residual", num(e.verdict.fit_residual)},
              {"tail_estimate", num(e.verdict.tail_estimate)},
              {"conclusion", e.conclusion},
              {"partial_values", partial}};
}

RunOutput run_map_eval(const ScenarioConfig& c, unsigned threads) {
  const auto& f = *c.map;
  const auto values = parallel_map<Complex>(c.points.size(), threads,
                                            [&](std::size_t k) { return eval_map(f, c.points[k]); });
  Csv csv{"z_re", "z_im", "f_re", "f_im"};
  json rows = json::array();
  for (std::size_t k = 0; k < values.size(); ++k) {
    rows.push_back(json{{"z", cnum(c.points[k])}, {"f", cnum(values[k])}});
    csv.row() << c.points[k] << values[k];
    csv.end();
  }
  return {json{{"points", rows}}, csv.str()};
}

RunOutput run_dilatation(const ScenarioConfig& c, unsigned threads) {
  const auto& f = *c.map;
  struct Row {
    Partials p;
    DilatationReport d;
  };
  const auto rows_data = parallel_map<Row>(c.points.size(), threads, [&](std::size_t k) {
    return Row{partials(f, c.points[k]), dilatation(f, c.points[k])};
  });
  Csv csv{"z_re", "z_im", "h_prime_re", "h_prime_im", "g_prime_re", "g_prime_im",
          "a_f_re", "a_f_im", "nu_f_re", "nu_f_im", "D_f", "jacobian"};
  json rows = json::array();
  for (std::size_t k = 0; k < rows_data.size(); ++k) {
    const auto& r = rows_data[k];
    rows.push_back(json{{"z", cnum(c.points[k])},
                        {"h_prime", cnum(r.p.h_prime)},
                        {"g_prime", cnum(r.p.g_prime)},
                        {"a_f", cnum(r.d.a_f)},
                        {"nu_f", cnum(r.d.nu_f)},
                        {"D_f", num(r.d.D_f)},
                        {"jacobian", num(r.d.jacobian)}});
    csv.row() << c.points[k] << r.p.h_prime << r.p.g_prime << r.d.a_f << r.d.nu_f << r.d.D_f
              << r.d.jacobian;
    csv.end();
  }
  return {json{{"points", rows}}, csv.str()};
}

RunOutput run_lm_scan(const ScenarioConfig& c, unsigned threads) {
  const std::size_t nz = c.zeta_angles.size();
  const std::size_t nm = c.m_values.size();
  const LmOptions opts = lm_options(c.thresholds);
  const auto cells = parallel_map<LmEstimate>(nz * nm, threads, [&](std::size_t k) {
    return lm_classify(*c.dilatation, c.zeta_angles[k / nm], c.m_values[k % nm], c.delta_schedule, opts);
  });
  Csv csv{"zeta_angle", "m", "delta", "value", "verdict"};
  json out_cells = json::array();
  json summary = json::array();
  for (std::size_t z = 0; z < nz; ++z) {
    bool all_divergent = true;
    for (std::size_t m = 0; m < nm; ++m) {
      const auto& e = cells[z * nm + m];
      out_cells.push_back(lm_json(e));
      if (e.verdict.cls != DivergenceClass::divergent) all_divergent = false;
      for (const auto& [d, v] : e.partial_values) {
        csv.row() << e.zeta_angle << e.m << d << v << to_string(e.verdict.cls);
        csv.end();
      }
    }
    const double m_max = *std::max_element(c.m_values.begin(), c.m_values.end());
    std::string conclusion;
    if (all_divergent && m_max < 1.0 / kPi)
      conclusion = "L(m) divergent at every tested m < 1/pi: continuity of f* at zeta forced";
    else if (all_divergent)
      conclusion = "L(m) divergent at every tested m; the criterion needs m < 1/pi";
    else
      conclusion = "not every tested m gives a divergent L(m); no continuity conclusion";
    summary.push_back(json{{"zeta_angle", num(c.zeta_angles[z])},
                           {"divergent_for_all_m", all_divergent},
                           {"conclusion", conclusion}});
  }
  return {json{{"cells", out_cells}, {"summary", summary}}, csv.str()};
}

RunOutput run_blw(const ScenarioConfig& c, unsigned threads) {
  BlwOptions o;
  o.zero_tolerance = c.thresholds.blw;
  o.stabilization = c.thresholds.blw_stabilization;
  const auto trends = parallel_map<BlwTrend>(c.zeta_angles.size(), threads, [&](std::size_t k) {
    return blw_radial(*c.map, c.zeta_angles[k], c.radii, o);
  });
  Csv csv{"zeta_angle", "r", "value", "verdict"};
  json rows = json::array();
  for (std::size_t k = 0; k < trends.size(); ++k) {
    const auto& t = trends[k];
    json values = json::array();
    for (std::size_t i = 0; i < t.radii.size(); ++i) {
      values.push_back(json::array({num(t.radii[i]), num(t.values[i])}));
      csv.row() << c.zeta_angles[k] << t.radii[i] << t.values[i] << to_string(t.verdict);
      csv.end();
    }
    rows.push_back(json{{"zeta_angle", num(c.zeta_angles[k])},
                        {"verdict", to_string(t.verdict)},
                        {"c_estimate", num(t.c_estimate)},
                        {"values", values}});
  }
  return {json{{"points", rows}}, csv.str()};
}

RunOutput run_area(const ScenarioConfig& c) {
  const auto a = area_integral(*c.map, c.resolution);
  Csv csv{"resolution", "area", "coarse_area", "error_estimate", "negative_cells"};
  csv.row() << c.resolution << a.area << a.coarse_area << a.error_estimate
            << static_cast<int>(a.negative_cells);
  csv.end();
  json r{{"resolution", c.resolution},
         {"area", num(a.area)},
         {"coarse_area", num(a.coarse_area)},
         {"error_estimate", num(a.error_estimate)},
         {"negative_cells", a.negative_cells}};
  if (a.negative_cells > 0) r["warning"] = "negative Jacobian at some nodes: sense reversal";
  return {r, csv.str()};
}

RunOutput run_thm54(const ScenarioConfig& c) {
  Thm54Options o;
  o.delta_schedule = c.delta_schedule;
  o.lm = lm_options(c.thresholds);
  o.area_resolution = c.resolution;
  const double zeta = c.zeta_angles.front();
  const auto r = thm54_check(*c.map, zeta, c.m_values, c.compact_margin, o);
  Csv csv{"zeta_angle", "m", "verdict", "l_value"};
  json per_m = json::array();
  for (const auto& e : r.per_m) {
    const double value = e.verdict.cls == DivergenceClass::convergent ? e.verdict.limit_or_rate
                                                                        : e.partial_values.back().second;
    per_m.push_back(json{{"m", num(e.m)}, {"verdict", to_string(e.verdict.cls)}, {"l_value", num(value)}});
    csv.row() << zeta << e.m << to_string(e.verdict.cls) << value;
    csv.end();
  }
  json doc{{"zeta_angle", num(zeta)},
           {"area", num(r.area)},
           {"H", num(r.H)},
           {"integral_L", num(r.integral_L)},
           {"rhs", num(r.rhs)},
           {"inequality_holds", r.inequality_holds},
           {"divergent_short_circuit", r.divergent_short_circuit},
           {"conclusion", r.conclusion},
           {"per_m", per_m}};
  return {doc, csv.str()};
}

RunOutput run_koebe(const ScenarioConfig& c) {
  KoebeOptions o;
  o.certificate = c.thresholds.koebe_certificate;
  const auto rep = koebe_quantity(c.koebe_items, o);
  const auto second = koebe_quantity_second_form(c.koebe_items);
  Csv csv{"index", "r", "log_inv_M", "diameter", "q", "modulus_lower", "modulus_upper", "K",
          "second_form"};
  json items = json::array();
  for (std::size_t k = 0; k < rep.items.size(); ++k) {
    const auto& it = rep.items[k];
    const auto& src = c.koebe_items[k];
    items.push_back(json{{"index", k},
                         {"r", num(src.r())},
                         {"log_inv_M", num(src.log_inv_M())},
                         {"diameter", num(it.diameter)},
                         {"q", num(it.q)},
                         {"modulus_lower", num(it.modulus_lower)},
                         {"modulus_upper", num(it.modulus_upper)},
                         {"K", num(it.K)},
                         {"second_form", num(second[k].value)},
                         {"second_form_inequality", second[k].inequality_holds},
                         {"second_form_degenerate", second[k].degenerate}});
    csv.row() << static_cast<int>(k) << src.r() << src.log_inv_M() << it.diameter << it.q
              << it.modulus_lower << it.modulus_upper << it.K << second[k].value;
    csv.end();
  }
  json doc{{"trend", to_string(rep.trend)},
           {"sup_q", num(rep.sup_q)},
           {"certificate", num(rep.certificate)},
           {"conclusion", rep.conclusion},
           {"items", items}};
  return {doc, csv.str()};
}

RunOutput run_vanishing(const ScenarioConfig& c) {
  VanishingOptions o;
  o.zero_tolerance = c.thresholds.vanishing;
  const auto rep = vanishing_criterion(*c.zeros, o);
  Csv csv{"index", "b_re", "b_im", "multiplicity", "term"};
  json terms = json::array();
  for (std::size_t k = 0; k < rep.terms.size(); ++k) {
    terms.push_back(num(rep.terms[k]));
    csv.row() << static_cast<int>(k) << c.zeros->points[k] << c.zeros->multiplicities[k] << rep.terms[k];
    csv.end();
  }
  json doc{{"constant", num(c.zeros->constant)},
           {"tends_to_zero", rep.tends_to_zero},
           {"last_quartile_max", num(rep.last_quartile_max)},
           {"eventually_decreasing", rep.eventually_decreasing},
           {"conclusion", rep.conclusion},
           {"terms", terms}};
  return {doc, csv.str()};
}

RunOutput run_capacity(const ScenarioConfig& c) {
  const json& s = c.capacity;
  const std::string fn = s["function"].get<std::string>();
  json doc{{"function", fn}};
  Csv csv{"function", "value", "method", "error_estimate"};
  auto put = [&](const CapacityResult& r) {
    doc["value"] = num(r.value);
    doc["method"] = method_name(r.method);
    doc["error_estimate"] = num(r.error_estimate);
    csv.row() << fn << r.value << method_name(r.method) << r.error_estimate;
    csv.end();
  };
  if (fn == "tau2") {
    doc["s"] = s["s"];
    put(tau2(s["s"].get<double>()));
  } else if (fn == "gamma2") {
    doc["s"] = s["s"];
    put(gamma2(s["s"].get<double>()));
  } else if (fn == "mu") {
    doc["r"] = s["r"];
    CapacityResult r;
    r.value = grotzsch_mu(s["r"].get<double>());
    r.method = CapacityMethod::elliptic;
    put(r);
  } else if (fn == "annulus") {
    put(annulus_modulus(s["inner"].get<double>(), s["outer"].get<double>()));
  } else if (fn == "ring") {
    RingDomainSpec spec;
    spec.inner.radius = s.value("inner_radius", 1.0);
    spec.grid_resolution = s.value("resolution", 512);
    const json& o = s["outer"];
    if (o.contains("circle")) {
      spec.outer = OuterCircle{o["circle"].get<double>()};
    } else {
      OuterRay ray;
      ray.start = o["ray"]["start"].get<double>();
      ray.angle = o["ray"].value("angle", 0.0);
      ray.truncation_radius = o["ray"].value("truncation_radius", ray.truncation_radius);
      spec.outer = ray;
    }
    const auto r = ring_capacity_numeric(spec);
    put(r);
    doc["coarse_value"] = num(r.coarse_value);
    doc["truncation_radius"] = num(r.truncation_radius);
    if (std::holds_alternative<OuterRay>(spec.outer)) doc["truncation_upper"] = num(r.truncation_upper);
    doc["iterations"] = r.iterations;
    doc["residual"] = num(r.residual);
  } else if (fn == "lemma_b") {
    std::vector<Complex> pts;
    for (const auto& v : s["continuum"]) pts.push_back(complex_at(v));
    const auto m = ContinuumMetrics::of_polyline(pts);
    CapacityResult r;
    r.value = lemma_b_bound(m);
    r.method = CapacityMethod::elliptic;
    put(r);
    doc["diameter"] = num(m.diameter);
    doc["distance_to_origin"] = num(m.distance_to_origin);
  } else if (fn == "qc_bounds") {
    const auto [lo, hi] = qc_modulus_bounds(s["K"].get<double>(), s["modulus"].get<double>());
    doc["lower"] = num(lo);
    doc["upper"] = num(hi);
    Csv bounds{"function", "lower", "upper"};
    bounds.row() << fn << lo << hi;
    bounds.end();
    return {doc, bounds.str()};
  }
  return {doc, csv.str()};
}

RunOutput run_hyperbolic(const ScenarioConfig& c) {
  const json& s = c.hyperbolic;
  const std::string fn = s["function"].get<std::string>();
  json doc{{"function", fn}};
  Csv csv{"function", "quantity", "value"};
  auto put = [&](const char* key, double v) {
    doc[key] = num(v);
    csv.row() << fn << key << v;
    csv.end();
  };
  if (fn == "dist_halfplane") {
    put("distance", dist_halfplane(complex_at(s["z1"]), complex_at(s["z2"])));
  } else if (fn == "dist_disk") {
    put("distance", dist_disk(complex_at(s["z1"]), complex_at(s["z2"])));
  } else if (fn == "claim41") {
    const auto r = claim41_check(complex_at(s["b"]), s.value("constant", 10.0));
    put("radius_bound", r.radius_bound);
    put("distance", r.distance);
    doc["contains_i"] = r.contains_i;
    csv.row() << fn << "contains_i" << (r.contains_i ? "true" : "false");
    csv.end();
  } else if (fn == "disk_euclidean") {
    HyperbolicDisk d;
    d.center = complex_at(s["center"]);
    d.radius = s["radius"].get<double>();
    d.domain = s.value("domain", std::string("disk")) == "disk" ? Domain::disk : Domain::half_plane;
    const auto e = hyperbolic_disk_euclidean(d);
    doc["euclidean_center"] = cnum(e.center);
    csv.row() << fn << "euclidean_center_re" << e.center.real();
    csv.end();
    csv.row() << fn << "euclidean_center_im" << e.center.imag();
    csv.end();
    put("euclidean_radius", e.radius);
  }
  return {doc, csv.str()};
}

RunOutput run_cluster(const ScenarioConfig& c, unsigned threads) {
  const Approach approach = c.approach == "radial" ? Approach::radial : Approach::tangential_fan;
  const auto samples = parallel_map<ClusterSample>(c.zeta_angles.size(), threads, [&](std::size_t k) {
    return cluster_sample(*c.map, c.zeta_angles[k], approach, c.samples);
  });
  Csv csv{"zeta_angle", "kind", "index", "re", "im"};
  json rows = json::array();
  for (std::size_t k = 0; k < samples.size(); ++k) {
    const auto& s = samples[k];
    json pts = json::array();
    json ends = json::array();
    for (std::size_t i = 0; i < s.points.size(); ++i) {
      pts.push_back(cnum(s.points[i]));
      csv.row() << c.zeta_angles[k] << "point" << static_cast<int>(i) << s.points[i];
      csv.end();
    }
    for (std::size_t i = 0; i < s.endpoints.size(); ++i) {
      ends.push_back(cnum(s.endpoints[i]));
      csv.row() << c.zeta_angles[k] << "endpoint" << static_cast<int>(i) << s.endpoints[i];
      csv.end();
    }
    json row{{"zeta_angle", num(c.zeta_angles[k])}, {"approach", to_string(approach)}};
    if (s.reference_segment) {
      row["reference_segment"] =
          json::array({cnum(s.reference_segment->first), cnum(s.reference_segment->second)});
      row["max_distance"] = num(*s.max_distance);
      row["coverage_gap"] = num(*s.coverage_gap);
    }
    row["endpoints"] = ends;
    row["points"] = pts;
    rows.push_back(row);
  }
  return {json{{"clusters", rows}}, csv.str()};
}

RunOutput run_multiplicity(const ScenarioConfig& c, unsigned threads) {
  const auto results = parallel_map<MultiplicityResult>(c.points.size(), threads, [&](std::size_t k) {
    return multiplicity(*c.map, c.points[k], c.tolerance);
  });
  Csv csv{"z_re", "z_im", "order", "analytic_order", "coanalytic_order", "sense_reversing_zero"};
  json rows = json::array();
  auto opt = [](const std::optional<int>& v) { return v ? json(*v) : json(nullptr); };
  for (std::size_t k = 0; k < results.size(); ++k) {
    const auto& r = results[k];
    json a = json::array();
    json b = json::array();
    for (Complex x : r.analytic_coefficients) a.push_back(cnum(x));
    for (Complex x : r.coanalytic_coefficients) b.push_back(cnum(x));
    rows.push_back(json{{"z", cnum(c.points[k])},
                        {"order", r.order},
                        {"analytic_order", opt(r.analytic_order)},
                        {"coanalytic_order", opt(r.coanalytic_order)},
                        {"sense_reversing_zero", r.sense_reversing_zero},
                        {"tolerance_used", num(r.tolerance_used)},
                        {"radius", num(r.radius)},
                        {"analytic_coefficients", a},
                        {"coanalytic_coefficients", b}});
    csv.row() << c.points[k] << r.order << (r.analytic_order ? std::to_string(*r.analytic_order) : "")
              << (r.coanalytic_order ? std::to_string(*r.coanalytic_order) : "")
              << (r.sense_reversing_zero ? "true" : "false");
    csv.end();
  }
  return {json{{"points", rows}}, csv.str()};
}

std::string utc_timestamp() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

RunOutput run(const ScenarioConfig& c, const RunOptions& options) {
  const unsigned threads = std::max(1u, options.threads);
  RunOutput r;
  const std::string& cmd = c.command;
  if (cmd == "map-eval")
    r = run_map_eval(c, threads);
  else if (cmd == "dilatation")
    r = run_dilatation(c, threads);
  else if (cmd == "lm-scan")
    r = run_lm_scan(c, threads);
  else if (cmd == "blw")
    r = run_blw(c, threads);
  else if (cmd == "area")
    r = run_area(c);
  else if (cmd == "thm54")
    r = run_thm54(c);
  else if (cmd == "koebe")
    r = run_koebe(c);
  else if (cmd == "vanishing")
    r = run_vanishing(c);
  else if (cmd == "capacity")
    r = run_capacity(c);
  else if (cmd == "hyperbolic")
    r = run_hyperbolic(c);
  else if (cmd == "cluster")
    r = run_cluster(c, threads);
  else if (cmd == "multiplicity")
    r = run_multiplicity(c, threads);
  else
    throw InvalidArgument("unknown command " + cmd);

  json meta{{"tool", "hbl"}, {"version", HBL_VERSION}};
  if (!options.reproducible) meta["generated_at"] = utc_timestamp();
  r.document = json{{"schema_version", kSchemaVersion},
                    {"command", cmd},
                    {"metadata", meta},
                    {"config", c.source},
                    {"result", std::move(r.document)}};
  return r;
}

int execute(const ScenarioConfig& config, const RunOptions& options, std::ostream& out,
            std::ostream& err) {
  RunOutput r;
  try {
    r = run(config, options);
  } catch (const NumericalError& e) {
    err << "hbl: numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const DegeneratePoint& e) {
    err << "hbl: numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const Error& e) {
    err << "hbl: invalid input: " << e.what() << '\n';
    return kExitValidation;
  }

  const std::string text = r.document.dump(2) + "\n";
  const auto dir = options.out_dir ? options.out_dir : config.output.path;
  if (!dir) {
    out << text;
    return kExitOk;
  }
  std::error_code ec;
  std::filesystem::create_directories(*dir, ec);
  if (ec) {
    err << "hbl: cannot create output directory " << dir->string() << ": " << ec.message() << '\n';
    return kExitValidation;
  }
  auto write = [&](const std::filesystem::path& p, const std::string& body) {
    std::ofstream f(p, std::ios::binary);
    f << body;
    if (!f) {
      err << "hbl: cannot write " << p.string() << '\n';
      return false;
    }
    return true;
  };
  if (!write(*dir / (config.command + ".json"), text)) return kExitValidation;
  if (config.output.format == "csv" && !write(*dir / (config.command + ".csv"), r.csv))
    return kExitValidation;
  return kExitOk;
}

}  // namespace hbl::cli
