#include "scenario.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "hbl/boundary_diagnostics.hpp"
#include "hbl/errors.hpp"
#include "hbl/step_boundary.hpp"

namespace hbl::cli {

namespace {

std::string child(const std::string& pointer, const std::string& key) {
  std::string escaped;
  for (char c : key) {
    if (c == '~')
      escaped += "~0";
    else if (c == '/')
      escaped += "~1";
    else
      escaped += c;
  }
  return pointer + "/" + escaped;
}

std::string child(const std::string& pointer, std::size_t index) {
  return pointer + "/" + std::to_string(index);
}

double number(const json& v, const std::string& ptr) {
  if (!v.is_number()) throw ValidationError(ptr, "expected a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) throw ValidationError(ptr, "expected a finite number");
  return x;
}

double positive(const json& v, const std::string& ptr) {
  const double x = number(v, ptr);
  if (!(x > 0.0)) throw ValidationError(ptr, "must be positive");
  return x;
}

int integer(const json& v, const std::string& ptr, int lo) {
  if (!v.is_number_integer()) throw ValidationError(ptr, "expected an integer");
  const auto x = v.get<long long>();
  if (x < lo || x > 1'000'000'000) throw ValidationError(ptr, "must be at least " + std::to_string(lo));
  return static_cast<int>(x);
}

std::string string(const json& v, const std::string& ptr) {
  if (!v.is_string()) throw ValidationError(ptr, "expected a string");
  return v.get<std::string>();
}

const json& array(const json& v, const std::string& ptr, std::size_t min_size = 1) {
  if (!v.is_array()) throw ValidationError(ptr, "expected an array");
  if (v.size() < min_size)
    throw ValidationError(ptr, "needs at least " + std::to_string(min_size) + " entries");
  return v;
}

const json& object(const json& v, const std::string& ptr) {
  if (!v.is_object()) throw ValidationError(ptr, "expected an object");
  return v;
}

void only_keys(const json& obj, const std::string& ptr, const std::set<std::string>& allowed) {
  for (const auto& [key, value] : obj.items()) {
    (void)value;
    if (!allowed.count(key)) throw ValidationError(child(ptr, key), "unknown key");
  }
}

void require_key(const json& obj, const std::string& ptr, const std::string& key) {
  if (!obj.contains(key)) throw ValidationError(child(ptr, key), "required key is missing");
}

std::vector<double> numbers(const json& v, const std::string& ptr, std::size_t min_size = 1) {
  std::vector<double> out;
  const auto& arr = array(v, ptr, min_size);
  for (std::size_t k = 0; k < arr.size(); ++k) out.push_back(number(arr[k], child(ptr, k)));
  return out;
}

std::vector<Complex> complexes(const json& v, const std::string& ptr, std::size_t min_size = 1) {
  std::vector<Complex> out;
  const auto& arr = array(v, ptr, min_size);
  for (std::size_t k = 0; k < arr.size(); ++k) out.push_back(parse_complex(arr[k], child(ptr, k)));
  return out;
}

void strictly_decreasing(const std::vector<double>& v, const std::string& ptr) {
  for (std::size_t k = 1; k < v.size(); ++k)
    if (!(v[k] < v[k - 1])) throw ValidationError(child(ptr, k), "schedule must be strictly decreasing");
}

void strictly_increasing(const std::vector<double>& v, const std::string& ptr) {
  for (std::size_t k = 1; k < v.size(); ++k)
    if (!(v[k] > v[k - 1])) throw ValidationError(child(ptr, k), "values must be strictly increasing");
}

// Turns a library precondition failure into a located validation error.
template <typename F>
auto located(const std::string& ptr, F&& build) {
  try {
    return build();
  } catch (const Error& e) {
    throw ValidationError(ptr, e.what());
  }
}

HarmonicMap parse_map(const json& v, const std::string& ptr) {
  object(v, ptr);
  if (v.contains("regular_polygon")) {
    only_keys(v, ptr, {"regular_polygon"});
    const int n = integer(v["regular_polygon"], child(ptr, "regular_polygon"), 2);
    return poisson_step_map(StepBoundaryFunction::regular_polygon(static_cast<std::size_t>(n)));
  }
  if (v.contains("step")) {
    only_keys(v, ptr, {"step"});
    const std::string sp = child(ptr, "step");
    const auto& s = object(v["step"], sp);
    only_keys(s, sp, {"jumps", "values"});
    require_key(s, sp, "jumps");
    require_key(s, sp, "values");
    auto jumps = numbers(s["jumps"], child(sp, "jumps"), 2);
    auto values = complexes(s["values"], child(sp, "values"), 2);
    return located(sp, [&] {
      return poisson_step_map(StepBoundaryFunction(std::move(jumps), std::move(values)));
    });
  }
  only_keys(v, ptr, {"h", "g", "domain"});
  require_key(v, ptr, "h");
  const auto h = parse_function(v["h"], child(ptr, "h"));
  const auto g = v.contains("g") ? parse_function(v["g"], child(ptr, "g")) : AnalyticFunction::constant(0.0);
  Domain domain = Domain::disk;
  if (v.contains("domain")) {
    const auto d = string(v["domain"], child(ptr, "domain"));
    if (d == "half-plane")
      domain = Domain::half_plane;
    else if (d != "disk")
      throw ValidationError(child(ptr, "domain"), "expected \"disk\" or \"half-plane\"");
  }
  return located(ptr, [&] { return HarmonicMap(h, g, domain); });
}

std::vector<KoebeSequenceItem> parse_koebe_file(const json& doc, const std::string& ptr) {
  object(doc, ptr);
  only_keys(doc, ptr, {"description", "items"});
  require_key(doc, ptr, "items");
  const std::string ip = child(ptr, "items");
  const auto& items = array(doc["items"], ip);
  std::vector<KoebeSequenceItem> out;
  for (std::size_t k = 0; k < items.size(); ++k) {
    const std::string p = child(ip, k);
    const auto& it = object(items[k], p);
    only_keys(it, p, {"continuum", "r", "M", "log_inv_M"});
    require_key(it, p, "continuum");
    require_key(it, p, "r");
    auto continuum = complexes(it["continuum"], child(p, "continuum"), 2);
    const double r = number(it["r"], child(p, "r"));
    if (it.contains("M") == it.contains("log_inv_M"))
      throw ValidationError(p, "give exactly one of \"M\" and \"log_inv_M\"");
    if (it.contains("M")) {
      const double M = positive(it["M"], child(p, "M"));
      out.push_back(located(p, [&] { return KoebeSequenceItem(std::move(continuum), r, M); }));
    } else {
      const double l = number(it["log_inv_M"], child(p, "log_inv_M"));
      out.push_back(located(p, [&] {
        return KoebeSequenceItem::with_log_bound(std::move(continuum), r, l);
      }));
    }
  }
  return out;
}

ZeroSequence parse_zero_file(const json& doc, const std::string& ptr) {
  object(doc, ptr);
  only_keys(doc, ptr, {"description", "points", "multiplicities", "constant"});
  require_key(doc, ptr, "points");
  require_key(doc, ptr, "multiplicities");
  ZeroSequence seq;
  seq.points = complexes(doc["points"], child(ptr, "points"));
  const std::string mp = child(ptr, "multiplicities");
  const auto& mu = array(doc["multiplicities"], mp);
  for (std::size_t k = 0; k < mu.size(); ++k) seq.multiplicities.push_back(integer(mu[k], child(mp, k), 1));
  if (doc.contains("constant")) seq.constant = positive(doc["constant"], child(ptr, "constant"));
  located(ptr, [&] {
    seq.validate();
    return 0;
  });
  return seq;
}

json parse_capacity(const json& v, const std::string& ptr) {
  object(v, ptr);
  require_key(v, ptr, "function");
  const auto fn = string(v["function"], child(ptr, "function"));
  if (fn == "tau2" || fn == "gamma2") {
    only_keys(v, ptr, {"function", "s"});
    require_key(v, ptr, "s");
    const double s = number(v["s"], child(ptr, "s"));
    if (fn == "tau2" && !(s > 0.0)) throw ValidationError(child(ptr, "s"), "tau2 needs s > 0");
    if (fn == "gamma2" && !(s > 1.0)) throw ValidationError(child(ptr, "s"), "gamma2 needs s > 1");
  } else if (fn == "mu") {
    only_keys(v, ptr, {"function", "r"});
    require_key(v, ptr, "r");
    const double r = number(v["r"], child(ptr, "r"));
    if (!(r > 0.0 && r < 1.0)) throw ValidationError(child(ptr, "r"), "mu needs 0 < r < 1");
  } else if (fn == "annulus") {
    only_keys(v, ptr, {"function", "inner", "outer"});
    require_key(v, ptr, "inner");
    require_key(v, ptr, "outer");
    const double a = positive(v["inner"], child(ptr, "inner"));
    const double b = number(v["outer"], child(ptr, "outer"));
    if (!(b > a)) throw ValidationError(child(ptr, "outer"), "outer radius must exceed inner radius");
  } else if (fn == "ring") {
    only_keys(v, ptr, {"function", "inner_radius", "outer", "resolution"});
    if (v.contains("inner_radius")) positive(v["inner_radius"], child(ptr, "inner_radius"));
    if (v.contains("resolution")) integer(v["resolution"], child(ptr, "resolution"), 32);
    require_key(v, ptr, "outer");
    const std::string op = child(ptr, "outer");
    const auto& o = object(v["outer"], op);
    if (o.contains("circle")) {
      only_keys(o, op, {"circle"});
      positive(o["circle"], child(op, "circle"));
    } else {
      only_keys(o, op, {"ray"});
      require_key(o, op, "ray");
      const std::string rp = child(op, "ray");
      const auto& r = object(o["ray"], rp);
      only_keys(r, rp, {"start", "angle", "truncation_radius"});
      require_key(r, rp, "start");
      positive(r["start"], child(rp, "start"));
      if (r.contains("angle")) number(r["angle"], child(rp, "angle"));
      if (r.contains("truncation_radius")) positive(r["truncation_radius"], child(rp, "truncation_radius"));
    }
  } else if (fn == "lemma_b") {
    only_keys(v, ptr, {"function", "continuum"});
    require_key(v, ptr, "continuum");
    complexes(v["continuum"], child(ptr, "continuum"), 2);
  } else if (fn == "qc_bounds") {
    only_keys(v, ptr, {"function", "K", "modulus"});
    require_key(v, ptr, "K");
    require_key(v, ptr, "modulus");
    if (!(number(v["K"], child(ptr, "K")) >= 1.0)) throw ValidationError(child(ptr, "K"), "K must be at least 1");
    if (!(number(v["modulus"], child(ptr, "modulus")) >= 0.0))
      throw ValidationError(child(ptr, "modulus"), "modulus must be nonnegative");
  } else {
    throw ValidationError(child(ptr, "function"),
                          "expected one of tau2, gamma2, mu, annulus, ring, lemma_b, qc_bounds");
  }
  return v;
}

json parse_hyperbolic(const json& v, const std::string& ptr) {
  object(v, ptr);
  require_key(v, ptr, "function");
  const auto fn = string(v["function"], child(ptr, "function"));
  auto upper = [&](const char* key) {
    require_key(v, ptr, key);
    const Complex z = parse_complex(v[key], child(ptr, key));
    if (!(z.imag() > 0.0)) throw ValidationError(child(ptr, key), "point must lie in the upper half-plane");
  };
  auto inside = [&](const char* key) {
    require_key(v, ptr, key);
    const Complex z = parse_complex(v[key], child(ptr, key));
    if (!(std::abs(z) < 1.0)) throw ValidationError(child(ptr, key), "point must lie in the unit disk");
  };
  if (fn == "dist_halfplane") {
    only_keys(v, ptr, {"function", "z1", "z2"});
    upper("z1");
    upper("z2");
  } else if (fn == "dist_disk") {
    only_keys(v, ptr, {"function", "z1", "z2"});
    inside("z1");
    inside("z2");
  } else if (fn == "claim41") {
    only_keys(v, ptr, {"function", "b", "constant"});
    upper("b");
    if (v.contains("constant")) positive(v["constant"], child(ptr, "constant"));
  } else if (fn == "disk_euclidean") {
    only_keys(v, ptr, {"function", "center", "radius", "domain"});
    positive(v.value("radius", json()), child(ptr, "radius"));
    const std::string domain = v.contains("domain") ? string(v["domain"], child(ptr, "domain")) : "disk";
    if (domain == "disk")
      inside("center");
    else if (domain == "half-plane")
      upper("center");
    else
      throw ValidationError(child(ptr, "domain"), "expected \"disk\" or \"half-plane\"");
  } else {
    throw ValidationError(child(ptr, "function"),
                          "expected one of dist_halfplane, dist_disk, claim41, disk_euclidean");
  }
  return v;
}

const std::map<std::string, std::set<std::string>>& command_keys() {
  static const std::map<std::string, std::set<std::string>> keys{
      {"map-eval", {"map", "points"}},
      {"dilatation", {"map", "points"}},
      {"lm-scan", {"map", "dilatation", "zeta_angles", "m_values", "delta_schedule"}},
      {"blw", {"map", "zeta_angles", "radii"}},
      {"area", {"map", "resolution"}},
      {"thm54", {"map", "zeta_angles", "m_values", "delta_schedule", "resolution", "compact_margin"}},
      {"koebe", {"sequences"}},
      {"vanishing", {"sequences"}},
      {"capacity", {"capacity"}},
      {"hyperbolic", {"hyperbolic"}},
      {"cluster", {"map", "zeta_angles", "approach", "samples"}},
      {"multiplicity", {"map", "points", "tolerance"}},
  };
  return keys;
}

json read_json(const std::filesystem::path& path, const std::string& ptr) {
  std::ifstream in(path);
  if (!in) throw ValidationError(ptr, "cannot read file " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ValidationError(ptr, "malformed JSON in " + path.string() + ": " + e.what());
  }
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& [k, v] : command_keys()) {
      (void)v;
      n.push_back(k);
    }
    return n;
  }();
  return names;
}

Complex parse_complex(const json& v, const std::string& pointer) {
  if (v.is_number()) return {number(v, pointer), 0.0};
  if (v.is_array() && v.size() == 2)
    return {number(v[0], child(pointer, 0)), number(v[1], child(pointer, 1))};
  throw ValidationError(pointer, "expected a number or a [re, im] pair");
}

AnalyticFunction parse_function(const json& spec, const std::string& ptr) {
  if (spec.is_string()) {
    const auto s = spec.get<std::string>();
    if (s == "identity") return AnalyticFunction::scaled_identity(1.0);
    if (s == "zero") return AnalyticFunction::constant(0.0);
    if (s.rfind("alpha_z:", 0) == 0) {
      std::istringstream in(s.substr(8));
      in.imbue(std::locale::classic());
      double re = 0.0, im = 0.0;
      char sep = 0;
      if (!(in >> re)) throw ValidationError(ptr, "alpha_z needs a number, e.g. \"alpha_z:0.5\"");
      if (in >> sep) {
        if (sep != ',' || !(in >> im)) throw ValidationError(ptr, "expected \"alpha_z:<re>[,<im>]\"");
      }
      std::string rest;
      if (in >> rest) throw ValidationError(ptr, "trailing characters in function shorthand");
      if (!std::isfinite(re) || !std::isfinite(im)) throw ValidationError(ptr, "alpha must be finite");
      return AnalyticFunction::scaled_identity({re, im});
    }
    throw ValidationError(ptr, "unknown function shorthand \"" + s + "\"");
  }
  object(spec, ptr);
  if (spec.size() != 1) throw ValidationError(ptr, "function object needs exactly one tag");
  const auto first = spec.begin();
  const std::string tag = first.key();
  const json& body = first.value();
  const std::string bp = child(ptr, tag);
  if (tag == "polynomial") return AnalyticFunction::polynomial(complexes(body, bp));
  if (tag == "constant") return AnalyticFunction::constant(parse_complex(body, bp));
  if (tag == "scaled_identity") return AnalyticFunction::scaled_identity(parse_complex(body, bp));
  if (tag == "blaschke") {
    object(body, bp);
    only_keys(body, bp, {"zeros", "rotation"});
    require_key(body, bp, "zeros");
    auto zeros = complexes(body["zeros"], child(bp, "zeros"), 0);
    const Complex rot = body.contains("rotation") ? parse_complex(body["rotation"], child(bp, "rotation")) : 1.0;
    return located(bp, [&] { return AnalyticFunction::finite_blaschke(std::move(zeros), rot); });
  }
  if (tag == "power_series") {
    object(body, bp);
    only_keys(body, bp, {"center", "coefficients", "radius"});
    require_key(body, bp, "coefficients");
    require_key(body, bp, "radius");
    const Complex c = body.contains("center") ? parse_complex(body["center"], child(bp, "center")) : 0.0;
    auto coeffs = complexes(body["coefficients"], child(bp, "coefficients"));
    const double r = positive(body["radius"], child(bp, "radius"));
    return located(bp, [&] { return AnalyticFunction::power_series(c, std::move(coeffs), r); });
  }
  throw ValidationError(bp, "unknown function tag");
}

ScenarioConfig parse_scenario_json(const json& doc, const std::filesystem::path& base_dir) {
  object(doc, "");
  require_key(doc, "", "command");
  ScenarioConfig cfg;
  cfg.source = doc;
  cfg.command = string(doc["command"], "/command");
  const auto& table = command_keys();
  const auto entry = table.find(cfg.command);
  if (entry == table.end()) {
    std::string list;
    for (const auto& n : command_names()) list += (list.empty() ? "" : ", ") + n;
    throw ValidationError("/command", "unknown command; expected one of " + list);
  }
  std::set<std::string> allowed = entry->second;
  allowed.insert({"command", "description", "output", "thresholds"});
  only_keys(doc, "", allowed);
  const std::string& cmd = cfg.command;

  if (doc.contains("description")) string(doc["description"], "/description");

  if (doc.contains("output")) {
    const auto& o = object(doc["output"], "/output");
    only_keys(o, "/output", {"format", "path"});
    if (o.contains("format")) {
      cfg.output.format = string(o["format"], "/output/format");
      if (cfg.output.format != "json" && cfg.output.format != "csv")
        throw ValidationError("/output/format", "expected \"json\" or \"csv\"");
    }
    if (o.contains("path")) {
      cfg.output.path = std::filesystem::path(string(o["path"], "/output/path"));
    }
  }

  if (doc.contains("thresholds")) {
    const auto& t = object(doc["thresholds"], "/thresholds");
    only_keys(t, "/thresholds",
              {"slope", "cauchy", "fit", "koebe_certificate", "blw", "blw_stabilization", "vanishing"});
    auto set = [&](const char* key, double& field) {
      if (t.contains(key)) field = positive(t[key], child("/thresholds", key));
    };
    set("slope", cfg.thresholds.slope);
    set("cauchy", cfg.thresholds.cauchy);
    set("fit", cfg.thresholds.fit);
    set("koebe_certificate", cfg.thresholds.koebe_certificate);
    set("blw", cfg.thresholds.blw);
    set("blw_stabilization", cfg.thresholds.blw_stabilization);
    set("vanishing", cfg.thresholds.vanishing);
  }

  const bool needs_map = cmd != "lm-scan" && entry->second.count("map");
  if (needs_map) require_key(doc, "", "map");
  if (doc.contains("map")) cfg.map = parse_map(doc["map"], "/map");
  if (cmd == "lm-scan") {
    if (doc.contains("map") == doc.contains("dilatation"))
      throw ValidationError("/dilatation", "lm-scan needs exactly one of \"dilatation\" and \"map\"");
    cfg.dilatation = doc.contains("dilatation") ? parse_function(doc["dilatation"], "/dilatation")
                                                : cfg.map->dilatation_function();
  }
  if (cfg.map && cfg.map->domain() != Domain::disk && cmd != "map-eval" && cmd != "dilatation" &&
      cmd != "multiplicity")
    throw ValidationError("/map/domain", "this command works on the unit disk only");

  if (doc.contains("zeta_angles")) {
    cfg.zeta_angles = numbers(doc["zeta_angles"], "/zeta_angles");
    if (cmd == "thm54" && cfg.zeta_angles.size() != 1)
      throw ValidationError("/zeta_angles", "thm54 takes a single boundary point");
  }

  if (doc.contains("m_values")) {
    cfg.m_values = numbers(doc["m_values"], "/m_values");
    for (std::size_t k = 0; k < cfg.m_values.size(); ++k)
      if (!(cfg.m_values[k] > 0.0)) throw ValidationError(child("/m_values", k), "m must be positive");
  }
  if (cmd == "thm54") {
    if (!doc.contains("m_values")) cfg.m_values = {0.05, 0.1, 0.15, 0.2, 0.25, 0.3};
    for (std::size_t k = 0; k < cfg.m_values.size(); ++k)
      if (!(cfg.m_values[k] < 1.0 / kPi))
        throw ValidationError(child("/m_values", k), "m must be < 1/pi for the area bound");
    strictly_increasing(cfg.m_values, "/m_values");
  }

  cfg.delta_schedule = default_delta_schedule();
  if (doc.contains("delta_schedule")) {
    cfg.delta_schedule = numbers(doc["delta_schedule"], "/delta_schedule", 3);
    strictly_decreasing(cfg.delta_schedule, "/delta_schedule");
  }
  if (cmd == "lm-scan" || cmd == "thm54") {
    const double m_max = *std::max_element(cfg.m_values.begin(), cfg.m_values.end());
    const double limit = std::min(kPi, 1.0 / m_max);
    for (std::size_t k = 0; k < cfg.delta_schedule.size(); ++k)
      if (!(cfg.delta_schedule[k] > 0.0 && cfg.delta_schedule[k] < limit))
        throw ValidationError(child("/delta_schedule", k), "cutoffs must lie in (0, min(pi, 1/m)) for every m");
  }

  if (cmd == "blw") {
    cfg.radii = default_blw_radii();
    if (doc.contains("radii")) {
      cfg.radii = numbers(doc["radii"], "/radii", 5);
      for (std::size_t k = 0; k < cfg.radii.size(); ++k)
        if (!(cfg.radii[k] > 0.0 && cfg.radii[k] < 1.0))
          throw ValidationError(child("/radii", k), "radii must lie in (0, 1)");
      strictly_increasing(cfg.radii, "/radii");
      if (cfg.radii.back() < 0.999)
        throw ValidationError(child("/radii", cfg.radii.size() - 1), "last radius must be at least 0.999");
    }
  }

  if (doc.contains("points")) cfg.points = complexes(doc["points"], "/points");
  if (cmd == "map-eval" || cmd == "dilatation") require_key(doc, "", "points");
  if (cmd == "multiplicity" && cfg.points.empty()) cfg.points = {base_point(cfg.map->domain())};
  if (cfg.map && !cfg.points.empty()) {
    for (std::size_t k = 0; k < cfg.points.size(); ++k)
      if (!cfg.map->is_interior(cfg.points[k]))
        throw ValidationError(child("/points", k), "point is not interior to the map's domain");
  }

  cfg.resolution = cmd == "area" ? 1024 : 512;
  if (doc.contains("resolution")) cfg.resolution = integer(doc["resolution"], "/resolution", 8);

  if (doc.contains("compact_margin")) {
    cfg.compact_margin = number(doc["compact_margin"], "/compact_margin");
    if (!(cfg.compact_margin > 0.0 && cfg.compact_margin < 1.0))
      throw ValidationError("/compact_margin", "must lie in (0, 1)");
  }

  if (doc.contains("approach")) {
    cfg.approach = string(doc["approach"], "/approach");
    if (cfg.approach != "radial" && cfg.approach != "tangential-fan")
      throw ValidationError("/approach", "expected \"radial\" or \"tangential-fan\"");
  }
  if (doc.contains("samples")) cfg.samples = integer(doc["samples"], "/samples", 10);

  if (doc.contains("tolerance")) cfg.tolerance = positive(doc["tolerance"], "/tolerance");

  if (cmd == "koebe" || cmd == "vanishing") {
    require_key(doc, "", "sequences");
    std::filesystem::path p = string(doc["sequences"], "/sequences");
    if (!p.is_absolute()) p = base_dir / p;
    if (!std::filesystem::exists(p)) throw ValidationError("/sequences", "file does not exist: " + p.string());
    cfg.sequences = p;
    const json seq = read_json(p, "/sequences");
    try {
      if (cmd == "koebe")
        cfg.koebe_items = parse_koebe_file(seq, "");
      else
        cfg.zeros = parse_zero_file(seq, "");
    } catch (const ValidationError& e) {
      throw ValidationError("/sequences", "in " + p.filename().string() + " at " + e.what());
    }
  }

  if (cmd == "capacity") {
    require_key(doc, "", "capacity");
    cfg.capacity = parse_capacity(doc["capacity"], "/capacity");
  }
  if (cmd == "hyperbolic") {
    require_key(doc, "", "hyperbolic");
    cfg.hyperbolic = parse_hyperbolic(doc["hyperbolic"], "/hyperbolic");
  }
  return cfg;
}

ScenarioConfig parse_scenario(const std::filesystem::path& path) {
  const json doc = read_json(path, "");
  return parse_scenario_json(doc, path.has_parent_path() ? path.parent_path() : std::filesystem::path("."));
}

}  // namespace hbl::cli
