#include "cli/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "conformal/conformal.hpp"
#include "flow/flow.hpp"

namespace cs {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(trim(cur));
  if (!s.empty() && s.back() == sep) out.push_back("");
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw UsageError("cannot open " + path);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

// Inline JSON, or @file.
json load_json_arg(const std::string& v) { return parse_json(!v.empty() && v[0] == '@' ? read_file(v.substr(1)) : v); }

std::string pattern_bits(const Pattern& p) {
  std::string s;
  for (bool b : p) s += b ? '1' : '0';
  return s;
}

json point_json(const Point3& x) { return json::array({to_json(x[0]), to_json(x[1]), to_json(x[2])}); }

// Flattened "path: value" lines for --format table.
void flatten(const json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it)
      flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
  } else if (j.is_array() && !j.empty() && (j[0].is_object() || j[0].is_array())) {
    for (std::size_t k = 0; k < j.size(); ++k) flatten(j[k], prefix + "[" + std::to_string(k) + "]", out);
  } else {
    out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

void table3_table(const json& j, std::ostream& out) {
  out << "system  point               ";
  for (const auto& name : j["ideals"]) out << " " << name.get<std::string>().substr(1);
  out << "  ok\n";
  for (const auto& c : j["cells"]) {
    std::string sys = c["system"].get<std::string>();
    std::ostringstream pt;
    pt << "(";
    pt << std::fixed << std::setprecision(2);
    for (int k = 0; k < 3; ++k) pt << (k ? "," : "") << static_cast<double>(re(complex_from_json(c["point"][k])));
    pt << ")";
    std::string p = pt.str();
    out << sys << std::string(8 - std::min<std::size_t>(8, sys.size()), ' ') << p
        << std::string(20 - std::min<std::size_t>(20, p.size()), ' ');
    std::string bits = c["pattern"].get<std::string>();
    for (std::size_t k = 0; k < bits.size(); ++k) {
      std::string col = j["ideals"][k].get<std::string>().substr(1);
      out << " " << std::string(col.size() - 1, ' ') << bits[k];
    }
    out << "  " << (c["matches"].get<bool>() ? "yes" : "NO") << "\n";
  }
}

struct Emitter {
  std::string format;
  std::ostream& out;
  void operator()(const json& j, const std::string& kind = "") const {
    if (format == "json") {
      out << j.dump(2) << "\n";
    } else if (kind == "table3") {
      table3_table(j, out);
    } else {
      flatten(j, "", out);
    }
  }
};

struct Inputs {
  std::string y, qrs, sextic, system, point;
};

void add_inputs(CLI::App* sub, Inputs& in) {
  sub->add_option("--y", in.y, "Y septet as JSON (or @file)");
  sub->add_option("--qrs", in.qrs, "structure point as JSON (or @file)");
  sub->add_option("--sextic", in.sextic, "sextic coefficients as JSON, z^0 first (or @file)");
  sub->add_option("--system", in.system, "catalog system label");
  sub->add_option("--point", in.point, "x1,x2,x3 for --system");
}

Point3 point_or_default(const Inputs& in, ClassLabel c) {
  if (!in.point.empty()) {
    auto v = parse_complex_list(in.point, 3);
    return {v[0], v[1], v[2]};
  }
  if (c == ClassLabel::S) return catalog_entry(c).samples[0];
  throw UsageError("--system needs --point");
}

YSeptet input_y(const Inputs& in) {
  int given = !in.y.empty() + !in.qrs.empty() + !in.sextic.empty() + !in.system.empty();
  if (given != 1) throw UsageError("give exactly one of --y, --qrs, --sextic, --system");
  if (!in.point.empty() && in.system.empty()) throw UsageError("--point needs --system");
  if (!in.y.empty()) return y_from_json(load_json_arg(in.y));
  if (!in.qrs.empty()) return y_from_qr(sp_from_json(load_json_arg(in.qrs)));
  if (!in.sextic.empty()) return y_from_sextic(sextic_from_json(load_json_arg(in.sextic)));
  ClassLabel c = parse_class(in.system);
  return y_from_sextic(catalog_sextic(c, point_or_default(in, c)));
}

json inconsistent_json(const InconsistentPattern& e) {
  json r = json::object();
  for (std::size_t k = 0; k < 9; ++k) r[persistent_ideals()[k]] = to_string(e.residuals[k], 6);
  return {{"error", e.what()}, {"pattern", pattern_bits(e.pattern)}, {"residuals", r}};
}

YSeptet batch_line_y(const json& j) {
  if (j.is_object()) return y_from_qr(sp_from_json(j));
  return y_from_json(j);
}

int run_batch(const std::string& file, const Emitter& emit, std::ostream& err) {
  std::ifstream f(file);
  if (!f) throw UsageError("cannot open " + file);
  std::string line;
  std::size_t n = 0;
  int status = kExitOk;
  while (std::getline(f, line)) {
    ++n;
    if (trim(line).empty()) continue;
    json j;
    try {
      j = parse_json(line);
    } catch (const JsonInputError& e) {
      err << "error: malformed JSON at line " << n << ", column " << e.column << ": " << e.detail << "\n";
      return kExitBadInput;
    }
    try {
      YSeptet y = batch_line_y(j);
      json v = verdict_to_json(classify(y), y);
      if (emit.format == "json")
        emit.out << v.dump() << "\n";
      else
        emit(v);
    } catch (const JsonInputError& e) {
      err << "error: line " << n << ": " << e.what() << "\n";
      return kExitBadInput;
    } catch (const InconsistentPattern& e) {
      json o = inconsistent_json(e);
      o["line"] = n;
      emit.out << o.dump() << "\n";
      status = kExitInconsistent;
    }
  }
  return status;
}

json flow_json(const FlowResult& r, const Path& path, int& status) {
  const Real tol = checkpoint_tolerance(r.error_estimate);
  ScopedTolerance scoped(tol);
  json cps = json::array();
  for (std::size_t k = 0; k < r.checkpoints.size(); ++k) {
    const YSeptet y = y_from_qr(r.checkpoints[k]);
    const auto& w = path.waypoints[k];
    json c{{"offset", json::array({to_json(w[0]), to_json(w[1]), to_json(w[2])})}, {"y", y_to_json(y)}};
    try {
      ClassVerdict v = classify(y);
      json res = json::object();
      for (const auto& e : v.ideals) res[e.name] = to_string(e.residual, 6);
      c["class"] = class_name(v.label);
      c["pattern"] = pattern_bits(v.pattern);
      c["residuals"] = res;
    } catch (const InconsistentPattern& e) {
      c["class"] = nullptr;
      c["error"] = inconsistent_json(e);
      status = kExitInconsistent;
    }
    cps.push_back(c);
  }
  return {{"steps_used", r.steps_used},
          {"error_estimate", to_string(r.error_estimate, 6)},
          {"classification_tol", to_string(tol, 6)},
          {"checkpoints", cps}};
}

void configure_numerics(const std::string& prec_flag, const std::string& tol_flag) {
  const char* env_p = std::getenv("CONFCLASS_PRECISION");
  const char* env_t = std::getenv("CONFCLASS_TOL");
  auto to_digits = [](const std::string& s) {
    try {
      std::size_t used = 0;
      unsigned long d = std::stoul(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return static_cast<unsigned>(d);
    } catch (const std::exception&) {
      throw UsageError("bad precision: " + s);
    }
  };
  unsigned digits = 64;
  if (env_p) digits = to_digits(env_p);
  if (!prec_flag.empty()) digits = to_digits(prec_flag);
  set_precision(digits);
  std::string tol = "1e-30";
  if (env_t) tol = env_t;
  if (!tol_flag.empty()) tol = tol_flag;
  Real t = parse_real(tol);
  if (!(t > 0)) throw UsageError("tolerance must be positive");
  set_tolerance(t);
}

}  // namespace

Complex parse_complex_token(const std::string& raw) {
  const std::string s = trim(raw);
  if (s.empty()) throw UsageError("empty number");
  auto real = [&](const std::string& t) -> Real {
    if (t.empty() || t == "+") return Real(1);
    if (t == "-") return Real(-1);
    try {
      std::size_t used = 0;
      std::stold(t, &used);
      if (used != t.size()) throw std::invalid_argument(t);
    } catch (const std::exception&) {
      throw UsageError("cannot parse number: " + raw);
    }
    return parse_real(t[0] == '+' ? t.substr(1) : t);
  };
  if (s.back() != 'i') return Complex(real(s));
  const std::string body = s.substr(0, s.size() - 1);
  // split before the last sign that is not leading and not an exponent sign
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E')
      return Complex(real(body.substr(0, k)), real(body.substr(k)));
  }
  return Complex(Real(0), real(body));
}

std::vector<Complex> parse_complex_list(const std::string& s, std::size_t n) {
  auto parts = split(s, ',');
  if (parts.size() != n) throw UsageError("expected " + std::to_string(n) + " comma-separated numbers, got '" + s + "'");
  std::vector<Complex> out;
  for (const auto& p : parts) out.push_back(parse_complex_token(p));
  return out;
}

Path parse_path(const std::string& s, int steps) {
  Path path{{}, steps};
  for (const auto& w : split(s, ';')) {
    auto v = parse_complex_list(w, 3);
    std::array<Real, 3> p;
    for (int j = 0; j < 3; ++j) {
      if (im(v[j]) != 0) throw UsageError("path offsets must be real");
      p[j] = re(v[j]);
    }
    path.waypoints.push_back(p);
  }
  if (path.waypoints.size() < 2) throw UsageError("--path needs at least two waypoints");
  return path;
}

json catalog_entry_json(const CatalogEntry& e) {
  json samples = json::array();
  for (const auto& x : e.samples) samples.push_back(point_json(x));
  json j{{"label", class_name(e.label)},
         {"factor_structure", e.factor_structure},
         {"potential", e.potential},
         {"sextic", e.sextic},
         {"poles", e.poles},
         {"samples", samples}};
  if (e.label == ClassLabel::S) j["fixture"] = {{"seed", kSFixtureSeed}, {"y", y_to_json(s_fixture_y())}};
  return j;
}

json catalog_json() {
  json entries = json::array();
  for (const auto& e : catalog()) entries.push_back(catalog_entry_json(e));
  return {{"version", 1}, {"entries", entries}};
}

json table3_json(const Table3Report& rep) {
  json ideals = json::array();
  for (const auto& n : persistent_ideals()) ideals.push_back(n);
  json cells = json::array();
  for (const auto& c : rep.cells) {
    json res = json::array();
    for (const auto& r : c.residuals) res.push_back(to_string(r, 6));
    cells.push_back({{"system", class_name(c.system)},
                     {"point", point_json(c.point)},
                     {"pattern", pattern_bits(c.pattern)},
                     {"expected", pattern_bits(table3_row(c.system))},
                     {"residuals", res},
                     {"matches", c.matches}});
  }
  return {{"ideals", ideals}, {"cells", cells}, {"ok", rep.ok}, {"mismatches", rep.mismatches}};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Classification of conformally superintegrable structures in 3D", "confclass"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string precision_flag, tol_flag, format = "json";
  unsigned long long seed = 1;
  app.add_option("--precision", precision_flag, "working precision in decimal digits (default 64)");
  app.add_option("--tol", tol_flag, "relative zero tolerance (default 1e-30)");
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "table"}));
  app.add_option("--seed", seed, "seed for random paths and maps");

  Inputs cin_, vin_, tin_;
  std::string batch;
  auto* classify_cmd = app.add_subcommand("classify", "classify a Y septet, structure point or catalog system");
  add_inputs(classify_cmd, cin_);
  classify_cmd->add_option("--batch", batch, "JSONL file, one Y septet or structure point per line");

  auto* cov_cmd = app.add_subcommand("covariants", "the 26 basis covariants");
  add_inputs(cov_cmd, vin_);

  auto* tr_cmd = app.add_subcommand("transform", "apply conformal maps to Y, left to right");
  add_inputs(tr_cmd, tin_);
  std::vector<std::string> inv_args, dil_args, mob_args;
  auto* inv_opt = tr_cmd->add_option("--invert", inv_args, "inversion centre u1,u2,u3")->take_all();
  auto* dil_opt = tr_cmd->add_option("--dilate", dil_args, "dilation factor")->take_all();
  auto* mob_opt = tr_cmd->add_option("--mobius", mob_args, "Mobius map a,b,c,d")->take_all();
  inv_opt->multi_option_policy(CLI::MultiOptionPolicy::TakeAll)->allow_extra_args(false);
  dil_opt->multi_option_policy(CLI::MultiOptionPolicy::TakeAll)->allow_extra_args(false);
  mob_opt->multi_option_policy(CLI::MultiOptionPolicy::TakeAll)->allow_extra_args(false);
  bool want_random_mobius = false;
  tr_cmd->add_flag("--random-mobius", want_random_mobius, "append a seeded random Mobius map");

  std::string from, path_arg, flow_system, flow_point;
  int steps = 20;
  auto* flow_cmd = app.add_subcommand("flow", "integrate the translation flow along a path");
  flow_cmd->add_option("--from", from, "start: structure point or Y septet as JSON (or @file)");
  flow_cmd->add_option("--system", flow_system, "start at a catalog system");
  flow_cmd->add_option("--point", flow_point, "x1,x2,x3 for --system");
  flow_cmd->add_option("--path", path_arg, "waypoint offsets x,y,z;x,y,z;... (default: seeded random walk)");
  flow_cmd->add_option("--steps", steps, "RK4 steps per segment before refinement")->check(CLI::PositiveNumber);

  auto* cat_cmd = app.add_subcommand("catalog", "the ten conformal classes");
  cat_cmd->require_subcommand(1);
  cat_cmd->add_subcommand("list", "list systems");
  std::string show_label;
  auto* show_cmd = cat_cmd->add_subcommand("show", "show one system");
  show_cmd->add_option("label", show_label, "system label")->required();

  bool dot = false;
  auto* t3_cmd = app.add_subcommand("table3", "vanishing ideals of every catalog system at its sample points");
  t3_cmd->add_flag("--dot", dot, "print the degeneration diagram as DOT instead");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadInput;
  }

  const Emitter emit{format, out};
  try {
    configure_numerics(precision_flag, tol_flag);

    if (classify_cmd->parsed()) {
      if (!batch.empty()) {
        if (!cin_.y.empty() || !cin_.qrs.empty() || !cin_.sextic.empty() || !cin_.system.empty())
          throw UsageError("--batch excludes the single-input options");
        return run_batch(batch, emit, err);
      }
      YSeptet y = input_y(cin_);
      try {
        emit(verdict_to_json(classify(y), y));
      } catch (const InconsistentPattern& e) {
        emit(inconsistent_json(e));
        return kExitInconsistent;
      }
      return kExitOk;
    }

    if (cov_cmd->parsed()) {
      YSeptet y = input_y(vin_);
      HilbertBasis hb = hilbert_basis(sextic_from_y(y));
      json list = json::array();
      for (const auto& c : hb.items()) {
        json coeffs = json::array();
        for (const auto& a : c.poly) coeffs.push_back(to_json(a));
        list.push_back({{"name", c.name}, {"degree", c.degree}, {"order", c.order}, {"weight", c.weight},
                        {"coeffs", coeffs}});
      }
      emit(list);
      return kExitOk;
    }

    if (tr_cmd->parsed()) {
      YSeptet y = input_y(tin_);
      std::size_t ni = 0, nd = 0, nm = 0;
      json steps_done = json::array();
      for (const CLI::Option* opt : tr_cmd->parse_order()) {
        InducedMap im;
        std::string label;
        if (opt == inv_opt) {
          auto u = parse_complex_list(inv_args.at(ni++), 3);
          ConformalMove m = ConformalMove::inversion({u[0], u[1], u[2]});
          im = m.induced();
          label = m.describe();
        } else if (opt == dil_opt) {
          ConformalMove m = ConformalMove::dilation(parse_complex_token(dil_args.at(nd++)));
          if (m.delta == Complex(0)) throw DomainError("dilation by zero");
          im = m.induced();
          label = m.describe();
        } else if (opt == mob_opt) {
          auto v = parse_complex_list(mob_args.at(nm++), 4);
          im.m = MobiusMap(v[0], v[1], v[2], v[3]);
          if (im.m.det() == Complex(0)) throw DomainError("singular Mobius map");
          label = "mobius(" + mob_args[nm - 1] + ")";
        } else {
          continue;
        }
        y = apply_induced(y, im);
        steps_done.push_back(label);
      }
      if (want_random_mobius) {
        std::mt19937_64 rng(seed);
        InducedMap im;
        im.m = random_mobius(rng);
        y = apply_induced(y, im);
        steps_done.push_back("mobius(random, seed " + std::to_string(seed) + ")");
      }
      emit({{"steps", steps_done}, {"y", y_to_json(y)}, {"sextic", sextic_to_json(sextic_from_y(y))}});
      return kExitOk;
    }

    if (flow_cmd->parsed()) {
      StructurePoint sp;
      if (from.empty() == flow_system.empty()) throw UsageError("give exactly one of --from, --system");
      if (!from.empty()) {
        json j = load_json_arg(from);
        sp = j.is_object() ? sp_from_json(j) : qrs_from_xy({}, y_from_json(j));
      } else {
        Inputs in;
        in.system = flow_system;
        in.point = flow_point;
        ClassLabel c = parse_class(flow_system);
        Point3 x = point_or_default(in, c);
        sp = qrs_from_xy({x[0], x[1], x[2]}, y_from_sextic(catalog_sextic(c, x)));
      }
      Path path;
      if (path_arg.empty()) {
        std::mt19937_64 rng(seed);
        path = random_short_path(rng, 9, 0.01, steps);
      } else {
        path = parse_path(path_arg, steps);
      }
      int status = kExitOk;
      try {
        FlowResult r = integrate(sp, path);
        emit(flow_json(r, path, status));
      } catch (const FlowBlowUp& e) {
        emit({{"error", e.what()}, {"arclength", to_string(e.arclength, 12)}});
        return kExitDomain;
      }
      return status;
    }

    if (cat_cmd->parsed()) {
      if (show_cmd->parsed()) {
        emit(catalog_entry_json(catalog_entry(parse_class(show_label))));
      } else {
        json list = json::array();
        for (const auto& e : catalog())
          list.push_back({{"label", class_name(e.label)}, {"factor_structure", e.factor_structure}, {"poles", e.poles}});
        emit(list);
      }
      return kExitOk;
    }

    if (t3_cmd->parsed()) {
      if (dot) {
        out << hasse_dot();
        return kExitOk;
      }
      emit(table3_json(reproduce_table3()), "table3");
      return kExitOk;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const JsonInputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const InconsistentPattern& e) {
    err << "error: " << e.what() << "\n";
    return kExitInconsistent;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitOk;
}

}  // namespace cs
