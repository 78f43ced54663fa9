#include "gonality/cli.hpp"

#include "gonality/bounds.hpp"
#include "gonality/certificate.hpp"
#include "gonality/cone_lines.hpp"
#include "gonality/errors.hpp"
#include "gonality/fano_lines.hpp"
#include "gonality/random.hpp"
#include "gonality/serialize.hpp"
#include "gonality/tangent_cone.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace gonality {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::string field = "101";
  std::uint64_t seed = 1;
  std::uint64_t budget_flag = 0;
  std::string format = "text";
  std::string out;
};

struct Options {
  std::string poly;
  std::string ci;
  std::string x;
  int h = 0;
  bool section = false;
  int witness = 0;
  int fibers = 0;
  int samples = 8;
  std::string cert;
  std::string kind;
  int m = 0;
  std::string type;
  int n = 0;
  int d = 0;
  int trials = 100;
  std::uint64_t n_from = 1;
  std::uint64_t n_to = 0;
  std::uint64_t max = 1'000'000;
  std::string table;
  bool point = false;
  std::string file;
};

struct Result {
  int code = kExitOk;
  Json json = Json::object();
  std::string text;
};

struct Context {
  Field field;
  std::uint64_t seed = 0;
  std::uint64_t budget = 0;
};

Field parse_field(const std::string& spec) {
  if (spec == "Q" || spec == "q" || spec == "rational") return Field::rational();
  std::uint64_t p = 0;
  std::istringstream in(spec);
  if (!(in >> p) || !in.eof()) throw UsageError("--field: expected a prime or Q, got '" + spec + "'");
  try {
    return Field::prime(p);
  } catch (const DomainError&) {
    throw UsageError("--field: " + spec + " is not prime");
  }
}

std::uint64_t resolve_budget(std::uint64_t flag) {
  if (flag != 0) return flag;
  if (const char* env = std::getenv("GONALITY_BUDGET")) {
    std::uint64_t v = 0;
    std::istringstream in(env);
    if (!(in >> v) || !in.eof() || v == 0) throw UsageError("GONALITY_BUDGET: expected a positive integer");
    return v;
  }
  return kDefaultLineBudget;
}

Json read_json(const std::string& path) {
  if (path.empty()) throw UsageError("missing input file");
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

// An F-file is a polynomial document, or any document holding one under "poly".
MultiPoly read_poly(const std::string& path) {
  Json j = read_json(path);
  return poly_from_json(j.contains("poly") ? j["poly"] : j);
}

ProjPoint parse_point(const std::string& spec, const Field& field, std::size_t size) {
  Vector v;
  std::stringstream in(spec);
  std::string part;
  while (std::getline(in, part, ',')) v.push_back(field.parse(part));
  if (v.size() != size) {
    throw UsageError("--x: expected " + std::to_string(size) + " coordinates, got " + std::to_string(v.size()));
  }
  return ProjPoint(field, std::move(v));
}

std::vector<int> parse_ints(const std::string& spec) {
  std::vector<int> out;
  std::stringstream in(spec);
  std::string part;
  while (std::getline(in, part, ',')) {
    try {
      out.push_back(std::stoi(part));
    } catch (const std::exception&) {
      throw UsageError("bad integer list '" + spec + "'");
    }
  }
  return out;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw UsageError(what);
}

Field prime_field(const Context& ctx, DegreeGuard guard = DegreeGuard::strict) {
  require(ctx.field.is_prime(), "this command needs a prime field");
  return Field::prime(ctx.field.characteristic(), guard);
}

Result cmd_bounds(const Options& o) {
  require(o.d > 0, "bounds: --d is required");
  require(o.n_from >= 1 && o.n_to >= o.n_from, "bounds: need 1 <= --n-from <= --n-to");
  Result r;
  Json rows = Json::array();
  std::vector<std::vector<std::string>> cells;
  cells.push_back({"n", "h_max", "lower", "upper", "exceptional", "conngon_upper", "irr_gap", "conjecture"});
  for (std::uint64_t n = o.n_from; n <= o.n_to; ++n) {
    const BoundReport b = covgon_bounds(n, static_cast<std::uint64_t>(o.d));
    Json row;
    row["n"] = b.n;
    row["d"] = b.d;
    row["h_max"] = b.h_max;
    row["lower"] = b.lower;
    row["upper"] = b.upper;
    row["exceptional"] = b.exceptional;
    row["exceptional_natural"] = b.exceptional_natural;
    row["conngon_upper"] = b.conngon_upper;
    row["irr_gap"] = b.irr_gap;
    row["lower_claimed"] = b.lower_claimed;
    row["upper_claimed"] = b.upper_claimed;
    // Conjectured value d - h_max for d >= 2n; a label, not a result.
    row["conjecture"] = b.upper_claimed ? Json(b.upper) : Json(nullptr);
    rows.push_back(row);
    cells.push_back({std::to_string(b.n), std::to_string(b.h_max), std::to_string(b.lower), std::to_string(b.upper),
                     b.exceptional ? "yes" : "no", std::to_string(b.conngon_upper), std::to_string(b.irr_gap),
                     b.upper_claimed ? std::to_string(b.upper) + "?" : "-"});
  }
  r.json["d"] = o.d;
  r.json["rows"] = std::move(rows);
  std::vector<std::size_t> width(cells[0].size(), 0);
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::ostringstream text;
  text << "d = " << o.d << "\n";
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      text << (c ? "  " : "") << std::setw(static_cast<int>(width[c])) << row[c];
    }
    text << "\n";
  }
  text << "conjecture: conjectured covering gonality for d >= 2n (unproved)\n";
  r.text = text.str();
  return r;
}

Result cmd_check_lemma(const Options& o) {
  require(o.max >= 1, "check-lemma: --max must be positive");
  Result r;
  const auto bad = verify_floor_identity(o.max);
  r.json["max"] = o.max;
  r.json["counterexample"] = bad ? Json(*bad) : Json(nullptr);
  r.json["result"] = bad ? "counterexample" : "no counterexample";
  r.text = bad ? "counterexample at n = " + std::to_string(*bad) + "\n"
               : "no counterexample for n <= " + std::to_string(o.max) + "\n";
  if (bad) r.code = kExitVerificationFailure;
  return r;
}

Result cmd_cone(const Options& o) {
  MultiPoly f = read_poly(o.poly);
  require(o.h > 0, "cone: --h is required");
  const ProjPoint x = parse_point(o.x, f.field(), static_cast<std::size_t>(f.nvars()));
  Result r;
  const ConeSystem cone = taylor_cone(f, x, o.h);
  r.json["cone"] = cone_to_json(f, cone);
  std::ostringstream text;
  text << "F hash " << poly_hash(f) << ", x = " << x.to_string() << ", h = " << o.h << "\n";
  for (std::size_t k = 0; k < cone.equations.size(); ++k) {
    text << "G_" << k + 1 << " = " << cone.equations[k].to_string() << "\n";
  }
  if (o.section) {
    try {
      const LambdaSection s = lambda_section(f, x, o.h);
      r.json["section"] = section_to_json(f, x, s);
      text << "section in " << s.nvars << " variables:\n";
      for (const MultiPoly& e : s.equations) text << "  " << e.to_string('z') << "\n";
    } catch (const SingularPointError&) {
      r.json["section"] = {{"status", "singular_point"}};
      text << "section: x is singular\n";
    }
  }
  r.text = text.str();
  return r;
}

Result cmd_lines(const Options& o, const Context& ctx) {
  Result r;
  std::ostringstream text;
  if (!o.ci.empty()) {
    require(o.poly.empty(), "lines: give either --ci or an F-file");
    const CompleteIntersection y = ci_from_json(read_json(o.ci));
    const LineEnumeration e = enumerate_lines(y, ctx.budget);
    Json lines = Json::array();
    bool all_on = true;
    for (const ProjLine& l : e.lines) {
      const bool on = line_on_ci(y, l);
      all_on = all_on && on;
      const SigmaSystem s = sigma_system(y, l);
      Json lj = to_json(l);
      lj["on_ci"] = on;
      lj["kernel_dim"] = s.kernel_dim;
      lj["smooth_along_line"] = s.smooth_along_line;
      lines.push_back(std::move(lj));
      text << l.to_string() << "  sigma kernel " << s.kernel_dim << (s.smooth_along_line ? "" : " (not smooth)")
           << "\n";
    }
    r.json["ambient"] = y.ambient();
    r.json["type"] = y.type();
    const auto type = y.type();
    if (!type.empty() && static_cast<int>(type.size()) <= y.ambient() - 2) {
      const PredonzanInvariants pi = predonzan_invariants(y.ambient(), type);
      r.json["invariants"] = {{"t", pi.t}, {"theta", pi.theta}};
    }
    r.json["count"] = e.lines.size();
    r.json["work"] = e.work;
    r.json["lines"] = std::move(lines);
    r.text = std::to_string(e.lines.size()) + " lines\n" + text.str();
    if (!all_on) r.code = kExitVerificationFailure;
    return r;
  }
  MultiPoly f = read_poly(o.poly);
  require(o.h > 0, "lines: --h is required");
  const ProjPoint x = parse_point(o.x, f.field(), static_cast<std::size_t>(f.nvars()));
  const auto ws = find_cone_lines(f, x, o.h, ctx.budget);
  Json wj = Json::array();
  for (const auto& w : ws) {
    wj.push_back(to_json(f, w));
    text << w.line.to_string() << "\n";
  }
  r.json["f_hash"] = poly_hash(f);
  r.json["count"] = ws.size();
  r.json["witnesses"] = std::move(wj);
  r.text = std::to_string(ws.size()) + " rational witnesses at this budget\n" + text.str();
  return r;
}

Result certify_failure(const std::string& status, const std::string& detail) {
  Result r;
  r.code = kExitVerificationFailure;
  r.json["status"] = status;
  r.json["detail"] = detail;
  r.text = status + ": " + detail + "\n";
  return r;
}

Result cmd_certify(const Options& o, const Context& ctx) {
  MultiPoly f = read_poly(o.poly);
  require(o.h > 0, "certify: --h is required");
  const ProjPoint x = parse_point(o.x, f.field(), static_cast<std::size_t>(f.nvars()));
  std::vector<ConeLineWitness> ws;
  try {
    ws = find_cone_lines(f, x, o.h, ctx.budget);
  } catch (const SingularPointError& e) {
    return certify_failure("singular_point", e.what());
  } catch (const DegenerateSection& e) {
    return certify_failure("degenerate_section", e.what());
  }
  if (ws.empty()) return certify_failure("no_witness", "no rational witness at this budget");
  require(o.witness >= 0 && static_cast<std::size_t>(o.witness) < ws.size(),
          "certify: --witness out of range (" + std::to_string(ws.size()) + " found)");
  const ConeLineWitness& w = ws[static_cast<std::size_t>(o.witness)];
  const GonalityCertificate c = build_certificate(f, w);
  const CertificateCheck check = verify_certificate(c, o.samples, ctx.seed);
  Result r;
  r.json["status"] = "certified";
  r.json["witness_count"] = ws.size();
  r.json["witness"] = to_json(f, w);
  r.json["certificate"] = to_json(c);
  r.json["check"] = {{"ok", check.ok}, {"violations", check.violations}};
  if (o.fibers > 0) {
    Json fibers = Json::array();
    for (const FiberReport& fr : projection_fibers(c, o.fibers, ctx.seed)) fibers.push_back(to_json(fr));
    r.json["fibers"] = std::move(fibers);
  }
  std::ostringstream text;
  text << "certified: multiplicity " << c.mult << " at x, projection bound " << c.bound << "\n";
  text << "line " << c.line.to_string() << "\n";
  text << "curve " << c.curve.to_string('u') << "\n";
  text << "check " << (check.ok ? "ok" : "FAILED") << "\n";
  r.text = text.str();
  if (!check.ok) r.code = kExitVerificationFailure;
  return r;
}

Result cmd_verify(const Options& o, const Context& ctx) {
  Json j = read_json(o.cert);
  const GonalityCertificate c = certificate_from_json(j.contains("certificate") ? j["certificate"] : j);
  const CertificateCheck check = verify_certificate(c, o.samples, ctx.seed);
  Result r;
  r.json["f_hash"] = poly_hash(c.f);
  r.json["ok"] = check.ok;
  r.json["violations"] = check.violations;
  std::ostringstream text;
  text << (check.ok ? "certificate verified" : "certificate rejected") << "\n";
  for (const auto& v : check.violations) text << "  " << v << "\n";
  r.text = text.str();
  if (!check.ok) r.code = kExitVerificationFailure;
  return r;
}

Result cmd_census(const Options& o, const Context& ctx) {
  require(o.trials > 0, "census: --trials must be positive");
  Result r;
  std::ostringstream text;
  if (o.kind == "fano") {
    require(o.m > 0 && !o.type.empty(), "census fano: --m and --type are required");
    const auto type = parse_ints(o.type);
    const FanoCensus c = fano_census(o.m, type, prime_field(ctx), o.trials, ctx.seed, ctx.budget);
    r.json["census"] = to_json(c);
    text << c.with_line << " of " << c.trials << " carry an F_p-line (fraction " << c.fraction_with_line << ")\n";
  } else if (o.kind == "x1h") {
    require(o.n > 0 && o.d > 0 && o.h > 0, "census x1h: --n, --d and --h are required");
    const WitnessCensus c = witness_census(o.n, o.d, o.h, prime_field(ctx), o.trials, ctx.seed, ctx.budget);
    r.json["census"] = to_json(c);
    text << c.with_witness << " of " << c.with_point << " pointed trials have a rational witness\n";
  } else {
    require(o.kind == "delta", "census: kind must be fano, x1h or delta");
    MultiPoly f;
    if (!o.poly.empty()) {
      f = read_poly(o.poly);
    } else {
      require(o.n > 0 && o.d > 0, "census delta: give an F-file or --n and --d");
      // Contact orders are characteristic-free, so tiny fields are allowed.
      f = random_poly(o.n + 2, o.d, prime_field(ctx, DegreeGuard::relaxed), ctx.seed);
      r.json["poly"] = to_json(f);
    }
    const DeltaCensus c = delta_census(f, ctx.budget);
    r.json["f_hash"] = poly_hash(f);
    r.json["census"] = to_json(c);
    text << c.points << " points (" << c.singular << " singular), " << c.pairs << " pairs\n";
    for (std::size_t k = 0; k < c.at_least.size(); ++k) text << "  contact >= " << k << ": " << c.at_least[k] << "\n";
  }
  r.text = text.str();
  return r;
}

Result cmd_sample(const Options& o, const Context& ctx) {
  require(o.n > 0 && o.d > 0, "sample: --n and --d are required");
  Rng rng(ctx.seed);
  const MultiPoly f = random_poly(o.n + 2, o.d, prime_field(ctx), rng);
  Result r;
  r.json["poly"] = to_json(f);
  r.json["f_hash"] = poly_hash(f);
  r.text = f.to_string() + "\n";
  if (o.point) {
    const auto x = random_point_on(f, rng);
    r.json["point"] = x ? to_json(*x) : Json(nullptr);
    r.text += "point " + (x ? x->to_string() : std::string("none found")) + "\n";
  }
  return r;
}

void append_options(const CLI::App* sub, std::vector<std::string>& argv) {
  for (const CLI::Option* opt : sub->get_options()) {
    if (opt->get_lnames().empty() || opt->get_lnames()[0] == "help") continue;
    const std::string name = "--" + opt->get_lnames()[0];
    if (opt->get_expected_min() == 0) {
      if (opt->count() > 0) argv.push_back(name);
      continue;
    }
    std::vector<std::string> values = opt->count() > 0 ? opt->results() : std::vector<std::string>{};
    if (values.empty() && !opt->get_default_str().empty()) values.push_back(opt->get_default_str());
    for (const auto& v : values) {
      argv.push_back(name);
      argv.push_back(v);
    }
  }
}

int write_result(const Result& r, const Json& config, const Globals& g, std::ostream& out, std::ostream& err) {
  std::string body;
  if (g.format == "json") {
    Json doc;
    doc["config"] = config;
    for (auto it = r.json.begin(); it != r.json.end(); ++it) doc[it.key()] = it.value();
    body = doc.dump(2) + "\n";
  } else {
    body = r.text;
  }
  if (g.out.empty()) {
    out << body;
  } else {
    std::ofstream file(g.out, std::ios::binary);
    if (!file || !(file << body)) {
      err << "error: cannot write " << g.out << "\n";
      return kExitUsage;
    }
  }
  return r.code;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Covering gonality toolkit: bounds, tangent cones, lines and certificates", "gonality"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  Options o;
  app.add_option("--field", g.field, "Prime p or Q")->capture_default_str();
  app.add_option("--seed", g.seed, "Seed for all randomness")->capture_default_str();
  app.add_option("--budget", g.budget_flag, "Work budget (default 10^7, or GONALITY_BUDGET)");
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  app.add_option("--out", g.out, "Write the result to this file");

  auto* bounds = app.add_subcommand("bounds", "Covering gonality bounds table");
  bounds->add_option("table", o.table, "Optional view name")->check(CLI::IsMember({"table"}));
  bounds->add_option("--n-from", o.n_from)->capture_default_str();
  bounds->add_option("--n-to", o.n_to)->required();
  bounds->add_option("--d", o.d)->required();

  auto* cone = app.add_subcommand("cone", "Order-h tangent cone at a point");
  cone->add_option("poly,--poly", o.poly, "F-file")->required();
  cone->add_option("--x", o.x, "Point, comma separated")->required();
  cone->add_option("--h", o.h)->required();
  cone->add_flag("--section", o.section, "Also emit the hyperplane section");

  auto* lines = app.add_subcommand("lines", "Lines on a complete intersection, or cone witnesses");
  lines->add_option("poly,--poly", o.poly, "F-file");
  lines->add_option("--ci", o.ci, "Complete intersection file");
  lines->add_option("--x", o.x, "Point, comma separated");
  lines->add_option("--h", o.h);

  auto* certify = app.add_subcommand("certify", "Certificate from a cone witness");
  certify->add_option("poly,--poly", o.poly, "F-file")->required();
  certify->add_option("--x", o.x, "Point, comma separated")->required();
  certify->add_option("--h", o.h)->required();
  certify->add_option("--witness", o.witness, "Index among the sorted witnesses")->capture_default_str();
  certify->add_option("--samples", o.samples, "Fibers sampled by the check")->capture_default_str();
  certify->add_option("--fibers", o.fibers, "Fiber reports to emit")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "Verify a certificate file");
  verify->add_option("cert,--cert", o.cert, "Certificate file")->required();
  verify->add_option("--samples", o.samples, "Fibers sampled")->capture_default_str();

  auto* census = app.add_subcommand("census", "Seeded censuses: fano, x1h or delta");
  census->add_option("kind,--kind", o.kind)->required()->check(CLI::IsMember({"fano", "x1h", "delta"}));
  census->add_option("--m", o.m, "Ambient dimension (fano)");
  census->add_option("--type", o.type, "Degrees, comma separated (fano)");
  census->add_option("--n", o.n, "Dimension of the hypersurface");
  census->add_option("--d", o.d, "Degree");
  census->add_option("--h", o.h, "Order (x1h)");
  census->add_option("--trials", o.trials)->capture_default_str();
  census->add_option("--poly", o.poly, "F-file (delta)");

  auto* lemma = app.add_subcommand("check-lemma", "Floor identity sweep");
  lemma->add_option("--max", o.max)->capture_default_str();

  auto* sample = app.add_subcommand("sample", "Random form, optionally with a point on it");
  sample->add_option("--n", o.n)->required();
  sample->add_option("--d", o.d)->required();
  sample->add_flag("--point", o.point);

  auto* replay = app.add_subcommand("replay", "Re-run the config block of a JSON result");
  replay->add_option("file,--file", o.file)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (replay->parsed()) {
      const Json j = read_json(o.file);
      if (!j.contains("config") || !j["config"].contains("argv")) throw UsageError(o.file + ": no config block");
      auto argv = j["config"]["argv"].get<std::vector<std::string>>();
      if (!g.out.empty()) {
        argv.push_back("--out");
        argv.push_back(g.out);
      }
      return run_cli(argv, out, err);
    }

    Context ctx{parse_field(g.field), g.seed, resolve_budget(g.budget_flag)};
    const CLI::App* sub = app.get_subcommands().front();
    std::vector<std::string> argv = {"--field", g.field, "--seed", std::to_string(g.seed),
                                     "--budget", std::to_string(ctx.budget), "--format", "json",
                                     sub->get_name()};
    append_options(sub, argv);
    Json config;
    config["subcommand"] = sub->get_name();
    config["field"] = to_json(ctx.field);
    config["seed"] = ctx.seed;
    config["budget"] = ctx.budget;
    config["argv"] = argv;

    Result r;
    if (bounds->parsed()) r = cmd_bounds(o);
    else if (cone->parsed()) r = cmd_cone(o);
    else if (lines->parsed()) r = cmd_lines(o, ctx);
    else if (certify->parsed()) r = cmd_certify(o, ctx);
    else if (verify->parsed()) r = cmd_verify(o, ctx);
    else if (census->parsed()) r = cmd_census(o, ctx);
    else if (lemma->parsed()) r = cmd_check_lemma(o);
    else r = cmd_sample(o, ctx);
    return write_result(r, config, g, out, err);
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
  } catch (const std::logic_error& e) {
    // Domain, dimension and field errors from bad inputs.
    err << "error: " << e.what() << "\n";
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << "\n";
  }
  return kExitUsage;
}

}  // namespace gonality
