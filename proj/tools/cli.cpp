#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include "vnet/discrepancy.hpp"
#include "vnet/quality.hpp"
#include "vnet/search.hpp"

namespace vnet::cli {

namespace {

using Json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string command;
  std::string q = "2";
  std::string m;
  std::string s;
  std::string modulus;
  std::string base_modulus;
  std::string alpha;
  std::string gpolys;
  bool use_explicit = false;
  Caps caps;
  unsigned threads = 1;
  std::string format = "json";
  std::string out;
  bool strict = false;
  std::string points;
  bool as_float = false;
  std::string seed = "irreducible";
  bool exact_dstar = false;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) parts.push_back(item);
  return parts;
}

std::uint64_t parse_uint(const std::string& text, const char* what) {
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size() || text.front() == '-') {
    throw UsageError(std::string("bad ") + what + ": '" + text + "'");
  }
  return v;
}

// "4", "1..8", "2,3,5" or mixtures like "1..3,7".
std::vector<std::uint64_t> parse_list(const std::string& text, const char* what) {
  std::vector<std::uint64_t> out;
  for (const auto& part : split(text, ',')) {
    const auto dots = part.find("..");
    if (dots == std::string::npos) {
      out.push_back(parse_uint(part, what));
      continue;
    }
    const auto lo = parse_uint(part.substr(0, dots), what);
    const auto hi = parse_uint(part.substr(dots + 2), what);
    if (hi < lo || hi - lo > 10000) throw UsageError(std::string("bad range for ") + what + ": '" + part + "'");
    for (auto v = lo; v <= hi; ++v) out.push_back(v);
  }
  if (out.empty()) throw UsageError(std::string("empty ") + what);
  return out;
}

std::optional<unsigned> single(const std::string& text, const char* what) {
  if (text.empty()) return std::nullopt;
  const auto v = parse_uint(text, what);
  if (v > 1000000) throw UsageError(std::string(what) + " too large");
  return static_cast<unsigned>(v);
}

std::vector<std::uint32_t> parse_codes(const std::string& text, const char* what) {
  std::vector<std::uint32_t> out;
  for (const auto& part : split(text, ',')) {
    const auto v = parse_uint(part, what);
    if (v > 0xffffffffULL) throw UsageError(std::string(what) + " entry too large");
    out.push_back(static_cast<std::uint32_t>(v));
  }
  return out;
}

std::uint32_t field_order(const RunConfig& cfg) {
  const auto q = single(cfg.q, "--q");
  if (!q || *q < 2) throw UsageError("--q must be a prime power >= 2");
  return *q;
}

std::string codes_text(const std::vector<std::uint32_t>& codes) {
  std::string out;
  for (std::size_t i = 0; i < codes.size(); ++i) out += (i ? "," : "") + std::to_string(codes[i]);
  return out;
}

// A net as requested on the command line: either Vandermonde (tower + alpha)
// or general matrices over F_q[x]/(f).
struct NetSource {
  std::shared_ptr<const BaseField> base;
  std::optional<FieldTower> tower;
  AlphaVector alpha;
  std::string kind;
  BasePoly f;
  std::vector<BasePoly> g;
  GeneratingMatrices mats;
  unsigned m = 0;

  bool vandermonde() const noexcept { return tower.has_value(); }
};

std::shared_ptr<const BaseField> base_field(const RunConfig& cfg) {
  const std::uint32_t q = field_order(cfg);
  std::vector<std::uint32_t> g;
  if (!cfg.base_modulus.empty()) g = parse_codes(cfg.base_modulus, "--base-modulus");
  return BaseField::of_order(q, g);
}

FieldTower make_tower(const RunConfig& cfg, std::shared_ptr<const BaseField> base) {
  const auto m = single(cfg.m, "--m");
  if (!cfg.modulus.empty()) {
    BasePoly f = parse_poly(*base, cfg.modulus);
    if (m && f.degree() != static_cast<int>(*m)) throw UsageError("--m disagrees with the degree of --modulus");
    return FieldTower(base, std::move(f));
  }
  if (!m || *m == 0) throw UsageError("--m (or --modulus) is required");
  return FieldTower(base, find_irreducible(*base, *m));
}

NetSource build_net(const RunConfig& cfg) {
  const int sources = int(cfg.use_explicit) + int(!cfg.alpha.empty()) + int(!cfg.gpolys.empty());
  if (sources != 1) throw UsageError("give exactly one of --explicit, --alpha, --gpolys");
  const auto s = single(cfg.s, "--s");

  NetSource net;
  net.base = base_field(cfg);
  if (!cfg.gpolys.empty()) {
    if (cfg.modulus.empty()) throw UsageError("--gpolys needs --modulus");
    net.kind = "general";
    net.f = parse_poly(*net.base, cfg.modulus);
    for (const auto& part : split(cfg.gpolys, ';')) net.g.push_back(parse_poly(*net.base, part));
    if (s && *s != net.g.size()) throw UsageError("--s disagrees with the number of --gpolys");
    const auto m = single(cfg.m, "--m");
    if (m && static_cast<int>(*m) != net.f.degree()) throw UsageError("--m disagrees with the degree of --modulus");
    net.mats = general_vandermonde(net.base, net.f, net.g);
    net.m = net.mats.m;
    return net;
  }

  net.tower = make_tower(cfg, net.base);
  net.f = net.tower->modulus();
  net.m = net.tower->m();
  if (cfg.use_explicit) {
    if (!s) throw UsageError("--explicit needs --s");
    net.kind = "explicit";
    net.alpha = explicit_alpha(*net.tower, *s);
  } else {
    net.kind = "alpha";
    for (const auto& part : split(cfg.alpha, ',')) {
      net.alpha.alphas.push_back(net.tower->decode(parse_uint(part, "--alpha")));
    }
    if (s && *s != net.alpha.size()) throw UsageError("--s disagrees with the number of --alpha entries");
  }
  net.mats = vandermonde_matrices(*net.tower, net.alpha);
  return net;
}

Json describe(const NetSource& net) {
  Json j;
  j["q"] = net.base->q();
  j["m"] = net.m;
  j["s"] = net.mats.s();
  j["source"] = net.kind;
  j["f"] = format_poly(net.f);
  if (!net.base->is_prime_field()) j["base_modulus"] = codes_text(net.base->modulus());
  if (net.vandermonde()) {
    Json codes = Json::array();
    for (const auto& a : net.alpha.alphas) codes.push_back(net.tower->encode(a));
    j["alpha"] = codes;
  } else {
    Json gs = Json::array();
    for (const auto& g : net.g) gs.push_back(format_poly(g));
    j["gpolys"] = gs;
  }
  return j;
}

Json witness_json(const HTuple& h) {
  Json out = Json::array();
  for (const auto& p : h.h) out.push_back(format_poly(p));
  return out;
}

// Evaluates one report section; a cap failure is recorded under cap_hit and
// the caller leaves the section null.
class Partial {
 public:
  explicit Partial(Json& report) : report_(report) {}

  template <class Fn>
  bool attempt(const char* key, Fn&& fn) {
    try {
      fn();
      return true;
    } catch (const Error& e) {
      if (!e.is_cap()) throw;
      hits_[key] = true;
      return false;
    }
  }

  bool any() const noexcept { return !hits_.empty(); }
  void finish() {
    if (!hits_.empty()) report_["cap_hit"] = hits_;
  }

 private:
  Json& report_;
  Json hits_ = Json::object();
};

Json caps_json(const Caps& caps) {
  return Json{{"points", caps.points}, {"kernel", caps.kernel}, {"intervals", caps.intervals}};
}

std::string number_text(long double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", static_cast<double>(v));
  return buf;
}

void emit(const RunConfig& cfg, std::ostream& out, const std::string& text) {
  if (cfg.out.empty()) {
    out << text;
    return;
  }
  std::ofstream file(cfg.out, std::ios::binary);
  if (!file) throw UsageError("cannot write " + cfg.out);
  file << text;
}

void require_json(const RunConfig& cfg) {
  if (cfg.format != "json") throw UsageError(cfg.command + " writes JSON only");
}

// Quality fields shared by construct and analyze.
void quality_fields(const RunConfig& cfg, const NetSource& net, Json& report, Partial& partial,
                    std::optional<NetPointSet>& points) {
  const TValue t = t_value(net.mats);
  report["t"] = t.t;
  report["t_witness"] = t.witness ? Json(*t.witness) : Json(nullptr);
  if (net.vandermonde()) {
    report["rho"] = nullptr;
    report["rho_witness"] = nullptr;
    report["consistent"] = nullptr;
    partial.attempt("rho", [&] {
      const RhoValue rho = rho_direct(*net.tower, net.alpha, cfg.caps, cfg.threads);
      report["rho"] = rho.rho;
      report["rho_witness"] = rho.witness ? witness_json(*rho.witness) : Json(nullptr);
      report["consistent"] = static_cast<int>(t.t) + rho.rho == static_cast<int>(net.m);
    });
  }
  partial.attempt("points", [&] { points = generate_points(net.mats, cfg.caps.points); });
  Json checks{{"equidist", nullptr}};
  if (points) partial.attempt("equidist", [&] { checks["equidist"] = equidist_check(*points, t.t, cfg.caps); });
  report["checks"] = checks;
}

int cmd_construct(const RunConfig& cfg, std::ostream& out) {
  require_json(cfg);
  const NetSource net = build_net(cfg);
  Json report{{"command", "construct"}};
  report.update(describe(net));
  Partial partial(report);
  std::optional<NetPointSet> points;
  quality_fields(cfg, net, report, partial, points);
  if (!cfg.points.empty() && points) {
    std::ofstream file(cfg.points, std::ios::binary);
    if (!file) throw UsageError("cannot write " + cfg.points);
    write_points_csv(file, *points, cfg.as_float);
    report["points"] = Json{{"path", cfg.points}, {"count", points->size()}};
  }
  const bool capped = partial.any();
  partial.finish();
  emit(cfg, out, report.dump(2) + "\n");
  return capped ? kCap : kOk;
}

int cmd_analyze(const RunConfig& cfg, std::ostream& out) {
  require_json(cfg);
  const NetSource net = build_net(cfg);
  Json report{{"command", "analyze"}};
  report.update(describe(net));
  report["caps"] = caps_json(cfg.caps);
  Partial partial(report);
  std::optional<NetPointSet> points;
  quality_fields(cfg, net, report, partial, points);

  std::optional<WeightedSum> rq;
  if (!net.base->is_prime_field()) {
    report["r_q"] = nullptr;
    report["disc_bound"] = nullptr;
    report["note"] = "r_q and disc_bound need prime q";
  } else {
    report["r_q"] = nullptr;
    report["term_count"] = nullptr;
    partial.attempt("r_q", [&] {
      rq = net.vandermonde() ? r_q(*net.tower, net.alpha, cfg.caps, cfg.threads)
                             : r_q_matrices(net.mats, cfg.caps, cfg.threads);
    });
    if (rq) {
      report["r_q"] = static_cast<double>(rq->value);
      report["term_count"] = rq->term_count;
      report["disc_bound"] =
          static_cast<double>(disc_bound(static_cast<unsigned>(net.mats.s()), net.base->q(), net.m, *rq));
    } else {
      report["disc_bound"] = nullptr;
    }
  }

  if (cfg.exact_dstar) {
    report["d_star_exact"] = nullptr;
    if (points) {
      partial.attempt("d_star_exact", [&] {
        const Rational d = star_discrepancy_exact(*points, {3, cfg.caps.points});
        report["d_star_exact"] = Json{{"exact", d.str()}, {"value", static_cast<double>(d)}};
        if (rq) {
          const long double bound =
              disc_bound(static_cast<unsigned>(net.mats.s()), net.base->q(), net.m, *rq);
          report["d_star_within_bound"] = within_bound(static_cast<long double>(d), bound);
        }
      });
    }
  }
  const bool capped = partial.any();
  partial.finish();
  emit(cfg, out, report.dump(2) + "\n");
  return capped ? kCap : kOk;
}

int cmd_cbc(const RunConfig& cfg, std::ostream& out) {
  require_json(cfg);
  if (!cfg.alpha.empty() || !cfg.gpolys.empty() || cfg.use_explicit) {
    throw UsageError("cbc chooses alpha itself; use --seed explicit for the explicit prefix");
  }
  const auto s = single(cfg.s, "--s");
  if (!s || *s == 0) throw UsageError("cbc needs --s >= 1");
  const auto base = base_field(cfg);
  const FieldTower tower = make_tower(cfg, base);
  const SearchOptions options{cfg.caps, cfg.threads};

  SearchResult result;
  if (cfg.seed == "irreducible") {
    result = cbc_search(tower, *s, options);
  } else if (cfg.seed == "explicit") {
    result = cbc_from_explicit(tower, *s, options);
  } else {
    throw UsageError("--seed must be irreducible or explicit");
  }

  Json report{{"command", "cbc"}, {"q", tower.q()}, {"m", tower.m()}, {"s", *s}};
  report["seed"] = to_string(result.seed);
  report["f"] = format_poly(tower.modulus());
  Json codes = Json::array();
  for (const auto& a : result.alpha.alphas) codes.push_back(tower.encode(a));
  report["alpha"] = codes;
  Json values = Json::array(), bounds = Json::array(), terms = Json::array(), ok = Json::array();
  bool all_ok = true;
  for (std::size_t d = 0; d < result.per_dim_rq.size(); ++d) {
    values.push_back(static_cast<double>(result.per_dim_rq[d].value));
    terms.push_back(result.per_dim_rq[d].term_count);
    bounds.push_back(static_cast<double>(cbc_bound(tower.q(), tower.m(), static_cast<unsigned>(d + 1))));
    ok.push_back(static_cast<bool>(result.bound_ok[d]));
    all_ok = all_ok && result.bound_ok[d];
  }
  report["per_dim_rq"] = values;
  report["per_dim_bound"] = bounds;
  report["term_count"] = terms;
  report["bound_ok"] = ok;
  report["ties_broken"] = result.ties_broken;
  emit(cfg, out, report.dump(2) + "\n");
  if (cfg.strict && !all_ok) return kAssertion;
  return kOk;
}

int cmd_points(const RunConfig& cfg, std::ostream& out) {
  const NetSource net = build_net(cfg);
  const NetPointSet points = generate_points(net.mats, cfg.caps.points);
  if (cfg.format == "csv") {
    std::ostringstream text;
    write_points_csv(text, points, cfg.as_float);
    emit(cfg, out, text.str());
    return kOk;
  }
  if (cfg.format != "json") throw UsageError("--format must be json or csv");
  Json report{{"command", "points"}};
  report.update(describe(net));
  report["den"] = points.den;
  Json rows = Json::array();
  for (std::uint64_t n = 0; n < points.size(); ++n) {
    Json row = Json::array();
    for (std::size_t i = 0; i < points.s; ++i) row.push_back(points.at(n, i));
    rows.push_back(row);
  }
  report["numerators"] = rows;
  emit(cfg, out, report.dump(2) + "\n");
  return kOk;
}

int cmd_bounds(const RunConfig& cfg, std::ostream& out) {
  if (cfg.m.empty() || cfg.s.empty()) throw UsageError("bounds needs --m and --s (values or ranges)");
  const auto qs = parse_list(cfg.q, "--q");
  const auto ms = parse_list(cfg.m, "--m");
  const auto ss = parse_list(cfg.s, "--s");
  for (auto q : qs) {
    if (q < 2 || q > 0xffffffffULL) throw UsageError("--q entries must be prime powers >= 2");
    BaseField::of_order(static_cast<std::uint32_t>(q));
  }
  for (auto m : ms) {
    if (m == 0 || m > 60) throw UsageError("--m entries must lie in 1..60");
  }
  for (auto s : ss) {
    if (s == 0 || s > 64) throw UsageError("--s entries must lie in 1..64");
  }

  Json rows = Json::array();
  std::ostringstream csv;
  csv << "q,m,s,sigma,delta,corollary_floor,average_bound\n";
  for (auto q : qs) {
    for (auto m64 : ms) {
      for (auto s64 : ss) {
        const auto m = static_cast<unsigned>(m64);
        const auto s = static_cast<unsigned>(s64);
        const unsigned sigma = existence_sigma(q, s, m);
        const BigInt delta = delta_q(q, s, sigma);
        const long long floor = corollary_floor(q, s, m);
        const long double avg = average_bound(static_cast<std::uint32_t>(q), m, s);
        csv << q << ',' << m << ',' << s << ',' << sigma << ',' << delta.str() << ',' << floor << ','
            << number_text(avg) << '\n';
        rows.push_back(Json{{"q", q},
                            {"m", m},
                            {"s", s},
                            {"sigma", sigma},
                            {"delta", delta.str()},
                            {"corollary_floor", floor},
                            {"average_bound", static_cast<double>(avg)}});
      }
    }
  }
  if (cfg.format == "csv") {
    emit(cfg, out, csv.str());
  } else if (cfg.format == "json") {
    emit(cfg, out, Json{{"command", "bounds"}, {"rows", rows}}.dump(2) + "\n");
  } else {
    throw UsageError("--format must be json or csv");
  }
  return kOk;
}

void add_shared(CLI::App& sub, RunConfig& cfg) {
  sub.add_option("--q", cfg.q, "Field order q (prime power <= 256); bounds accepts lists/ranges like 2,3 or 1..8")
      ->capture_default_str();
  sub.add_option("--m", cfg.m, "Extension degree m (inferred from --modulus when omitted)");
  sub.add_option("--s", cfg.s, "Dimension s");
  sub.add_option("--modulus", cfg.modulus,
                 "Modulus f over F_q as coefficient codes, constant first (default: smallest irreducible)");
  sub.add_option("--base-modulus", cfg.base_modulus, "Modulus g of F_q over F_p for prime-power q");
  sub.add_option("--alpha", cfg.alpha, "Comma-separated encodings of alpha_1..alpha_s in F_{q^m}");
  sub.add_option("--cap-points", cfg.caps.points, "Cap on points and D* grid cells")->capture_default_str();
  sub.add_option("--cap-kernel", cfg.caps.kernel, "Cap on enumerated kernel elements")->capture_default_str();
  sub.add_option("--cap-intervals", cfg.caps.intervals, "Cap on elementary intervals per check")
      ->capture_default_str();
  sub.add_option("--threads", cfg.threads, "Worker threads (results do not depend on it)")
      ->capture_default_str()
      ->check(CLI::Range(1u, 1024u));
  sub.add_option("--format", cfg.format, "Report format")->capture_default_str()->check(CLI::IsMember({"json", "csv"}));
  sub.add_option("--out", cfg.out, "Write the report here instead of stdout");
  sub.add_flag("--strict", cfg.strict, "cbc: exit 4 when a per-prefix bound check fails");
}

void add_net(CLI::App& sub, RunConfig& cfg) {
  sub.add_flag("--explicit", cfg.use_explicit, "Use the explicit t = 0 construction (needs m >= 2, s <= q+1)");
  sub.add_option("--gpolys", cfg.gpolys, "General net: g_1;...;g_s as coefficient lists (with --modulus)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Vandermonde digital nets over finite fields", "vnet"};
  app.require_subcommand(1);

  auto* construct = app.add_subcommand("construct", "Build a net, certify t and rho, optionally write points");
  add_shared(*construct, cfg);
  add_net(*construct, cfg);
  construct->add_option("--points", cfg.points, "Write the point set as CSV to this path");
  construct->add_flag("--float", cfg.as_float, "Write decimal coordinates instead of numerators");

  auto* analyze = app.add_subcommand("analyze", "Quality, R_q, discrepancy bound and optional exact D*");
  add_shared(*analyze, cfg);
  add_net(*analyze, cfg);
  analyze->add_flag("--exact-dstar", cfg.exact_dstar, "Also compute the exact star discrepancy (s <= 3)");

  auto* cbc = app.add_subcommand("cbc", "Component-by-component search for alpha");
  add_shared(*cbc, cfg);
  cbc->add_option("--seed", cfg.seed, "irreducible: start from a root of f; explicit: start from the t = 0 prefix")
      ->capture_default_str()
      ->check(CLI::IsMember({"irreducible", "explicit"}));

  auto* points = app.add_subcommand("points", "Emit the point set");
  add_shared(*points, cfg);
  add_net(*points, cfg);
  points->add_flag("--float", cfg.as_float, "Write decimal coordinates instead of numerators");

  auto* bounds = app.add_subcommand("bounds", "Tabulate existence and average bounds over (q, m, s) grids");
  add_shared(*bounds, cfg);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  const std::map<const CLI::App*, std::function<int(const RunConfig&, std::ostream&)>> handlers{
      {construct, cmd_construct}, {analyze, cmd_analyze}, {cbc, cmd_cbc}, {points, cmd_points}, {bounds, cmd_bounds}};
  const CLI::App* chosen = app.get_subcommands().front();
  cfg.command = chosen->get_name();
  try {
    return handlers.at(chosen)(cfg, out);
  } catch (const UsageError& e) {
    err << "vnet: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "vnet: " << e.what() << "\n";
    return e.is_cap() ? kCap : kUsage;
  } catch (const std::exception& e) {
    err << "vnet: internal error: " << e.what() << "\n";
    return kAssertion;
  }
}

}  // namespace vnet::cli
