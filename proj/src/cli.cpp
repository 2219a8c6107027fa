#include "rmtorus/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "rmtorus/ecpoints.hpp"
#include "rmtorus/errors.hpp"
#include "rmtorus/freealg.hpp"
#include "rmtorus/intmat.hpp"
#include "rmtorus/json_writer.hpp"
#include "rmtorus/quadratic.hpp"
#include "rmtorus/skewlaurent.hpp"
#include "rmtorus/units.hpp"

namespace rmt::cli {

namespace {

enum class Format { Json, Tsv };

struct Config {
  std::string subcommand;
  std::string theta;
  std::string prime;
  std::string primes;
  std::vector<std::string> curves;
  std::string curves_file;
  std::string conductor = "1";
  std::string matrix;
  std::string star_p = "1,0";
  std::string star_q = "0,0";
  std::int64_t cap = kDefaultPiSearchCap;
  std::string output = "json";
  bool summary = false;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, sep)) parts.push_back(cur);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

std::vector<Int> parse_ints(const std::string& text, std::size_t expected, const char* what) {
  const auto parts = split(text, ',');
  if (expected != 0 && parts.size() != expected) {
    throw ValidationError(std::string(what) + ": expected " + std::to_string(expected) + " comma-separated integers, got '" +
                          text + "'");
  }
  std::vector<Int> out;
  for (const auto& part : parts) {
    try {
      out.push_back(parse_int(part));
    } catch (const std::invalid_argument&) {
      throw ValidationError(std::string(what) + ": '" + part + "' is not an integer");
    }
  }
  return out;
}

std::int64_t parse_small(const std::string& text, const char* what) {
  const Int v = parse_ints(text, 1, what).front();
  if (v < 0 || v > Int(std::numeric_limits<std::int64_t>::max())) {
    throw ValidationError(std::string(what) + ": out of range");
  }
  return static_cast<std::int64_t>(v);
}

QuadraticIrrational parse_theta(const std::string& text) {
  const auto v = parse_ints(text, 3, "theta (P,D,Q)");
  return QuadraticIrrational::make(v[0], v[1], v[2]);
}

QuadraticIrrational parse_torus_theta(const std::string& text) {
  QuadraticIrrational theta = parse_theta(text);
  if (!theta.in_unit_interval()) throw ValidationError("theta must lie in (0, 1) for this command");
  return theta;
}

std::int64_t parse_prime(const std::string& text) {
  const std::int64_t p = parse_small(text, "--p");
  if (!is_prime(p)) throw ValidationError("--p: " + text + " is not prime");
  return p;
}

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_int(text));
  const Int den = parse_int(text.substr(slash + 1));
  if (den == 0) throw ValidationError("zero denominator in '" + text + "'");
  return Rational(parse_int(text.substr(0, slash)), den);
}

GaussRat parse_gauss(const std::string& text, const char* what) {
  const auto parts = split(text, ',');
  if (parts.size() != 2) throw ValidationError(std::string(what) + ": expected re,im");
  try {
    return {parse_rational(parts[0]), parse_rational(parts[1])};
  } catch (const std::invalid_argument& e) {
    throw ValidationError(std::string(what) + ": " + e.what());
  }
}

std::vector<Curve> collect_curves(const Config& cfg) {
  std::vector<Curve> curves;
  for (const auto& c : cfg.curves) {
    const auto v = parse_ints(c, 2, "--curve a,b");
    curves.push_back(make_curve(v[0], v[1]));
  }
  if (!cfg.curves_file.empty()) {
    std::ifstream in(cfg.curves_file);
    if (!in) throw ValidationError("cannot open curves file '" + cfg.curves_file + "'");
    std::string line;
    while (std::getline(in, line)) {
      line.erase(std::remove_if(line.begin(), line.end(), [](unsigned char ch) { return std::isspace(ch); }),
                 line.end());
      if (line.empty() || line.front() == '#') continue;
      const auto v = parse_ints(line, 2, "curves file line");
      curves.push_back(make_curve(v[0], v[1]));
    }
  }
  if (curves.empty()) throw ValidationError("no curve given (use --curve a,b or --curves-file)");
  return curves;
}

json::Value matrix_json(const IMat2& m) {
  return json::Value::array({json::int_array({m.a, m.b}), json::int_array({m.c, m.d})});
}

std::string join(const std::vector<Int>& v, const char* sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += v[i].str();
  }
  return out;
}

std::string tsv(std::initializer_list<std::string> cols) {
  std::string out;
  for (const auto& c : cols) {
    if (!out.empty()) out += '\t';
    out += c;
  }
  return out;
}

std::string mat_tsv(const IMat2& m) { return join({m.a, m.b, m.c, m.d}); }

// ---------------------------------------------------------------------------

void cmd_cfrac(const Config& cfg, Format fmt, std::ostream& out) {
  const QuadraticIrrational theta = parse_theta(cfg.theta);
  const ContinuedFraction cf = cf_expand(theta);
  if (fmt == Format::Tsv) {
    out << tsv({theta.P().str(), theta.D().str(), theta.Q().str(), join(cf.preperiod), join(cf.period)}) << '\n';
    return;
  }
  json::Object o;
  o.add("P", json::Value::integer(theta.P()))
      .add("D", json::Value::integer(theta.D()))
      .add("Q", json::Value::integer(theta.Q()))
      .add("preperiod", json::int_array(cf.preperiod))
      .add("period", json::int_array(cf.period));
  out << o.str() << '\n';
}

void cmd_matrix(const Config& cfg, Format fmt, std::ostream& out) {
  const ContinuedFraction cf = cf_expand(parse_theta(cfg.theta));
  const IMat2 A = matrix_A(cf.period);
  if (fmt == Format::Tsv) {
    out << tsv({join(cf.period), mat_tsv(A), mat_trace(A).str(), mat_det(A).str()}) << '\n';
    return;
  }
  json::Object o;
  o.add("period", json::int_array(cf.period))
      .add("A", matrix_json(A))
      .add("trace", json::Value::integer(mat_trace(A)))
      .add("det", json::Value::integer(mat_det(A)));
  out << o.str() << '\n';
}

void cmd_unit(const Config& cfg, Format fmt, std::ostream& out) {
  const QuadraticIrrational theta = parse_theta(cfg.theta);
  const Int f = parse_ints(cfg.conductor, 1, "--conductor").front();
  if (f < 1) throw ValidationError("--conductor must be >= 1");
  const OrderElt eps = fundamental_unit({theta, f});
  const Rational n = elt_norm(eps);
  if (fmt == Format::Tsv) {
    out << tsv({eps.x.str(), eps.y.str(), to_string(n)}) << '\n';
    return;
  }
  json::Object o;
  o.add("x", json::Value::integer(eps.x))
      .add("y", json::Value::integer(eps.y))
      .add("norm", json::Value::integer(boost::multiprecision::numerator(n)));
  out << o.str() << '\n';
}

void cmd_pi(const Config& cfg, Format fmt, std::ostream& out) {
  const QuadraticIrrational theta = parse_torus_theta(cfg.theta);
  const std::int64_t p = parse_prime(cfg.prime);
  const std::int64_t pi = pi_index(theta, p, cfg.cap);
  const Int T = mat_trace(mat_pow(matrix_A(cf_expand(theta).period), pi));
  if (fmt == Format::Tsv) {
    out << tsv({std::to_string(pi), T.str()}) << '\n';
    return;
  }
  json::Object o;
  o.add("pi", json::Value::integer(pi)).add("trace_Apow", json::Value::integer(T));
  out << o.str() << '\n';
}

void cmd_lp(const Config& cfg, Format fmt, std::ostream& out) {
  const QuadraticIrrational theta = parse_torus_theta(cfg.theta);
  const FingerprintRow row = fingerprint_row(theta, parse_prime(cfg.prime), cfg.cap);
  if (fmt == Format::Tsv) {
    out << tsv({std::to_string(row.pi), row.T.str(), mat_tsv(row.Lp), row.detImL.str(), row.group.d1.str(),
                row.group.d2.str()})
        << '\n';
    return;
  }
  json::Object o;
  o.add("pi", json::Value::integer(row.pi))
      .add("T", json::Value::integer(row.T))
      .add("Lp", matrix_json(row.Lp))
      .add("detImL", json::Value::integer(row.detImL))
      .add("group", json::int_array({row.group.d1, row.group.d2}));
  out << o.str() << '\n';
}

void cmd_group(const Config& cfg, Format fmt, std::ostream& out) {
  const auto v = parse_ints(cfg.matrix, 4, "--matrix a,b,c,d");
  const IMat2 L{v[0], v[1], v[2], v[3]};
  const AbelianGroup g = cokernel_group(L);
  const Int det = mat_det(mat_sub(IMat2::identity(), L));
  if (fmt == Format::Tsv) {
    out << tsv({det.str(), g.d1.str(), g.d2.str(), g.order().str()}) << '\n';
    return;
  }
  json::Object o;
  o.add("detImL", json::Value::integer(det))
      .add("group", json::int_array({g.d1, g.d2}))
      .add("order", g.is_finite() ? json::Value::integer(g.order()) : json::Value::null());
  out << o.str() << '\n';
}

void cmd_count(const Config& cfg, Format fmt, std::ostream& out) {
  const std::int64_t p = parse_prime(cfg.prime);
  for (const Curve& E : collect_curves(cfg)) {
    const PointCount pc = count_points(E, p);
    if (fmt == Format::Tsv) {
      out << tsv({E.a.str(), E.b.str(), std::to_string(p), std::to_string(pc.count), std::to_string(pc.a_p)}) << '\n';
      continue;
    }
    json::Object o;
    o.add("curve", json::int_array({E.a, E.b}))
        .add("p", json::Value::integer(p))
        .add("count", json::Value::integer(pc.count))
        .add("a_p", json::Value::integer(pc.a_p));
    out << o.str() << '\n';
  }
}

void cmd_match(const Config& cfg, Format fmt, std::ostream& out) {
  const QuadraticIrrational theta = parse_torus_theta(cfg.theta);
  std::vector<std::int64_t> primes;
  if (!cfg.primes.empty()) {
    for (const auto& token : split(cfg.primes, ',')) primes.push_back(parse_small(token, "--primes"));
  }
  for (std::int64_t p : primes) {
    if (!is_prime(p)) throw ValidationError("--primes: " + std::to_string(p) + " is not prime");
  }
  for (const Curve& E : collect_curves(cfg)) {
    const MatchReport report = match_curve(theta, E, primes, cfg.cap);
    for (const MatchRow& row : report.rows) {
      const FingerprintRow& fp = row.fp;
      if (fmt == Format::Tsv) {
        out << tsv({std::to_string(fp.p), E.a.str(), E.b.str(), std::to_string(fp.pi), fp.T.str(), fp.detImL.str(),
                    fp.group.d1.str(), fp.group.d2.str(), row.ec_count ? std::to_string(*row.ec_count) : "-",
                    row.match ? (*row.match ? "true" : "false") : "-"})
            << '\n';
        continue;
      }
      json::Object o;
      o.add("p", json::Value::integer(fp.p))
          .add("curve", json::int_array({E.a, E.b}))
          .add("pi", json::Value::integer(fp.pi))
          .add("T", json::Value::integer(fp.T))
          .add("detImL", json::Value::integer(fp.detImL))
          .add("group", json::int_array({fp.group.d1, fp.group.d2}))
          .add("ec_count", row.ec_count ? json::Value::integer(*row.ec_count) : json::Value::null())
          .add("match", row.match ? json::Value::boolean(*row.match) : json::Value::null());
      out << o.str() << '\n';
    }
    if (cfg.summary && fmt == Format::Json) {
      auto ints = [](const std::vector<std::int64_t>& v) { return std::vector<Int>(v.begin(), v.end()); };
      json::Object s;
      s.add("curve", json::int_array({E.a, E.b}))
          .add("matching", json::int_array(ints(report.matching)))
          .add("mismatching", json::int_array(ints(report.mismatching)))
          .add("skipped", json::int_array(ints(report.skipped)));
      out << json::Object().add("summary", s.value()).str() << '\n';
    }
  }
}

void cmd_skew_demo(std::ostream& out) {
  const AffineAut shift(1, 1);
  const SkewPoly t = SkewPoly::monomial(shift, 1, 1);
  const SkewPoly u = SkewPoly::monomial(shift, Coeff::u(), 0);
  const SkewPoly ut = SkewPoly::monomial(shift, Coeff::u(), 1);

  out << "R[t, t^-1; alpha] over Q(i)[u] with alpha(u) = u + 1\n\n";
  out << "sample products\n";
  const std::vector<std::pair<std::string, SkewPoly>> elems = {{"t", t}, {"u", u}, {"u*t", ut}};
  for (const auto& [ln, lhs] : elems) {
    for (const auto& [rn, rhs] : elems) {
      out << "  (" << ln << ") * (" << rn << ") = " << to_string(skew_mul(lhs, rhs)) << '\n';
    }
  }
  out << "  t^2 * u = " << to_string(skew_mul(skew_mul(t, t), u)) << '\n';
  out << "  star(u*t) = " << to_string(skew_star(ut)) << '\n';
  out << "\nX1 = t, X2 = u*t\n";
  const SkewPoly rel = t * ut - ut * t - t * t;
  out << "  X1*X2 - X2*X1 - X1^2 = " << to_string(rel) << '\n';
  out << "  relation holds: " << (verify_example2() ? "true" : "false") << '\n';
  out << "  with alpha(u) = u + 2: " << (verify_example2(AffineAut(1, 2)) ? "true" : "false") << '\n';
  out << "  with alpha = id: " << (verify_example2(AffineAut::identity()) ? "true" : "false") << '\n';
}

void cmd_star_check(const Config& cfg, Format fmt, std::ostream& out) {
  const AffineAut alpha(parse_gauss(cfg.star_p, "--p"), parse_gauss(cfg.star_q, "--q"));
  const bool coherent = check_star_coherent(alpha);
  if (fmt == Format::Tsv) {
    out << (coherent ? "true" : "false") << '\n';
    return;
  }
  out << json::Object().add("coherent", json::Value::boolean(coherent)).str() << '\n';
}

void cmd_ustar_check(Format fmt, std::ostream& out) {
  const PreservationResult r = relation_preserved(u_infinity_relation(), RewriteSystem::u_infinity());
  if (fmt == Format::Tsv) {
    out << tsv({r.preserved ? "true" : "false", to_string(r.residual)}) << '\n';
    return;
  }
  json::Object o;
  o.add("preserved", json::Value::boolean(r.preserved)).add("residual", json::Value::string(to_string(r.residual)));
  out << o.str() << '\n';
}

// A lone "--" in front of a negative theta such as "-1,2,1" only guards the
// sign; CLI11 would otherwise turn every later flag into a positional.
std::vector<std::string> strip_sign_guards(const std::vector<std::string>& args) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--" && i + 1 < args.size() && args[i + 1].size() > 1 && args[i + 1][0] == '-' &&
        std::isdigit(static_cast<unsigned char>(args[i + 1][1]))) {
      continue;
    }
    out.push_back(args[i]);
  }
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Exact arithmetic for real-multiplication tori, their units, L_p matrices and cokernel groups"};
  app.name("rmtorus");
  app.require_subcommand(1);
  app.add_option("--output", cfg.output, "Output format")->check(CLI::IsMember({"json", "tsv"}));
  app.add_option("--cap", cfg.cap, "Iteration cap for the pi(p) power search")->check(CLI::PositiveNumber);

  auto theta_opt = [&](CLI::App* sub) {
    sub->add_option("theta", cfg.theta, "Quadratic irrational (P+sqrt(D))/Q as P,D,Q")->required();
  };
  auto sub = [&](const char* name, const char* help) {
    CLI::App* s = app.add_subcommand(name, help);
    s->fallthrough();
    s->callback([&cfg, name] { cfg.subcommand = name; });
    return s;
  };

  theta_opt(sub("cfrac", "Periodic continued fraction of theta"));
  theta_opt(sub("matrix", "Period matrix A of theta"));
  {
    CLI::App* s = sub("unit", "Fundamental unit of Z + (f theta)Z");
    theta_opt(s);
    s->add_option("--conductor", cfg.conductor, "Conductor f >= 1");
  }
  for (const char* name : {"pi", "lp"}) {
    CLI::App* s = sub(name, name == std::string("pi") ? "Index pi(p) and tr(A^pi(p))" : "Matrix L_p and its cokernel");
    theta_opt(s);
    s->add_option("--p", cfg.prime, "Prime p")->required();
  }
  sub("group", "Cokernel Z^2/(I-L)Z^2")->add_option("--matrix", cfg.matrix, "L as a,b,c,d (row-major)")->required();
  {
    CLI::App* s = sub("count", "Points on y^2 = x^3 + a x + b over F_p");
    s->add_option("--curve", cfg.curves, "Curve a,b");
    s->add_option("--curves-file", cfg.curves_file, "CSV file with one a,b per line");
    s->add_option("--p", cfg.prime, "Prime p")->required();
  }
  {
    CLI::App* s = sub("match", "Compare |det(I - L_p)| with #E(F_p) prime by prime");
    theta_opt(s);
    s->add_option("--curve", cfg.curves, "Curve a,b");
    s->add_option("--curves-file", cfg.curves_file, "CSV file with one a,b per line");
    s->add_option("--primes", cfg.primes, "Comma-separated primes")->required();
    s->add_flag("--summary", cfg.summary, "Append a summary line per curve");
  }
  sub("skew-demo", "Skew Laurent ring demo for alpha(u) = u + 1");
  {
    CLI::App* s = sub("star-check", "Is u -> p u + q compatible with the involution?");
    s->add_option("--p", cfg.star_p, "p as re,im");
    s->add_option("--q", cfg.star_q, "q as re,im");
  }
  sub("ustar-check", "Does x1* = x2 preserve the U_infinity relation?");

  std::vector<std::string> reversed = strip_sign_guards(args);
  std::reverse(reversed.begin(), reversed.end());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  }

  const Format fmt = cfg.output == "tsv" ? Format::Tsv : Format::Json;
  try {
    const std::string& c = cfg.subcommand;
    if (c == "cfrac") cmd_cfrac(cfg, fmt, out);
    else if (c == "matrix") cmd_matrix(cfg, fmt, out);
    else if (c == "unit") cmd_unit(cfg, fmt, out);
    else if (c == "pi") cmd_pi(cfg, fmt, out);
    else if (c == "lp") cmd_lp(cfg, fmt, out);
    else if (c == "group") cmd_group(cfg, fmt, out);
    else if (c == "count") cmd_count(cfg, fmt, out);
    else if (c == "match") cmd_match(cfg, fmt, out);
    else if (c == "skew-demo") cmd_skew_demo(out);
    else if (c == "star-check") cmd_star_check(cfg, fmt, out);
    else if (c == "ustar-check") cmd_ustar_check(fmt, out);
  } catch (const SearchCapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitSearchCap;
  } catch (const std::invalid_argument& e) {  // includes ValidationError
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitOk;
}

}  // namespace rmt::cli
