#include "cli.hpp"

#include "json_out.hpp"

#include "isodist/approx.hpp"
#include "isodist/parse.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>

namespace isodist::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);
  return parts;
}

apex::ApexWitness parse_apex_witness(const std::string& s) {
  const auto parts = split(s, ',');
  if (parts.size() != 3) throw UsageError("apex witness must be p,q,s");
  apex::ApexWitness w{parse_rational(parts[0]), parse_rational(parts[1]), parse_sign(parts[2])};
  w.validate();
  return w;
}

base::BaseWitness parse_base_witness(const std::string& s) {
  const auto parts = split(s, ',');
  if (parts.size() != 5) throw UsageError("base witness must be p,q,r,eps,eps'");
  base::BaseWitness w{parse_rational(parts[0]), parse_rational(parts[1]), parse_rational(parts[2]),
                      parse_sign(parts[3]), parse_sign(parts[4])};
  w.validate();
  return w;
}

std::vector<Rational> parse_list(const std::string& s, std::size_t n, const char* what) {
  std::vector<Rational> v = parse_rational_list(s);
  if (v.size() != n) throw UsageError(std::string(what) + " needs " + std::to_string(n) + " comma-separated rationals");
  return v;
}

std::uint32_t checked(std::uint32_t h, std::uint32_t cap) {
  if (h == 0) throw UsageError("--height must be positive");
  if (h > cap) {
    throw UsageError("--height " + std::to_string(h) + " exceeds the cap " + std::to_string(cap) +
                     " (set ISODIST_MAX_HEIGHT to change it)");
  }
  return h;
}

base::BaseTriangle base_triangle(const ExactReal& ts) {
  auto t = base::BaseTriangle::from_theta_sq(ts);
  if (!t) throw DomainError("theta^2 - 1 does not denest into two rational square roots: not suitable");
  return *t;
}

std::string verdict_reason(const base::Decision& d) {
  if (const auto* u = std::get_if<base::UnknownUpTo>(&d)) {
    return "no witness up to height " + std::to_string(u->height) + "; suitability unknown";
  }
  if (const auto* n = std::get_if<base::NotSuitable>(&d)) return "not suitable: " + n->reason;
  return "";
}

struct Options {
  bool json = false;
  bool timing = false;
  std::string family;
  std::string theta_sq;
  std::string witness;
  std::string rst;
  std::string point;
  std::string param;
  std::string check_against;
  std::string p, q, w;
  std::uint32_t height = 0;
  std::uint32_t oracle_height = 0;
  std::size_t count = 8;
  std::size_t pyth_count = 10;
  int digits = 20;
};

// A token that would otherwise read as a flag: "-72/25", "-1".
bool negative_number(const std::string& s) {
  return s.size() > 1 && s[0] == '-' && (std::isdigit(static_cast<unsigned char>(s[1])) != 0);
}

// "--" shields the next value only, so flags may still follow it.
std::vector<std::string> shield_negatives(const std::vector<std::string>& args) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--" && i + 1 < args.size() && negative_number(args[i + 1])) {
      out.push_back("\x1f" + args[++i]);
      continue;
    }
    out.push_back(args[i]);
  }
  return out;
}

std::string unshield(const std::string& s) { return !s.empty() && s[0] == '\x1f' ? s.substr(1) : s; }

Json cmd_decide(const Options& o, const Limits& lim) {
  const ExactReal ts = ExactReal::parse(o.theta_sq);
  Json r;
  r["family"] = o.family;
  r["thetaSq"] = to_json(ts);
  if (o.family == "apex") {
    r.update(to_json(apex::decide(apex::ApexTriangle(ts))));
    return r;
  }
  const std::uint32_t h = checked(o.height ? o.height : lim.default_height, lim.height_cap);
  r["height"] = h;
  r.update(to_json(base::decide(ts, h)));
  return r;
}

Json cmd_construct(const Options& o, const Limits& lim) {
  const ExactReal ts = ExactReal::parse(o.theta_sq);
  Json r;
  r["family"] = o.family;
  r["thetaSq"] = to_json(ts);
  Json pts = Json::array();
  if (o.family == "apex") {
    const apex::ApexTriangle t(ts);
    std::vector<apex::ApexCertificate> certs;
    if (!o.witness.empty()) {
      const apex::ApexWitness w = parse_apex_witness(o.witness);
      if (w.realize() != ts) throw DomainError("witness realizes " + w.realize().to_string() + ", not theta^2");
      r["route"] = "witness";
      r["witness"] = to_json(w);
      certs = apex::construct_points(t, w, o.count);
    } else if (ts.is_rational()) {
      const Rational a = Rational(1) - ts.rational() / Rational(2);
      r["route"] = "psi-sweep";
      certs = apex::lemma21_points(t, apex::default_psi_sweep(a, o.count));
    } else {
      const apex::Decision d = apex::decide(t);
      const auto* s = std::get_if<apex::Suitable>(&d);
      if (s == nullptr) {
        throw DomainError("not suitable: " + apex::to_string(std::get<apex::NotSuitable>(d).reason));
      }
      r["route"] = "witness";
      r["witness"] = to_json(s->witness);
      certs = apex::construct_points(t, s->witness, o.count);
    }
    for (const auto& c : certs) pts.push_back(to_json(c, t, o.digits));
    r["points"] = pts;
    return r;
  }

  const base::BaseTriangle t = base_triangle(ts);
  std::vector<base::BasePoint> points;
  auto take = [&](const base::BaseWitness& w) {
    r["witness"] = to_json(w);
    points = base::construct_points(t, w);
  };
  if (!o.witness.empty()) {
    const base::BaseWitness w = parse_base_witness(o.witness);
    if (!base::verify_witness(t, w)) throw DomainError("witness does not realize Phi = " + t.phi().to_string());
    r["route"] = "witness";
    take(w);
  } else if (ts.is_rational() && ts.rational() != Rational(1)) {
    const Rational f = ts.rational() - Rational(1);
    const std::uint64_t n0 = base::lemma31_min_n(f);
    r["route"] = "rational";
    r["nFirst"] = n0;
    for (std::uint64_t n = n0; n < n0 + o.count; ++n) {
      for (auto& m : base::lemma31_points(t, n)) points.push_back(std::move(m));
    }
  } else {
    const std::uint32_t h = checked(o.height ? o.height : lim.default_height, lim.height_cap);
    const base::Decision d = base::decide(ts, h);
    if (const auto* rr = std::get_if<base::RationalRoute>(&d)) {
      r["route"] = "rational";
      take(rr->witness);
    } else if (const auto* f = std::get_if<base::Found>(&d)) {
      r["route"] = "search";
      take(f->witness);
    } else {
      throw DomainError(verdict_reason(d));
    }
  }
  for (const auto& m : points) pts.push_back(to_json(m, t, o.digits));
  r["points"] = pts;
  return r;
}

Json cmd_verify(const Options& o) {
  const ExactReal ts = ExactReal::parse(o.theta_sq);
  Json r;
  r["family"] = o.family;
  r["thetaSq"] = to_json(ts);
  if (o.family == "apex") {
    if (o.rst.empty()) throw UsageError("verify --family apex needs --rst R,S,T");
    const auto v = parse_list(o.rst, 3, "--rst");
    const apex::ApexWitness w = apex::extract_witness(v[0], v[1], v[2], apex::ApexTriangle(ts));
    r["witness"] = to_json(w);
    r["realizes"] = to_json(w.realize());
    r["consistent"] = w.realize() == ts;
    return r;
  }
  if (o.point.empty()) throw UsageError("verify --family base needs --point x0,e,R,S,r");
  const auto v = parse_list(o.point, 5, "--point");
  const base::BaseTriangle t = base_triangle(ts);
  const base::BaseWitness w = base::extract_witness(v[0], v[1], v[2], v[3], v[4], t);
  r["witness"] = to_json(w);
  r["consistent"] = base::verify_witness(t, w);
  return r;
}

Json cmd_locus(const Options& o, const Limits& lim) {
  const ExactReal ts = ExactReal::parse(o.theta_sq);
  if (ts.is_rational()) throw DomainError("locus lines are defined for irrational theta^2 only");
  Json r;
  r["family"] = o.family;
  r["thetaSq"] = to_json(ts);
  if (o.family == "apex") {
    const apex::ApexTriangle t(ts);
    apex::ApexWitness w;
    if (!o.witness.empty()) {
      w = parse_apex_witness(o.witness);
      if (w.realize() != ts) throw DomainError("witness realizes " + w.realize().to_string() + ", not theta^2");
    } else {
      const apex::Decision d = apex::decide(t);
      const auto* s = std::get_if<apex::Suitable>(&d);
      if (s == nullptr) {
        throw DomainError("not suitable: " + apex::to_string(std::get<apex::NotSuitable>(d).reason));
      }
      w = s->witness;
    }
    r["witness"] = to_json(w);
    r.update(to_json(apex::locus_lines(t, w)));
    return r;
  }
  const base::BaseTriangle t = base_triangle(ts);
  if (!o.witness.empty() && !base::verify_witness(t, parse_base_witness(o.witness))) {
    throw DomainError("witness does not realize Phi = " + t.phi().to_string());
  }
  (void)lim;
  const auto lines = base::locus_lines(t);
  r["phi"] = to_json(t.phi());
  r["ordinates"] = Json::array({to_json(lines[0]), to_json(lines[1])});
  return r;
}

Json cmd_omega_value(const Options& o) {
  const Rational p = parse_rational(o.p);
  const Rational q = parse_rational(o.q);
  Json r;
  r["p"] = to_json(p);
  r["q"] = to_json(q);
  r["value"] = to_json(omega::omega_value(p, q));
  return r;
}

Json cmd_omega_search(const Options& o, const Limits& lim) {
  const Rational w = parse_rational(o.w);
  const std::uint32_t h = checked(o.height ? o.height : lim.default_height, lim.height_cap);
  const auto reps = omega::search_representations(w, h);
  Json r;
  r["omega"] = to_json(w);
  r["height"] = h;
  r["count"] = reps.size();
  Json list = Json::array();
  for (const auto& x : reps) list.push_back(to_json(x));
  r["representations"] = list;
  return r;
}

Json cmd_omega_pyth(const Options& o) {
  const auto reps = omega::pythagorean_reps_of_one(o.pyth_count);
  Json r;
  r["count"] = reps.size();
  Json list = Json::array();
  for (const auto& x : reps) list.push_back(to_json(x));
  r["representations"] = list;
  return r;
}

Json cmd_oracle(const std::string& family, const Options& o, const Limits& lim, bool& ok) {
  if (!o.check_against.empty() && o.check_against != "construct") {
    throw UsageError("--check-against accepts only 'construct'");
  }
  const Rational param = parse_rational(o.param);
  const std::uint32_t h = checked(o.oracle_height ? o.oracle_height : lim.oracle_default, lim.oracle_cap);
  Json r;
  r["family"] = family;
  r["param"] = to_json(param);
  r["paramMeaning"] = family == "apex" ? "theta^2" : "Phi^2 = theta^2 - 1";
  r["height"] = h;
  const auto hits = family == "apex" ? oracle::apex_oracle(param, h) : oracle::base_oracle(param, h);
  r["hitCount"] = hits.size();
  Json list = Json::array();
  for (const auto& x : hits) list.push_back(to_json(x));
  r["hits"] = list;
  if (!o.check_against.empty()) {
    const oracle::CrossCheck c = family == "apex" ? oracle::check_apex_against_construct(param, h)
                                                  : oracle::check_base_against_construct(param, h);
    r["check"] = to_json(c);
    ok = c.ok();
  }
  return r;
}

Json error_doc(const std::string& command, const std::string& kind, const std::string& message,
               std::optional<std::size_t> position) {
  Json doc;
  doc["schemaVersion"] = kSchemaVersion;
  doc["status"] = "error";
  doc["command"] = command;
  Json e;
  e["kind"] = kind;
  e["message"] = message;
  if (position) e["position"] = *position;
  doc["error"] = e;
  return doc;
}

}  // namespace

Limits limits_from_env() {
  Limits lim;
  if (const char* env = std::getenv("ISODIST_MAX_HEIGHT")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v <= 1000000) {
      lim.height_cap = static_cast<std::uint32_t>(v);
      lim.oracle_cap = static_cast<std::uint32_t>(v);
    }
  }
  return lim;
}

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err, const Limits& lim) {
  Options o;
  CLI::App app{"Rational-distance points for the isosceles triangles (1, theta, 1) and (theta, 2, theta)", "isodist"};
  app.set_version_flag("--version", kVersion);
  app.add_flag("--json", o.json, "Emit one JSON document");
  app.add_flag("--timing", o.timing, "Include wall time in the output");
  app.require_subcommand(1);
  app.fallthrough();

  const std::vector<std::string> families{"apex", "base"};
  auto family_opt = [&](CLI::App* sub) {
    sub->add_option("--family", o.family, "apex: (1, theta, 1); base: (theta, 2, theta)")
        ->required()
        ->check(CLI::IsMember(families));
  };
  auto theta_opt = [&](CLI::App* sub) {
    sub->add_option("--theta-sq", o.theta_sq, "theta^2 as an exact value, e.g. \"2+sqrt(3)\"")->required();
  };

  auto* decide = app.add_subcommand("decide", "Decide suitability of theta^2");
  family_opt(decide);
  theta_opt(decide);
  decide->add_option("--height", o.height, "Witness search height (base family)");

  auto* construct = app.add_subcommand("construct", "Construct points with rational distances to the vertices");
  family_opt(construct);
  theta_opt(construct);
  construct->add_option("--witness", o.witness, "apex: p,q,s; base: p,q,r,eps,eps'");
  construct->add_option("--count", o.count, "Sweep length for rational theta^2")->check(CLI::Range(1, 1000));
  construct->add_option("--digits", o.digits, "Significant digits of approximations")
      ->check(CLI::Range(1, static_cast<int>(kMaxApproxDigits)));
  construct->add_option("--height", o.height, "Witness search height (base family)");

  auto* verify = app.add_subcommand("verify", "Recover a witness from a point");
  family_opt(verify);
  theta_opt(verify);
  verify->add_option("--rst", o.rst, "apex: distances R,S,T to A, B, C");
  verify->add_option("--point", o.point, "base: x0,e,R,S,r with y0^2 = e, MB = R, MC = S, MA = r");

  auto* locus = app.add_subcommand("locus", "Lines holding every point, for irrational theta^2");
  family_opt(locus);
  theta_opt(locus);
  locus->add_option("--witness", o.witness, "apex: p,q,s; base: p,q,r,eps,eps'");

  auto* omega = app.add_subcommand("omega", "The set of values (p^2-1)(q^2-1)");
  omega->require_subcommand(1);
  auto* ovalue = omega->add_subcommand("value", "Evaluate (p^2-1)(q^2-1)");
  ovalue->add_option("p", o.p)->required();
  ovalue->add_option("q", o.q)->required();
  auto* osearch = omega->add_subcommand("search", "Representations of w with heights <= H");
  osearch->add_option("w", o.w, "Target value; write negative values after --")->required();
  osearch->add_option("--height", o.height, "Height bound");
  auto* opyth = omega->add_subcommand("pyth", "Representations of 1 from Pythagorean triples");
  opyth->add_option("--count", o.pyth_count)->check(CLI::Range(1, 10000));

  auto* orc = app.add_subcommand("oracle", "Brute-force rediscovery of rational-distance points");
  orc->require_subcommand(1);
  std::vector<CLI::App*> oracle_subs;
  for (const char* fam : {"apex", "base"}) {
    auto* s = orc->add_subcommand(fam, std::string("Oracle for the ") + fam + " family");
    s->add_option("--param", o.param, fam == std::string("apex") ? "theta^2 (rational)" : "Phi^2 (rational)")
        ->required();
    s->add_option("--height", o.oracle_height, "Box bound: denominators and values <= H");
    s->add_option("--check-against", o.check_against, "construct");
    oracle_subs.push_back(s);
  }

  std::vector<std::string> args = shield_negatives(raw_args);
  std::reverse(args.begin(), args.end());
  std::string command;
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  for (std::string* f : {&o.family, &o.theta_sq, &o.witness, &o.rst, &o.point, &o.param, &o.p, &o.q, &o.w}) {
    *f = unshield(*f);
  }
  for (CLI::App* sub : app.get_subcommands()) {
    command = sub->get_name();
    for (CLI::App* inner : sub->get_subcommands()) command += " " + inner->get_name();
  }

  const auto start = std::chrono::steady_clock::now();
  Json input;
  for (const std::string& a : raw_args) input.push_back(a);

  auto fail = [&](const std::string& kind, const std::string& message, std::optional<std::size_t> pos, int code) {
    if (o.json) {
      out << error_doc(command, kind, message, pos).dump(2) << "\n";
    } else {
      err << "error (" << kind << "): " << message << "\n";
    }
    return code;
  };

  Json result;
  bool ok = true;
  try {
    if (decide->parsed()) {
      result = cmd_decide(o, lim);
    } else if (construct->parsed()) {
      result = cmd_construct(o, lim);
    } else if (verify->parsed()) {
      result = cmd_verify(o);
    } else if (locus->parsed()) {
      result = cmd_locus(o, lim);
    } else if (ovalue->parsed()) {
      result = cmd_omega_value(o);
    } else if (osearch->parsed()) {
      result = cmd_omega_search(o, lim);
    } else if (opyth->parsed()) {
      result = cmd_omega_pyth(o);
    } else {
      for (CLI::App* s : oracle_subs) {
        if (s->parsed()) result = cmd_oracle(s->get_name(), o, lim, ok);
      }
    }
  } catch (const ParseError& e) {
    return fail("parse", e.what(), e.position(), kExitUsage);
  } catch (const UsageError& e) {
    return fail("usage", e.what(), std::nullopt, kExitUsage);
  } catch (const DomainError& e) {
    return fail("domain", e.what(), std::nullopt, kExitDomain);
  } catch (const std::invalid_argument& e) {
    return fail("domain", e.what(), std::nullopt, kExitDomain);
  }

  Json doc;
  doc["schemaVersion"] = kSchemaVersion;
  doc["status"] = ok ? "ok" : "error";
  doc["command"] = command;
  doc["result"] = result;
  Json meta;
  meta["version"] = kVersion;
  meta["input"] = input;
  if (o.timing) {
    const auto us = std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start);
    meta["timingMs"] = static_cast<double>(us.count()) / 1000.0;
  }
  doc["meta"] = meta;

  if (o.json) {
    out << doc.dump(2) << "\n";
  } else {
    out << render_text(doc);
  }
  return ok ? kExitOk : kExitDomain;
}

}  // namespace isodist::cli
