#include "heun_cli/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <sstream>

#include "heun/darboux.hpp"
#include "heun/numerics.hpp"
#include "heun/partners.hpp"
#include "heun/quasi.hpp"
#include "heun/spectral.hpp"

namespace heun::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr int kDefaultMaxSum = 8;

struct RunConfig {
  std::string subcommand;
  std::string l, alpha, n;
  std::optional<double> p;
  std::string checks = "all";
  std::optional<int> max_g;
  std::string format = "json";
  std::uint64_t seed = 1;
  int max_sum = kDefaultMaxSum;

  bool all_checks() const { return checks == "all"; }
};

json half(HalfInt h) {
  if (h.is_integer()) return h.to_int();
  return h.to_double();
}

json quad(const Quad& q) {
  json a = json::array();
  for (auto h : q) a.push_back(half(h));
  return a;
}

json poly(const EPolynomial& p) {
  json a = json::array();
  for (const auto& c : p.coeffs()) a.push_back(c.to_string());
  return a;
}

json tri(std::optional<bool> b) { return b ? json(*b) : json(nullptr); }

ParamTuple resolve_l(const RunConfig& c) {
  if (!c.l.empty() && !c.n.empty()) fail(ErrorCode::invalid_tuple, "give either --l or --n, not both");
  if (!c.n.empty()) {
    const Quad q = parse_quad(c.n);
    std::array<int, 4> n{};
    for (int i = 0; i < 4; ++i) {
      if (!q[i].is_integer()) fail(ErrorCode::invalid_tuple, "--n entries must be integers");
      n[i] = q[i].to_int();
    }
    return ParamTuple::from_n(n);
  }
  if (c.l.empty()) fail(ErrorCode::precondition, "missing --l (or --n)");
  return ParamTuple::parse(c.l);
}

void require_within_limit(const ParamTuple& l, const RunConfig& c) {
  int s = 0;
  for (auto h : canonical(l.l())) s += h.twice;
  if (s > 2 * c.max_sum)
    fail(ErrorCode::work_limit, "parameter sum " + l.sum().to_string() + " exceeds the work limit " +
                                    std::to_string(c.max_sum) + " (set HEUN_WORK_LIMIT to raise it)");
}

json cmd_spaces(const RunConfig& c, bool& passed) {
  const ParamTuple l = resolve_l(c);
  json out{{"l", quad(l.l())}};
  json spaces = json::array();
  for (const auto& a : decompose_V(l)) {
    json s{{"alpha", quad(a.a())}, {"d", a.d()}};
    std::vector<EllipticFn> basis;
    EPolynomial cp;
    if (l.is_integer()) {
      basis = U_space(a);
      cp = U_char_poly(a);
    } else if (a.d() >= 0) {
      basis = basis_V(a);
      cp = char_poly(a);
    } else {
      cp = EPolynomial(CoeffScalar(1));
    }
    s["dim"] = basis.size();
    if (!basis.empty() && l.is_integer()) {
      // Half-integer spaces carry quarter-power twists and have no sign character.
      const ParityClass pc = parity_of(basis[0]);
      s["parity"] = {pc.eps1, pc.eps3};
    } else {
      s["parity"] = nullptr;
    }
    s["charpoly"] = poly(cp);
    if (c.all_checks() && a.d() >= 0) {
      const bool t = transpose_check(a);
      passed = passed && t;
      s["transpose"] = t;
    }
    spaces.push_back(std::move(s));
  }
  out["dim_V"] = dim_V(l);
  if (l.is_integer()) {
    out["genus"] = genus(l);
    out["P"] = poly(P_of_E(l));
  } else {
    const auto n = l.n();
    if ((n[0] + n[1] + n[2] + n[3]) % 2) out["note"] = "sum of n is odd: no quasi-solvable space";
  }
  out["spaces"] = std::move(spaces);
  return out;
}

json cmd_spectral(const RunConfig& c, bool& passed) {
  const ParamTuple l = resolve_l(c);
  if (!l.is_integer()) fail(ErrorCode::mixed_parity, "spectral data needs an integer tuple");
  require_within_limit(l, c);
  WorkLimits limits;
  if (c.max_g) limits.max_g_square = *c.max_g;
  if (!c.all_checks()) limits.max_g_square = limits.max_g_commute = -1;
  const FiniteGapReport r = verify_finite_gap(l, limits);
  json xi{{"c0", poly(r.xi.c0)}};
  json b = json::object();
  for (int i = 0; i < 4; ++i) {
    json bi = json::array();
    for (const auto& p : r.xi.b[i]) bi.push_back(poly(p));
    b[std::to_string(i)] = std::move(bi);
  }
  xi["b"] = std::move(b);
  json a = json::array();
  for (const auto& aj : r.xi.a) a.push_back(aj.to_string());
  xi["a"] = std::move(a);
  json checks = json::object();
  for (const auto& [k, v] : r.checks) checks[k] = tri(v);
  passed = r.all_passed();
  return json{{"l", quad(l.l())},
              {"g", r.g},
              {"P", poly(r.P)},
              {"Q", poly(r.Q)},
              {"Xi", std::move(xi)},
              {"A", r.A.to_string()},
              {"checks", std::move(checks)},
              {"a_squared_plus_sign", tri(r.a_squared_plus)}};
}

json cmd_partners(const RunConfig& c, bool& passed) {
  const ParamTuple l = resolve_l(c);
  const PartnerFamily f = family(l);
  json out{{"l", quad(l.l())}};
  if (l.is_integer()) {
    out["canonical_partner"] = quad(canonical_partner(l).l());
    out["self_dual"] = f.self_dual;
  } else {
    const auto n = l.n();
    if ((n[0] + n[1] + n[2] + n[3]) % 2 == 0) {
      const HalfIntegerDuals d = half_integer_duals(n);
      out["regime"] = d.regime;
      out["partners"] = {quad(d.first.l()), quad(d.second.l())};
    }
  }
  if (f.note) out["note"] = *f.note;
  json members = json::array();
  for (const auto& m : f.members) {
    json j{{"raw", quad(m.raw)},
           {"member", quad(m.member.l())},
           {"witness", m.witness ? quad(m.witness->a()) : json(nullptr)},
           {"shift", m.shift},
           {"link", m.describe()}};
    if (c.all_checks()) {
      const bool ok = witness_residual(l, m).is_zero();
      passed = passed && ok;
      j["verified"] = ok;
    } else {
      j["verified"] = nullptr;
    }
    members.push_back(std::move(j));
  }
  out["members"] = std::move(members);
  return out;
}

json cmd_darboux(const RunConfig& c, bool& passed) {
  if (c.alpha.empty()) fail(ErrorCode::precondition, "missing --alpha");
  const AlphaTuple a = AlphaTuple::parse(c.alpha);
  a.require_nonnegative_d();
  const ParamTuple l = (c.l.empty() && c.n.empty()) ? ParamTuple(a.owner()) : resolve_l(c);
  if (!a.admissible_for(l.l())) fail(ErrorCode::invalid_tuple, "alpha is not admissible for l");
  const DiffOp L = build_L(a);
  json out{{"l", quad(l.l())},
           {"alpha", quad(a.a())},
           {"d", a.d()},
           {"target", quad(intertwine_target(a))},
           {"L", L.to_string()}};
  if (c.all_checks()) {
    const bool residual = verify_intertwine(l, a).is_zero();
    const bool wr = build_L_wronskian(basis_V(a)) == L;
    passed = residual && wr;
    out["checks"] = {{"intertwine", residual}, {"wronskian", wr}};
  } else {
    out["checks"] = {{"intertwine", nullptr}, {"wronskian", nullptr}};
  }
  return out;
}

json cmd_generic(const RunConfig& c, bool& passed) {
  const ParamTuple l = resolve_l(c);
  if (!l.is_integer()) fail(ErrorCode::mixed_parity, "the distinctness report needs an integer tuple");
  require_within_limit(l, c);
  const std::vector<double> nomes = c.p ? std::vector<double>{*c.p} : seeded_nomes(c.seed, 3);
  json reports = json::array();
  for (double p : nomes) {
    const DistinctnessReport r = distinctness_report(l, numeric_from_nome(p, 12));
    json roots = json::array();
    for (const auto& z : r.roots) roots.push_back({z.real(), z.imag()});
    passed = passed && r.distinct();
    reports.push_back({{"p", p},
                       {"roots", std::move(roots)},
                       {"min_separation", std::isfinite(r.min_separation) ? json(r.min_separation) : json(nullptr)},
                       {"spread", r.spread},
                       {"distinct", r.distinct()},
                       {"resolved", r.resolved()}});
  }
  json out{{"l", quad(l.l())}, {"reports", std::move(reports)}};
  if (!c.p) out["seed"] = c.seed;
  return out;
}

void render_text(const json& j, std::ostream& out, const std::string& prefix = "") {
  for (const auto& [k, v] : j.items()) {
    if (v.is_object() && !v.empty()) {
      render_text(v, out, prefix + k + ".");
    } else if (v.is_string()) {
      out << prefix << k << ": " << v.get<std::string>() << '\n';
    } else {
      out << prefix << k << ": " << v.dump() << '\n';
    }
  }
}

void emit(const json& j, const RunConfig& c, std::ostream& out) {
  if (c.format == "text")
    render_text(j, out);
  else
    out << j.dump(2) << '\n';
}

std::optional<int> env_limit(std::ostream& err) {
  const char* s = std::getenv("HEUN_WORK_LIMIT");
  if (!s || !*s) return std::nullopt;
  int v = 0;
  const char* end = s + std::char_traits<char>::length(s);
  auto [ptr, ec] = std::from_chars(s, end, v);
  if (ec != std::errc() || ptr != end || v <= 0) {
    err << "ignoring HEUN_WORK_LIMIT=" << s << ": not a positive integer\n";
    return std::nullopt;
  }
  return v;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig c;
  if (auto v = env_limit(err)) c.max_sum = *v;

  CLI::App app{"Exact spectral data and Darboux partners of elliptic-form Heun operators", "heun"};
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();

  const auto formats = CLI::IsMember({"json", "text"});
  const auto modes = CLI::IsMember({"all", "fast"});
  auto common = [&](CLI::App* s, bool n_allowed) {
    s->add_option("--l", c.l, "parameters l0,l1,l2,l3 (integers or halves such as 3/2)");
    if (n_allowed) s->add_option("--n", c.n, "half-integer tuple given as n with l = n - 1/2");
    s->add_option("--checks", c.checks, "verification depth")->transform(modes);
    s->add_option("--format", c.format, "output format")->transform(formats);
  };

  auto* spaces = app.add_subcommand("spaces", "invariant spaces and their characteristic polynomials");
  common(spaces, true);
  auto* spectral = app.add_subcommand("spectral", "Xi, P, Q, the commuting operator and the identity checks");
  common(spectral, false);
  spectral->add_option("--max-g", c.max_g, "largest genus for which A^2 = -Q(H) is checked")->check(CLI::NonNegativeNumber);
  auto* partners = app.add_subcommand("partners", "isomonodromic partner family with witnesses");
  common(partners, true);
  auto* darboux = app.add_subcommand("darboux", "the intertwiner L_alpha and its residual");
  common(darboux, true);
  darboux->add_option("--alpha", c.alpha, "alpha0,alpha1,alpha2,alpha3")->required();
  auto* generic = app.add_subcommand("generic", "distinctness of the roots of P at numeric nomes");
  common(generic, false);
  generic->add_option("--p", c.p, "nome (default: three seeded nomes in (0, 0.2))");
  generic->add_option("--seed", c.seed, "seed for the sampled nomes");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : usage;
  }
  c.subcommand = app.get_subcommands().front()->get_name();

  try {
    bool passed = true;
    json body;
    if (c.subcommand == "spaces") body = cmd_spaces(c, passed);
    else if (c.subcommand == "spectral") body = cmd_spectral(c, passed);
    else if (c.subcommand == "partners") body = cmd_partners(c, passed);
    else if (c.subcommand == "darboux") body = cmd_darboux(c, passed);
    else body = cmd_generic(c, passed);
    json j{{"schema", 1}, {"command", c.subcommand}};
    j.update(body);
    j["passed"] = passed;
    emit(j, c, out);
    return passed ? ok : check_failed;
  } catch (const Error& e) {
    json j{{"schema", 1},
           {"command", c.subcommand},
           {"error", {{"code", to_string(e.code())}, {"message", e.what()}}}};
    emit(j, c, out);
    err << "error[" << to_string(e.code()) << "]: " << e.what() << '\n';
    return library_error;
  }
}

}  // namespace heun::cli
