// symcone: membership queries, basis conversion, acceptance reproduction and plot data.
// Exit codes: 0 IN or success, 1 OUT or mismatch, 2 usage or parse error.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "symcone/dualcone.hpp"
#include "symcone/formfile.hpp"
#include "symcone/positivity.hpp"
#include "symcone/repro.hpp"
#include "symcone/sos.hpp"

using namespace symcone;
using ordered_json = nlohmann::ordered_json;

namespace {

constexpr int kIn = 0;
constexpr int kOut = 1;
constexpr int kUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ScopeFlags {
  std::optional<int> n;
  bool limit = false;

  void add_to(CLI::App* app) {
    auto* n_opt = app->add_option("--n", n, "number of variables (n >= 4 for decisions)");
    auto* l_opt = app->add_flag("--limit", limit, "the n -> infinity limit cone");
    n_opt->excludes(l_opt);
    l_opt->excludes(n_opt);
  }

  Scope required_scope() const {
    auto s = scope();
    if (!s) throw UsageError("one of --n or --limit is required");
    return *s;
  }

  std::optional<Scope> scope() const {
    if (limit) return Scope::limit();
    if (n) {
      if (*n < 1) throw UsageError("--n must be positive");
      return Scope::finite(*n);
    }
    return std::nullopt;
  }
};

std::string partition_key(const Partition& p) {
  std::string s;
  for (int part : p.parts()) s += (s.empty() ? "" : ",") + std::to_string(part);
  return s;
}

ordered_json coeffs_json(const SymFormP& f) {
  ordered_json out = ordered_json::object();
  const auto parts = partitions_of(f.degree);
  for (std::size_t i = 0; i < parts.size(); ++i) out[partition_key(parts[i])] = to_string(f.coeffs[i]);
  return out;
}

ordered_json matrix_json(const SymMat2& m) {
  return ordered_json::array({ordered_json::array({to_string(m.m11), to_string(m.m12)}),
                              ordered_json::array({to_string(m.m12), to_string(m.m22)})});
}

ordered_json functional_json(const DualFunctional& l) {
  ordered_json y = ordered_json::object();
  const auto parts = partitions_of(4);
  for (std::size_t i = 0; i < parts.size(); ++i) y[partition_key(parts[i])] = to_string(l.y[i]);
  return y;
}

SymFormP load_quartic(const std::string& path, Scope scope) {
  FormFile file = read_form_file(path);
  if (file.degree != 4) throw UsageError("decisions need degree 4, the file has degree " + std::to_string(file.degree));
  if (!scope.is_limit() && scope.n() < 4) throw UsageError("decisions need n >= 4");
  return form_to_p(file, scope);
}

int check_nonneg(const SymFormP& f, ordered_json& doc) {
  const bool limit = f.scope.is_limit();
  NonnegVerdict v = limit ? is_nonneg_limit(f) : is_nonneg(f);
  doc["verdict"] = v.in ? "IN" : "OUT";
  if (v.in && limit) doc["boundary"] = to_string(boundary_status_limit(f).status);
  if (v.in && !limit) doc["strictly_positive"] = is_strictly_positive(f);
  if (v.witness) {
    const auto& w = *v.witness;
    ordered_json wj{{"alpha", to_string(w.alpha)}, {"x", to_string(w.x)}, {"y", to_string(w.y)},
                    {"value", to_string(w.value)}};
    if (!limit) {
      const auto point = witness_point(w, f.scope.n());
      ordered_json pj = ordered_json::array();
      for (const auto& q : point) pj.push_back(to_string(q));
      wj["point"] = pj;
      wj["form_value"] = to_string(evaluate(f, point));
    }
    doc["witness"] = wj;
  }
  return v.in ? kIn : kOut;
}

int check_sos(const SymFormP& f, ordered_json& doc) {
  SosVerdict v = sos_membership(f, true);
  doc["verdict"] = v.in ? "IN" : "OUT";
  if (v.in) {
    if (!v.exact) {
      doc["exact"] = false;
      doc["gamma_polynomial"] = to_string(v.gamma_polynomial, "gamma");
      doc["gamma_interval"] = ordered_json::array({to_string(v.gamma_interval->lo), to_string(v.gamma_interval->hi)});
    } else if (v.certificate) {
      const SosCertificate& c = *v.certificate;
      if (!certificate_valid(c) || expand_certificate(c) != f) throw std::logic_error("certificate failed re-verification");
      doc["certificate"] = ordered_json{{"A", matrix_json(c.a)}, {"B", matrix_json(c.b)}, {"gamma", to_string(c.gamma)}};
      doc["certificate_verified"] = true;
    }
  } else if (v.separator) {
    const DualFunctional& l = *v.separator;
    const Rational value = pair(l, f);
    ordered_json sj{{"y", functional_json(l)}, {"pairing", to_string(value)}};
    bool member;
    if (f.scope.is_limit()) {
      member = dual_membership_limit(l);
    } else {
      DualBlocks b = dual_blocks(l, f.scope.n());
      sj["M_triv"] = matrix_json(b.triv);
      sj["M_hook"] = matrix_json(b.hook);
      sj["M_two_two"] = to_string(b.two_two);
      member = dual_membership(l, f.scope.n());
    }
    sj["verified"] = member && sgn(value) < 0;
    doc["separator"] = sj;
  }
  return v.in ? kIn : kOut;
}

int cmd_check(const std::string& what, const std::string& path, const ScopeFlags& flags) {
  const Scope scope = flags.required_scope();
  const SymFormP f = load_quartic(path, scope);
  ordered_json doc{{"command", "check " + what}, {"scope", scope.to_string()}, {"form", coeffs_json(f)}};
  const int code = what == "nonneg" ? check_nonneg(f, doc) : check_sos(f, doc);
  std::cout << doc.dump(2) << "\n";
  return code;
}

int cmd_repro(const std::string& name) {
  try {
    resolve_criterion(name);
  } catch (const std::invalid_argument& e) {
    std::cerr << "symcone: " << e.what() << "\n";
    return kUsage;
  }
  CriterionReport r = run_criterion(name);
  std::cout << format_report(r);
  return r.pass ? kIn : kOut;
}

int cmd_convert(const std::string& path, const std::string& to, const ScopeFlags& flags) {
  const Scope scope = flags.required_scope();
  FormFile file = read_form_file(path);
  FormFile out;
  try {
    if (to == "p") {
      out = form_file_from(form_to_p(file, scope));
    } else {
      out = form_file_from(form_to_m(file, scope), file.degree, scope);
    }
  } catch (const MathError& e) {
    std::cerr << "symcone: " << e.what() << "\n";
    return kOut;
  }
  out.description = file.description;
  std::cout << write_form_file(out);
  return kIn;
}

// Rational lower bound for inf_x h(x); nullopt when h is unbounded below.
std::optional<Rational> min_lower_bound(const UniPoly& h) {
  if (h.degree() <= 0) return h.coeff(0);
  if (h.degree() % 2 == 1 || sgn(h.leading()) < 0) return std::nullopt;
  const UniPoly dh = h.derivative();
  std::optional<Rational> best;
  for (const auto& iv : isolate_all_real_roots(squarefree_part(dh))) {
    AlgebraicReal r(squarefree_part(dh), iv);
    r.refine_below(Rational(1, 1 << 20));
    Rational bound;
    if (auto q = r.rational_value()) {
      bound = h(*q);
    } else {
      // |h'| <= sum i |h_i| R^(i-1) on [lo, hi].
      const Rational radius = std::max(abs(r.lo()), abs(r.hi()));
      Rational lip = 0, power = 1;
      for (int i = 1; i <= h.degree(); ++i) {
        lip += i * abs(h.coeff(i)) * power;
        power *= radius;
      }
      bound = h(r.lo()) - lip * (r.hi() - r.lo());
    }
    if (!best || bound < *best) best = bound;
  }
  return best;
}

int cmd_plotdata(const std::string& path, const std::string& what, int samples, bool decimal, const ScopeFlags& flags) {
  if (samples < 1) throw UsageError("--samples must be at least 1");
  FormFile file = read_form_file(path);
  if (file.degree != 4) throw UsageError("plot data needs degree 4");
  Scope scope = Scope::limit();
  if (auto s = flags.scope()) {
    scope = *s;
  } else if (file.scope) {
    scope = *file.scope;
  } else if (file.basis == Basis::Monomial) {
    scope = Scope::finite(file.monomials->nvars());
  }
  const SymFormP f = form_to_p(file, scope);
  auto show = [&](const Rational& q) { return decimal ? to_decimal(q, 15) : to_string(q); };
  const UniPoly disc = alpha_discriminant(f);
  std::cout << "alpha\t" << (what == "disc" ? "disc" : "minval") << "\n";
  for (int i = 0; i <= samples; ++i) {
    const Rational alpha = ratio(i, samples);
    std::cout << show(alpha) << "\t";
    if (what == "disc") {
      std::cout << show(disc(alpha));
    } else {
      auto m = min_lower_bound(restrict_alpha(f, alpha).dehomogenized());
      std::cout << (m ? show(*m) : std::string("-inf"));
    }
    std::cout << "\n";
  }
  return kIn;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact membership tests for symmetric quartic forms"};
  app.require_subcommand(1);

  std::string check_what, check_file;
  ScopeFlags check_scope;
  auto* check = app.add_subcommand("check", "decide membership in the nonnegative or SOS cone");
  check->add_option("cone", check_what, "nonneg | sos")->required()->check(CLI::IsMember({"nonneg", "sos"}));
  check->add_option("file", check_file, "form file")->required();
  check_scope.add_to(check);

  std::string repro_name;
  auto* repro = app.add_subcommand("repro", "run an acceptance reproduction");
  repro->add_option("name", repro_name, "criterion name or id (A1..A9)")->required();

  std::string convert_file, convert_to;
  ScopeFlags convert_scope;
  auto* convert = app.add_subcommand("convert", "convert a form file to the p or m basis");
  convert->add_option("file", convert_file, "form file")->required();
  convert->add_option("--to", convert_to, "target basis")->required()->check(CLI::IsMember({"p", "m"}));
  convert_scope.add_to(convert);

  std::string plot_file, plot_what = "disc";
  int plot_samples = 100;
  bool plot_decimal = false;
  ScopeFlags plot_scope;
  auto* plot = app.add_subcommand("plotdata", "sample the alpha-discriminant or the minimum of Phi^alpha(x, 1)");
  plot->add_option("file", plot_file, "form file")->required();
  plot->add_option("--what", plot_what, "disc | minval")->check(CLI::IsMember({"disc", "minval"}));
  plot->add_option("--samples", plot_samples, "number of alpha intervals");
  plot->add_flag("--decimal", plot_decimal, "decimal output with 15 significant digits");
  plot_scope.add_to(plot);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (*check) return cmd_check(check_what, check_file, check_scope);
    if (*repro) return cmd_repro(repro_name);
    if (*convert) return cmd_convert(convert_file, convert_to, convert_scope);
    if (*plot) return cmd_plotdata(plot_file, plot_what, plot_samples, plot_decimal, plot_scope);
  } catch (const FormFileError& e) {
    std::cerr << "symcone: " << e.what() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "symcone: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "symcone: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
