#include "cli.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "skewfq/error.hpp"
#include "skewfq/factor.hpp"
#include "skewfq/parse.hpp"
#include "skewfq/plt.hpp"
#include "skewfq/verify.hpp"

namespace skewfq::cli {

namespace {

using json = nlohmann::ordered_json;

struct Output {
  json data = json::object();
  std::string text;
};

[[noreturn]] void usage(const std::string& message) { throw ParseError(0, {}, message); }

RingSpec ring_of(const Command& cmd) {
  if (!cmd.ring) usage("missing --ring <spec>, e.g. --ring \"field:p=2,n=2\"");
  try {
    return parse_ring_spec(*cmd.ring);
  } catch (const ParseError& e) {
    throw ParseError(e.offset(), e.expected(), "--ring " + std::string(e.what()));
  }
}

void need_args(const Command& cmd, std::size_t n) {
  if (cmd.args.size() != n) {
    usage(cmd.name + " takes " + std::to_string(n) + " polynomial argument" + (n == 1 ? "" : "s") + ", got " +
          std::to_string(cmd.args.size()));
  }
}

template <class Fn>
auto parsed(const std::string& label, Fn&& fn) {
  try {
    return fn();
  } catch (const ParseError& e) {
    throw ParseError(e.offset(), e.expected(), label + " " + e.what());
  }
}

FieldSkew field_arg(const Command& cmd, const FrobeniusTwist& tw, std::size_t i) {
  return parsed("argument " + std::to_string(i + 1), [&] { return parse_field_skew(cmd.args[i], tw); });
}

TruncSkew trunc_arg(const Command& cmd, const DerivationTwist& tw, std::size_t i) {
  return parsed("argument " + std::to_string(i + 1), [&] { return parse_trunc_skew(cmd.args[i], tw); });
}

std::string at_arg(const Command& cmd) {
  if (!cmd.at) usage(cmd.name + " needs --at <element>");
  return *cmd.at;
}

std::string factor_product(const FqElem& unit, const std::vector<FieldSkew>& factors) {
  std::string out;
  if (!unit.is_one()) out = unit.term_count() > 1 ? "(" + to_string(unit) + ")" : to_string(unit);
  for (const auto& f : factors) {
    if (!out.empty()) out += "*";
    const std::string s = to_string(f);
    const std::size_t nonzero = std::count_if(f.coeffs().begin(), f.coeffs().end(),
                                              [](const FqElem& c) { return !c.is_zero(); });
    out += nonzero > 1 || f.leading().term_count() > 1 ? "(" + s + ")" : s;
  }
  return out;
}

template <class T>
json strings(const std::vector<T>& xs) {
  json out = json::array();
  for (const auto& x : xs) out.push_back(to_string(x));
  return out;
}

json matrix_json(const FqMatrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(strings(m.row(r)));
  return out;
}

std::string joined(const json& arr, const char* sep) {
  std::string out;
  for (const auto& x : arr) {
    if (!out.empty()) out += sep;
    out += x.get<std::string>();
  }
  return out;
}

std::string flag(bool b) { return b ? "true" : "false"; }

// Operations defined over both coefficient rings.
template <class Fn>
Output on_either(const RingSpec& spec, Fn&& fn) {
  if (spec.kind == RingSpec::Kind::Field) return fn(spec.field_twist());
  return fn(spec.trunc_twist());
}

template <class Twist>
auto poly_arg(const Command& cmd, const Twist& tw, std::size_t i) {
  if constexpr (Twist::kIsField) {
    return field_arg(cmd, tw, i);
  } else {
    return trunc_arg(cmd, tw, i);
  }
}

template <class Twist>
auto elem_arg(const Twist& tw, const std::string& src) {
  return parsed("--at", [&] {
    if constexpr (Twist::kIsField) {
      return parse_field_elem(src, tw.field);
    } else {
      return parse_trunc_elem(src, tw.ring);
    }
  });
}

Output cmd_eval(const Command& cmd) {
  need_args(cmd, 1);
  return on_either(ring_of(cmd), [&](const auto& tw) {
    const auto f = poly_arg(cmd, tw, 0);
    const auto a = elem_arg(tw, at_arg(cmd));
    const auto v = evaluate(f, a);
    Output o;
    o.data["polynomial"] = to_string(f);
    o.data["at"] = to_string(a);
    o.data["value"] = to_string(v);
    o.text = to_string(v);
    return o;
  });
}

Output cmd_mul(const Command& cmd) {
  need_args(cmd, 2);
  return on_either(ring_of(cmd), [&](const auto& tw) {
    const auto p = poly_arg(cmd, tw, 0) * poly_arg(cmd, tw, 1);
    Output o;
    o.data["product"] = to_string(p);
    o.text = to_string(p);
    return o;
  });
}

Output cmd_divmod(const Command& cmd) {
  need_args(cmd, 2);
  return on_either(ring_of(cmd), [&](const auto& tw) {
    const auto [q, r] = right_divmod(poly_arg(cmd, tw, 0), poly_arg(cmd, tw, 1));
    Output o;
    o.data["quotient"] = to_string(q);
    o.data["remainder"] = to_string(r);
    o.text = "quotient: " + to_string(q) + "\nremainder: " + to_string(r);
    return o;
  });
}

Output cmd_rgcd(const Command& cmd) {
  need_args(cmd, 2);
  return on_either(ring_of(cmd), [&](const auto& tw) {
    const auto g = rgcd(poly_arg(cmd, tw, 0), poly_arg(cmd, tw, 1));
    Output o;
    o.data["rgcd"] = to_string(g);
    o.text = to_string(g);
    return o;
  });
}

Output cmd_llclm(const Command& cmd) {
  need_args(cmd, 2);
  return on_either(ring_of(cmd), [&](const auto& tw) {
    const auto f = poly_arg(cmd, tw, 0);
    const auto g = poly_arg(cmd, tw, 1);
    const auto m = llclm(f, g);
    Output o;
    o.data["llclm"] = to_string(m);
    o.data["cofactor_f"] = to_string(right_divmod(m, make_monic(f)).first);
    o.data["cofactor_g"] = to_string(right_divmod(m, make_monic(g)).first);
    o.text = to_string(m);
    return o;
  });
}

Output cmd_bracket(const Command& cmd) {
  need_args(cmd, 1);
  const auto tw = ring_of(cmd).field_twist();
  const CPoly b = bracket_map(field_arg(cmd, tw, 0));
  Output o;
  o.data["bracket"] = to_string(b);
  o.text = to_string(b);
  return o;
}

Output cmd_unbracket(const Command& cmd) {
  need_args(cmd, 1);
  const auto tw = ring_of(cmd).field_twist();
  const CPoly g = parsed("argument 1", [&] { return parse_cpoly(cmd.args[0], tw.field); });
  const FieldSkew f = unbracket_map(g);
  Output o;
  o.data["polynomial"] = to_string(f);
  o.text = to_string(f);
  return o;
}

json factorization_json(const SkewFactorization& s) {
  json out;
  out["unit"] = to_string(s.unit);
  out["factors"] = strings(s.factors);
  out["product_form"] = factor_product(s.unit, s.factors);
  return out;
}

void add_bracket_data(json& data, const FieldSkew& f) {
  const CPoly b = bracket_map(make_monic(f));
  data["bracket_poly"] = to_string(b);
  data["bracket_factors"] = json::array();
  for (const auto& fac : factorize(b).factors) {
    data["bracket_factors"].push_back({{"factor", to_string(fac.factor)}, {"multiplicity", fac.multiplicity}});
  }
  data["splitting_degree"] = splitting_field_degree(f);
}

Output cmd_factor(const Command& cmd) {
  need_args(cmd, 1);
  const auto tw = ring_of(cmd).field_twist();
  const FieldSkew f = field_arg(cmd, tw, 0);
  Output o;
  o.data["input"] = to_string(f);
  if (cmd.alternates <= 1) {
    const auto s = factorize(f, cmd.cap);
    o.data.update(factorization_json(s));
    add_bracket_data(o.data, f);
    o.text = factor_product(s.unit, s.factors);
    return o;
  }
  const auto all = alternate_factorizations(f, cmd.alternates, cmd.cap);
  o.data.update(factorization_json(all.front()));
  add_bracket_data(o.data, f);
  o.data["alternates"] = json::array();
  for (const auto& s : all) {
    o.data["alternates"].push_back(factorization_json(s));
    if (!o.text.empty()) o.text += "\n";
    o.text += factor_product(s.unit, s.factors);
  }
  return o;
}

Output cmd_irreducible(const Command& cmd) {
  need_args(cmd, 1);
  const auto tw = ring_of(cmd).field_twist();
  const auto r = is_irreducible(field_arg(cmd, tw, 0), cmd.cap);
  Output o;
  o.data["irreducible"] = r.irreducible;
  o.data["bracket"] = to_string(r.certificate.bracket_poly);
  o.data["bracket_factors"] = json::array();
  for (const auto& fac : r.certificate.bracket_factors.factors) {
    o.data["bracket_factors"].push_back({{"factor", to_string(fac.factor)}, {"multiplicity", fac.multiplicity}});
  }
  o.data["right_factor"] = r.certificate.right_factor ? json(to_string(*r.certificate.right_factor)) : json(nullptr);
  o.text = flag(r.irreducible);
  if (r.certificate.right_factor) o.text += "\nright factor: " + to_string(*r.certificate.right_factor);
  return o;
}

Output cmd_roots(const Command& cmd) {
  need_args(cmd, 1);
  const auto tw = ring_of(cmd).field_twist();
  const auto rs = skew_roots(field_arg(cmd, tw, 0));
  Output o;
  o.data["roots"] = strings(rs);
  o.text = joined(o.data["roots"], "\n");
  return o;
}

Output cmd_gm_audit(const Command& cmd) {
  need_args(cmd, 1);
  const auto tw = ring_of(cmd).field_twist();
  const auto a = gm_audit(field_arg(cmd, tw, 0));
  Output o;
  o.data["degree"] = a.degree;
  o.data["classes"] = json::array();
  std::ostringstream text;
  for (const auto& c : a.classes) {
    o.data["classes"].push_back({{"rep", to_string(c.representative)},
                                 {"class_size", c.class_size},
                                 {"root_count", c.root_count},
                                 {"kernel_dim", c.kernel_dim}});
    text << "class of " << to_string(c.representative) << ": size " << c.class_size << ", roots " << c.root_count
         << ", kernel dim " << c.kernel_dim << "\n";
  }
  o.data["sum"] = a.sum;
  o.data["bound_held"] = a.bound_held;
  o.data["wedderburn_equality"] = a.wedderburn_equality;
  text << "sum " << a.sum << " <= degree " << a.degree << ": " << flag(a.bound_held) << "\n";
  text << "wedderburn equality: " << flag(a.wedderburn_equality);
  o.text = text.str();
  return o;
}

Output cmd_eigenring(const Command& cmd) {
  need_args(cmd, 1);
  const auto tw = ring_of(cmd).field_twist();
  const auto basis = eigenring(field_arg(cmd, tw, 0));
  Output o;
  o.data["dimension_over_fp"] = basis.size();
  o.data["basis"] = json::array();
  std::string text = "dimension over F_p: " + std::to_string(basis.size());
  for (const auto& b : basis) {
    o.data["basis"].push_back(matrix_json(b));
    text += "\n";
    for (std::size_t r = 0; r < b.rows(); ++r) text += (r ? "; " : "[") + joined(strings(b.row(r)), " ");
    text += "]";
  }
  o.text = text;
  return o;
}

Output cmd_homspace(const Command& cmd) {
  need_args(cmd, 2);
  const auto tw = ring_of(cmd).field_twist();
  const auto h = hom_space(field_arg(cmd, tw, 0), field_arg(cmd, tw, 1));
  Output o;
  o.data["dimension_over_fp"] = h.kernel.dim();
  o.data["witnesses"] = strings(h.witnesses);
  o.text = "dimension over F_p: " + std::to_string(h.kernel.dim());
  for (const auto& w : h.witnesses) o.text += "\n" + to_string(w);
  return o;
}

Output cmd_conj_classes(const Command& cmd) {
  need_args(cmd, 0);
  const auto tw = ring_of(cmd).field_twist();
  Output o;
  o.data["classes"] = json::array();
  for (const auto& c : conjugacy_classes(tw.field, tw.power)) {
    o.data["classes"].push_back({{"rep", to_string(c.representative)},
                                 {"size", c.members.size()},
                                 {"centralizer_degree", c.centralizer_degree},
                                 {"members", strings(c.members)}});
    if (!o.text.empty()) o.text += "\n";
    o.text += "{" + joined(strings(c.members), ", ") + "}";
  }
  return o;
}

Output cmd_min_vanishing(const Command& cmd) {
  need_args(cmd, 0);
  const auto tw = ring_of(cmd).field_twist();
  if (tw.effective_power() != 1 % tw.field->degree()) {
    fail(ErrorKind::UnsupportedTwist, "min-vanishing needs sigma = theta");
  }
  const auto m = min_vanishing(tw.field);
  Output o;
  o.data["polynomial"] = to_string(m.polynomial);
  o.data["degree"] = m.polynomial.degree();
  o.data["matches_closed_form"] = m.matches_closed_form;
  o.data["invariance"] = m.invariant;
  o.text = to_string(m.polynomial) + "\ninvariance: " + flag(m.invariant);
  return o;
}

Output cmd_hilbert90(const Command& cmd) {
  need_args(cmd, 0);
  const auto tw = ring_of(cmd).field_twist();
  const auto h = hilbert90(tw.field);
  Output o;
  o.data["roots"] = strings(h.roots);
  o.data["delta_one"] = strings(h.delta_one);
  o.data["equal"] = h.equal;
  o.text = "V(t^n-1) = {" + joined(o.data["roots"], ", ") + "}\nDelta(1) = {" + joined(o.data["delta_one"], ", ") +
           "}\nequal: " + flag(h.equal);
  return o;
}

Output cmd_frobenius_law(const Command& cmd) {
  need_args(cmd, 0);
  const auto tw = ring_of(cmd).trunc_twist();
  std::vector<TruncElem> points;
  if (cmd.at) {
    points.push_back(elem_arg(tw, *cmd.at));
  } else {
    points = tw.ring->elements();
  }
  Output o;
  o.data["derivation_is_leibniz"] = derivation_is_leibniz(*tw.ring);
  o.data["results"] = json::array();
  bool all = true;
  for (const auto& a : points) {
    const auto r = frobenius_law_check(tw, a);
    all = all && r.equal;
    o.data["results"].push_back(
        {{"a", to_string(a)}, {"lhs", to_string(r.lhs)}, {"rhs", to_string(r.rhs)}, {"equal", r.equal}});
    if (!o.text.empty()) o.text += "\n";
    o.text += "a=" + to_string(a) + ": " + to_string(r.lhs) + (r.equal ? " == " : " != ") + to_string(r.rhs);
  }
  o.data["all_equal"] = all;
  if (!derivation_is_leibniz(*tw.ring)) o.text += "\nnote: d/du is not a derivation here (p does not divide m)";
  return o;
}

Output cmd_splitting_degree(const Command& cmd) {
  need_args(cmd, 1);
  const auto tw = ring_of(cmd).field_twist();
  const auto d = splitting_field_degree(field_arg(cmd, tw, 0));
  Output o;
  o.data["degree"] = d;
  o.text = std::to_string(d);
  return o;
}

Output cmd_verify(const Command& cmd, int& status) {
  need_args(cmd, 0);
  VerifyReport report{cmd.seed, {}};
  if (cmd.suite) {
    report.suites.push_back(run_suite(*cmd.suite, cmd.seed));
  } else {
    report = run_verify(cmd.seed);
  }
  Output o;
  o.data["seed"] = report.seed;
  o.data["passed"] = report.passed();
  o.data["suites"] = json::array();
  for (const auto& s : report.suites) {
    o.data["suites"].push_back(
        {{"name", s.name}, {"cases", s.cases}, {"violations", s.violations}, {"failures", s.failures}});
    if (!o.text.empty()) o.text += "\n";
    o.text += std::string(s.passed() ? "PASS " : "FAIL ") + s.name + " cases=" + std::to_string(s.cases) +
              " violations=" + std::to_string(s.violations);
    for (const auto& f : s.failures) o.text += "\n  " + f;
  }
  o.text += std::string("\n") + (report.passed() ? "all suites passed" : "some suites failed");
  status = report.passed() ? kOk : kCheckFailed;
  return o;
}

using Handler = std::function<Output(const Command&, int&)>;

template <Output (*Fn)(const Command&)>
Handler plain() {
  return [](const Command& c, int&) { return Fn(c); };
}

const std::vector<std::pair<std::string, std::pair<std::string, Handler>>>& commands() {
  static const std::vector<std::pair<std::string, std::pair<std::string, Handler>>> table{
      {"eval", {"f(a): remainder of f on right division by t - a", plain<cmd_eval>()}},
      {"mul", {"product f g", plain<cmd_mul>()}},
      {"divmod", {"right division f = q g + r", plain<cmd_divmod>()}},
      {"rgcd", {"monic right gcd", plain<cmd_rgcd>()}},
      {"llclm", {"monic least left common multiple", plain<cmd_llclm>()}},
      {"bracket", {"f^[] in F_q[x]", plain<cmd_bracket>()}},
      {"unbracket", {"skew polynomial of a bracket polynomial in x", plain<cmd_unbracket>()}},
      {"factor", {"factorization into irreducibles", plain<cmd_factor>()}},
      {"irreducible", {"irreducibility with certificate", plain<cmd_irreducible>()}},
      {"roots", {"all a with f(a) = 0", plain<cmd_roots>()}},
      {"gm-audit", {"root classes and kernel dimensions against deg f", plain<cmd_gm_audit>()}},
      {"eigenring", {"F_p-basis of the eigenring of R/Rp", plain<cmd_eigenring>()}},
      {"homspace", {"Hom(R/Rf, R/Rp) as ker f(T_p)", plain<cmd_homspace>()}},
      {"conj-classes", {"conjugacy classes of F_q", plain<cmd_conj_classes>()}},
      {"min-vanishing", {"LLCM of all t - a", plain<cmd_min_vanishing>()}},
      {"hilbert90", {"V(t^n - 1) against Delta(1)", plain<cmd_hilbert90>()}},
      {"frobenius-law", {"(t - a)^p against t^p - T_a^p(1) over F_p[u]/(u^m)", plain<cmd_frobenius_law>()}},
      {"splitting-degree", {"degree of the splitting field of f^[]", plain<cmd_splitting_degree>()}},
      {"verify", {"run every invariant suite and the worked examples", cmd_verify}},
  };
  return table;
}

int exit_code_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::ParseError:
      return kParse;
    case ErrorKind::DegreeOverflow:
      return kCap;
    case ErrorKind::InvariantViolation:
      return kInternal;
    default:
      return kMath;
  }
}

int report_error(std::ostream& err, const std::string& kind, const std::string& message, int code,
                 const ParseError* pe = nullptr) {
  json e{{"kind", kind}, {"message", message}, {"exit_code", code}};
  if (pe != nullptr) {
    e["offset"] = pe->offset();
    e["expected"] = pe->expected();
  }
  err << json{{"error", e}}.dump() << "\n";
  return code;
}

}  // namespace

int run(const Command& cmd, std::ostream& out, std::ostream& err) {
  const auto& table = commands();
  const auto it = std::find_if(table.begin(), table.end(), [&](const auto& e) { return e.first == cmd.name; });
  try {
    if (it == table.end()) usage("unknown subcommand '" + cmd.name + "'");
    int status = kOk;
    Output o = it->second.second(cmd, status);
    if (cmd.json) {
      json doc{{"command", cmd.name}};
      if (cmd.ring) doc["ring"] = ring_of(cmd).canonical();
      doc.update(o.data);
      out << doc.dump(2) << "\n";
    } else {
      out << o.text << "\n";
    }
    return status;
  } catch (const ParseError& e) {
    return report_error(err, "ParseError", e.what(), kParse, &e);
  } catch (const Error& e) {
    return report_error(err, std::string(to_string(e.kind())), e.what(), exit_code_for(e));
  } catch (const std::exception& e) {
    return report_error(err, "Internal", e.what(), kInternal);
  }
}

int main_entry(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact arithmetic, evaluation and factorization in skew polynomial rings over finite fields"};
  app.require_subcommand(1);
  Command cmd;
  cmd.seed = kDefaultSeed;
  cmd.cap = kDefaultDivisorCap;
  std::string ring;
  std::string at;
  std::string suite;
  for (const auto& [name, entry] : commands()) {
    CLI::App* sub = app.add_subcommand(name, entry.first);
    sub->add_option("--ring", ring, "ring spec, e.g. field:p=2,n=2 or trunc:p=3,m=3");
    sub->add_flag("--json", cmd.json, "machine-readable output");
    sub->add_option("--seed", cmd.seed, "seed for randomized checks");
    sub->add_option("--alternates", cmd.alternates, "number of factorizations to list")->check(CLI::PositiveNumber);
    sub->add_option("--cap", cmd.cap, "divisor enumeration cap")->check(CLI::PositiveNumber);
    sub->add_option("--at", at, "element to evaluate at");
    if (name == "verify") sub->add_option("--suite", suite, "run a single suite");
    sub->add_option("polynomials", cmd.args, "polynomial arguments");
  }
  try {
    std::vector<std::string> reversed(argv.rbegin(), argv.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help());
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    return report_error(err, "ParseError", e.what(), kParse);
  }
  cmd.name = app.get_subcommands().front()->get_name();
  const CLI::App* sub = app.get_subcommands().front();
  if (sub->count("--ring") > 0) cmd.ring = ring;
  if (sub->count("--at") > 0) cmd.at = at;
  if (cmd.name == "verify" && sub->count("--suite") > 0) cmd.suite = suite;
  return run(cmd, out, err);
}

}  // namespace skewfq::cli
