#include "skewfq/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "skewfq/error.hpp"
#include "skewfq/factor.hpp"
#include "skewfq/parse.hpp"
#include "skewfq/random.hpp"

namespace skewfq {

namespace {

constexpr std::size_t kMaxReportedFailures = 5;

class Checker {
 public:
  explicit Checker(SuiteResult& r) : r_(r) {}

  void check(bool ok, const std::string& what) {
    ++r_.cases;
    if (ok) return;
    record(what);
  }

  // Runs one case; a library error counts as a violation.
  void run(const std::string& what, const std::function<bool()>& body) {
    bool ok = false;
    std::string detail = what;
    try {
      ok = body();
    } catch (const Error& e) {
      detail += " threw " + std::string(to_string(e.kind())) + ": " + e.what();
    }
    check(ok, detail);
  }

 private:
  void record(const std::string& what) {
    ++r_.violations;
    if (r_.failures.size() < kMaxReportedFailures) r_.failures.push_back(what);
  }

  SuiteResult& r_;
};

FrobeniusTwist theta(std::uint32_t p, unsigned n) { return {make_field(p, n), 1}; }

FieldSkew sk(const FrobeniusTwist& tw, const char* src) { return parse_field_skew(src, tw); }

std::vector<FieldSkew> sks(const FrobeniusTwist& tw, std::initializer_list<const char*> srcs) {
  std::vector<FieldSkew> out;
  for (const char* s : srcs) out.push_back(sk(tw, s));
  return out;
}

FieldSkew product_of(const FrobeniusTwist& tw, const std::vector<FieldSkew>& fs) {
  FieldSkew acc = FieldSkew::constant(tw, tw.one());
  for (const auto& f : fs) acc = acc * f;
  return acc;
}

// f(T_a)(x) = sum f_i T_a^i(x).
FqElem apply_poly_at(const FieldSkew& f, const FqElem& a, FqElem x) {
  const FrobeniusTwist& tw = f.twist();
  FqElem acc = tw.zero();
  for (const auto& c : f.coeffs()) {
    acc += c * x;
    x = apply_T(tw, a, x);
  }
  return acc;
}

std::vector<FqElem> padded(const FieldSkew& r, std::size_t m) {
  std::vector<FqElem> out(m, r.twist().zero());
  for (std::size_t i = 0; i < r.coeffs().size(); ++i) out[i] = r.coeffs()[i];
  return out;
}

void suite_golden(Checker& c, std::uint64_t) {
  const auto tw = theta(2, 2);
  const auto fa = sk(tw, "t^3+a");
  c.run("example a factors", [&] { return factorize(fa).factors == sks(tw, {"t^2+a*t+1", "t+a"}); });
  c.run("example a bracket", [&] { return bracket_map(fa) == parse_cpoly("x^7+a", tw.field); });
  c.run("example a irreducible quadratic", [&] { return is_irreducible(sk(tw, "t^2+a*t+1")).irreducible; });
  c.run("example a root", [&] { return evaluate(fa, tw.field->generator()).is_zero(); });

  const auto fb = sk(tw, "t^4+(a+1)*t^3+a^2*t^2+(1+a)*t+1");
  c.run("example b factors", [&] { return factorize(fb).factors == sks(tw, {"t^2+t+1", "t^2+a*t+1"}); });
  c.run("example b bracket", [&] {
    return bracket_map(fb) == parse_cpoly("x^15+(a+1)*x^7+(a+1)*x^3+(1+a)*x+1", tw.field);
  });
  c.run("example b bracket right factor", [&] {
    return bracket_map(sk(tw, "t^2+a*t+1")) == parse_cpoly("x^3+a*x+1", tw.field);
  });

  const auto fc = sk(tw, "t^5+a*t^4+(1+a)*t^3+a*t^2+t+1");
  c.run("example c factors", [&] { return factorize(fc).factors == sks(tw, {"t^2+t+1", "t+a", "t+a", "t+a"}); });
  c.run("example c alternate", [&] {
    const auto want = sks(tw, {"t+a+1", "t+1", "t+a", "t^2+(a+1)*t+1"});
    if (product_of(tw, want) != fc) return false;
    const auto alts = alternate_factorizations(fc, 4);
    return std::any_of(alts.begin(), alts.end(), [&](const SkewFactorization& s) {
      return s.factors == want && s.product() == fc;
    });
  });
  c.run("min vanishing over F_4", [&] { return min_vanishing(tw.field).polynomial == sk(tw, "t^3+t"); });
}

void suite_min_vanishing(Checker& c, std::uint64_t) {
  for (auto [p, n] : std::vector<std::pair<std::uint32_t, unsigned>>{{2, 2}, {2, 3}, {3, 2}, {5, 2}}) {
    const auto tw = theta(p, n);
    const std::string tag = "p=" + std::to_string(p) + ",n=" + std::to_string(n);
    c.run(tag + " LLCM equals t^((p-1)n+1) - t", [&] {
      FieldSkew g = FieldSkew::constant(tw, tw.one());
      for (const auto& a : tw.field->elements()) g = llclm(g, FieldSkew::linear(tw, a));
      const std::size_t deg = (p - 1) * n + 1;
      return g == FieldSkew::monomial(tw, tw.one(), deg) - FieldSkew::variable(tw) &&
             g == min_vanishing(tw.field).polynomial;
    });
    const FieldSkew g = min_vanishing_closed_form(tw.field);
    c.check(g * FieldSkew::variable(tw) == FieldSkew::variable(tw) * g, tag + " G t = t G");
    for (const auto& x : tw.field->elements()) {
      c.check(g * FieldSkew::constant(tw, x) == FieldSkew::constant(tw, frobenius(x, 1)) * g,
              tag + " G x = theta(x) G at x=" + to_string(x));
    }
  }
}

void suite_conjugacy(Checker& c, std::uint64_t) {
  for (auto [p, n] : std::vector<std::pair<std::uint32_t, unsigned>>{{2, 2}, {2, 3}, {3, 2}, {2, 4}, {5, 2}}) {
    const Field f = make_field(p, n);
    const std::string tag = "q=" + std::to_string(f->order());
    const auto classes = conjugacy_classes(f);
    c.check(classes.size() == p, tag + " has p classes");
    std::set<FqElem> delta;
    for (const auto& x : f->elements()) {
      if (!x.is_zero()) delta.insert(frobenius(x, 1) / x);
    }
    c.check(delta.size() == (f->order() - 1) / (p - 1), tag + " |Delta(1)| = (q-1)/(p-1)");
    const auto one_class = std::find_if(classes.begin(), classes.end(), [](const ConjClassReport& r) {
      return std::any_of(r.members.begin(), r.members.end(), [](const FqElem& x) { return x.is_one(); });
    });
    c.check(one_class != classes.end() &&
                std::set<FqElem>(one_class->members.begin(), one_class->members.end()) == delta,
            tag + " class of 1 is Delta(1)");
    for (const auto& x : f->elements()) {
      const unsigned want = x.is_zero() ? n : 1;
      c.check(centralizer(x).degree == want, tag + " centralizer degree at " + to_string(x));
    }
  }
}

void suite_gordon_motzkin(Checker& c, std::uint64_t seed) {
  Sampler rng(seed);
  for (auto [p, n] : std::vector<std::pair<std::uint32_t, unsigned>>{{2, 3}, {3, 2}}) {
    const auto tw = theta(p, n);
    for (int i = 0; i < 200; ++i) {
      const FieldSkew f = rng.skew_between(tw, 1, 5);
      c.run("bound for " + to_string(f), [&] {
        const auto audit = gm_audit(f);
        const auto deg = static_cast<std::size_t>(f.degree());
        return audit.classes.size() <= deg && audit.sum <= deg && audit.bound_held;
      });
    }
  }
  const auto tw4 = theta(2, 2);
  c.run("equality for G over F_4", [&] {
    const auto audit = gm_audit(min_vanishing_closed_form(tw4.field));
    return audit.sum == 3 && audit.wedderburn_equality;
  });
}

void suite_product_formula(Checker& c, std::uint64_t seed) {
  Sampler rng(seed);
  for (auto [p, n] : std::vector<std::pair<std::uint32_t, unsigned>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}}) {
    const auto tw = theta(p, n);
    for (int i = 0; i < 100; ++i) {
      const FieldSkew f = rng.skew_between(tw, 0, 4);
      const FieldSkew g = rng.skew_between(tw, 0, 4);
      const FieldSkew fg = f * g;
      bool ok = true;
      for (const auto& a : tw.field->elements()) {
        const FqElem ga = evaluate(g, a);
        ok = ok && evaluate(fg, a) == apply_poly_at(f, a, ga);
        if (!ga.is_zero()) ok = ok && evaluate(fg, a) == evaluate(f, conjugate(a, ga)) * ga;
      }
      c.check(ok, "q=" + std::to_string(tw.field->order()) + " f=" + to_string(f) + " g=" + to_string(g));
    }
  }
}

void suite_bracket_divisibility(Checker& c, std::uint64_t seed) {
  Sampler rng(seed);
  for (auto [p, n] : std::vector<std::pair<std::uint32_t, unsigned>>{{2, 2}, {3, 2}}) {
    const auto tw = theta(p, n);
    for (int i = 0; i < 500; ++i) {
      const FieldSkew h = rng.skew_between(tw, 1, 3, true);
      const FieldSkew f = i % 2 == 0 ? rng.skew_between(tw, 0, 3) * h : rng.skew_between(tw, 1, 6);
      c.run("f=" + to_string(f) + " h=" + to_string(h), [&] {
        const bool skew = right_divmod(f, h).second.is_zero();
        const bool comm = divmod(bracket_map(f), bracket_map(h)).second.is_zero();
        return skew == comm && (i % 2 != 0 || skew) && divides_via_bracket(f, h) == skew;
      });
    }
  }
}

void suite_small_degree(Checker& c, std::uint64_t) {
  const auto tw = theta(2, 2);
  const std::uint64_t q = tw.field->order();
  for (std::size_t deg = 1; deg <= 4; ++deg) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < deg; ++i) count *= q;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      std::vector<FqElem> coeffs;
      std::uint64_t rest = idx;
      for (std::size_t i = 0; i < deg; ++i, rest /= q) coeffs.push_back(tw.field->element(rest % q));
      coeffs.push_back(tw.one());
      const FieldSkew f(tw, std::move(coeffs));
      c.run("factor " + to_string(f), [&] {
        const auto brute = brute_force_factorization(f);
        return factorize(f).factors == brute && is_irreducible(f).irreducible == (brute.size() == 1);
      });
    }
  }
}

void suite_hilbert90(Checker& c, std::uint64_t) {
  for (auto [p, n] : std::vector<std::pair<std::uint32_t, unsigned>>{{2, 2}, {2, 3}, {3, 2}}) {
    const auto tw = theta(p, n);
    const FieldSkew tn = FieldSkew::monomial(tw, tw.one(), n) - FieldSkew::constant(tw, tw.one());
    std::set<FqElem> roots;
    std::set<FqElem> delta;
    for (const auto& x : tw.field->elements()) {
      if (evaluate(tn, x).is_zero()) roots.insert(x);
      if (!x.is_zero()) delta.insert(frobenius(x, 1) / x);
    }
    const std::string tag = "q=" + std::to_string(tw.field->order());
    c.check(roots == delta, tag + " V(t^n - 1) = Delta(1)");
    c.run(tag + " library report", [&] { return hilbert90(tw.field).equal; });
  }
}

// Some x, y with d/du(xy) != x d/du(y) + d/du(x) y, searched exhaustively.
bool leibniz_counterexample(const TruncRing& ring) {
  for (const auto& x : ring->elements()) {
    for (const auto& y : ring->elements()) {
      if (derive(x * y) != x * derive(y) + derive(x) * y) return true;
    }
  }
  return false;
}

void suite_frobenius_law(Checker& c, std::uint64_t seed) {
  Sampler rng(seed);
  const std::vector<std::pair<std::uint32_t, unsigned>> rings{{3, 2}, {3, 3}, {3, 4}, {3, 6}, {2, 2}, {2, 4}};
  for (auto [p, m] : rings) {
    const DerivationTwist tw{make_trunc_ring(p, m)};
    const std::string tag = "p=" + std::to_string(p) + ",m=" + std::to_string(m);
    if (!derivation_is_leibniz(*tw.ring)) {
      // Outside the law's hypothesis; confirm the hypothesis really fails.
      c.check(leibniz_counterexample(tw.ring), tag + " d/du fails the Leibniz rule");
      continue;
    }
    std::vector<TruncElem> sample;
    if (tw.ring->order() <= 30) {
      sample = tw.ring->elements();
    } else {
      std::set<std::uint64_t> picked;
      while (picked.size() < 30) picked.insert(rng.below(tw.ring->order()));
      for (auto i : picked) sample.push_back(tw.ring->element(i));
    }
    for (const auto& a : sample) {
      const TruncSkew lin = TruncSkew::linear(tw, a);
      TruncSkew lhs = TruncSkew::constant(tw, tw.one());
      TruncElem np = tw.one();
      for (std::uint32_t i = 0; i < p; ++i) {
        lhs = lhs * lin;
        np = apply_T(tw, a, np);
      }
      const TruncSkew rhs = TruncSkew::monomial(tw, tw.one(), p) - TruncSkew::constant(tw, np);
      c.check(lhs == rhs && frobenius_law_check(tw, a).equal, tag + " a=" + to_string(a));
    }
  }
}

void suite_plt_coherence(Checker& c, std::uint64_t seed) {
  Sampler rng(seed);
  const std::vector<FrobeniusTwist> twists{theta(2, 2), theta(2, 3), theta(3, 2)};
  for (int i = 0; i < 120; ++i) {
    const auto& tw = twists[i % twists.size()];
    const FieldSkew p = rng.skew_between(tw, 1, 4, true);
    const FieldSkew f = rng.skew_between(tw, 0, 7);
    const FieldSkew g = rng.skew_between(tw, 0, 4);
    const std::string tag = "p=" + to_string(p) + " f=" + to_string(f) + " g=" + to_string(g);
    c.run("remainder " + tag, [&] {
      return remainder_row(f, p) == padded(right_divmod(f, p).second, static_cast<std::size_t>(p.degree()));
    });
    c.run("homomorphism " + tag, [&] {
      const LinMap t = plt_of_companion(p);
      return poly_matrix(f * g, t) == poly_matrix(f, t) * poly_matrix(g, t);
    });
    c.run("basis " + tag, [&] {
      const Companion comp = companion(p);
      return matrix_in_basis(poly_matrix(f, plt_of_companion(p))) == evaluate_at_matrix(f, comp.matrix);
    });
  }
  for (int i = 0; i < 120; ++i) {
    const auto& tw = twists[i % twists.size()];
    FieldSkew f = rng.skew_between(tw, 1, 3, true);
    FieldSkew g = rng.skew_between(tw, 1, 3, true);
    while (!rgcd(f, g).is_one()) g = rng.skew_between(tw, 1, 3, true);
    const FqElem a = rng.element(tw.field);
    c.run("kernel split f=" + to_string(f) + " g=" + to_string(g) + " a=" + to_string(a), [&] {
      const auto ks = kernel_split(f, g, a);
      return ks.direct_sum && ks.image_matches && ks.dim_m == ks.dim_f + ks.dim_g;
    });
  }
}

void suite_extension_root(Checker& c, std::uint64_t) {
  c.run("p=3 n=2 l=4", [] {
    const auto r = extension_root_check(make_field(3, 2), make_field(3, 4));
    return r.premise_holds && r.delta_l_size == 40 && r.annihilates_delta_l && r.roots_outside_small >= 1;
  });
}

void suite_llclm_chain(Checker& c, std::uint64_t seed) {
  Sampler rng(seed);
  const std::vector<FrobeniusTwist> twists{theta(2, 2), theta(3, 2)};
  for (int i = 0; i < 100; ++i) {
    const auto& tw = twists[i % twists.size()];
    const FieldSkew g = rng.skew_between(tw, 1, 3, true);
    std::vector<FqElem> roots;
    for (std::uint64_t k = 1 + rng.below(3); k > 0; --k) roots.push_back(rng.element(tw.field));
    c.run("g=" + to_string(g), [&] {
      const auto r = llclm_linear_chain(g, roots);
      return r.chain_multiple.degree() <= g.degree() + static_cast<int>(roots.size()) &&
             right_divmod(r.chain_multiple, g).second.is_zero() &&
             right_divmod(r.chain_multiple, r.linear_product).second.is_zero() &&
             right_divmod(r.chain_multiple, r.llclm).second.is_zero();
    });
  }
}

void suite_similarity(Checker& c, std::uint64_t seed) {
  Sampler rng(seed);
  const std::vector<FrobeniusTwist> twists{theta(2, 2), theta(3, 2)};
  std::size_t done = 0;
  for (int attempt = 0; attempt < 2000 && done < 100; ++attempt) {
    const auto& tw = twists[attempt % twists.size()];
    const FieldSkew f = rng.skew_between(tw, 1, 3, true);
    const FieldSkew g = rng.skew_between(tw, 0, 3, true);
    if (!rgcd(f, g).is_one()) continue;
    const auto roots = skew_roots(f);
    if (std::any_of(roots.begin(), roots.end(), [&](const FqElem& x) { return evaluate(g, x).is_zero(); })) continue;
    ++done;
    c.run("f=" + to_string(f) + " g=" + to_string(g), [&] {
      const auto r = phi_transform(g, f);
      return r.images == r.target_roots && r.f_prime * g == llclm(f, g);
    });
  }
}

void suite_idealizer(Checker& c, std::uint64_t seed) {
  Sampler rng(seed);
  const std::vector<FrobeniusTwist> twists{theta(2, 2), theta(3, 2), theta(2, 3)};
  for (int i = 0; i < 60; ++i) {
    const auto& tw = twists[i % twists.size()];
    const FieldSkew p = rng.skew_between(tw, 2, 3, true);
    const FieldSkew g = rng.skew_between(tw, 0, 3);
    c.run("p=" + to_string(p) + " g=" + to_string(g), [&] {
      const bool by_division = right_divmod(p * g, p).second.is_zero();
      return idealizer_test(g, p) == by_division && companion_annihilation(p).equivalent;
    });
  }
}

void suite_word_maps(Checker& c, std::uint64_t seed) {
  Sampler rng(seed);
  const FrobeniusTwist ftw = theta(2, 2);
  const DerivationTwist ttw{make_trunc_ring(3, 3)};
  for (int i = 0; i < 50; ++i) {
    const std::size_t n = 1 + rng.below(4);
    c.run("field n=" + std::to_string(n), [&] {
      return word_map_identity(ftw, rng.element(ftw.field), rng.element(ftw.field), rng.element(ftw.field), n);
    });
    c.run("trunc n=" + std::to_string(n), [&] {
      return word_map_identity(ttw, rng.element(ttw.ring), rng.element(ttw.ring), rng.element(ttw.ring), n);
    });
  }
  for (int i = 0; i < 50; ++i) {
    TruncElem a = rng.element(ttw.ring);
    if (!a.is_unit()) a = a + ttw.one();
    if (!a.is_unit()) continue;
    const TruncElem b = rng.element(ttw.ring);
    c.run("duo multiplier a=" + to_string(a) + " b=" + to_string(b),
          [&] { return duo_multiplier(ttw, a, b) * a == apply_T(ttw, b, a); });
  }
}

void suite_round_trip(Checker& c, std::uint64_t seed) {
  Sampler rng(seed);
  const std::vector<FrobeniusTwist> twists{theta(2, 2), theta(3, 2), theta(2, 3), theta(5, 1)};
  for (int i = 0; i < 100; ++i) {
    const auto& tw = twists[i % twists.size()];
    const FieldSkew f = rng.skew_between(tw, 0, 6);
    c.run("skew " + to_string(f), [&] { return parse_field_skew(to_string(f), tw) == f; });
    const CPoly cf = bracket_map(f);
    c.run("commutative " + to_string(cf), [&] { return parse_cpoly(to_string(cf), tw.field) == cf; });
  }
  const DerivationTwist ttw{make_trunc_ring(3, 3)};
  for (int i = 0; i < 50; ++i) {
    const TruncSkew f = rng.skew(ttw, rng.below(5));
    c.run("trunc " + to_string(f), [&] { return parse_trunc_skew(to_string(f), ttw) == f; });
  }
}

using SuiteFn = void (*)(Checker&, std::uint64_t);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> suites{
      {"golden-examples", suite_golden},
      {"min-vanishing", suite_min_vanishing},
      {"conjugacy", suite_conjugacy},
      {"gordon-motzkin", suite_gordon_motzkin},
      {"product-formula", suite_product_formula},
      {"bracket-divisibility", suite_bracket_divisibility},
      {"small-degree-completeness", suite_small_degree},
      {"hilbert90", suite_hilbert90},
      {"frobenius-law", suite_frobenius_law},
      {"plt-coherence", suite_plt_coherence},
      {"extension-root", suite_extension_root},
      {"llclm-chain", suite_llclm_chain},
      {"similarity", suite_similarity},
      {"idealizer", suite_idealizer},
      {"word-maps", suite_word_maps},
      {"round-trip", suite_round_trip},
  };
  return suites;
}

}  // namespace

bool VerifyReport::passed() const {
  return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.passed(); });
}

const std::vector<std::string>& verify_suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

SuiteResult run_suite(const std::string& name, std::uint64_t seed) {
  for (const auto& [n, fn] : registry()) {
    if (n != name) continue;
    SuiteResult r;
    r.name = n;
    Checker c(r);
    fn(c, seed);
    return r;
  }
  fail(ErrorKind::InvalidArgument, "unknown verify suite '" + name + "'");
}

VerifyReport run_verify(std::uint64_t seed) {
  VerifyReport report{seed, {}};
  for (const auto& name : verify_suite_names()) report.suites.push_back(run_suite(name, seed));
  return report;
}

std::vector<FieldSkew> brute_force_factorization(const FieldSkew& f) {
  if (!f.is_monic() || f.degree() < 1) fail(ErrorKind::NonMonic, "expected a monic polynomial of degree >= 1");
  const FrobeniusTwist& tw = f.twist();
  const std::uint64_t q = tw.field->order();
  for (int d = 1; d < f.degree(); ++d) {
    std::uint64_t count = 1;
    for (int i = 0; i < d; ++i) count *= q;
    // The constant coefficient is the most significant digit.
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      std::vector<FqElem> coeffs(static_cast<std::size_t>(d) + 1, tw.one());
      std::uint64_t rest = idx;
      for (int i = d - 1; i >= 0; --i, rest /= q) coeffs[static_cast<std::size_t>(i)] = tw.field->element(rest % q);
      const FieldSkew h(tw, std::move(coeffs));
      auto [quot, rem] = right_divmod(f, h);
      if (!rem.is_zero()) continue;
      auto out = brute_force_factorization(quot);
      out.push_back(h);
      return out;
    }
  }
  return {f};
}

}  // namespace skewfq
