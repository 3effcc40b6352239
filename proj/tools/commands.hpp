#pragma once

// Subcommands of the gammacalc tool. Each returns its output text and exit
// status instead of printing, so the tests can call them directly.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "gammacalc/gammacalc.hpp"

namespace gammacalc::cli {

enum ExitCode { kOk = 0, kContractViolation = 1, kInputError = 2, kPreconditionError = 3 };

struct Options {
  double tol = 1e-9;
  bool ghs = false;
  std::size_t max_faces = 200000;
};

struct Outcome {
  int code = kOk;
  std::string out;
  std::string err;
};

/// Cap from the environment when set, else the given default.
inline std::size_t max_faces_from_env(std::size_t fallback) {
  if (const char* env = std::getenv("GAMMACALC_MAX_FACES")) {
    try {
      return static_cast<std::size_t>(std::stoull(env));
    } catch (const std::exception&) {
      throw InputError(std::string("GAMMACALC_MAX_FACES is not a number: ") + env);
    }
  }
  return fallback;
}

/// Inline JSON when the argument starts with '{' or '[', otherwise a file.
inline Json load_json(const std::string& arg) {
  std::string text;
  const auto first = arg.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) {
    text = arg;
  } else {
    std::ifstream in(arg);
    if (!in) throw InputError("cannot read '" + arg + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
}

inline void check_size(const SimplicialComplex& x, const Options& opt) {
  std::size_t bound = 0;
  for (const auto& f : x.facets()) {
    bound += f.size() >= 63 ? opt.max_faces + 1 : (std::size_t{1} << f.size());
    if (bound > opt.max_faces) break;
  }
  if (bound > opt.max_faces && x.faces().size() > opt.max_faces)
    throw SizeLimitError("complex has more than " + std::to_string(opt.max_faces) + " faces (see --max-faces)");
}

inline SimplicialComplex load_complex(const std::string& arg, const Options& opt) {
  auto x = build_complex(load_json(arg));
  check_size(x, opt);
  return x;
}

inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

// ---------------------------------------------------------------------------

inline Outcome cmd_invariants(const std::string& input, const Options& opt) {
  const auto x = load_complex(input, opt);
  const auto f = f_polynomial(x);
  const std::size_t n = x.max_facet_size();
  const auto h = h_from_f(f, n);
  const bool eulerian = x.is_pure() && is_eulerian(x);

  Json j;
  j["dim"] = x.dimension();
  j["vertices"] = x.num_vertices();
  j["f"] = poly_to_json(f);
  j["h"] = poly_to_json(h);
  Outcome o;
  if (eulerian) {
    const auto g = gamma_from_h(h);
    j["gamma"] = poly_to_json(g);
    bool nonneg = true;
    for (const auto& c : g.coefficients()) nonneg = nonneg && c >= 0;
    j["gamma_nonneg"] = nonneg;
  } else {
    j["gamma"] = nullptr;
    j["gamma_nonneg"] = nullptr;
    o.code = kPreconditionError;
    o.err = "gamma is undefined: complex is not Eulerian\n";
  }
  j["flag"] = is_flag(x);
  j["eulerian"] = eulerian;
  if (opt.ghs) j["ghs"] = is_ghs(x);
  j["unimodal"] = is_unimodal(h);
  if (eulerian && n % 2 == 0)
    j["charney_davis"] = charney_davis_quantity(h).str();
  else
    j["charney_davis"] = nullptr;
  o.out = dump(j);
  return o;
}

inline Outcome cmd_roots(const std::string& input, const Options& opt) {
  const Json in = load_json(input);
  IntPolynomial p;
  if (in.is_array()) {
    p = poly_from_json(in);
  } else {
    const auto x = build_complex(in);
    check_size(x, opt);
    p = h_polynomial(x);
  }
  if (p.is_zero()) throw InputError("roots: the zero polynomial has no finite root set");

  Json j;
  j["polynomial"] = poly_to_json(p);
  j["degree"] = *p.degree();
  j["real_root_count"] = count_real_roots(p);
  j["distinct_root_count"] = squarefree_part(p).degree().value_or(0);
  j["all_real"] = all_roots_real(p);
  j["all_real_negative"] = p[0] != 0 && all_roots_real_negative(p);

  Json roots = Json::array();
  for (const auto& [factor, mult] : squarefree_decomposition(p)) {
    if (factor.degree().value_or(0) == 0) continue;
    const auto cr = detail::classify_roots(factor, std::min(opt.tol, 1e-12));
    for (std::size_t i = 0; i < cr.roots.size(); ++i) {
      Json r;
      r["re"] = cr.roots[i].real();
      r["im"] = cr.is_real[i] ? 0.0 : cr.roots[i].imag();
      r["real"] = static_cast<bool>(cr.is_real[i]);
      r["multiplicity"] = mult;
      roots.push_back(std::move(r));
    }
  }
  j["roots"] = std::move(roots);

  if (p[0] != 0 && p.degree() > 0) {
    const auto sm = smallest_modulus_root_is_real_negative(p, opt.tol);
    j["smallest_modulus"] = {{"min_modulus", sm.min_modulus},
                             {"real_negative", sm.real_negative},
                             {"ambiguous", sm.ambiguous}};
  } else {
    j["smallest_modulus"] = nullptr;
  }

  if (p.degree() == 4 && p[0] == 1 && p[4] == 1 && is_reciprocal(p)) {
    const auto rc = deg4_region(p[1], p[2]);
    j["deg4_region"] = {{"class", to_string(rc.tag)},
                        {"cd", rc.cd.str()},
                        {"sr", rc.sr.str()},
                        {"double_root", rc.double_root}};
  } else {
    j["deg4_region"] = nullptr;
  }
  return {kOk, dump(j), ""};
}

inline Json report_to_json(const CounterexampleReport& r) {
  Json j;
  j["vertices"] = r.complex.num_vertices();
  j["dim"] = r.complex.dimension();
  j["f"] = poly_to_json(r.f);
  j["h"] = poly_to_json(r.h);
  j["gamma"] = poly_to_json(r.gamma);
  j["flag"] = r.flag;
  j["eulerian"] = r.eulerian;
  if (r.ghs) j["ghs"] = *r.ghs;
  j["real_rooted"] = r.real_rooted;
  j["real_root_count"] = r.real_root_count;
  j["distinct_root_count"] = r.distinct_root_count;
  j["cubic_obstruction"] = r.cubic_obstruction;
  j["gamma_nonneg"] = r.gamma_nonneg;
  return j;
}

inline Outcome cmd_paper(long long m, const Options& opt) {
  if (m < 0) throw InputError("paper: m must be nonnegative");
  const auto r = verify_counterexample(static_cast<std::size_t>(m), opt.ghs);
  const IntPolynomial expected({BigInt(1), BigInt(4 + m), BigInt(4), BigInt(1)});
  const bool holds = r.gamma == expected && r.gamma_nonneg && r.flag && r.eulerian && (m == 0 || !r.real_rooted) &&
                     (!r.ghs || *r.ghs);
  Json j;
  j["m"] = m;
  const Json report = report_to_json(r);
  for (auto it = report.begin(); it != report.end(); ++it) j[it.key()] = it.value();
  j["expected_gamma"] = poly_to_json(expected);
  j["contracts_hold"] = holds;
  j["complex"] = complex_to_json(r.complex);
  Outcome o{holds ? kOk : kContractViolation, dump(j), ""};
  if (!holds) o.err = "paper: counterexample contracts do not hold\n";
  return o;
}

inline Outcome cmd_realize(long long h1, long long h2, const Options& opt) {
  const auto r = realize_h4(h1, h2, opt.ghs);
  Json j;
  j["h1"] = h1;
  j["h2"] = h2;
  j["cone"] = {{"k", r.cone.k}, {"a", r.cone.a}, {"b", r.cone.b}};
  j["h"] = poly_to_json(r.h);
  j["flag"] = r.flag;
  j["eulerian"] = r.eulerian;
  if (r.ghs) j["ghs"] = *r.ghs;
  j["complex"] = complex_to_json(r.complex);
  return {kOk, dump(j), ""};
}

inline Outcome cmd_region(long long h1_max, long long h2_max) {
  return {kOk, region_csv(region_grid(h1_max, h2_max)), ""};
}

inline Outcome cmd_growth(const std::string& input, std::size_t n, const Options& opt) {
  const auto x = load_complex(input, opt);
  const auto w = growth_series(x);
  Json j;
  j["numerator"] = poly_to_json(w.rat.numerator());
  j["denominator"] = poly_to_json(w.rat.denominator());
  j["coefficients"] = ints_to_json(series_expand(w, n));
  return {kOk, dump(j), ""};
}

inline Outcome cmd_cdindex(const std::string& input, const Options& opt) {
  const Json in = load_json(input);
  const GradedPoset p = in.is_object() && in.contains("elements") ? poset_from_json(in) : face_poset([&] {
    auto x = build_complex(in);
    check_size(x, opt);
    return x;
  }());
  const auto ups = upsilon(p);
  const auto ps = psi(ups);
  const bool eulerian = is_eulerian_poset(p);

  Json j;
  j["rank"] = p.rank();
  j["elements"] = p.size();
  j["eulerian"] = eulerian;
  j["ab_index"] = ups.to_string();
  j["psi"] = ps.to_string();
  Outcome o;
  try {
    const auto phi = cd_rewrite(ps);
    j["cd_index"] = phi.to_string();
    Json terms = Json::array();
    for (const auto& [w, c] : phi.terms()) terms.push_back({{"word", w}, {"coefficient", c.str()}});
    j["cd_terms"] = std::move(terms);
    j["negative_coefficients"] = phi.has_negative_coefficient();
    if (eulerian) {
      j["gamma_bridge"] = gamma_cd_bridge_check(p);
      j["babson"] = babson_check(p);
    }
  } catch (const NotCdExpressible& e) {
    j["cd_index"] = nullptr;
    j["witness"] = e.witness();
    o.code = kPreconditionError;
    o.err = std::string(e.what()) + "\n";
  }
  o.out = dump(j);
  return o;
}

inline Outcome cmd_seed_complexes() {
  Json complexes = Json::array();
  for (const auto& c : eulerian_corpus()) complexes.push_back({{"name", c.name}, {"complex", complex_to_json(c.complex)}});
  Json posets = Json::array();
  for (const auto& p : poset_corpus()) posets.push_back({{"name", p.name}, {"poset", poset_to_json(p.poset)}});
  Json j;
  j["complexes"] = std::move(complexes);
  j["posets"] = std::move(posets);
  return {kOk, dump(j), ""};
}

/// Runs a command, mapping library errors to exit codes.
template <typename F>
Outcome run_guarded(F&& f) {
  try {
    return f();
  } catch (const InputError& e) {
    return {kInputError, "", std::string("input error: ") + e.what() + "\n"};
  } catch (const Json::exception& e) {
    return {kInputError, "", std::string("input error: ") + e.what() + "\n"};
  } catch (const PreconditionError& e) {
    return {kPreconditionError, "", std::string("precondition error: ") + e.what() + "\n"};
  } catch (const SizeLimitError& e) {
    return {kPreconditionError, "", std::string("size limit: ") + e.what() + "\n"};
  } catch (const ConvergenceError& e) {
    return {kPreconditionError, "", std::string("numeric error: ") + e.what() + "\n"};
  } catch (const NotCdExpressible& e) {
    return {kPreconditionError, "", std::string(e.what()) + "\n"};
  } catch (const Error& e) {
    return {kContractViolation, "", std::string("error: ") + e.what() + "\n"};
  }
}

}  // namespace gammacalc::cli
