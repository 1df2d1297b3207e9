#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "walign/enumcount.hpp"
#include "walign/geom.hpp"
#include "walign/tableau.hpp"
#include "walign/testhooks.hpp"
#include "walign/verify.hpp"
#include "walign/wa.hpp"

namespace {

using nlohmann::json;
using namespace walign;

constexpr const char* kBuildId = "walign 1.0.0";

struct Options {
  bool as_json = false;
  int window = 0;  // 0: infer from inputs
  int jobs = 0;    // 0: machine parallelism
};

int effective_jobs(const Options& opt) {
  if (opt.jobs > 0) return opt.jobs;
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

std::string render_perm(const Permutation& p, const Options& opt) {
  return to_string(p, opt.window);
}

std::string read_input_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void run_schubert(const std::string& text, const Options& opt) {
  Permutation u = parse_permutation(text);
  IntPolynomial f = schubert_poly(u);
  if (opt.as_json) {
    json terms = json::array();
    for (const auto& [m, c] : f.terms())
      terms.push_back({{"exponents", m}, {"coefficient", c.str()}});
    std::cout << json{{"u", to_string(u)}, {"polynomial", to_string(f)}, {"terms", terms}}
              << "\n";
  } else {
    std::cout << to_string(f) << "\n";
  }
}

void run_coeff(const std::string& ut, const std::string& vt, const std::string& wt,
               const std::string& method, const Options& opt) {
  Permutation u = parse_permutation(ut), v = parse_permutation(vt), w = parse_permutation(wt);
  auto need_wa = [&] {
    if (!is_well_aligned(v, w))
      throw DomainError("(v, w) is not well-aligned; only the oracle method applies");
  };
  std::map<std::string, Int> values;
  if (method == "oracle" || method == "all") values["oracle"] = lr_coeff(u, v, w);
  if (method == "pieri" || method == "all") {
    need_wa();
    values["pieri"] = wa_coeff(u, v, w);
  }
  if (method == "phi" || method == "all") {
    need_wa();
    values["phi"] = apply_word(phi_word_general(v, w), schubert_poly(u));
  }
  bool agree = true;
  for (const auto& [k, x] : values) agree = agree && x == values.begin()->second;
  if (opt.as_json) {
    json jv;
    for (const auto& [k, x] : values) jv[k] = x.str();
    json out{{"u", render_perm(u, opt)}, {"v", render_perm(v, opt)},
             {"w", render_perm(w, opt)}, {"method", method}, {"values", jv}};
    if (method == "all") out["agree"] = agree;
    std::cout << out << "\n";
  } else {
    std::cout << "u: " << render_perm(u, opt) << "\n"
              << "v: " << render_perm(v, opt) << "\n"
              << "w: " << render_perm(w, opt) << "\n";
    for (const auto& [k, x] : values) std::cout << k << ": " << x << "\n";
    if (method == "all") std::cout << "verdict: " << (agree ? "AGREE" : "DISAGREE") << "\n";
  }
}

void run_wa_check(const std::string& vt, const std::string& wt, const Options& opt) {
  Permutation v = parse_permutation(vt), w = parse_permutation(wt);
  bool a = is_aligned(v, w), wa = is_well_aligned(v, w), vwa = is_very_well_aligned(v, w);
  if (opt.as_json) {
    std::cout << json{{"v", render_perm(v, opt)},
                      {"w", render_perm(w, opt)},
                      {"aligned", a},
                      {"well_aligned", wa},
                      {"very_well_aligned", vwa}}
              << "\n";
  } else {
    std::cout << "aligned: " << (a ? "true" : "false") << "\n"
              << "well_aligned: " << (wa ? "true" : "false") << "\n"
              << "very_well_aligned: " << (vwa ? "true" : "false") << "\n";
  }
}

void run_dominant_form(const std::string& vt, const std::string& wt, const Options& opt) {
  Permutation v = parse_permutation(vt), w = parse_permutation(wt);
  auto [vup, wup] = dominant_form(v, w);
  if (opt.as_json) {
    std::cout << json{{"v", render_perm(v, opt)},
                      {"w", render_perm(w, opt)},
                      {"v_up", render_perm(vup, opt)},
                      {"w_up", render_perm(wup, opt)}}
              << "\n";
  } else {
    std::cout << "v_up: " << render_perm(vup, opt) << "\n"
              << "w_up: " << render_perm(wup, opt) << "\n";
  }
}

void run_richardson(const std::string& path, const Options& opt) {
  StandardTableau t = parse_tableau(read_input_file(path));
  bool rich = is_richardson(t);
  auto [vt, wt] = richardson_pair(t);
  const int n = t.size();
  json jout{{"richardson", rich},
            {"v_T", to_string(vt, n)},
            {"w_T", to_string(wt, n)}};
  std::ostringstream text;
  text << "richardson: " << (rich ? "true" : "false") << "\n"
       << "v_T: " << to_string(vt, n) << "\n"
       << "w_T: " << to_string(wt, n) << "\n";
  if (!rich) {
    text << "note: tableau is not Richardson; skipping alignment, smoothness, and "
            "expansion\n";
    jout["note"] = "not Richardson; theorem-dependent outputs skipped";
  } else if (n > 0) {
    bool vwa = is_very_well_aligned(vt, wt);
    bool smooth = is_smooth_richardson(vt, wt, SmoothnessMode::two_point);
    SchubertExpansion exp = interval_coefficients(vt, wt);
    text << "very_well_aligned: " << (vwa ? "true" : "false") << "\n"
         << "smooth: " << (smooth ? "true" : "false") << "\n"
         << "expansion:\n"
         << to_string(exp, n);
    jout["very_well_aligned"] = vwa;
    jout["smooth"] = smooth;
    json jexp = json::array();
    for (const auto& [u, c] : exp.coefficients)
      jexp.push_back({{"permutation", to_string(u, n)}, {"coefficient", c.str()}});
    jout["expansion"] = jexp;
  }
  if (opt.as_json)
    std::cout << jout << "\n";
  else
    std::cout << text.str();
}

void run_smooth(const std::string& vt, const std::string& wt, const std::string& mode,
                const Options& opt) {
  Permutation v = parse_permutation(vt), w = parse_permutation(wt);
  SmoothnessMode m =
      mode == "all_points" ? SmoothnessMode::all_points : SmoothnessMode::two_point;
  std::vector<SmoothnessReport> reports;
  if (m == SmoothnessMode::two_point) {
    reports.push_back(deodhar_count(v, v, w));
    if (!(v == w)) reports.push_back(deodhar_count(w, v, w));
  } else {
    for (const Permutation& u : interval(v, w)) reports.push_back(deodhar_count(u, v, w));
  }
  bool smooth = true;
  for (const auto& r : reports) smooth = smooth && r.smooth_at_point;
  if (opt.as_json) {
    json jr = json::array();
    for (const auto& r : reports)
      jr.push_back({{"u", render_perm(r.fixed_point, opt)},
                    {"count", r.deodhar_count},
                    {"bound", r.codim_bound},
                    {"smooth", r.smooth_at_point}});
    std::cout << json{{"v", render_perm(v, opt)}, {"w", render_perm(w, opt)},
                      {"mode", mode}, {"points", jr}, {"smooth", smooth}}
              << "\n";
  } else {
    for (const auto& r : reports) std::cout << to_string(r) << "\n";
    std::cout << "smooth: " << (smooth ? "true" : "false") << "\n";
  }
}

void run_census(int n, int max_n, const std::string& ledger, const Options& opt) {
  auto t0 = std::chrono::steady_clock::now();
  CensusResult r = census(n, effective_jobs(opt), max_n);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  json record{{"n", r.n},
              {"build", kBuildId},
              {"wa_count", r.wa_count},
              {"wa132_count", r.wa132_count},
              {"very_wa_count", r.very_wa_count},
              {"equivalence_class_count", r.equivalence_class_count},
              {"seconds", secs}};
  if (!ledger.empty()) {
    std::ofstream out(ledger, std::ios::app);
    if (!out) throw DomainError("cannot open ledger file: " + ledger);
    out << record << "\n";
  }
  if (opt.as_json) {
    std::cout << record << "\n";
  } else {
    std::cout << "n" << "\t" << "wa" << "\t" << "wa132" << "\t" << "very_wa" << "\t"
              << "classes" << "\n"
              << r.n << "\t" << r.wa_count << "\t" << r.wa132_count << "\t"
              << r.very_wa_count << "\t" << r.equivalence_class_count << "\n";
  }
}

int run_verify(int n, const std::string& mutate, const Options& opt) {
  if (mutate == "lehmer_code")
    testhooks::active = testhooks::Mutation::LehmerCode;
  else if (mutate == "divided_difference")
    testhooks::active = testhooks::Mutation::DividedDifference;
  else if (mutate == "bruhat_leq")
    testhooks::active = testhooks::Mutation::BruhatLeq;
  else if (!mutate.empty())
    throw ParseError("unknown mutation target: " + mutate);
  auto results = verify::run_suites(n);
  testhooks::active = testhooks::Mutation::None;
  bool ok = verify::all_passed(results);
  if (opt.as_json) {
    json jr = json::array();
    for (const auto& r : results) {
      json item{{"name", r.name}, {"passed", r.passed}};
      if (!r.passed) item["counterexample"] = r.counterexample;
      jr.push_back(item);
    }
    std::cout << json{{"n", n}, {"properties", jr}, {"passed", ok}} << "\n";
  } else {
    for (const auto& r : results) {
      std::cout << (r.passed ? "PASS" : "FAIL") << "  " << r.name;
      if (!r.passed) std::cout << "  [" << r.counterexample << "]";
      std::cout << "\n";
    }
    std::cout << (ok ? "all properties passed" : "FAILURES present") << "\n";
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact engine for generalized Littlewood-Richardson coefficients of "
               "well-aligned permutation pairs"};
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--json", opt.as_json, "emit structured JSON instead of text");
  app.add_option("--window", opt.window, "pad all printed permutations to this window");
  app.add_option("--jobs", opt.jobs, "worker threads for census/verify (default: all cores)");

  std::string arg_u, arg_v, arg_w, arg_file, method = "all", mode = "two_point",
                                             ledger, mutate;
  int census_n = 0, max_n = 8, verify_n = 4;

  auto* c_schubert = app.add_subcommand("schubert", "print a Schubert polynomial");
  c_schubert->add_option("u", arg_u, "permutation (one-line)")->required();

  auto* c_coeff = app.add_subcommand("coeff", "compute c^w_{u,v}");
  c_coeff->add_option("u", arg_u)->required();
  c_coeff->add_option("v", arg_v)->required();
  c_coeff->add_option("w", arg_w)->required();
  c_coeff->add_option("--method", method, "oracle|pieri|phi|all")
      ->check(CLI::IsMember({"oracle", "pieri", "phi", "all"}));

  auto* c_wa = app.add_subcommand("wa-check", "alignment predicates for a pair");
  c_wa->add_option("v", arg_v)->required();
  c_wa->add_option("w", arg_w)->required();

  auto* c_dom = app.add_subcommand("dominant-form", "dominant reduction of a pair");
  c_dom->add_option("v", arg_v)->required();
  c_dom->add_option("w", arg_w)->required();

  auto* c_rich = app.add_subcommand("richardson", "analyze a standard tableau");
  c_rich->add_option("file", arg_file, "tableau file ('-' for stdin)")->required();

  auto* c_smooth = app.add_subcommand("smooth", "Deodhar smoothness report");
  c_smooth->add_option("v", arg_v)->required();
  c_smooth->add_option("w", arg_w)->required();
  c_smooth->add_option("--mode", mode, "two_point|all_points")
      ->check(CLI::IsMember({"two_point", "all_points"}));

  auto* c_census = app.add_subcommand("census", "exhaustive well-aligned census");
  c_census->add_option("n", census_n, "window size")->required();
  c_census->add_option("--max-n", max_n, "upper gate for n (default 8)");
  c_census->add_option("--ledger", ledger, "append a JSON record to this file");

  auto* c_verify = app.add_subcommand("verify", "run the exhaustive property suites");
  c_verify->add_option("--n", verify_n, "window size (default 4, max 5)");
  c_verify->add_option("--mutate", mutate,
                       "inject a fault: lehmer_code|divided_difference|bruhat_leq");

  // let global flags (--json, --window, --jobs) appear after the subcommand
  for (CLI::App* sc : app.get_subcommands([](const CLI::App*) { return true; }))
    sc->fallthrough();

  try {
    app.parse(argc, argv);
    if (*c_schubert) run_schubert(arg_u, opt);
    else if (*c_coeff) run_coeff(arg_u, arg_v, arg_w, method, opt);
    else if (*c_wa) run_wa_check(arg_v, arg_w, opt);
    else if (*c_dom) run_dominant_form(arg_v, arg_w, opt);
    else if (*c_rich) run_richardson(arg_file, opt);
    else if (*c_smooth) run_smooth(arg_v, arg_w, mode, opt);
    else if (*c_census) run_census(census_n, max_n, ledger, opt);
    else if (*c_verify) return run_verify(verify_n, mutate, opt);
    return 0;
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
