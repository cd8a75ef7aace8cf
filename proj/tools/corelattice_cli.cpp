// corelattice: command-line front end for the core-partition library.
//
// Exit codes: 0 pass, 1 assertion failure, 2 usage or validation error,
// 3 resource cap exceeded.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "corelattice/core_simplex.hpp"
#include "corelattice/ehrhart.hpp"
#include "corelattice/perm_stats.hpp"
#include "corelattice/qpoly.hpp"
#include "corelattice/qt_catalan.hpp"
#include "corelattice/serialize.hpp"
#include "corelattice/verify.hpp"

namespace cl = corelattice;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

struct Global {
  std::string format = "json";
  bool summary = false;
  std::string output;
  std::uint64_t cap = 0;
  int threads = 0;
  bool serial = false;
};

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw cl::ValidationError("cannot open output file " + path);
    }
  }
  std::ostream& out() { return file_ ? *file_ : std::cout; }

  void line(const cl::Json& j) { out() << j.dump() << '\n'; }

  void csv(const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out() << ',';
      const std::string& c = cells[i];
      if (c.find_first_of(",\"\n") != std::string::npos) {
        out() << '"';
        for (char ch : c) out() << (ch == '"' ? "\"\"" : std::string(1, ch));
        out() << '"';
      } else {
        out() << c;
      }
    }
    out() << '\n';
  }

 private:
  std::unique_ptr<std::ofstream> file_;
};

cl::EnumerationOptions enumeration_options(const Global& g) {
  cl::EnumerationOptions o;
  o.parallel = !g.serial;
  if (g.cap > 0) {
    o.cap = g.cap;
  } else if (const char* env = std::getenv("CORELATTICE_CAP")) {
    try {
      std::size_t used = 0;
      const unsigned long long v = std::stoull(env, &used);
      if (used != std::string(env).size() || v == 0) throw std::invalid_argument("cap");
      o.cap = v;
    } catch (const std::exception&) {
      throw cl::ValidationError("CORELATTICE_CAP must be a positive integer");
    }
  }
  return o;
}

void require_format(const Global& g) {
  if (g.format != "json" && g.format != "csv") throw cl::ValidationError("--format must be json or csv");
}

// Flat objects become a two-column CSV; nested values are dumped as JSON.
void emit_object(Output& out, const Global& g, const cl::Json& obj) {
  if (g.format == "csv") {
    out.csv({"field", "value"});
    for (const auto& [k, v] : obj.items()) out.csv({k, v.is_string() ? v.get<std::string>() : v.dump()});
  } else {
    out.line(obj);
  }
}

int cmd_enumerate(const Global& g, int a, int b) {
  const cl::SimplexSpec spec(a, b);
  const auto cores = cl::enumerate_cores(spec, enumeration_options(g));
  Output out(g.output);
  const cl::SizeTotals totals = cl::size_totals(cores);
  cl::Json footer;
  footer["a"] = a;
  footer["b"] = b;
  footer["count"] = cores.size();
  footer["total_size"] = cl::to_string(totals.total);
  footer["average_size"] = cl::to_string(totals.average());
  if (g.summary) {
    emit_object(out, g, footer);
    return kExitPass;
  }
  if (g.format == "csv") out.csv(cl::core_csv_header());
  for (const auto& cv : cores) {
    const cl::Json rec = cl::core_record(spec, cv);
    if (g.format == "csv") out.csv(cl::core_csv_row(rec));
    else out.line(rec);
  }
  if (g.format == "json") out.line(footer);
  return kExitPass;
}

int cmd_poly(const Global& g, int a, int b) {
  const cl::SimplexSpec spec(a, b);
  const auto opts = enumeration_options(g);
  const cl::LaurentPoly1 q = cl::cat_q(a, b);
  const cl::LaurentPoly2 qt = cl::cat_qt(spec, opts);
  cl::Json j;
  j["a"] = a;
  j["b"] = b;
  j["catalan"] = cl::to_string(cl::rational_catalan(a, b));
  j["cat_q"] = cl::to_json(q);
  j["cat_q_text"] = cl::to_string(q);
  j["cat_qt"] = cl::to_json(qt);
  j["cat_qt_text"] = cl::to_string(qt);
  j["symmetric"] = qt == cl::swap_variables(qt);
  j["specialization"] = cl::check_specialization(spec, opts);
  cl::Json uni = cl::Json::array();
  for (const auto& v : cl::unimodality_report(q, a)) {
    cl::Json coeffs = cl::Json::array();
    for (const auto& c : v.coefficients) coeffs.push_back(cl::to_string(c));
    uni.push_back({{"residue", v.residue}, {"coefficients", coeffs}, {"unimodal", v.unimodal}});
  }
  j["unimodality"] = uni;
  Output out(g.output);
  emit_object(out, g, j);
  return kExitPass;
}

int cmd_verify(const Global& g, const std::string& suite, const cl::VerifyOptions& vo_in) {
  cl::VerifyOptions vo = vo_in;
  vo.enumeration = enumeration_options(g);
  const auto results = cl::run_suite(suite, vo);
  Output out(g.output);
  std::size_t failed = 0;
  for (const auto& r : results) {
    if (!r.passed && !r.exploratory) ++failed;
    // Durations go to the log stream so data records stay deterministic.
    std::cerr << "{\"suite\":\"" << r.suite << "\",\"name\":\"" << r.name << "\",\"seconds\":" << r.seconds << "}\n";
  }
  const bool ok = cl::all_passed(results);
  if (g.summary) {
    cl::Json s;
    s["suite"] = suite;
    s["checks"] = results.size();
    s["failed"] = failed;
    s["passed"] = ok;
    emit_object(out, g, s);
  } else if (g.format == "csv") {
    out.csv({"suite", "name", "passed", "exploratory", "detail"});
    for (const auto& r : results) {
      out.csv({r.suite, r.name, r.passed ? "true" : "false", r.exploratory ? "true" : "false", r.detail.dump()});
    }
  } else {
    for (const auto& r : results) {
      cl::Json j;
      j["suite"] = r.suite;
      j["name"] = r.name;
      j["passed"] = r.passed;
      j["exploratory"] = r.exploratory;
      j["detail"] = r.detail;
      out.line(j);
    }
  }
  return ok ? kExitPass : kExitFail;
}

std::vector<int> parse_permutation(const std::string& text) {
  std::vector<int> w;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      w.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument("perm");
    } catch (const std::exception&) {
      throw cl::ValidationError("permutation must be comma-separated integers");
    }
  }
  return w;
}

int cmd_perm(const Global& g, int n, const std::string& perm_text) {
  Output out(g.output);
  cl::Json j;
  if (!perm_text.empty()) {
    const cl::Permutation p(parse_permutation(perm_text));
    j["permutation"] = p.one_line();
    j["des"] = cl::des_set(p);
    j["maj"] = cl::maj(p);
    j["inv"] = cl::inv(p);
    j["siz"] = cl::siz(p);
    j["sqin"] = cl::sqin(p);
    j["ld_code"] = cl::ld_encode(p).values();
    emit_object(out, g, j);
    return kExitPass;
  }
  if (n < 1) throw cl::ValidationError("n must be at least 1");
  const cl::LaurentPoly2 dist = cl::distribution(n);
  const bool product = dist == cl::sizmaj_product(n);
  const bool sqin = cl::check_sqin_relation(n);
  j["n"] = n;
  j["distribution"] = cl::to_json(dist);
  j["distribution_text"] = cl::to_string(dist);
  j["sizmaj2"] = product;
  j["sqin_relation"] = sqin;
  emit_object(out, g, j);
  return product && sqin ? kExitPass : kExitFail;
}

int cmd_ehrhart(const Global& g, int a, const std::string& polytope) {
  Output out(g.output);
  if ((a > 0) == !polytope.empty()) throw cl::ValidationError("give exactly one of --a or --polytope");
  cl::Json j;
  bool ok = false;
  if (a > 0) {
    const auto rep = cl::root_structure(a, enumeration_options(g));
    j["a"] = a;
    j["F"] = cl::to_json(rep.count);
    j["F_text"] = cl::to_string(rep.count, "b");
    j["G"] = cl::to_json(rep.total);
    j["G_text"] = cl::to_string(rep.total, "b");
    j["P"] = cl::to_json(rep.average);
    j["P_text"] = cl::to_string(rep.average, "b");
    j["classes_agree"] = rep.classes_agree;
    j["roots"] = rep.roots_ok;
    j["average_values"] = rep.average_values_ok;
    j["armstrong"] = rep.armstrong_ok;
    j["reflection_sign"] = rep.symmetry_sign;
    ok = rep.passed();
  } else {
    const auto all = cl::bundled_polytopes();
    auto it = std::find_if(all.begin(), all.end(), [&](const cl::NamedPolytope& p) { return p.name == polytope; });
    if (it == all.end()) throw cl::ValidationError("unknown polytope: " + polytope);
    const auto rep = cl::reciprocity_check(it->polytope, 2 * (it->degree + 2) * it->period, it->period, it->degree);
    j["polytope"] = it->name;
    j["quasipolynomial"] = cl::to_json(rep.fit);
    cl::Json rows = cl::Json::array();
    for (const auto& r : rep.rows) {
      rows.push_back({{"t", r.t}, {"predicted", cl::to_string(r.predicted)}, {"interior", cl::to_string(r.direct)}});
    }
    j["reciprocity"] = rows;
    j["passed"] = rep.passed;
    ok = rep.passed;
  }
  emit_object(out, g, j);
  return ok ? kExitPass : kExitFail;
}

int cmd_search_age(const Global& g, int a, const std::vector<int>& bs) {
  const auto res = cl::search_age_function(a, bs);
  cl::Json j;
  j["a"] = a;
  j["b"] = bs;
  j["success"] = res.success;
  j["coset_counts_match"] = res.coset_counts_match;
  j["product_identity"] = res.product_identity;
  j["solutions_found"] = res.solutions_found;
  if (res.failing_b) j["failing_b"] = *res.failing_b;
  cl::Json cosets = cl::Json::array();
  for (const auto& c : res.cosets) {
    cosets.push_back({{"residues", c.residues}, {"residue_sum", c.residue_sum}, {"shift", c.shift}});
  }
  j["cosets"] = cosets;
  j["report"] = res.report;
  Output out(g.output);
  emit_object(out, g, j);
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Simultaneous core partitions: enumeration, statistics, q- and (q,t)-Catalan polynomials, checks"};
  app.require_subcommand(1);
  // Global options are accepted before or after the subcommand.
  app.fallthrough();
  app.footer(
      "Environment: CORELATTICE_CAP sets the enumeration cap when --cap is absent.\n"
      "Exit codes: 0 pass, 1 assertion failure, 2 usage or validation error, 3 resource cap exceeded.");
  Global g;
  app.add_option("--format", g.format, "Output format: json (JSON Lines) or csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_flag("--summary", g.summary, "Emit a single summary object instead of a record stream");
  app.add_option("-o,--output", g.output, "Write output to this file instead of stdout");
  app.add_option("--cap", g.cap, "Enumeration cap on Cat(a,b); overrides CORELATTICE_CAP (default 10000000)");
  app.add_option("--threads", g.threads, "Worker threads (default: all available cores)")->check(CLI::PositiveNumber);
  app.add_flag("--serial", g.serial, "Use the single-threaded reference kernels");

  int a = 0;
  int b = 0;
  auto* enumerate = app.add_subcommand("enumerate", "List every (a,b)-core with its statistics, then a footer");
  enumerate->add_option("a", a, "First parameter")->required();
  enumerate->add_option("b", b, "Second parameter, coprime to a")->required();

  auto* poly = app.add_subcommand("poly", "Cat(a,b), Cat(a,b)(q), Cat(a,b)(q,t), symmetry and unimodality");
  poly->add_option("a", a, "First parameter")->required();
  poly->add_option("b", b, "Second parameter, coprime to a")->required();

  std::string suite;
  cl::VerifyOptions vo;
  int a_max = 0;
  int b_max = 0;
  int n_max = 0;
  int k_max = 0;
  auto* verify = app.add_subcommand("verify", "Run a named check suite; exit 1 if an assertion fails");
  verify->add_option("suite", suite, "Suite name")->required()->check(CLI::IsMember(cl::suite_names()));
  verify->add_option("--a-max", a_max, "Largest a")->check(CLI::PositiveNumber);
  verify->add_option("--b-max", b_max, "Largest b")->check(CLI::PositiveNumber);
  verify->add_option("--n-max", n_max, "Largest permutation size or binomial row")->check(CLI::PositiveNumber);
  verify->add_option("--k-max", k_max, "Largest k in the coset identities, or charge bound for quadratic")
      ->check(CLI::PositiveNumber);

  int n = 0;
  std::string perm_text;
  auto* perm = app.add_subcommand("perm", "Joint (siz, maj) distribution on S_n, or statistics of one permutation");
  perm->add_option("n", n, "Permutation size")->check(CLI::PositiveNumber);
  perm->add_option("--permutation", perm_text, "One-line notation, comma separated, e.g. 3,1,2");

  int ehrhart_a = 0;
  std::string polytope;
  auto* ehrhart = app.add_subcommand("ehrhart", "Fit count/size polynomials in b, or check reciprocity on a polytope");
  ehrhart->add_option("--a", ehrhart_a, "Fit F_a (count), G_a (total size), P_a = G_a/F_a")->check(CLI::PositiveNumber);
  ehrhart->add_option("--polytope", polytope, "segment, triangle, simplex2, simplex3 or square");

  std::vector<int> bs;
  auto* search = app.add_subcommand("search-age", "Search for coset shifts in the q^a-binomial decomposition of Cat(a,b)(q)");
  search->add_option("a", a, "First parameter")->required();
  search->add_option("b", bs, "Values of b sharing one residue mod a")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    require_format(g);
#ifdef _OPENMP
    if (g.threads > 0) omp_set_num_threads(g.threads);
#endif
    if (*enumerate) return cmd_enumerate(g, a, b);
    if (*poly) return cmd_poly(g, a, b);
    if (*verify) {
      if (a_max > 0) vo.a_max = a_max;
      if (b_max > 0) vo.b_max = b_max;
      if (n_max > 0) vo.n_max = n_max;
      if (k_max > 0) vo.k_max = k_max;
      return cmd_verify(g, suite, vo);
    }
    if (*perm) {
      if (n == 0 && perm_text.empty()) throw cl::ValidationError("give n or --permutation");
      return cmd_perm(g, n, perm_text);
    }
    if (*ehrhart) return cmd_ehrhart(g, ehrhart_a, polytope);
    if (*search) return cmd_search_age(g, a, bs);
  } catch (const cl::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const cl::ResourceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitResource;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitFail;
  }
  return kExitUsage;
}
