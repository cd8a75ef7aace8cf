#include "corelattice/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <set>

#include "corelattice/abacus.hpp"
#include "corelattice/ehrhart.hpp"
#include "corelattice/partition.hpp"
#include "corelattice/perm_stats.hpp"
#include "corelattice/qpoly.hpp"
#include "corelattice/qt_catalan.hpp"

namespace corelattice {

namespace {

using Clock = std::chrono::steady_clock;

struct Ranges {
  int a_max;
  int b_max;
  int n_max;
  int k_max;
};

Ranges ranges(const VerifyOptions& o, Ranges defaults) {
  return {o.a_max.value_or(defaults.a_max), o.b_max.value_or(defaults.b_max), o.n_max.value_or(defaults.n_max),
          o.k_max.value_or(defaults.k_max)};
}

class Recorder {
 public:
  explicit Recorder(std::string suite) : suite_(std::move(suite)) {}

  void check(const std::string& name, const std::function<bool(Json&)>& body, bool exploratory = false) {
    CheckResult r;
    r.suite = suite_;
    r.name = name;
    r.exploratory = exploratory;
    const auto start = Clock::now();
    r.passed = body(r.detail);
    r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    results_.push_back(std::move(r));
  }

  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  std::string suite_;
  std::vector<CheckResult> results_;
};

std::string pair_name(int a, int b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

// Coprime pairs 2 <= a <= a_max, a < b <= b_max.
std::vector<std::pair<int, int>> coprime_pairs(int a_max, int b_max) {
  std::vector<std::pair<int, int>> out;
  for (int a = 2; a <= a_max; ++a) {
    for (int b = a + 1; b <= b_max; ++b) {
      if (coprime(a, b)) out.emplace_back(a, b);
    }
  }
  return out;
}

std::vector<CheckResult> anderson(const VerifyOptions& o) {
  const Ranges r = ranges(o, {6, 20, 0, 0});
  Recorder rec("anderson");
  for (auto [a, b] : coprime_pairs(r.a_max, r.b_max)) {
    rec.check("count" + pair_name(a, b), [&, a = a, b = b](Json& d) {
      const SimplexSpec spec(a, b);
      const auto cores = enumerate_cores(spec, o.enumeration);
      const BigInt expected = rational_catalan(a, b);
      d["a"] = a;
      d["b"] = b;
      d["count"] = cores.size();
      d["expected"] = to_string(expected);
      const bool inside = std::all_of(cores.begin(), cores.end(), [&](const ChargeVector& cv) { return contains(spec, cv); });
      const bool distinct = std::set<ChargeVector>(cores.begin(), cores.end()).size() == cores.size();
      std::set<RepVector> zs;
      for (const auto& cv : cores) zs.insert(to_z(spec, shift(cv)));
      const auto td = trivial_determinant_points(spec);
      const bool z_bijection = zs == std::set<RepVector>(td.begin(), td.end()) && zs.size() == cores.size();
      d["inside"] = inside;
      d["z_bijection"] = z_bijection;
      return BigInt(cores.size()) == expected && inside && distinct && z_bijection;
    });
    if (a <= 5 && b <= 12) {
      rec.check("rotation" + pair_name(a, b), [a = a, b = b](Json& d) {
        d["a"] = a;
        d["b"] = b;
        return check_rotation_equidistribution(a, b);
      });
    }
  }
  return rec.take();
}

std::vector<CheckResult> armstrong(const VerifyOptions& o) {
  const Ranges r = ranges(o, {6, 20, 0, 0});
  Recorder rec("armstrong");
  for (auto [a, b] : coprime_pairs(r.a_max, r.b_max)) {
    rec.check("average" + pair_name(a, b), [&, a = a, b = b](Json& d) {
      const SizeTotals t = total_size(SimplexSpec(a, b), o.enumeration);
      const Rational expected = Rational(t.count) * armstrong_average(a, b);
      d["a"] = a;
      d["b"] = b;
      d["total"] = to_string(t.total);
      d["average"] = to_string(t.average());
      return Rational(t.total) == expected;
    });
  }
  return rec.take();
}

std::vector<CheckResult> quadratic(const VerifyOptions& o) {
  const Ranges r = ranges(o, {6, 0, 0, 4});
  Recorder rec("quadratic");
  rec.check("anchor", [](Json& d) {
    const ChargeVector cv(3, {0, 3, -3});
    const Partition p = core_from_charges(cv);
    d["partition"] = to_json(p);
    d["size"] = size_quadratic(cv);
    return p == Partition({7, 5, 3, 3, 2, 2, 1, 1}) && size_quadratic(cv) == 24;
  });
  for (int a = 1; a <= r.a_max; ++a) {
    rec.check("a=" + std::to_string(a), [a, bound = r.k_max](Json& d) {
      std::vector<std::int64_t> c(static_cast<std::size_t>(a), -bound);
      std::size_t checked = 0;
      bool ok = true;
      while (true) {
        std::int64_t head = 0;
        for (std::size_t i = 0; i + 1 < c.size(); ++i) head += c[i];
        c.back() = -head;
        if (std::abs(c.back()) <= bound) {
          const ChargeVector cv(a, c);
          const Partition p = core_from_charges(cv);
          const std::int64_t q = size_quadratic(cv);
          if (q != p.size() || !is_core(p, a) || charges_from_core(p, a) != cv || size_from_x(shift(cv)) != q) ok = false;
          ++checked;
        }
        std::size_t i = 0;
        while (i + 1 < c.size() && c[i] == bound) c[i++] = -bound;
        if (i + 1 >= c.size()) break;
        ++c[i];
      }
      d["vectors"] = checked;
      return ok;
    });
  }
  return rec.take();
}

std::vector<CheckResult> oracle(const VerifyOptions& o) {
  const Ranges r = ranges(o, {4, 9, 0, 0});
  Recorder rec("oracle");
  const auto pairs = coprime_pairs(r.a_max, r.b_max);
  std::map<std::pair<int, int>, std::set<Partition>> enumerated;
  std::map<std::pair<int, int>, int> max_size;
  int global_max = 0;
  for (auto ab : pairs) {
    for (const auto& cv : enumerate_cores(SimplexSpec(ab.first, ab.second), o.enumeration)) {
      const Partition p = core_from_charges(cv);
      enumerated[ab].insert(p);
      max_size[ab] = std::max(max_size[ab], p.size());
    }
    global_max = std::max(global_max, max_size[ab]);
  }
  std::map<std::pair<int, int>, std::set<Partition>> brute;
  for_each_partition(global_max, [&](const Partition& p) {
    const std::uint64_t mask = hook_mask(p);
    for (auto ab : pairs) {
      if (p.size() > max_size[ab]) continue;
      if ((mask >> (ab.first - 1) & 1U) == 0 && (mask >> (ab.second - 1) & 1U) == 0) brute[ab].insert(p);
    }
  });
  for (auto ab : pairs) {
    rec.check("cores" + pair_name(ab.first, ab.second), [&, ab](Json& d) {
      d["a"] = ab.first;
      d["b"] = ab.second;
      d["max_size"] = max_size[ab];
      d["count"] = enumerated[ab].size();
      d["brute_force_count"] = brute[ab].size();
      return enumerated[ab] == brute[ab];
    });
  }
  return rec.take();
}

std::vector<CheckResult> self_conjugate(const VerifyOptions& o) {
  const Ranges r = ranges(o, {6, 20, 0, 0});
  Recorder rec("self-conjugate");
  for (auto [a, b] : coprime_pairs(r.a_max, r.b_max)) {
    rec.check("count" + pair_name(a, b), [&, a = a, b = b](Json& d) {
      const SimplexSpec spec(a, b);
      const auto cores = enumerate_cores(spec, o.enumeration);
      bool equivariant = true;
      for (const auto& cv : cores) {
        const ChargeVector t = conjugation_T(cv);
        if (core_from_charges(t) != conjugate(core_from_charges(cv)) ||
            to_z(spec, shift(t)) != dual(to_z(spec, shift(cv)))) {
          equivariant = false;
        }
      }
      const SizeTotals st = self_conjugate_total_size(spec, o.enumeration);
      const BigInt expected = binomial(a / 2 + b / 2, a / 2);
      d["a"] = a;
      d["b"] = b;
      d["count"] = to_string(st.count);
      d["expected"] = to_string(expected);
      d["average"] = to_string(st.average());
      d["equivariant"] = equivariant;
      return equivariant && st.count == expected && st.average() == armstrong_average(a, b);
    });
  }
  return rec.take();
}

std::vector<CheckResult> statistics(const VerifyOptions& o) {
  const Ranges r = ranges(o, {5, 13, 0, 0});
  Recorder rec("statistics");
  rec.check("example(3,11)", [](Json& d) {
    const Partition p({9, 7, 5, 3, 2, 2, 1, 1});
    const SimplexSpec spec(3, 11);
    const ChargeVector cv = charges_from_core(p, 3);
    d["skew_length"] = skew_length_from_x(spec, shift(cv));
    d["oracle"] = skew_length(p, 3, 11).skew;
    return contains(spec, cv) && skew_length_from_x(spec, shift(cv)) == 9 && skew_length(p, 3, 11).skew == 9;
  });
  for (int a = 2; a <= r.a_max; ++a) {
    for (int b = 1; b <= r.b_max; ++b) {
      if (!coprime(a, b)) continue;
      rec.check("formulas" + pair_name(a, b), [&, a, b](Json& d) {
        const SimplexSpec spec(a, b);
        const std::int64_t top = static_cast<std::int64_t>(a - 1) * (b - 1) / 2;
        std::int64_t max_len = 0;
        std::int64_t max_skew = 0;
        bool agree = true;
        bool invariant = true;
        for (const auto& cv : enumerate_cores(spec, o.enumeration)) {
          const ShiftedPoint sp = shift(cv);
          const Partition p = core_from_charges(cv);
          const std::int64_t len = length_from_x(sp);
          const std::int64_t skew = skew_length_from_x(spec, sp);
          if (len != p.length() || skew != skew_length(p, a, b).skew) agree = false;
          std::vector<std::int64_t> xs = sp.scaled();
          std::sort(xs.begin(), xs.end());
          do {
            if (skew_length_from_coordinates(a, b, xs) != skew) invariant = false;
          } while (std::next_permutation(xs.begin(), xs.end()));
          max_len = std::max(max_len, len);
          max_skew = std::max(max_skew, skew);
        }
        d["a"] = a;
        d["b"] = b;
        d["agree"] = agree;
        d["permutation_invariant"] = invariant;
        d["max_length"] = max_len;
        d["max_skew_length"] = max_skew;
        return agree && invariant && max_len == top && max_skew == top;
      });
    }
  }
  return rec.take();
}

void coset_identity_checks(Recorder& rec, int k_max) {
  for (int k = 1; k <= k_max; ++k) {
    for (int delta : {0, 1}) {
      rec.check("a=3,k=" + std::to_string(k) + ",delta=" + std::to_string(delta), [k, delta](Json& d) {
        d["b"] = 3 * k + 1 + delta;
        return check_coset_identity_a3(k, delta);
      });
    }
  }
  for (int k = 1; k <= std::min(k_max, 4); ++k) {
    rec.check("a=4,k=" + std::to_string(k), [k](Json& d) {
      d["b"] = 4 * k + 1;
      return check_coset_identity_a4(k);
    });
  }
}

std::vector<CheckResult> coset_identities(const VerifyOptions& o) {
  const Ranges r = ranges(o, {0, 0, 0, 6});
  Recorder rec("coset-identities");
  coset_identity_checks(rec, r.k_max);
  return rec.take();
}

std::vector<CheckResult> q_identities(const VerifyOptions& o) {
  const Ranges r = ranges(o, {6, 20, 12, 6});
  Recorder rec("q-identities");
  rec.check("q_binomial_symmetry", [n_max = r.n_max](Json& d) {
    bool ok = true;
    for (int n = 0; n <= n_max; ++n) {
      for (int k = 0; k <= n; ++k) {
        const LaurentPoly1 p = q_binomial(n, k);
        const std::int64_t deg = static_cast<std::int64_t>(k) * (n - k);
        const LaurentPoly1 reversed = p.substitute([deg](std::int64_t e) { return deg - e; });
        if (p != q_binomial(n, n - k) || p != reversed || p.at_one() != binomial(n, k)) ok = false;
      }
    }
    d["n_max"] = n_max;
    return ok;
  });
  for (auto [a, b] : coprime_pairs(r.a_max, r.b_max)) {
    rec.check("cat_q" + pair_name(a, b), [&, a = a, b = b](Json& d) {
      const LaurentPoly1 p = cat_q(a, b);
      const auto count = enumerate_cores(SimplexSpec(a, b), o.enumeration).size();
      d["a"] = a;
      d["b"] = b;
      d["at_one"] = to_string(p.at_one());
      d["degree"] = max_exponent(p);
      return p.at_one() == count && p.nonnegative() && min_exponent(p) == 0 &&
             max_exponent(p) == static_cast<std::int64_t>(a - 1) * (b - 1);
    });
  }
  coset_identity_checks(rec, r.k_max);
  return rec.take();
}

std::vector<CheckResult> qt(const VerifyOptions& o) {
  const Ranges r = ranges(o, {5, 13, 0, 0});
  Recorder rec("qt");
  rec.check("cat_qt(3,4)", [&](Json& d) {
    const LaurentPoly2 p = cat_qt(SimplexSpec(3, 4), o.enumeration);
    const LaurentPoly2 expected = qt_power(3, 0) + qt_power(2, 1) + qt_power(1, 2) + qt_power(1, 1) + qt_power(0, 3);
    d["poly"] = to_json(p);
    return p == expected && p == cat_qt_serial(SimplexSpec(3, 4));
  });
  for (int a = 2; a <= r.a_max; ++a) {
    for (int b = 1; b <= r.b_max; ++b) {
      if (!coprime(a, b)) continue;
      const bool proven = a <= 3;
      rec.check("symmetry" + pair_name(a, b), [&, a, b](Json& d) {
        const SimplexSpec spec(a, b);
        const LaurentPoly2 p = cat_qt(spec, o.enumeration);
        const bool symmetric = p == swap_variables(p);
        const bool specialized = check_specialization(spec, o.enumeration);
        d["a"] = a;
        d["b"] = b;
        d["symmetric"] = symmetric;
        d["specialization"] = specialized;
        d["at_one"] = to_string(p.substitute([](Exp2) { return Exp2{}; }).coefficient(Exp2{}));
        return symmetric && specialized && p.nonnegative() &&
               p.substitute([](Exp2) { return Exp2{}; }).coefficient(Exp2{}) == rational_catalan(a, b);
      }, !proven);
    }
  }
  return rec.take();
}

std::vector<CheckResult> qt3(const VerifyOptions& o) {
  const Ranges r = ranges(o, {0, 20, 0, 0});
  Recorder rec("qt3");
  for (int b = 4; b <= r.b_max; ++b) {
    if (!coprime(3, b)) continue;
    rec.check("b=" + std::to_string(b), [b](Json& d) {
      d["b"] = b;
      return check_qt3_identity(b);
    });
  }
  return rec.take();
}

std::vector<CheckResult> sizmaj1(const VerifyOptions& o) {
  const Ranges r = ranges(o, {6, 0, 0, 0});
  Recorder rec("sizmaj1");
  for (int a = 2; a <= r.a_max; ++a) {
    rec.check("a=" + std::to_string(a), [a](Json& d) {
      d["a"] = a;
      d["cosets"] = orbifold_minimal_vectors(a).size();
      return check_sizmaj1(a);
    });
  }
  return rec.take();
}

std::vector<CheckResult> sizmaj2(const VerifyOptions& o) {
  const Ranges r = ranges(o, {0, 0, 7, 0});
  Recorder rec("sizmaj2");
  for (int n = 1; n <= r.n_max; ++n) {
    rec.check("n=" + std::to_string(n), [n](Json& d) {
      const LaurentPoly2 dist = distribution(n);
      BigInt factorial = 1;
      for (int k = 2; k <= n; ++k) factorial *= k;
      const BigInt total = dist.substitute([](Exp2) { return Exp2{}; }).coefficient(Exp2{});
      const bool product = dist == sizmaj_product(n);
      const bool sqin_ok = check_sqin_relation(n);
      d["n"] = n;
      d["product"] = product;
      d["sqin"] = sqin_ok;
      return product && sqin_ok && total == factorial && dist == distribution_serial(n);
    });
  }
  return rec.take();
}

std::vector<CheckResult> ld_weights(const VerifyOptions& o) {
  const Ranges r = ranges(o, {0, 0, 7, 0});
  Recorder rec("ld-weights");
  for (int n = 1; n <= r.n_max; ++n) {
    rec.check("n=" + std::to_string(n), [n](Json& d) {
      bool round_trip = true;
      for (const auto& vs : all_valid_sequences(n)) {
        if (ld_encode(ld_decode(vs)) != vs) round_trip = false;
      }
      for (const auto& p : all_permutations(n)) {
        if (ld_decode(ld_encode(p)) != p) round_trip = false;
      }
      const bool weights = check_ld_weights(n);
      const bool steps = check_ld_steps(n);
      d["n"] = n;
      d["round_trip"] = round_trip;
      d["weights"] = weights;
      d["steps"] = steps;
      return round_trip && weights && steps;
    });
  }
  return rec.take();
}

std::vector<CheckResult> delta(const VerifyOptions& o) {
  const Ranges r = ranges(o, {5, 0, 0, 0});
  Recorder rec("delta-table");
  for (int a = 2; a <= r.a_max; ++a) {
    int b = 3 * a + 1;
    while (!coprime(a, b)) ++b;
    rec.check(pair_name(a, b), [a, b](Json& d) {
      Json rows = Json::array();
      bool co_skew_reading = true;
      bool skew_reading = true;
      for (const auto& e : delta_table(a, b)) {
        rows.push_back({{"i", e.i},
                        {"chamber", e.chamber},
                        {"in_simplex", e.in_simplex},
                        {"delta_length", e.delta_length},
                        {"delta_co_skew", e.delta_co_skew}});
        if (!e.in_simplex || e.delta_length != e.expected_length) {
          co_skew_reading = false;
          skew_reading = false;
        }
        if (e.delta_co_skew != e.expected_co_skew) co_skew_reading = false;
        if (e.delta_skew != e.expected_co_skew) skew_reading = false;
      }
      d["a"] = a;
      d["b"] = b;
      d["rows"] = rows;
      d["co_skew_reading_fits"] = co_skew_reading;
      d["skew_reading_fits"] = skew_reading;
      return co_skew_reading;
    });
  }
  return rec.take();
}

std::vector<CheckResult> reciprocity(const VerifyOptions&) {
  Recorder rec("reciprocity");
  rec.check("triangle_quasipolynomial", [](Json& d) {
    SampleSeries s;
    const RationalPolytope tri = bundled_polytopes()[1].polytope;
    for (int t = 1; t <= 8; ++t) s[t] = lattice_sum(tri, t, false);
    const Quasipolynomial q = fit_quasipolynomial(s, 2, 2);
    d["fit"] = to_json(q);
    const RationalPoly even({Rational(1), Rational(1), Rational(1, 4)});
    const RationalPoly odd({Rational(3, 4), Rational(1), Rational(1, 4)});
    return q.constituents.size() == 2 && q.constituents[0] == even && q.constituents[1] == odd;
  });
  for (const auto& np : bundled_polytopes()) {
    rec.check(np.name, [&np](Json& d) {
      const auto rep = reciprocity_check(np.polytope, 2 * (np.degree + 2) * np.period, np.period, np.degree);
      d["fit"] = to_json(rep.fit);
      return rep.passed;
    });
  }
  rec.check("segment_weighted_x^2", [](Json& d) {
    const auto rep = reciprocity_check(bundled_polytopes()[0].polytope, 12, 1, 3,
                                       [](std::span<const std::int64_t> x) { return Rational(x[0] * x[0]); });
    d["fit"] = to_json(rep.fit);
    // sum_{k=0}^t k^2 = t(t+1)(2t+1)/6
    const RationalPoly closed({Rational(0), Rational(1, 6), Rational(1, 2), Rational(1, 3)});
    return rep.passed && rep.fit.constituents[0] == closed;
  });
  for (int a = 2; a <= 5; ++a) {
    rec.check("standard_simplex_a=" + std::to_string(a), [a](Json& d) {
      const RationalPolytope p = standard_simplex(a - 1);
      SampleSeries s;
      for (int b = 1; b <= a + 2; ++b) s[b] = lattice_sum(p, b, false);
      const RationalPoly fit = fit_polynomial(s, a - 1);
      d["fit"] = to_json(fit);
      bool ok = true;
      for (int b = 0; b <= 12; ++b) {
        if (fit(Rational(b)) != Rational(binomial(a - 1 + b, b))) ok = false;
      }
      return ok;
    });
  }
  return rec.take();
}

std::vector<CheckResult> root_structure_suite(const VerifyOptions& o) {
  const Ranges r = ranges(o, {5, 0, 0, 0});
  Recorder rec("root-structure");
  for (int a = 2; a <= r.a_max; ++a) {
    rec.check("a=" + std::to_string(a), [&, a](Json& d) {
      const RootStructureReport rep = root_structure(a, o.enumeration);
      d["a"] = a;
      d["F"] = to_json(rep.count);
      d["G"] = to_json(rep.total);
      d["P"] = to_json(rep.average);
      d["classes_agree"] = rep.classes_agree;
      d["roots"] = rep.roots_ok;
      d["average_values"] = rep.average_values_ok;
      d["armstrong"] = rep.armstrong_ok;
      d["reflection_sign"] = rep.symmetry_sign;
      return rep.passed();
    });
  }
  return rec.take();
}

std::vector<CheckResult> unimodality(const VerifyOptions& o) {
  const Ranges r = ranges(o, {5, 30, 0, 0});
  Recorder rec("unimodality");
  rec.check("sweep", [&](Json& d) {
    Json violations = Json::array();
    std::size_t polys = 0;
    for (auto [a, b] : coprime_pairs(r.a_max, r.b_max)) {
      ++polys;
      for (const auto& v : unimodality_report(cat_q(a, b), a)) {
        if (!v.unimodal) violations.push_back({{"a", a}, {"b", b}, {"residue", v.residue}});
      }
    }
    d["polynomials"] = polys;
    d["violations"] = violations;
    return violations.empty();
  }, true);
  return rec.take();
}

std::vector<CheckResult> age_search(const VerifyOptions& o) {
  const Ranges r = ranges(o, {4, 0, 0, 0});
  Recorder rec("age-search");
  struct Case {
    int a;
    std::vector<int> bs;
    std::vector<std::int64_t> expected;
  };
  std::vector<Case> cases{{2, {3, 5, 7, 9, 11, 13, 15}, {0}},
                          {3, {4, 7, 10}, {0, 2, 4}},
                          {3, {5, 8, 11}, {0, 2, 4}},
                          {4, {5, 9, 13}, {0, 4, 8, 12, 5, 9, 9, 13, 2, 6, 6, 10, 3, 7, 11, 15}}};
  for (auto& c : cases) {
    if (c.a > r.a_max) continue;
    std::string name = "a=" + std::to_string(c.a) + ",b=";
    for (std::size_t i = 0; i < c.bs.size(); ++i) name += (i ? "/" : "") + std::to_string(c.bs[i]);
    rec.check(name, [&c](Json& d) {
      const AgeSearchResult res = search_age_function(c.a, c.bs);
      std::vector<std::int64_t> shifts;
      Json cosets = Json::array();
      for (const auto& t : res.cosets) {
        shifts.push_back(t.shift);
        cosets.push_back({{"residues", t.residues}, {"residue_sum", t.residue_sum}, {"shift", t.shift}});
      }
      std::sort(shifts.begin(), shifts.end());
      auto expected = c.expected;
      std::sort(expected.begin(), expected.end());
      d["a"] = c.a;
      d["b"] = c.bs;
      d["success"] = res.success;
      d["coset_counts_match"] = res.coset_counts_match;
      d["product_identity"] = res.product_identity;
      d["solutions_found"] = res.solutions_found;
      d["cosets"] = cosets;
      d["report"] = res.report;
      if (res.failing_b) d["failing_b"] = *res.failing_b;
      return res.success && res.coset_counts_match && shifts == expected;
    }, true);
  }
  return rec.take();
}

using SuiteFn = std::vector<CheckResult> (*)(const VerifyOptions&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> suites{
      {"anderson", anderson},
      {"armstrong", armstrong},
      {"quadratic", quadratic},
      {"oracle", oracle},
      {"self-conjugate", self_conjugate},
      {"statistics", statistics},
      {"q-identities", q_identities},
      {"coset-identities", coset_identities},
      {"qt", qt},
      {"qt3", qt3},
      {"sizmaj1", sizmaj1},
      {"sizmaj2", sizmaj2},
      {"ld-weights", ld_weights},
      {"delta-table", delta},
      {"reciprocity", reciprocity},
      {"root-structure", root_structure_suite},
      {"unimodality", unimodality},
      {"age-search", age_search},
  };
  return suites;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    out.emplace_back("all");
    return out;
  }();
  return names;
}

std::vector<CheckResult> run_suite(const std::string& suite, const VerifyOptions& options) {
  if (suite == "all") {
    std::vector<CheckResult> out;
    for (const auto& [name, fn] : registry()) {
      // coset-identities is contained in q-identities
      if (name == "coset-identities") continue;
      auto part = fn(options);
      out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
    return out;
  }
  for (const auto& [name, fn] : registry()) {
    if (name == suite) return fn(options);
  }
  throw ValidationError("unknown verify suite: " + suite);
}

bool all_passed(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed || r.exploratory; });
}

}  // namespace corelattice
