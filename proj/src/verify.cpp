#include "flatstat/verify.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <random>
#include <set>
#include <sstream>

#include "flatstat/analytic.hpp"
#include "flatstat/bijections.hpp"
#include "flatstat/classical.hpp"
#include "flatstat/ddescent.hpp"
#include "flatstat/distribution.hpp"
#include "flatstat/error.hpp"
#include "flatstat/oracle.hpp"

namespace flatstat {

namespace {

class Suite {
 public:
  explicit Suite(std::string name) { result_.suite = std::move(name); }

  template <class Detail>
  void check(bool ok, Detail&& detail) {
    ++result_.checks;
    if (!ok && result_.passed) {
      result_.passed = false;
      result_.first_failure = detail();
    }
  }

  // A check whose failure surfaces as an exception.
  void pass() { ++result_.checks; }

  void fail(const std::string& detail) {
    check(false, [&] { return detail; });
  }

  SuiteResult result() const { return result_; }

 private:
  SuiteResult result_;
};

template <class Body>
SuiteResult run_suite(const std::string& name, Body body) {
  Suite suite(name);
  try {
    body(suite);
  } catch (const Error& e) {
    suite.fail(std::string("error ") + to_string(e.code()) + ": " + e.what());
  }
  return suite.result();
}

std::vector<Statistic> exact_statistics(int d_max) {
  std::vector<Statistic> out{Statistic::des(),    Statistic::asc(),    Statistic::big_des(), Statistic::sub123(),
                             Statistic::sub321(), Statistic::peak(),   Statistic::valley()};
  for (int d = 3; d <= d_max; ++d) out.push_back(Statistic::d_des(d));
  return out;
}

const std::vector<Statistic>& length_three_statistics() {
  static const std::vector<Statistic> stats{Statistic::sub123(), Statistic::sub321(), Statistic::peak(),
                                            Statistic::valley()};
  return stats;
}

// Permutations read as a function of their cycle form, flattening, and the
// counting identities between statistics.
SuiteResult permcore_suite(const VerifyOptions& o) {
  return run_suite("permcore", [&](Suite& s) {
    for (int n = 1; n <= std::min(o.n_max, 8); ++n) {
      for (const Permutation& p : all_permutations(n)) {
        const CycleForm c = standard_cycle_form(p);
        s.check(c.is_standard() && flatten(c)(1) == 1 && c.to_permutation() == p,
                [&] { return "cycle form of " + p.to_string(); });
        const int des = count_stat(p, Statistic::des(false));
        s.check(des + count_stat(p, Statistic::asc(false)) == n - 1 &&
                    count_stat(p, Statistic::d_des(1, false)) == des &&
                    count_stat(p, Statistic::big_des(false)) == count_stat(p, Statistic::d_des(2, false)),
                [&] { return "counting identities on " + p.to_string(); });
      }
    }
  });
}

QPolynomial random_qpoly(std::mt19937& rng) {
  std::uniform_int_distribution<int> degree(0, 20);
  std::uniform_int_distribution<int> coeff(-1000, 1000);
  std::vector<BigInt> c(static_cast<std::size_t>(degree(rng)) + 1);
  for (auto& x : c) x = coeff(rng);
  return QPolynomial(std::move(c));
}

template <class P>
P retag(const QPolynomial& p) {
  return P(std::vector<BigInt>(p.coeffs().begin(), p.coeffs().end()));
}

// Keeps only the coefficients of powers with the given parity.
SPolynomial parity_part(const QPolynomial& p, int parity) {
  std::vector<BigInt> c(p.coeffs().begin(), p.coeffs().end());
  for (std::size_t i = 0; i < c.size(); ++i)
    if (static_cast<int>(i % 2) != parity) c[i] = 0;
  return SPolynomial(std::move(c));
}

SuiteResult algebra_suite() {
  return run_suite("algebra", [&](Suite& s) {
    std::mt19937 rng(20240601);
    for (int trial = 0; trial < 40; ++trial) {
      const QPolynomial a = random_qpoly(rng);
      const QPolynomial b = random_qpoly(rng);
      const QPolynomial c = random_qpoly(rng);
      s.check((a * b) * c == a * (b * c) && a * (b + c) == a * b + a * c,
              [&] { return "ring axioms, trial " + std::to_string(trial); });
      const auto ta = retag<ThetaPolynomial>(a);
      const auto tb = retag<ThetaPolynomial>(b);
      s.check(substitute_theta(ta * tb) == substitute_theta(ta) * substitute_theta(tb),
              [&] { return "substitute-theta homomorphism, trial " + std::to_string(trial); });
      const SPolynomial ea = parity_part(a, 0);
      const SPolynomial eb = parity_part(b, 0);
      s.check(spoly_reduce_even(ea * eb) == spoly_reduce_even(ea) * spoly_reduce_even(eb),
              [&] { return "even reduction homomorphism, trial " + std::to_string(trial); });
      const SPolynomial oa = parity_part(a, 1);
      const SPolynomial ob = parity_part(b, 1);
      (void)spoly_reduce_even(oa * ob);
      s.pass();
    }
    for (int trial = 0; trial < 5; ++trial) {
      constexpr int order = 8;
      QSeries f = QSeries::constant(QPolynomial(1 + trial), order);
      std::uniform_int_distribution<int> coeff(-20, 20);
      for (int m = 1; m <= order; ++m)
        f.set_coeff(m, SeriesCoeff(QPolynomial(std::vector<BigInt>{coeff(rng), coeff(rng)}), BigInt(m)));
      s.check(f * f.reciprocal() == QSeries::constant(QPolynomial(1), order),
              [&] { return "series reciprocal, trial " + std::to_string(trial); });
    }
  });
}

SuiteResult classical_suite(const VerifyOptions& o) {
  return run_suite("classical", [&](Suite& s) {
    for (int n = 0; n <= 40; ++n) {
      const SPolynomial v = chebyshev_v(n);
      bool parity = v.degree() == n;
      for (int i = 0; i <= v.degree(); ++i)
        if ((i - n) % 2 != 0 && v.coeff(i) != 0) parity = false;
      s.check(parity, [&] { return "V_" + std::to_string(n) + " degree/parity"; });
    }
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> unit(-0.999, 0.999);
    for (int trial = 0; trial < 20; ++trial) {
      const double t = unit(rng);
      for (int n = -2; n <= 15; ++n) {
        const double exact = n < 0 ? (n == -2 ? -1.0 : 0.0) : chebyshev_v(n).evaluate(2.0 * t);
        s.check(std::abs(chebyshev_closed_eval(n, t) - exact) < 1e-9,
                [&] { return "closed Chebyshev n=" + std::to_string(n) + " t=" + std::to_string(t); });
      }
    }
    for (int n = 0; n <= 12; ++n) {
      BigInt total = 0;
      for (int k = 0; k <= n; ++k) total += stirling(StirlingKind::FirstSignless, n, k);
      s.check(total == factorial(n), [&] { return "sum_k c(" + std::to_string(n) + ",k)"; });
    }
    const EulerianTable table(15);
    for (int n = 1; n <= 15; ++n) {
      BigInt total = 0;
      bool palindromic = true;
      for (int k = 0; k < n; ++k) {
        total += table.number(n, k);
        palindromic = palindromic && table.number(n, k) == table.number(n, n - 1 - k);
      }
      s.check(total == factorial(n) && palindromic, [&] { return "Eulerian row " + std::to_string(n); });
    }
    for (int n = 1; n <= std::min(o.n_max, 7); ++n) {
      s.check(brute_distribution(Statistic::asc(false), n) == eulerian_poly(n),
              [&] { return "Eulerian vs ascent count n=" + std::to_string(n); });
      std::vector<BigInt> cycles(static_cast<std::size_t>(n) + 1);
      iterate_sym(n, [&](std::span<const int> w) { ++cycles[static_cast<std::size_t>(cycle_count(w))]; });
      for (int k = 0; k <= n; ++k)
        s.check(cycles[static_cast<std::size_t>(k)] == stirling(StirlingKind::FirstSignless, n, k),
                [&] { return "c(" + std::to_string(n) + "," + std::to_string(k) + ") vs cycle count"; });
    }
    for (int n = 1; n <= 14; ++n)
      for (int m = 1; m <= n; ++m) {
        (void)t_coeff(n, m);
        s.pass();
      }
  });
}

SuiteResult oracle_suite(const VerifyOptions& o) {
  return run_suite("oracle", [&](Suite& s) {
    for (int n = 1; n <= o.n_max; ++n) {
      for (const Statistic& st : exact_statistics(o.d_max)) {
        const QPolynomial g = brute_distribution(st, n);
        s.check(g.evaluate(BigInt(1)) == factorial(n), [&] { return st.name() + " n=" + std::to_string(n) + " total"; });
        if (n >= 2 && (st.kind == StatKind::Des || st.kind == StatKind::Sub123))
          s.check(g.degree() <= n - 2, [&] { return st.name() + " n=" + std::to_string(n) + " degree"; });
      }
    }
    for (int n = 1; n <= std::min(o.n_max, 7); ++n) {
      for (const Statistic& st : length_three_statistics()) {
        std::vector<int> prefix{1};
        const std::function<void()> walk = [&] {
          if (prefix.size() > 3) return;
          QPolynomial children;
          for (int h = 1; h <= n; ++h) {
            if (std::find(prefix.begin(), prefix.end(), h) != prefix.end()) continue;
            prefix.push_back(h);
            children += brute_prefix_distribution(st, n, prefix);
            walk();
            prefix.pop_back();
          }
          if (static_cast<int>(prefix.size()) < n)
            s.check(brute_prefix_distribution(st, n, prefix) == children, [&] {
              std::string text;
              for (int v : prefix) text += std::to_string(v);
              return "prefix sum " + st.name() + " n=" + std::to_string(n) + " prefix " + text;
            });
        };
        walk();
      }
    }
  });
}

SuiteResult distengine_suite(const VerifyOptions& o) {
  return run_suite("distengine", [&](Suite& s) {
    s.check(verify_frozen_constants(std::min(std::max(o.n_max, 3), 8)), [] { return std::string("frozen constants"); });
    const int fault_n = std::min(3, o.n_max);
    for (int n = 1; n <= o.n_max; ++n) {
      for (const Statistic& st : exact_statistics(o.d_max)) {
        const QPolynomial truth = brute_distribution(st, n);
        for (MethodTag m : supported_methods(st)) {
          if (m == MethodTag::Brute) continue;
          QPolynomial got = dist(st, n, m);
          if (o.inject_fault && st.kind == StatKind::Des && n == fault_n && m == MethodTag::Closed) got += 1;
          s.check(got == truth, [&] {
            return "st=" + st.name() + " n=" + std::to_string(n) + " method=" + to_string(m) + ": got " +
                   got.to_string() + ", oracle " + truth.to_string();
          });
        }
      }
      s.check(dist(Statistic::asc(), n) == dist(Statistic::des(), n).reversed(n - 1),
              [&] { return "ascent reversal n=" + std::to_string(n); });
    }
    for (int n = 1; n <= 30; ++n) {
      (void)dist(Statistic::des(), n, MethodTag::Closed);
      s.pass();
    }
    for (int i = 1; i <= 40; ++i)
      for (const Statistic& st : length_three_statistics()) {
        (void)b_coeff(st, i);
        s.pass();
      }
    const std::vector<Statistic> prefix_stats{Statistic::des(), Statistic::sub123(), Statistic::sub321(),
                                              Statistic::peak(), Statistic::valley()};
    for (int n = 2; n <= std::min(o.n_max, 7); ++n)
      for (const Statistic& st : prefix_stats)
        for (int k = 2; k <= n; ++k) {
          const std::vector<int> prefix{1, k};
          s.check(prefix_dist(st, n, k) == brute_prefix_distribution(st, n, prefix), [&] {
            return "prefix st=" + st.name() + " n=" + std::to_string(n) + " k=" + std::to_string(k);
          });
        }
    const std::vector<std::pair<Statistic, int>> averages{{Statistic::des(), 1},    {Statistic::asc(), 1},
                                                          {Statistic::sub123(), 3}, {Statistic::sub321(), 2},
                                                          {Statistic::peak(), 2},   {Statistic::valley(), 3}};
    for (const auto& [st, from] : averages)
      for (int n = from; n <= o.n_max; ++n)
        s.check(average(st, n) == average_from_distribution(dist(st, n), n),
                [&, st = st] { return "average st=" + st.name() + " n=" + std::to_string(n); });
    for (const char* name : {"des", "321", "peak", "valley"})
      s.check(series_identity_check(name, 10), [&] { return std::string("series identity ") + name; });
  });
}

SuiteResult ddescent_suite(const VerifyOptions& o) {
  return run_suite("ddescent", [&](Suite& s) {
    for (int d = 1; d <= o.d_max; ++d) {
      const DistTriangle tri = triangle_by_recurrence(std::max(o.n_max, 12), d);
      for (int n = 1; n <= o.n_max; ++n) {
        const DistTriangle brute = brute_ddescent_table(n, d);
        for (const auto& c : brute.cells())
          s.check(tri.at(c.n, c.m, c.k) == c.count, [&] {
            return "a(" + std::to_string(c.n) + "," + std::to_string(c.m) + "," + std::to_string(c.k) +
                   ") d=" + std::to_string(d);
          });
        s.check(tri.row_total(n) == brute.row_total(n), [&] { return "row total n=" + std::to_string(n); });
      }
      const auto marginal = marginal_by_recurrence(12, d);
      for (int n = 1; n <= 12; ++n) {
        for (int m = 0; m < n; ++m) {
          const BigInt a = marginal[static_cast<std::size_t>(n)][static_cast<std::size_t>(m)];
          s.check(a == tri.marginal(n, m) && a == explicit_marginal(n, m, d) && (a == 0) == (m > 0 && n < m + d + 1),
                  [&] {
                    return "marginal n=" + std::to_string(n) + " m=" + std::to_string(m) + " d=" + std::to_string(d);
                  });
        }
        if (n >= d + 1)
          s.check(factorial_identity_check(n, d),
                  [&] { return "factorial identity n=" + std::to_string(n) + " d=" + std::to_string(d); });
      }
      for (int n = 1; n <= o.n_max; ++n)
        s.check(equidistribution_check(n, d),
                [&] { return "equidistribution n=" + std::to_string(n) + " d=" + std::to_string(d); });
    }
  });
}

SuiteResult bijection_suite(const VerifyOptions& o) {
  return run_suite("bijections", [&](Suite& s) {
    const InsertionEncoding worked = parse_encoding("0,2;1,1;0,3;1,2;0,3;1,1;0,5");
    s.check(bij_g_cycles(worked).to_string() == "(1 7 3)(2 5)(4 6)(8)" && bij_h(worked).to_string() == "7,3,1,6,5,2,4,8",
            [] { return std::string("worked example"); });
    for (int n = 1; n <= std::min(o.n_max, 8); ++n) {
      long long count = 0;
      enumerate_encodings(n, [&](const InsertionEncoding&) { ++count; });
      s.check(BigInt(count) == factorial(n), [&] { return "encoding count n=" + std::to_string(n); });
    }
    for (int n = 1; n <= std::min(o.n_max, 7); ++n) {
      std::set<Permutation> image;
      for (const Permutation& p : all_permutations(n)) {
        const Permutation t = transport(p);
        image.insert(t);
        s.check(count_stat(p, Statistic::des()) == count_stat(t, Statistic::big_des(false)) &&
                    bij_g(bij_g_inv(p)) == p && bij_h(bij_h_inv(p)) == p,
                [&] { return "transport of " + p.to_string(); });
      }
      s.check(BigInt(image.size()) == factorial(n),
              [&] { return "transport image size n=" + std::to_string(n); });
    }
  });
}

SuiteResult lemma_suite(const VerifyOptions& o) {
  return run_suite("lemmas", [&](Suite& s) {
    for (int n = 4; n <= std::min(o.n_max, 6); ++n)
      for (const Statistic& st : length_three_statistics()) {
        for (int i = 2; i <= n; ++i)
          for (int j = 2; j <= n; ++j)
            for (int k = 2; k <= n; ++k)
              if (i != j && j != k && i != k)
                s.check(verify_lemma_reduction(st, n, i, j, k), [&] {
                  return "reduction st=" + st.name() + " n=" + std::to_string(n) + " (" + std::to_string(i) + "," +
                         std::to_string(j) + "," + std::to_string(k) + ")";
                });
        for (int i = 3; i <= n; ++i)
          for (int j = 2; j < i; ++j)
            s.check(verify_lemma_exchange(st, n, i, j), [&] {
              return "exchange st=" + st.name() + " n=" + std::to_string(n) + " (" + std::to_string(i) + "," +
                     std::to_string(j) + ")";
            });
      }
  });
}

SuiteResult analytic_suite() {
  return run_suite("analytic", [&](Suite& s) {
    for (double q : {0.25, 0.5, 0.75}) {
      s.check(std::abs(analytic_eval("H", 0.0, q) - 2.0) < 1e-12, [&] { return "H(0) q=" + std::to_string(q); });
      constexpr double h = 1e-5;
      const double slope = (analytic_eval("H", h, q) - analytic_eval("H", -h, q)) / (2 * h);
      s.check(std::abs(slope - (6.0 - 4.0 * (1.0 - q))) < 1e-4, [&] { return "H'(0) q=" + std::to_string(q); });
      for (double x : {0.05, 0.1, 0.2})
        for (const char* name : {"H", "Gr", "Br", "Bd"}) {
          const double a = analytic_eval(name, x, q);
          const double b = series_eval(name, x, q, 30);
          s.check(std::abs(a - b) <= 1e-8 * std::abs(b), [&] {
            return std::string(name) + " x=" + std::to_string(x) + " q=" + std::to_string(q);
          });
        }
      for (int n = 1; n <= 8; ++n) {
        const double des = to_double(dist(Statistic::des(), n).evaluate(Rational(q)));
        s.check(std::abs(infinite_sum_eval("des", n, q).value - des) < 1e-8,
                [&] { return "des sum n=" + std::to_string(n) + " q=" + std::to_string(q); });
        if (n >= 2) {
          const double val = to_double(dist(Statistic::valley(), n).evaluate(Rational(q)));
          s.check(std::abs(infinite_sum_eval("valley", n, q).value - val) < 1e-8,
                  [&] { return "valley sum n=" + std::to_string(n) + " q=" + std::to_string(q); });
        }
      }
    }
  });
}

}  // namespace

bool VerifyReport::passed() const {
  return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& r) { return r.passed; });
}

std::string VerifyReport::table() const {
  std::ostringstream os;
  os << std::left << std::setw(12) << "suite" << std::setw(10) << "checks" << "result\n";
  for (const auto& r : suites) {
    os << std::left << std::setw(12) << r.suite << std::setw(10) << r.checks << (r.passed ? "PASS" : "FAIL");
    if (!r.passed) os << "  " << r.first_failure;
    os << '\n';
  }
  return os.str();
}

VerifyReport run_verify(const VerifyOptions& options) {
  if (options.n_max < 1 || options.n_max > default_max_n())
    throw Error(ErrorCode::Range, "n-max must lie in [1, oracle cap]");
  if (options.d_max < 1) throw Error(ErrorCode::Range, "d-max must be >= 1");
  VerifyReport report;
  report.suites.push_back(permcore_suite(options));
  report.suites.push_back(algebra_suite());
  report.suites.push_back(classical_suite(options));
  report.suites.push_back(oracle_suite(options));
  report.suites.push_back(distengine_suite(options));
  report.suites.push_back(ddescent_suite(options));
  report.suites.push_back(bijection_suite(options));
  report.suites.push_back(lemma_suite(options));
  report.suites.push_back(analytic_suite());
  return report;
}

}  // namespace flatstat
