// Acceptance suite: one PASS/FAIL line per criterion; exit status 0 iff all pass.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <optional>
#include <set>
#include <string>

#include "flatstat/analytic.hpp"
#include "flatstat/bijections.hpp"
#include "flatstat/ddescent.hpp"
#include "flatstat/distribution.hpp"
#include "flatstat/error.hpp"
#include "flatstat/oracle.hpp"

using namespace flatstat;

namespace {

using Outcome = std::optional<std::string>;  // failure detail, empty on success

const std::vector<Statistic>& length_three() {
  static const std::vector<Statistic> stats{Statistic::sub123(), Statistic::sub321(), Statistic::peak(),
                                            Statistic::valley()};
  return stats;
}

Outcome oracle_agreement() {
  const auto start = std::chrono::steady_clock::now();
  for (const Statistic& st : {Statistic::des(), Statistic::asc(), Statistic::sub123(), Statistic::sub321(),
                              Statistic::peak(), Statistic::valley()})
    for (int n = 1; n <= 9; ++n) {
      const QPolynomial truth = brute_distribution(st, n);
      for (MethodTag m : supported_methods(st))
        if (dist(st, n, m) != truth)
          return "st=" + st.name() + " n=" + std::to_string(n) + " method=" + to_string(m);
    }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << "  oracle agreement took " << seconds << " s\n";
  return std::nullopt;
}

Outcome worked_examples() {
  if (flatten(standard_cycle_form(Permutation({7, 1, 5, 6, 4, 3, 2, 8}))).to_string() != "1,7,2,3,5,4,6,8")
    return "Flatten(71564328)";
  if (count_stat(Permutation({1, 2, 4, 7, 6, 5, 3}), Statistic::sub321(false)) != 2) return "321 count of 1247653";
  const Permutation sigma = CycleForm({{1, 9, 8, 5}, {2, 4}, {3, 6, 7}}).to_permutation();
  if (count_stat(sigma, Statistic::d_des(3)) != 2 || count_stat(sigma, Statistic::des()) != 4)
    return "3-descents and descents of (1 9 8 5)(2 4)(3 6 7)";
  const InsertionEncoding e = parse_encoding("0,2;1,1;0,3;1,2;0,3;1,1;0,5");
  if (bij_g_cycles(e).to_string() != "(1 7 3)(2 5)(4 6)(8)") return "g of the worked encoding";
  if (bij_h(e).to_string() != "7,3,1,6,5,2,4,8") return "h of the worked encoding";
  if (transport(Permutation({7, 5, 1, 6, 2, 4, 3, 8})).to_string() != "7,3,1,6,5,2,4,8") return "transport(75162438)";
  return std::nullopt;
}

Outcome series_identities() {
  for (const char* name : {"des", "321", "peak", "valley"})
    if (!series_identity_check(name, 10)) return std::string("identity ") + name;
  return std::nullopt;
}

Outcome average_formulas() {
  const std::vector<std::pair<Statistic, int>> ranges{{Statistic::des(), 1},    {Statistic::asc(), 1},
                                                      {Statistic::sub123(), 3}, {Statistic::sub321(), 2},
                                                      {Statistic::peak(), 2},   {Statistic::valley(), 3}};
  for (const auto& [st, from] : ranges)
    for (int n = from; n <= 9; ++n)
      if (average(st, n) != average_from_distribution(dist(st, n), n))
        return "average st=" + st.name() + " n=" + std::to_string(n);
  if (average(Statistic::des(), 3) != Rational(1, 3)) return std::string("Des(3) = 1/3");
  if (average(Statistic::sub123(), 3) != Rational(2, 3)) return std::string("123(3) = 2/3");
  if (average(Statistic::valley(), 3) != 0) return std::string("Valley(3) = 0");
  return std::nullopt;
}

Outcome bijection_suite() {
  for (int n = 1; n <= 7; ++n) {
    std::set<Permutation> image;
    for (const Permutation& p : all_permutations(n)) {
      const Permutation t = transport(p);
      if (count_stat(p, Statistic::des()) != count_stat(t, Statistic::big_des(false)))
        return "statistic not carried for " + p.to_string();
      image.insert(t);
    }
    if (BigInt(image.size()) != factorial(n)) return "transport not injective on S_" + std::to_string(n);
  }
  for (int n = 1; n <= 8; ++n) {
    long long count = 0;
    enumerate_encodings(n, [&](const InsertionEncoding&) { ++count; });
    if (BigInt(count) != factorial(n)) return "encoding count n=" + std::to_string(n);
  }
  return std::nullopt;
}

Outcome ddescent_suite() {
  for (int d = 1; d <= 4; ++d) {
    const DistTriangle t = triangle_by_recurrence(12, d);
    for (int n = 1; n <= 8; ++n) {
      const DistTriangle brute = brute_ddescent_table(n, d);
      for (const auto& c : brute.cells())
        if (t.at(c.n, c.m, c.k) != c.count)
          return "triangle cell n=" + std::to_string(n) + " m=" + std::to_string(c.m) + " k=" + std::to_string(c.k) +
                 " d=" + std::to_string(d);
      if (t.row_total(n) != factorial(n)) return "triangle row total n=" + std::to_string(n);
    }
    const auto a = marginal_by_recurrence(12, d);
    for (int n = 1; n <= 12; ++n) {
      for (int m = 0; m < n; ++m)
        if (a[static_cast<std::size_t>(n)][static_cast<std::size_t>(m)] != explicit_marginal(n, m, d))
          return "marginal n=" + std::to_string(n) + " m=" + std::to_string(m) + " d=" + std::to_string(d);
      if (n >= d + 1 && !factorial_identity_check(n, d))
        return "factorial identity n=" + std::to_string(n) + " d=" + std::to_string(d);
    }
  }
  for (int d = 1; d <= 3; ++d)
    for (int n = 1; n <= 8; ++n)
      if (!equidistribution_check(n, d)) return "equidistribution n=" + std::to_string(n) + " d=" + std::to_string(d);
  return std::nullopt;
}

Outcome lemma_checks() {
  for (int n = 4; n <= 6; ++n)
    for (const Statistic& st : length_three()) {
      for (int i = 2; i <= n; ++i)
        for (int j = 2; j <= n; ++j)
          for (int k = 2; k <= n; ++k)
            if (i != j && j != k && i != k && !verify_lemma_reduction(st, n, i, j, k))
              return "reduction st=" + st.name() + " n=" + std::to_string(n);
      for (int i = 3; i <= n; ++i)
        for (int j = 2; j < i; ++j)
          if (!verify_lemma_exchange(st, n, i, j)) return "exchange st=" + st.name() + " n=" + std::to_string(n);
    }
  return std::nullopt;
}

Outcome analytic_checks() {
  for (double q : {0.25, 0.5, 0.75}) {
    const std::string at = " at q=" + std::to_string(q);
    if (std::abs(analytic_eval("H", 0.0, q) - 2.0) > 1e-12) return "H(0)" + at;
    constexpr double h = 1e-5;
    const double slope = (analytic_eval("H", h, q) - analytic_eval("H", -h, q)) / (2 * h);
    if (std::abs(slope - (6.0 - 4.0 * (1.0 - q))) >= 1e-4) return "H'(0)" + at;
    for (double x : {0.05, 0.1, 0.2})
      for (const char* name : {"H", "Gr", "Br", "Bd"}) {
        const double series = series_eval(name, x, q, 30);
        if (std::abs(analytic_eval(name, x, q) - series) > 1e-8 * std::abs(series))
          return std::string(name) + " x=" + std::to_string(x) + at;
      }
    for (int n = 1; n <= 8; ++n) {
      const double des = to_double(dist(Statistic::des(), n).evaluate(Rational(q)));
      if (std::abs(infinite_sum_eval("des", n, q).value - des) >= 1e-8) return "des sum n=" + std::to_string(n) + at;
      if (n < 2) continue;
      const double valley = to_double(dist(Statistic::valley(), n).evaluate(Rational(q)));
      if (std::abs(infinite_sum_eval("valley", n, q).value - valley) >= 1e-8)
        return "valley sum n=" + std::to_string(n) + at;
    }
  }
  return std::nullopt;
}

Outcome declared_non_reproducible() {
  const PeakDiagnostic report = peak_series_diagnostic(4, 0.5, 40);
  const std::string text = report.to_string();
  if (text.empty() || report.terms.empty()) return std::string("empty peak diagnostic report");
  std::cout << "  peak series diagnostic (reported, not asserted):\n";
  std::cout << "    exact " << report.exact << ", partial sum at j=" << report.terms.back().j << " is "
            << report.terms.back().partial_sum << '\n';
  std::cout << "  the explicit j-sum for the 321 distribution is not evaluated numerically\n";
  return std::nullopt;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"oracle agreement for every statistic and method, n <= 9", oracle_agreement},
      {"worked examples", worked_examples},
      {"generating-function identities to order 10", series_identities},
      {"average formulas", average_formulas},
      {"bijection suite", bijection_suite},
      {"d-descent suite", ddescent_suite},
      {"lemma checks, n <= 6", lemma_checks},
      {"numeric analytic checks", analytic_checks},
      {"non-reproducible content declared, diagnostic runs", declared_non_reproducible},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome outcome;
    try {
      outcome = criteria[i].second();
    } catch (const Error& e) {
      outcome = std::string("error ") + to_string(e.code()) + ": " + e.what();
    }
    const bool passed = !outcome.has_value();
    failures += passed ? 0 : 1;
    std::cout << (passed ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first;
    if (!passed) std::cout << " -- " << *outcome;
    std::cout << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
