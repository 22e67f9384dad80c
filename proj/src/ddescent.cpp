#include "flatstat/ddescent.hpp"

#include <sstream>

#include "flatstat/classical.hpp"
#include "flatstat/oracle.hpp"

namespace flatstat {

std::vector<int> DistTriangle::rows() const {
  std::vector<int> out;
  for (const auto& [n, _] : rows_) out.push_back(n);
  return out;
}

BigInt DistTriangle::at(int n, int m, int k) const {
  const auto row = rows_.find(n);
  if (row == rows_.end()) return 0;
  const auto cell = row->second.find({m, k});
  return cell == row->second.end() ? BigInt(0) : cell->second;
}

void DistTriangle::set(int n, int m, int k, BigInt value) {
  auto& row = rows_[n];
  if (value == 0)
    row.erase({m, k});
  else
    row[{m, k}] = std::move(value);
}

void DistTriangle::add(int n, int m, int k, const BigInt& value) { set(n, m, k, at(n, m, k) + value); }

BigInt DistTriangle::marginal(int n, int m) const {
  BigInt total = 0;
  const auto row = rows_.find(n);
  if (row == rows_.end()) return total;
  for (const auto& [mk, v] : row->second)
    if (mk.first == m) total += v;
  return total;
}

BigInt DistTriangle::row_total(int n) const {
  BigInt total = 0;
  const auto row = rows_.find(n);
  if (row == rows_.end()) return total;
  for (const auto& [mk, v] : row->second) total += v;
  return total;
}

std::vector<DistTriangle::Cell> DistTriangle::cells() const {
  std::vector<Cell> out;
  for (const auto& [n, row] : rows_)
    for (const auto& [mk, v] : row) out.push_back({n, mk.first, mk.second, v});
  return out;
}

std::string DistTriangle::to_csv() const {
  std::ostringstream os;
  os << "n,m,k,count\n";
  for (const auto& c : cells()) os << c.n << ',' << c.m << ',' << c.k << ',' << c.count.str() << '\n';
  return os.str();
}

DistTriangle triangle_by_recurrence(int max_n, int d) {
  if (max_n < 1 || d < 1) throw Error(ErrorCode::Range, "triangle needs max_n >= 1 and d >= 1");
  DistTriangle t(d);
  for (int n = 1; n <= max_n; ++n) {
    if (n <= d + 1) {
      for (int k = 1; k <= n; ++k) t.set(n, 0, k, stirling(StirlingKind::FirstSignless, n, k));
    } else if (n == d + 2) {
      for (int k = 1; k <= n; ++k) {
        const BigInt lower = stirling(StirlingKind::FirstSignless, d + 1, k);
        t.set(n, 1, k, lower);
        t.set(n, 0, k, stirling(StirlingKind::FirstSignless, d + 2, k) - lower);
      }
    } else {
      for (int m = 0; m < n; ++m)
        for (int k = 1; k <= n; ++k) {
          BigInt v = t.at(n - 1, m, k - 1) + (m + d) * t.at(n - 1, m, k);
          if (m > 0) v += (n - m - d) * t.at(n - 1, m - 1, k);
          t.set(n, m, k, std::move(v));
        }
    }
  }
  return t;
}

std::vector<std::vector<BigInt>> marginal_by_recurrence(int max_n, int d) {
  if (max_n < 1 || d < 1) throw Error(ErrorCode::Range, "marginal needs max_n >= 1 and d >= 1");
  std::vector<std::vector<BigInt>> a(static_cast<std::size_t>(max_n) + 1);
  for (int n = 1; n <= max_n; ++n) {
    auto& row = a[static_cast<std::size_t>(n)];
    row.assign(static_cast<std::size_t>(n), 0);
    if (n <= d + 1) {
      row[0] = factorial(n);
      continue;
    }
    const auto& prev = a[static_cast<std::size_t>(n - 1)];
    for (int m = 0; m < n; ++m) {
      BigInt v = 0;
      if (m < n - 1) v += (m + d + 1) * prev[static_cast<std::size_t>(m)];
      if (m > 0) v += (n - m - d) * prev[static_cast<std::size_t>(m - 1)];
      row[static_cast<std::size_t>(m)] = std::move(v);
    }
  }
  return a;
}

namespace {

// sum over weak compositions of prod (d+j)^{i_j} * prod_{j<=m} (1 + i_1 + ... + i_j).
BigInt composition_sum(int n, int m, int d) {
  BigInt total = 0;
  weak_compositions(n - 1 - d - m, m + 1, [&](std::span<const int> parts) {
    BigInt term = 1;
    int running = 0;
    for (int j = 1; j <= m + 1; ++j) {
      const int i = parts[static_cast<std::size_t>(j - 1)];
      term *= boost::multiprecision::pow(BigInt(d + j), static_cast<unsigned>(i));
      running += i;
      if (j <= m) term *= running + 1;
    }
    total += term;
  });
  return total;
}

}  // namespace

BigInt explicit_marginal(int n, int m, int d) {
  if (n < 1 || m < 0 || d < 1) throw Error(ErrorCode::Range, "explicit marginal needs n >= 1, m >= 0, d >= 1");
  if (n < m + d + 1) return m == 0 ? factorial(n) : BigInt(0);
  return factorial(d + 1) * composition_sum(n, m, d);
}

bool factorial_identity_check(int n, int d) {
  if (d < 1 || n < d + 1) throw Error(ErrorCode::Range, "identity needs d >= 1 and n >= d + 1");
  BigInt total = 0;
  for (int m = 0; m <= n - d - 1; ++m) total += composition_sum(n, m, d);
  return total * factorial(d + 1) == factorial(n);
}

bool equidistribution_check(int n, int d) {
  if (d < 1) throw Error(ErrorCode::Range, "d must be >= 1");
  return brute_distribution(Statistic::d_des(d, true), n) == brute_distribution(Statistic::d_des(d + 1, false), n);
}

}  // namespace flatstat
