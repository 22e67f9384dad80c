#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "flatstat/polynomial.hpp"

namespace flatstat {

/// Integer table a_{n,m,k}: permutations of [n] with m flattened d-descents
/// and k cycles. Rows may be sparse in n (an oracle table holds one row).
class DistTriangle {
 public:
  explicit DistTriangle(int d) : d_(d) {}

  int d() const noexcept { return d_; }
  std::vector<int> rows() const;
  bool has_row(int n) const { return rows_.count(n) != 0; }

  BigInt at(int n, int m, int k) const;
  void set(int n, int m, int k, BigInt value);
  void add(int n, int m, int k, const BigInt& value);

  /// a_{n,m} = sum_k a_{n,m,k}.
  BigInt marginal(int n, int m) const;
  BigInt row_total(int n) const;

  /// "n,m,k,count" header then one line per nonzero cell, lexicographic.
  std::string to_csv() const;

  /// Nonzero cells (n, m, k, count) in lexicographic order.
  struct Cell {
    int n, m, k;
    BigInt count;
    friend bool operator==(const Cell&, const Cell&) = default;
  };
  std::vector<Cell> cells() const;

  friend bool operator==(const DistTriangle& a, const DistTriangle& b) { return a.cells() == b.cells() && a.d_ == b.d_; }

 private:
  int d_;
  // row n -> (m, k) -> value; zero cells are not stored.
  std::map<int, std::map<std::pair<int, int>, BigInt>> rows_;
};

DistTriangle triangle_by_recurrence(int max_n, int d);

/// a_{n,m} for 1 <= n <= max_n, indexed [n][m].
std::vector<std::vector<BigInt>> marginal_by_recurrence(int max_n, int d);

/// a_{n,m} by the composition sum. Outside n >= m + d + 1 this returns the
/// boundary value instead: 0 for m > 0, n! for m = 0.
BigInt explicit_marginal(int n, int m, int d);

/// n!/(d+1)! against the double sum over m and weak compositions.
bool factorial_identity_check(int n, int d);

/// Flattened d-descents and plain (d+1)-descents have the same distribution
/// on S_n.
bool equidistribution_check(int n, int d);

}  // namespace flatstat
