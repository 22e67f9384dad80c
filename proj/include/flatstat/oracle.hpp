#pragma once

#include <span>
#include <vector>

#include "flatstat/permutation.hpp"
#include "flatstat/polynomial.hpp"

namespace flatstat {

class DistTriangle;

/// g_n^st by exhaustive enumeration of S_n, split across worker threads by
/// fixed word prefixes. Throws Error(CapExceeded) above `max_n`.
QPolynomial brute_distribution(const Statistic& st, int n, int max_n = default_max_n());

/// g_n^st(a_1 ... a_k): the sum restricted to permutations whose flattened
/// word starts with `prefix`. A prefix not starting with 1 gives 0.
/// Throws Error(InvalidPrefix) for repeated letters, letters outside [n] or
/// a prefix longer than n.
QPolynomial brute_prefix_distribution(const Statistic& st, int n, std::span<const int> prefix,
                                      int max_n = default_max_n());

/// Checks g_n(1ijk) = (1 + [i = 2]) q^{st(1ijk) - st(1jk)} g_{n-1}(1j'k').
bool verify_lemma_reduction(const Statistic& st, int n, int i, int j, int k);

/// Checks g_n(1ij) = g_n(1(j+1)j) for 2 <= j < i <= n.
bool verify_lemma_exchange(const Statistic& st, int n, int i, int j);

/// a_{n,m,k} for the single row n, counted over S_n by flattened
/// d-descents m and cycles k.
DistTriangle brute_ddescent_table(int n, int d, int max_n = default_max_n());

/// Number of worker threads used by the enumeration (at least 1).
unsigned oracle_threads();

}  // namespace flatstat
