#include "flatstat/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <string>
#include <thread>

#include "flatstat/ddescent.hpp"

namespace flatstat {

unsigned oracle_threads() { return std::max(1U, std::thread::hardware_concurrency()); }

namespace {

void check_cap(int n, int max_n) {
  if (n < 1) throw Error(ErrorCode::Range, "n must be >= 1");
  if (n > max_n)
    throw Error(ErrorCode::CapExceeded,
                "n = " + std::to_string(n) + " exceeds the enumeration cap " + std::to_string(max_n));
}

// Every injective word of length len over [n], lexicographic.
std::vector<std::vector<int>> prefixes_of_length(int n, int len) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(cur.size()) == len) {
      out.push_back(cur);
      return;
    }
    for (int v = 1; v <= n; ++v) {
      if (used[static_cast<std::size_t>(v)]) continue;
      used[static_cast<std::size_t>(v)] = true;
      cur.push_back(v);
      self(self);
      cur.pop_back();
      used[static_cast<std::size_t>(v)] = false;
    }
  };
  rec(rec);
  return out;
}

// Splits S_n on the first ceil(n/2) letters. Each worker owns one `Local`
// accumulator; callers merge the returned accumulators by addition, so the
// result does not depend on scheduling.
template <class Local, class Visit>
std::vector<Local> run_partitioned(int n, const Local& init, Visit visit) {
  const auto tasks = prefixes_of_length(n, (n + 1) / 2);
  const unsigned workers = std::min<unsigned>(oracle_threads(), static_cast<unsigned>(tasks.size()));
  std::vector<Local> locals(workers, init);
  std::atomic<std::size_t> next{0};
  auto work = [&](unsigned w) {
    Local& acc = locals[w];
    for (std::size_t t = next++; t < tasks.size(); t = next++)
      iterate_sym_with_prefix(n, tasks[t], [&](std::span<const int> word) { visit(acc, word); });
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& th : pool) th.join();
  }
  return locals;
}

// Per-worker counts by statistic value, plus a scratch buffer for the
// flattened word so the hot loop does not allocate.
struct Histogram {
  std::vector<std::uint64_t> counts;
  std::vector<int> scratch;
};

Histogram empty_histogram(int n, std::size_t bins) {
  return {std::vector<std::uint64_t>(bins, 0), std::vector<int>(static_cast<std::size_t>(n))};
}

QPolynomial histogram_to_poly(const std::vector<Histogram>& locals) {
  std::vector<BigInt> coeffs;
  for (const auto& h : locals) {
    if (h.counts.size() > coeffs.size()) coeffs.resize(h.counts.size());
    for (std::size_t i = 0; i < h.counts.size(); ++i) coeffs[i] += h.counts[i];
  }
  return QPolynomial(std::move(coeffs));
}

}  // namespace

QPolynomial brute_distribution(const Statistic& st, int n, int max_n) {
  check_cap(n, max_n);
  auto locals = run_partitioned(n, empty_histogram(n, static_cast<std::size_t>(n) + 1),
                                [&st](Histogram& h, std::span<const int> word) {
                                  std::span<const int> target = word;
                                  if (st.flattened) {
                                    flatten_into(word, h.scratch);
                                    target = h.scratch;
                                  }
                                  ++h.counts[static_cast<std::size_t>(count_in_word(target, st))];
                                });
  return histogram_to_poly(locals);
}

QPolynomial brute_prefix_distribution(const Statistic& st, int n, std::span<const int> prefix, int max_n) {
  check_cap(n, max_n);
  if (static_cast<int>(prefix.size()) > n)
    throw Error(ErrorCode::InvalidPrefix, "prefix longer than n");
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  for (int v : prefix) {
    if (v < 1 || v > n || used[static_cast<std::size_t>(v)])
      throw Error(ErrorCode::InvalidPrefix, "prefix letters must be distinct values in [1,n]");
    used[static_cast<std::size_t>(v)] = true;
  }
  if (prefix.empty() || prefix.front() != 1) return {};
  const std::vector<int> want(prefix.begin(), prefix.end());
  auto locals = run_partitioned(n, empty_histogram(n, static_cast<std::size_t>(n) + 1),
                                [&](Histogram& h, std::span<const int> word) {
                                  flatten_into(word, h.scratch);
                                  if (!std::equal(want.begin(), want.end(), h.scratch.begin())) return;
                                  ++h.counts[static_cast<std::size_t>(count_in_word(h.scratch, st))];
                                });
  return histogram_to_poly(locals);
}

bool verify_lemma_reduction(const Statistic& st, int n, int i, int j, int k) {
  if (n < 4) throw Error(ErrorCode::Range, "reduction lemma needs n >= 4");
  for (int v : {i, j, k})
    if (v < 2 || v > n) throw Error(ErrorCode::Range, "i, j, k must lie in [2, n]");
  if (i == j || j == k || i == k) throw Error(ErrorCode::Range, "i, j, k must be distinct");
  const std::vector<int> full{1, i, j, k};
  const std::vector<int> reduced{1, j, k};
  const int jp = j - (j > i ? 1 : 0);
  const int kp = k - (k > i ? 1 : 0);
  const std::vector<int> shorter{1, jp, kp};
  const int shift = count_in_word(full, st) - count_in_word(reduced, st);
  const QPolynomial lhs = brute_prefix_distribution(st, n, full);
  const QPolynomial rhs = brute_prefix_distribution(st, n - 1, shorter).scaled(i == 2 ? 2 : 1);
  // q^shift may be negative; compare after clearing it to the other side.
  return lhs.shifted(std::max(0, -shift)) == rhs.shifted(std::max(0, shift));
}

bool verify_lemma_exchange(const Statistic& st, int n, int i, int j) {
  if (n < 4) throw Error(ErrorCode::Range, "exchange lemma needs n >= 4");
  if (!(2 <= j && j < i && i <= n)) throw Error(ErrorCode::Range, "exchange lemma needs 2 <= j < i <= n");
  const std::vector<int> a{1, i, j};
  const std::vector<int> b{1, j + 1, j};
  return brute_prefix_distribution(st, n, a) == brute_prefix_distribution(st, n, b);
}

DistTriangle brute_ddescent_table(int n, int d, int max_n) {
  check_cap(n, max_n);
  if (d < 1) throw Error(ErrorCode::Range, "d must be >= 1");
  const Statistic st = Statistic::d_des(d);
  const std::size_t width = static_cast<std::size_t>(n) + 1;
  auto locals = run_partitioned(n, empty_histogram(n, width * width), [&](Histogram& h, std::span<const int> word) {
    flatten_into(word, h.scratch);
    const auto m = static_cast<std::size_t>(count_in_word(h.scratch, st));
    const auto k = static_cast<std::size_t>(cycle_count(word));
    ++h.counts[m * width + k];
  });
  DistTriangle table(d);
  for (std::size_t m = 0; m < width; ++m)
    for (std::size_t k = 0; k < width; ++k) {
      std::uint64_t total = 0;
      for (const auto& h : locals) total += h.counts[m * width + k];
      if (total != 0) table.set(n, static_cast<int>(m), static_cast<int>(k), BigInt(total));
    }
  return table;
}

}  // namespace flatstat
