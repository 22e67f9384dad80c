#include "flatstat/bijections.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "flatstat/error.hpp"

namespace flatstat {

namespace {

using Cycles = std::vector<std::vector<int>>;

bool is_descent(int x, int y) { return x > y; }
bool is_ascent(int x, int y) { return x < y; }
bool is_big_descent(int x, int y) { return x - y >= 2; }

std::vector<int> concat(const Cycles& cycles) {
  std::vector<int> word;
  for (const auto& c : cycles) word.insert(word.end(), c.begin(), c.end());
  return word;
}

int count_gaps(const std::vector<int>& word, bool (*pred)(int, int)) {
  int count = 0;
  for (std::size_t q = 0; q + 1 < word.size(); ++q) count += pred(word[q], word[q + 1]) ? 1 : 0;
  return count;
}

// Index q of the b-th gap (word[q], word[q+1]) satisfying pred, 1-based b.
std::size_t nth_gap(const std::vector<int>& word, bool (*pred)(int, int), int b) {
  for (std::size_t q = 0; q + 1 < word.size(); ++q)
    if (pred(word[q], word[q + 1]) && --b == 0) return q;
  throw Error(ErrorCode::InvalidEncoding, "insertion site out of range");
}

// 1-based rank of gap q among the gaps satisfying pred.
int gap_rank(const std::vector<int>& word, bool (*pred)(int, int), std::size_t q) {
  int rank = 0;
  for (std::size_t t = 0; t <= q; ++t) rank += pred(word[t], word[t + 1]) ? 1 : 0;
  return rank;
}

// Inserts `letter` between flattened positions q and q+1. A site in front of
// a cycle minimum goes to the end of the cycle on the left.
void insert_in_gap(Cycles& cycles, std::size_t q, int letter) {
  std::size_t seen = 0;
  for (auto& c : cycles) {
    if (q < seen + c.size()) {
      const std::size_t k = q - seen;
      c.insert(c.begin() + static_cast<std::ptrdiff_t>(k + 1), letter);
      return;
    }
    seen += c.size();
  }
}

void require_valid(const InsertionEncoding& e) {
  if (!validate_encoding(e)) throw Error(ErrorCode::InvalidEncoding, "not an element of A_n: " + e.to_string());
}

std::vector<int> site_list_ascending_h(const std::vector<int>& word, int j) {
  std::vector<int> sites;  // insertion index into word
  if (word.front() != j) sites.push_back(0);
  for (std::size_t q = 0; q + 1 < word.size(); ++q)
    if (!is_big_descent(word[q], word[q + 1]) && word[q + 1] != j) sites.push_back(static_cast<int>(q + 1));
  return sites;
}

}  // namespace

int InsertionEncoding::ones() const noexcept {
  return static_cast<int>(std::count_if(pairs.begin(), pairs.end(), [](const auto& p) { return p.first == 1; }));
}

std::string InsertionEncoding::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < pairs.size(); ++i) os << (i ? ";" : "") << pairs[i].first << ',' << pairs[i].second;
  return os.str();
}

InsertionEncoding parse_encoding(std::string_view text) {
  InsertionEncoding e;
  if (text.empty()) return e;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find(';', start), text.size());
    const std::string_view item = text.substr(start, end - start);
    const std::size_t comma = item.find(',');
    int a = 0;
    int b = 0;
    const auto parse_int = [&](std::string_view s, int& out) {
      const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
      return ec == std::errc() && ptr == s.data() + s.size() && !s.empty();
    };
    if (comma == std::string_view::npos || !parse_int(item.substr(0, comma), a) || !parse_int(item.substr(comma + 1), b))
      throw Error(ErrorCode::Parse, "malformed encoding pair: '" + std::string(item) + "'");
    e.pairs.emplace_back(a, b);
    start = end + 1;
  }
  return e;
}

bool validate_encoding(const InsertionEncoding& e) {
  int s = 0;
  for (std::size_t idx = 0; idx < e.pairs.size(); ++idx) {
    const int i = static_cast<int>(idx) + 1;
    const auto [a, b] = e.pairs[idx];
    if (a == 0) {
      if (b < 1 || b > s + 2) return false;
    } else if (a == 1) {
      if (b < 1 || b > i - 1 - s) return false;
      ++s;
    } else {
      return false;
    }
  }
  return true;
}

CycleForm bij_g_cycles(const InsertionEncoding& e) {
  require_valid(e);
  Cycles cycles{{1}};
  int s = 0;
  for (std::size_t idx = 0; idx < e.pairs.size(); ++idx) {
    const int letter = static_cast<int>(idx) + 2;
    const auto [a, b] = e.pairs[idx];
    const std::vector<int> word = concat(cycles);
    if (a == 1) {
      insert_in_gap(cycles, nth_gap(word, is_ascent, b), letter);
      ++s;
    } else if (b <= s) {
      insert_in_gap(cycles, nth_gap(word, is_descent, b), letter);
    } else if (b == s + 1) {
      cycles.back().push_back(letter);
    } else {
      cycles.push_back({letter});
    }
  }
  return CycleForm(std::move(cycles));
}

Permutation bij_g(const InsertionEncoding& e) { return bij_g_cycles(e).to_permutation(); }

Permutation bij_h(const InsertionEncoding& e) {
  require_valid(e);
  std::vector<int> word{1};
  int s = 0;
  for (std::size_t idx = 0; idx < e.pairs.size(); ++idx) {
    const int j = static_cast<int>(idx) + 1;
    const auto [a, b] = e.pairs[idx];
    std::ptrdiff_t site = 0;
    if (a == 1) {
      site = site_list_ascending_h(word, j).at(static_cast<std::size_t>(b - 1));
      ++s;
    } else if (b <= s) {
      site = static_cast<std::ptrdiff_t>(nth_gap(word, is_big_descent, b)) + 1;
    } else if (b == s + 1) {
      site = std::find(word.begin(), word.end(), j) - word.begin();
    } else {
      site = static_cast<std::ptrdiff_t>(word.size());
    }
    word.insert(word.begin() + site, j + 1);
  }
  return Permutation(std::move(word));
}

InsertionEncoding bij_g_inv(const Permutation& p) {
  Cycles cycles = standard_cycle_form(p).cycles();
  InsertionEncoding e;
  e.pairs.resize(static_cast<std::size_t>(std::max(0, p.size() - 1)));
  for (int m = p.size(); m >= 2; --m) {
    const std::vector<int> before = concat(cycles);
    const std::size_t t = static_cast<std::size_t>(std::find(before.begin(), before.end(), m) - before.begin());
    const bool singleton = cycles.back().size() == 1 && cycles.back().front() == m;
    const bool ends_last = !singleton && t + 1 == before.size();
    for (auto& c : cycles) std::erase(c, m);
    std::erase_if(cycles, [](const auto& c) { return c.empty(); });
    const std::vector<int> word = concat(cycles);
    const int s = count_gaps(word, is_descent);
    std::pair<int, int> pair;
    if (singleton) {
      pair = {0, s + 2};
    } else if (ends_last) {
      pair = {0, s + 1};
    } else {
      // m sat between word[t-1] and word[t] of the reduced word.
      const std::size_t q = t - 1;
      pair = is_descent(word[q], word[q + 1]) ? std::pair{0, gap_rank(word, is_descent, q)}
                                              : std::pair{1, gap_rank(word, is_ascent, q)};
    }
    e.pairs[static_cast<std::size_t>(m - 2)] = pair;
  }
  return e;
}

InsertionEncoding bij_h_inv(const Permutation& p) {
  std::vector<int> word(p.letters().begin(), p.letters().end());
  InsertionEncoding e;
  e.pairs.resize(static_cast<std::size_t>(std::max(0, p.size() - 1)));
  for (int m = p.size(); m >= 2; --m) {
    const int j = m - 1;
    const auto it = std::find(word.begin(), word.end(), m);
    const std::size_t t = static_cast<std::size_t>(it - word.begin());
    word.erase(it);
    const int s = count_gaps(word, is_big_descent);
    std::pair<int, int> pair;
    if (t == word.size()) {
      pair = {0, s + 2};
    } else if (word[t] == j) {
      pair = {0, s + 1};
    } else if (t > 0 && is_big_descent(word[t - 1], word[t])) {
      pair = {0, gap_rank(word, is_big_descent, t - 1)};
    } else {
      const std::vector<int> sites = site_list_ascending_h(word, j);
      const auto pos = std::find(sites.begin(), sites.end(), static_cast<int>(t));
      if (pos == sites.end()) throw Error(ErrorCode::InvalidEncoding, "h inverse: unclassifiable insertion site");
      pair = {1, static_cast<int>(pos - sites.begin()) + 1};
    }
    e.pairs[static_cast<std::size_t>(j - 1)] = pair;
  }
  return e;
}

Permutation transport(const Permutation& p) { return bij_h(bij_g_inv(p)); }

void enumerate_encodings(int n, const std::function<void(const InsertionEncoding&)>& visit) {
  if (n < 1) throw Error(ErrorCode::Range, "n must be >= 1");
  InsertionEncoding e;
  e.pairs.reserve(static_cast<std::size_t>(n - 1));
  const std::function<void(int, int)> extend = [&](int i, int s) {
    if (i == n) {
      visit(e);
      return;
    }
    for (int b = 1; b <= s + 2; ++b) {
      e.pairs.emplace_back(0, b);
      extend(i + 1, s);
      e.pairs.pop_back();
    }
    for (int b = 1; b <= i - 1 - s; ++b) {
      e.pairs.emplace_back(1, b);
      extend(i + 1, s + 1);
      e.pairs.pop_back();
    }
  };
  extend(1, 0);
}

}  // namespace flatstat
