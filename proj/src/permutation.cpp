#include "flatstat/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "flatstat/error.hpp"

namespace flatstat {

namespace {

bool is_rearrangement(std::span<const int> letters) {
  const int n = static_cast<int>(letters.size());
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : letters) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) return false;
    seen[static_cast<std::size_t>(v)] = true;
  }
  return true;
}

std::string join(std::span<const int> values, char sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(values[i]);
  }
  return out;
}

}  // namespace

Permutation::Permutation(std::vector<int> letters) : letters_(std::move(letters)) {
  if (letters_.empty()) throw Error(ErrorCode::NotAPermutation, "not a permutation: empty word");
  if (!is_rearrangement(letters_))
    throw Error(ErrorCode::NotAPermutation, "not a permutation: " + join(letters_, ','));
}

Permutation Permutation::identity(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

std::string Permutation::to_string() const { return join(letters_, ','); }

CycleForm::CycleForm(std::vector<std::vector<int>> cycles) : cycles_(std::move(cycles)) {
  std::vector<int> all;
  for (const auto& c : cycles_) {
    if (c.empty()) throw Error(ErrorCode::NotAPermutation, "not a permutation: empty cycle");
    all.insert(all.end(), c.begin(), c.end());
  }
  if (all.empty() || !is_rearrangement(all))
    throw Error(ErrorCode::NotAPermutation, "not a permutation: cycles do not partition [n]");
  size_ = static_cast<int>(all.size());
}

bool CycleForm::is_standard() const noexcept {
  int prev_min = 0;
  for (const auto& c : cycles_) {
    if (*std::min_element(c.begin(), c.end()) != c.front()) return false;
    if (c.front() <= prev_min) return false;
    prev_min = c.front();
  }
  return true;
}

CycleForm CycleForm::normalized() const {
  auto cycles = cycles_;
  for (auto& c : cycles) std::rotate(c.begin(), std::min_element(c.begin(), c.end()), c.end());
  std::sort(cycles.begin(), cycles.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return CycleForm(std::move(cycles));
}

Permutation CycleForm::to_permutation() const {
  std::vector<int> w(static_cast<std::size_t>(size_));
  for (const auto& c : cycles_)
    for (std::size_t i = 0; i < c.size(); ++i)
      w[static_cast<std::size_t>(c[i] - 1)] = c[(i + 1) % c.size()];
  return Permutation(std::move(w));
}

std::string CycleForm::to_string() const {
  std::string out;
  for (const auto& c : cycles_) out += "(" + join(c, ' ') + ")";
  return out;
}

CycleForm standard_cycle_form(const Permutation& p) {
  const int n = p.size();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  std::vector<std::vector<int>> cycles;
  for (int start = 1; start <= n; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    std::vector<int> cycle;
    for (int i = start; !seen[static_cast<std::size_t>(i)]; i = p(i)) {
      seen[static_cast<std::size_t>(i)] = true;
      cycle.push_back(i);
    }
    cycles.push_back(std::move(cycle));
  }
  return CycleForm(std::move(cycles));
}

Permutation flatten(const CycleForm& c) {
  std::vector<int> w;
  w.reserve(static_cast<std::size_t>(c.size()));
  for (const auto& cycle : c.cycles()) w.insert(w.end(), cycle.begin(), cycle.end());
  return Permutation(std::move(w));
}

void flatten_into(std::span<const int> word, std::span<int> out) {
  // Walking the cycle of each unvisited minimum in increasing order emits the
  // standard cycle form directly.
  const std::size_t n = word.size();
  if (n < 64) {
    std::uint64_t seen = 0;
    std::size_t pos = 0;
    for (std::size_t start = 1; start <= n; ++start) {
      for (std::size_t i = start; !(seen >> i & 1U); i = static_cast<std::size_t>(word[i - 1])) {
        seen |= std::uint64_t{1} << i;
        out[pos++] = static_cast<int>(i);
      }
    }
    return;
  }
  std::vector<char> seen(n + 1, 0);
  std::size_t pos = 0;
  for (std::size_t start = 1; start <= n; ++start) {
    for (std::size_t i = start; !seen[i]; i = static_cast<std::size_t>(word[i - 1])) {
      seen[i] = 1;
      out[pos++] = static_cast<int>(i);
    }
  }
}

int cycle_count(std::span<const int> word) {
  const std::size_t n = word.size();
  std::vector<char> seen(n + 1, 0);
  int cycles = 0;
  for (std::size_t start = 1; start <= n; ++start) {
    if (seen[start]) continue;
    ++cycles;
    for (std::size_t i = start; !seen[i]; i = static_cast<std::size_t>(word[i - 1])) seen[i] = 1;
  }
  return cycles;
}

Statistic Statistic::d_des(int d, bool flat) {
  if (d < 1) throw Error(ErrorCode::Range, "d-descent threshold must be >= 1");
  return {StatKind::DDes, d, flat};
}

std::string Statistic::name() const {
  switch (kind) {
    case StatKind::Des: return "des";
    case StatKind::Asc: return "asc";
    case StatKind::BigDes: return "bigdes";
    case StatKind::DDes: return "ddes" + std::to_string(d);
    case StatKind::Sub123: return "123";
    case StatKind::Sub321: return "321";
    case StatKind::Peak: return "peak";
    case StatKind::Valley: return "valley";
  }
  return "?";
}

Statistic parse_statistic(std::string_view name, int d, bool flattened) {
  if (name == "des") return Statistic::des(flattened);
  if (name == "asc") return Statistic::asc(flattened);
  if (name == "bigdes") return Statistic::big_des(flattened);
  if (name == "ddes") return Statistic::d_des(d, flattened);
  if (name == "123") return Statistic::sub123(flattened);
  if (name == "321") return Statistic::sub321(flattened);
  if (name == "peak") return Statistic::peak(flattened);
  if (name == "valley") return Statistic::valley(flattened);
  throw Error(ErrorCode::UnknownName, "unknown statistic: " + std::string(name));
}

int count_in_word(std::span<const int> w, const Statistic& st) {
  const std::size_t n = w.size();
  int count = 0;
  switch (st.kind) {
    case StatKind::Des:
    case StatKind::Asc:
    case StatKind::BigDes:
    case StatKind::DDes: {
      const int threshold = st.kind == StatKind::BigDes ? 2 : st.d;
      for (std::size_t i = 0; i + 1 < n; ++i) {
        if (st.kind == StatKind::Asc)
          count += w[i] < w[i + 1];
        else
          count += w[i] - w[i + 1] >= threshold;
      }
      return count;
    }
    case StatKind::Sub123:
    case StatKind::Sub321:
    case StatKind::Peak:
    case StatKind::Valley:
      for (std::size_t i = 0; i + 2 < n; ++i) {
        const int a = w[i], b = w[i + 1], c = w[i + 2];
        switch (st.kind) {
          case StatKind::Sub123: count += a < b && b < c; break;
          case StatKind::Sub321: count += a > b && b > c; break;
          case StatKind::Peak: count += b > a && b > c; break;
          default: count += b < a && b < c; break;
        }
      }
      return count;
  }
  return count;
}

int count_stat(const Permutation& w, const Statistic& st) {
  if (!st.flattened) return count_in_word(w.letters(), st);
  std::vector<int> flat(static_cast<std::size_t>(w.size()));
  flatten_into(w.letters(), flat);
  return count_in_word(flat, st);
}

int default_max_n() {
  if (const char* env = std::getenv("FLATSTAT_MAX_N")) {
    int value = 0;
    const std::string_view text(env);
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec == std::errc() && ptr == text.data() + text.size() && value >= 1) return value;
  }
  return 10;
}

void iterate_sym(int n, const std::function<void(std::span<const int>)>& visit, int max_n) {
  if (n < 1) throw Error(ErrorCode::Range, "n must be >= 1");
  if (n > max_n)
    throw Error(ErrorCode::CapExceeded,
                "n=" + std::to_string(n) + " exceeds enumeration cap " + std::to_string(max_n));
  iterate_sym_with_prefix(n, {}, visit);
}

void iterate_sym_with_prefix(int n, std::span<const int> prefix,
                             const std::function<void(std::span<const int>)>& visit) {
  std::vector<int> word(prefix.begin(), prefix.end());
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  for (int v : prefix) {
    if (v < 1 || v > n || used[static_cast<std::size_t>(v)])
      throw Error(ErrorCode::InvalidPrefix, "prefix letters must be distinct values in [1,n]");
    used[static_cast<std::size_t>(v)] = true;
  }
  for (int v = 1; v <= n; ++v)
    if (!used[static_cast<std::size_t>(v)]) word.push_back(v);
  const auto tail = word.begin() + static_cast<std::ptrdiff_t>(prefix.size());
  do {
    visit(word);
  } while (std::next_permutation(tail, word.end()));
}

std::vector<Permutation> all_permutations(int n, int max_n) {
  std::vector<Permutation> out;
  iterate_sym(n, [&](std::span<const int> w) { out.emplace_back(std::vector<int>(w.begin(), w.end())); },
              max_n);
  return out;
}

namespace {

class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  void skip_spaces() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_spaces();
    return pos_ >= text_.size();
  }
  bool peek(char c) {
    skip_spaces();
    return pos_ < text_.size() && text_[pos_] == c;
  }
  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  int integer() {
    skip_spaces();
    int value = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
    if (ec != std::errc()) fail("expected a decimal integer");
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return value;
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorCode::Parse,
                "parse error at offset " + std::to_string(pos_) + ": " + why + " in \"" +
                    std::string(text_) + "\"");
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Permutation parse_word(std::string_view text) {
  Scanner sc(text);
  std::vector<int> letters{sc.integer()};
  while (!sc.done()) {
    sc.expect(',');
    letters.push_back(sc.integer());
  }
  return Permutation(std::move(letters));
}

std::variant<Permutation, CycleForm> parse_permutation(std::string_view text, CycleParse mode) {
  Scanner sc(text);
  if (!sc.peek('(')) return parse_word(text);

  std::vector<std::vector<int>> cycles;
  while (!sc.done()) {
    sc.expect('(');
    std::vector<int> cycle;
    while (!sc.peek(')')) cycle.push_back(sc.integer());
    sc.expect(')');
    if (cycle.empty()) sc.fail("empty cycle");
    cycles.push_back(std::move(cycle));
  }
  if (mode == CycleParse::Strict) {
    int previous_min = 0;
    for (const auto& c : cycles) {
      if (c.front() != *std::min_element(c.begin(), c.end()) || c.front() <= previous_min)
        throw Error(ErrorCode::NonStandardOrder, "cycle form is not in standard order: " + std::string(text));
      previous_min = c.front();
    }
  }
  CycleForm form(std::move(cycles));
  return form.is_standard() ? form : form.normalized();
}

}  // namespace flatstat
