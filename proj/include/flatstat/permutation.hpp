#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace flatstat {

/// A permutation of [n] in one-line (word) form, letters 1..n.
class Permutation {
 public:
  /// Throws Error(NotAPermutation) unless `letters` is a rearrangement of 1..n.
  explicit Permutation(std::vector<int> letters);

  static Permutation identity(int n);

  int size() const noexcept { return static_cast<int>(letters_.size()); }
  /// Image of i under the permutation, 1-based.
  int operator()(int i) const { return letters_[static_cast<std::size_t>(i - 1)]; }
  std::span<const int> letters() const noexcept { return letters_; }

  std::string to_string() const;  // "7,5,1,6,2,4,3,8"

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> letters_;
};

/// Cycle notation. Construction only checks that the cycles partition [n];
/// `is_standard()` reports whether each cycle leads with its minimum and the
/// minima increase left to right.
class CycleForm {
 public:
  explicit CycleForm(std::vector<std::vector<int>> cycles);

  int size() const noexcept { return size_; }
  const std::vector<std::vector<int>>& cycles() const noexcept { return cycles_; }
  bool is_standard() const noexcept;

  /// Rotate each cycle to start at its minimum and sort cycles by minimum.
  CycleForm normalized() const;
  /// Read the cycles as a function i -> next(i).
  Permutation to_permutation() const;

  std::string to_string() const;  // "(1 7 3)(2 5)(4 6)(8)"

  friend bool operator==(const CycleForm&, const CycleForm&) = default;

 private:
  std::vector<std::vector<int>> cycles_;
  int size_ = 0;
};

CycleForm standard_cycle_form(const Permutation& p);

/// Concatenate the cycles. For standard forms the result starts with 1.
Permutation flatten(const CycleForm& c);

/// Flatten(standard_cycle_form(p)) written straight into `out` (size n),
/// without allocating. Used on the enumeration hot path.
void flatten_into(std::span<const int> word, std::span<int> out);

/// Number of cycles of the permutation given in word form.
int cycle_count(std::span<const int> word);

enum class StatKind { Des, Asc, BigDes, DDes, Sub123, Sub321, Peak, Valley };

struct Statistic {
  StatKind kind = StatKind::Des;
  int d = 1;              // threshold, meaningful for DDes only
  bool flattened = true;  // read on Flatten(pi) rather than pi's word

  static Statistic des(bool flat = true) { return {StatKind::Des, 1, flat}; }
  static Statistic asc(bool flat = true) { return {StatKind::Asc, 1, flat}; }
  static Statistic big_des(bool flat = true) { return {StatKind::BigDes, 2, flat}; }
  static Statistic d_des(int d, bool flat = true);
  static Statistic sub123(bool flat = true) { return {StatKind::Sub123, 1, flat}; }
  static Statistic sub321(bool flat = true) { return {StatKind::Sub321, 1, flat}; }
  static Statistic peak(bool flat = true) { return {StatKind::Peak, 1, flat}; }
  static Statistic valley(bool flat = true) { return {StatKind::Valley, 1, flat}; }

  std::string name() const;  // "des", "ddes3", "peak", ...

  friend bool operator==(const Statistic&, const Statistic&) = default;
};

/// Parse a statistic name as accepted on the command line
/// (des, asc, bigdes, ddes, 123, 321, peak, valley).
Statistic parse_statistic(std::string_view name, int d = 1, bool flattened = true);

/// Occurrences of the statistic's defining pattern in an arbitrary word of
/// distinct integers (overlaps counted). Ignores `st.flattened`.
int count_in_word(std::span<const int> word, const Statistic& st);

/// count_in_word on w, or on Flatten(w) when st.flattened is set.
int count_stat(const Permutation& w, const Statistic& st);

/// Default enumeration cap; honours the FLATSTAT_MAX_N environment variable.
int default_max_n();

/// Calls `visit` with every permutation of [n] in lexicographic word order.
/// Throws Error(CapExceeded) when n > max_n.
void iterate_sym(int n, const std::function<void(std::span<const int>)>& visit,
                 int max_n = default_max_n());

/// Same as iterate_sym restricted to words beginning with `prefix`
/// (distinct letters in [n]); the building block for parallel partitions.
void iterate_sym_with_prefix(int n, std::span<const int> prefix,
                             const std::function<void(std::span<const int>)>& visit);

/// All permutations of [n], lexicographic. Small n only.
std::vector<Permutation> all_permutations(int n, int max_n = default_max_n());

enum class CycleParse { Strict, Lenient };

/// Parses "7,5,1,6,2,4,3,8" into a Permutation or "(1 7 3)(2 5)" into a
/// standard CycleForm. Strict mode rejects non-standard cycle order; lenient
/// mode normalizes it.
std::variant<Permutation, CycleForm> parse_permutation(std::string_view text,
                                                       CycleParse mode = CycleParse::Strict);

/// Word-grammar only.
Permutation parse_word(std::string_view text);

}  // namespace flatstat
