#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "flatstat/permutation.hpp"

namespace flatstat {

/// An element of A_n: pairs (a_i, b_i) for i = 1..n-1. Step i inserts the
/// letter i+1; a_i = 1 marks a step that adds one (flattened / big) descent.
struct InsertionEncoding {
  std::vector<std::pair<int, int>> pairs;

  int length() const noexcept { return static_cast<int>(pairs.size()) + 1; }  // n
  int ones() const noexcept;

  std::string to_string() const;  // "0,2;1,1;0,3"

  friend bool operator==(const InsertionEncoding&, const InsertionEncoding&) = default;
};

/// Parses "0,2;1,1;..." (empty text is the n = 1 encoding). Throws
/// Error(Parse) on malformed text; does not check the A_n conditions.
InsertionEncoding parse_encoding(std::string_view text);

/// a_i in {0,1}; a_1 = 0 and b_1 in {1,2}; for a_i = 0, 1 <= b_i <= s+2 and
/// for a_i = 1, 1 <= b_i <= i-1-s, with s the number of 1-bits before i.
bool validate_encoding(const InsertionEncoding& e);

/// The cycle structure built by g: a_j = 0 inserts j+1 into the b_j-th
/// flattened descent gap, at the end of the last cycle (b_j = s+1) or as a
/// new 1-cycle (b_j = s+2); a_j = 1 inserts into the b_j-th flattened ascent
/// gap. A letter landing in front of a cycle minimum joins the cycle on its
/// left. Throws Error(InvalidEncoding) for an invalid encoding.
CycleForm bij_g_cycles(const InsertionEncoding& e);
Permutation bij_g(const InsertionEncoding& e);

/// The word built by h. For a_j = 0 the sites are the big descent gaps left
/// to right, then directly before j, then the very end. For a_j = 1 the
/// sites are the front of the word (unless j is first) followed by the
/// gaps that are not big descents, left to right, skipping the gap directly
/// before j. Throws Error(InvalidEncoding) for an invalid encoding.
Permutation bij_h(const InsertionEncoding& e);

InsertionEncoding bij_g_inv(const Permutation& p);
InsertionEncoding bij_h_inv(const Permutation& p);

/// h(g^{-1}(p)): flattened descents of p become big descents of the image.
Permutation transport(const Permutation& p);

/// Every valid encoding for length n (n! of them), in lexicographic order
/// of the pair sequence.
void enumerate_encodings(int n, const std::function<void(const InsertionEncoding&)>& visit);

}  // namespace flatstat
