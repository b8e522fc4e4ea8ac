#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>

#include "vt/word.hpp"

namespace vt {

// Canonical word set: deduplicated and ordered shortlex.
using WordSet = std::set<Word>;

namespace detail {
inline void require_same_alphabet(const Word& a, const Word& b) {
  if (a.alphabet() != b.alphabet()) throw std::invalid_argument("alphabet mismatch");
}
}  // namespace detail

// Length of a longest common subsequence, by the classic two-row DP.
inline std::size_t lcs_length(const Word& a, const Word& b) {
  detail::require_same_alphabet(a, b);
  const Word& rows = (a.size() <= b.size()) ? a : b;
  const Word& cols = (a.size() <= b.size()) ? b : a;
  std::vector<std::size_t> prev(rows.size() + 1, 0), cur(rows.size() + 1, 0);
  for (std::size_t j = 1; j <= cols.size(); ++j) {
    for (std::size_t i = 1; i <= rows.size(); ++i) {
      if (rows[i - 1] == cols[j - 1]) {
        cur[i] = prev[i - 1] + 1;
      } else {
        cur[i] = std::max(prev[i], cur[i - 1]);
      }
    }
    std::swap(prev, cur);
  }
  return prev[rows.size()];
}

// Levenshtein distance in the insertion/deletion metric: the minimum number
// of insertions plus deletions turning one word into the other. Substitutions
// are not unit operations here (one substitution costs 2).
inline std::size_t indel_distance(const Word& a, const Word& b) {
  return a.size() + b.size() - 2 * lcs_length(a, b);
}

// True iff `a` can be obtained from `b` by deletions only.
inline bool is_subsequence(const Word& a, const Word& b) {
  detail::require_same_alphabet(a, b);
  std::size_t i = 0;
  for (std::size_t j = 0; j < b.size() && i < a.size(); ++j) {
    if (a[i] == b[j]) ++i;
  }
  return i == a.size();
}

// Number of maximal blocks of equal adjacent symbols; 0 for the empty word.
inline std::size_t runs(const Word& w) {
  if (w.empty()) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i < w.size(); ++i) r += (w[i] != w[i - 1]);
  return r;
}

// All distinct subsequences of `w` of length exactly `k`, built by deleting
// one symbol per step and deduplicating at every intermediate length.
inline WordSet subsequences(const Word& w, std::size_t k) {
  if (k > w.size()) throw std::invalid_argument("subsequence length exceeds word length");
  WordSet level{w};
  for (std::size_t len = w.size(); len > k; --len) {
    WordSet next;
    for (const Word& v : level) {
      for (std::size_t p = 0; p < v.size(); ++p) next.insert(v.erased(p));
    }
    level = std::move(next);
  }
  return level;
}

// All distinct supersequences of `w` of length exactly `k` over w's alphabet,
// built by inserting every symbol at every gap per step, deduplicating at
// every step.
inline WordSet supersequences(const Word& w, std::size_t k) {
  if (k < w.size()) throw std::invalid_argument("supersequence length below word length");
  WordSet level{w};
  for (std::size_t len = w.size(); len < k; ++len) {
    WordSet next;
    for (const Word& v : level) {
      for (std::size_t p = 0; p <= v.size(); ++p) {
        for (unsigned s = 0; s < v.alphabet(); ++s) next.insert(v.inserted(p, static_cast<Symbol>(s)));
      }
    }
    level = std::move(next);
  }
  return level;
}

// Exact binomial coefficient; throws std::overflow_error if the result does
// not fit in 64 bits.
inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;  // exact at every step
    if (result > UINT64_MAX) throw std::overflow_error("binomial exceeds 64 bits");
  }
  return static_cast<std::uint64_t>(result);
}

// Size of the binary insertion ball: the number of distinct supersequences of
// any length-N binary word within `radius` insertions,
//   sum_{s=0..radius} sum_{i=0..s} C(N+s, i).
// The value depends only on N and the radius, not on the word's content.
inline std::uint64_t insertion_ball_size(std::size_t length, std::size_t radius, unsigned alphabet = 2) {
  if (alphabet != 2) throw std::invalid_argument("insertion ball closed form is binary-only");
  std::uint64_t total = 0;
  for (std::size_t s = 0; s <= radius; ++s) {
    for (std::size_t i = 0; i <= s; ++i) total += binomial(length + s, i);
  }
  return total;
}

// All words obtainable from `w` by at most `radius` deletions (w included).
// The size depends on the run structure of the center, not only its length.
inline WordSet deletion_ball(const Word& w, std::size_t radius) {
  if (radius > w.size()) throw std::invalid_argument("deletion radius exceeds word length");
  WordSet ball;
  for (std::size_t s = 0; s <= radius; ++s) {
    WordSet layer = subsequences(w, w.size() - s);
    ball.insert(layer.begin(), layer.end());
  }
  return ball;
}

// All words within indel distance `radius` of `w`, by full scan over every
// length in [|w|-radius, |w|+radius]. Exponential in the inputs; meant as a
// ground-truth oracle at small sizes.
inline WordSet levenshtein_ball(const Word& w, std::size_t radius) {
  WordSet ball;
  const std::size_t lo = (w.size() > radius) ? w.size() - radius : 0;
  const std::size_t hi = w.size() + radius;
  for (std::size_t len = lo; len <= hi; ++len) {
    std::vector<Symbol> digits(len, 0);
    while (true) {
      Word v(digits, w.alphabet());
      if (indel_distance(v, w) <= radius) ball.insert(std::move(v));
      // odometer increment in base q
      std::size_t pos = len;
      while (pos > 0) {
        if (static_cast<unsigned>(digits[pos - 1] + 1) < w.alphabet()) {
          ++digits[pos - 1];
          break;
        }
        digits[pos - 1] = 0;
        --pos;
      }
      if (pos == 0) break;
    }
  }
  return ball;
}

}  // namespace vt
