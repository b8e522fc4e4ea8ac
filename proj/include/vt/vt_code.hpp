#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <vector>

#include "vt/sequences.hpp"
#include "vt/word.hpp"

namespace vt {

// Raised when a received word is not explainable as a single indel applied to
// any codeword. Distinct from precondition violations, which use the standard
// logic-error types.
class DecodeFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Checksum deficiency of a binary word relative to modulus n+1:
//   S(r) = -sum_{i=1..N} i*r_i  mod (n+1),  value in [0, n].
// Zero for every length-n word of the residue-0 code.
inline unsigned checksum(const Word& r, std::size_t n) {
  if (!r.is_binary()) throw std::invalid_argument("checksum requires a binary word");
  if (r.size() > n + 1) throw std::invalid_argument("word longer than n+1");
  const std::uint64_t m = n + 1;
  std::uint64_t sum = 0;
  for (std::size_t i = 0; i < r.size(); ++i) sum += (i + 1) * r[i];
  return static_cast<unsigned>((m - sum % m) % m);
}

// Side channel of the single-deletion decoder: the quantities the algorithm
// actually derives while locating the reinserted symbol.
struct VtDecodeTrace {
  std::size_t weight = 0;                 // Hamming weight of the received word
  unsigned deficiency = 0;                // s, in [0, n]
  std::optional<std::size_t> zeros_left;  // L0 = s - w - 1, only when s > w
  std::size_t position = 0;               // insertion position p, 1-based, <= N+1
  Symbol inserted_symbol = 0;
};

// The binary Varshamov-Tenengolts code VT_a(n): all length-n binary words c
// with sum_{i=1..n} i*c_i = a (mod n+1). Corrects any single insertion or
// deletion. Immutable after construction; all operations are const and safe
// to call concurrently.
class VtCode {
 public:
  // Binary VT codes have Levenshtein distance exactly 4: codewords share a
  // length (even distance) and correct one indel (distance > 2).
  static constexpr std::size_t min_distance = 4;
  static constexpr std::size_t max_enumeration_length = 26;

  VtCode(std::size_t n, unsigned residue) : n_(n), a_(residue) {
    if (n_ < 1) throw std::invalid_argument("code length must be at least 1");
    if (a_ > n_) throw std::invalid_argument("residue must lie in [0, n]");
  }

  std::size_t length() const { return n_; }
  unsigned residue() const { return a_; }
  std::size_t modulus() const { return n_ + 1; }

  bool contains(const Word& c) const {
    if (!c.is_binary() || c.size() != n_) return false;
    return weighted_sum_mod(c) == a_;
  }

  // |VT_a(n)| by dynamic programming over suffix residues; no enumeration.
  std::uint64_t cardinality() const {
    if (n_ > 62) throw std::length_error("cardinality exceeds 64-bit range");
    return suffix_counts()[1][a_];
  }

  // All codewords in lexicographic order. Generated once per (n, a) by
  // residue-pruned backtracking and cached; initialization is thread-safe
  // and idempotent.
  const std::vector<Word>& codewords() const {
    if (n_ > max_enumeration_length) throw std::length_error("enumeration limited to n <= 26");
    static std::mutex mutex;
    static std::map<std::pair<std::size_t, unsigned>, std::unique_ptr<const std::vector<Word>>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto& slot = cache[{n_, a_}];
    if (!slot) slot = std::make_unique<const std::vector<Word>>(generate());
    return *slot;
  }

  // The index-th codeword in lexicographic order.
  Word encode(std::uint64_t index) const {
    const auto& all = codewords();
    if (index >= all.size()) throw std::out_of_range("codeword index out of range");
    return all[index];
  }

  // Single-deletion decoder. Given r of length n-1 that was obtained from a
  // codeword by one deletion, reconstructs that codeword in O(n):
  //   w = wt(r), s = (a - sum i*r_i) mod (n+1).
  //   s <= w: a 0 was deleted with s ones right of it; reinsert 0 before the
  //           smallest p whose suffix has weight s (p = N+1 when s = 0).
  //   s >  w: a 1 was deleted with L0 = s-w-1 zeros left of it; reinsert 1
  //           after the shortest prefix containing L0 zeros.
  // Any position satisfying the branch condition lies in one run, so every
  // choice rebuilds the same word; the smallest is taken for determinism.
  // Returns nothing if the rebuilt word is not a codeword.
  std::optional<Word> try_decode_single_deletion(const Word& r, VtDecodeTrace* trace = nullptr) const {
    require_binary_length(r, n_ - 1, "single-deletion decoder expects length n-1");
    const std::size_t big_n = r.size();
    const std::size_t w = r.weight();
    const unsigned s = deficiency(r);

    std::size_t p = 0;  // 1-based
    Symbol sym = 0;
    std::optional<std::size_t> zeros_left;
    if (s <= w) {
      sym = 0;
      if (s == 0) {
        p = big_n + 1;  // empty suffix
      } else {
        std::size_t suffix_weight = w;
        p = 1;
        while (suffix_weight != s) {
          suffix_weight -= r[p - 1];
          ++p;
        }
      }
    } else {
      sym = 1;
      const std::size_t l0 = s - w - 1;
      zeros_left = l0;
      std::size_t zeros = 0;
      p = 1;
      while (zeros != l0) {
        zeros += (r[p - 1] == 0);
        ++p;
      }
    }
    Word rebuilt = r.inserted(p - 1, sym);
    if (trace) *trace = VtDecodeTrace{w, s, zeros_left, p, sym};
    if (!contains(rebuilt)) return std::nullopt;
    return rebuilt;
  }

  Word decode_single_deletion(const Word& r, VtDecodeTrace* trace = nullptr) const {
    auto c = try_decode_single_deletion(r, trace);
    if (!c) throw DecodeFailure("received word is not a subsequence of any codeword");
    return *c;
  }

  // Single-insertion decoder, O(n). With r of length n+1 arising from a
  // codeword by inserting symbol b at position p, the checksum surplus
  //   D = (sum i*r_i - a) mod (n+1)
  // satisfies D = R1 when b = 0 (R1 = ones right of p) and D = L0 + w mod
  // (n+1) when b = 1 (L0 = zeros left of p, w = wt(r)). Each case pins the
  // deleted symbol's run uniquely, and at most one of the two candidates is a
  // codeword (two would violate the minimum distance), so both are tried.
  std::optional<Word> try_decode_single_insertion(const Word& r) const {
    require_binary_length(r, n_ + 1, "single-insertion decoder expects length n+1");
    const std::size_t m = modulus();
    const std::size_t w = r.weight();
    const std::size_t surplus = (weighted_sum(r) % m + m - a_ % m) % m;

    // candidate: delete a 0 having exactly `surplus` ones to its right
    {
      std::size_t ones_right = w;
      for (std::size_t p = 0; p < r.size(); ++p) {
        ones_right -= r[p];
        if (r[p] == 0 && ones_right == surplus) {
          Word cand = r.erased(p);
          if (contains(cand)) return cand;
          break;  // all valid positions are in one run of zeros
        }
        if (r[p] == 0 && ones_right < surplus) break;  // ones_right only decreases
      }
    }
    // candidate: delete a 1 having exactly L0 zeros to its left
    {
      const std::size_t l0 = (surplus + m - w % m) % m;
      std::size_t zeros_left = 0;
      for (std::size_t p = 0; p < r.size(); ++p) {
        if (r[p] == 1 && zeros_left == l0) {
          Word cand = r.erased(p);
          if (contains(cand)) return cand;
          break;
        }
        zeros_left += (r[p] == 0);
        if (zeros_left > l0) break;
      }
    }
    return std::nullopt;
  }

  Word decode_single_insertion(const Word& r) const {
    auto c = try_decode_single_insertion(r);
    if (!c) throw DecodeFailure("no codeword is a subsequence of the received word");
    return *c;
  }

  friend bool operator==(const VtCode& x, const VtCode& y) { return x.n_ == y.n_ && x.a_ == y.a_; }

 private:
  std::size_t n_;
  unsigned a_;

  static std::uint64_t weighted_sum(const Word& c) {
    std::uint64_t sum = 0;
    for (std::size_t i = 0; i < c.size(); ++i) sum += (i + 1) * c[i];
    return sum;
  }

  unsigned weighted_sum_mod(const Word& c) const { return static_cast<unsigned>(weighted_sum(c) % modulus()); }

  // deficiency relative to this code's residue: (a - sum i*r_i) mod (n+1)
  unsigned deficiency(const Word& r) const {
    const std::size_t m = modulus();
    return static_cast<unsigned>((a_ % m + m - weighted_sum(r) % m) % m);
  }

  void require_binary_length(const Word& r, std::size_t expected, const char* what) const {
    if (!r.is_binary()) throw std::invalid_argument("decoder expects a binary word");
    if (r.size() != expected) throw std::invalid_argument(what);
  }

  // counts[i][t] = number of ways to pick c_i..c_n with sum j*c_j = t (mod n+1)
  std::vector<std::vector<std::uint64_t>> suffix_counts() const {
    const std::size_t m = modulus();
    std::vector<std::vector<std::uint64_t>> counts(n_ + 2, std::vector<std::uint64_t>(m, 0));
    counts[n_ + 1][0] = 1;
    for (std::size_t i = n_; i >= 1; --i) {
      for (std::size_t t = 0; t < m; ++t) {
        counts[i][t] = counts[i + 1][t] + counts[i + 1][(t + m - i % m) % m];
      }
    }
    return counts;
  }

  std::vector<Word> generate() const {
    const auto counts = suffix_counts();
    const std::size_t m = modulus();
    std::vector<Word> out;
    out.reserve(counts[1][a_]);
    std::vector<Symbol> prefix(n_, 0);
    // lexicographic DFS; branches with no completion are pruned via counts
    auto walk = [&](auto&& self, std::size_t i, std::size_t need) -> void {
      if (i == n_ + 1) {
        if (need == 0) out.emplace_back(prefix, 2u);
        return;
      }
      if (counts[i][need] == 0) return;
      prefix[i - 1] = 0;
      if (counts[i + 1][need] > 0) self(self, i + 1, need);
      prefix[i - 1] = 1;
      if (counts[i + 1][(need + m - i % m) % m] > 0) self(self, i + 1, (need + m - i % m) % m);
      prefix[i - 1] = 0;
    };
    walk(walk, 1, a_);
    return out;
  }
};

}  // namespace vt
