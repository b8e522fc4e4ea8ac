#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>

#include "vt/list_types.hpp"
#include "vt/sequences.hpp"
#include "vt/vt_code.hpp"

namespace vt {

enum class ListMetric {
  levenshtein,     // codewords within indel distance `radius`
  deletions_only,  // codewords having the received word as a subsequence
};

// Result of an exhaustive scan over every received word of one length.
struct ExhaustiveReport {
  std::size_t code_length = 0;
  std::size_t radius = 0;
  std::size_t received_length = 0;
  ListMetric metric = ListMetric::levenshtein;
  std::size_t max_list_size = 0;
  Word argmax_received;                             // smallest maximizer, lexicographic
  std::map<std::size_t, std::uint64_t> histogram;   // list size -> count of received words
};

// Ground-truth list decoding by full scan of the code: every codeword within
// indel distance `radius` of r. Independent of the algorithmic decoders.
inline DecodeList brute_force_list(const VtCode& code, const Word& r, std::size_t radius) {
  DecodeList list;
  list.tau = radius;
  for (const Word& c : code.codewords()) {
    std::size_t d = indel_distance(r, c);
    if (d <= radius) list.entries.push_back({c, d});
  }
  detail::sort_entries(list.entries);
  return list;
}

// Exhaustive maximum list size over ALL binary received words of the given
// length, with the full list-size histogram. The scan walks integer counters
// 0..2^N-1 in order, so the report is deterministic: ties on the maximum
// resolve to the lexicographically smallest received word.
inline ExhaustiveReport max_list_size(const VtCode& code, std::size_t radius, std::size_t received_length,
                                      ListMetric metric = ListMetric::levenshtein) {
  if (received_length > 20) throw std::length_error("exhaustive scan limited to received length <= 20");
  if (metric == ListMetric::deletions_only && received_length + radius != code.length()) {
    throw std::invalid_argument("deletions-only scan requires received length n - radius");
  }
  ExhaustiveReport report;
  report.code_length = code.length();
  report.radius = radius;
  report.received_length = received_length;
  report.metric = metric;
  const auto& codewords = code.codewords();
  const std::uint64_t total = std::uint64_t{1} << received_length;
  for (std::uint64_t v = 0; v < total; ++v) {
    Word r = word_from_index(v, received_length);
    std::size_t count = 0;
    if (metric == ListMetric::levenshtein) {
      for (const Word& c : codewords) count += (indel_distance(r, c) <= radius);
    } else {
      for (const Word& c : codewords) count += is_subsequence(r, c);
    }
    ++report.histogram[count];
    if (count > report.max_list_size) {
      report.max_list_size = count;
      report.argmax_received = r;
    }
  }
  return report;
}

// Minimum pairwise Levenshtein distance over distinct codewords; empty when
// the code has fewer than two codewords.
inline std::optional<std::size_t> min_distance(const VtCode& code) {
  const auto& codewords = code.codewords();
  if (codewords.size() < 2) return std::nullopt;
  std::optional<std::size_t> best;
  for (std::size_t i = 0; i < codewords.size(); ++i) {
    for (std::size_t j = i + 1; j < codewords.size(); ++j) {
      std::size_t d = indel_distance(codewords[i], codewords[j]);
      if (!best || d < *best) best = d;
    }
  }
  return best;
}

}  // namespace vt
