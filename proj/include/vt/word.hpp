#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace vt {

using Symbol = std::uint8_t;

// A finite sequence over a fixed alphabet {0, ..., q-1}. This is the carrier
// for codewords and received words alike; it is a plain value type.
//
// Ordering is shortlex (length first, then lexicographic), so ordered
// containers of words of mixed lengths enumerate shorter words first.
class Word {
 public:
  Word() = default;  // empty binary word

  Word(std::vector<Symbol> symbols, unsigned alphabet) : symbols_(std::move(symbols)), q_(alphabet) {
    if (q_ < 2 || q_ > 256) throw std::invalid_argument("alphabet size must be in [2, 256]");
    for (Symbol s : symbols_) {
      if (s >= q_) throw std::invalid_argument("symbol value exceeds alphabet");
    }
  }

  // Parses a string of digit characters, e.g. "01101". The empty string is
  // the empty word.
  static Word from_string(std::string_view text, unsigned alphabet = 2) {
    std::vector<Symbol> symbols;
    symbols.reserve(text.size());
    for (char c : text) {
      if (c < '0' || c > '9') throw std::invalid_argument("malformed word: expected digit characters");
      symbols.push_back(static_cast<Symbol>(c - '0'));
    }
    return Word(std::move(symbols), alphabet);
  }

  unsigned alphabet() const { return q_; }
  std::size_t size() const { return symbols_.size(); }
  bool empty() const { return symbols_.empty(); }
  Symbol operator[](std::size_t i) const { return symbols_[i]; }
  const std::vector<Symbol>& symbols() const { return symbols_; }

  auto begin() const { return symbols_.begin(); }
  auto end() const { return symbols_.end(); }

  bool is_binary() const { return q_ == 2; }

  // Hamming weight: number of nonzero symbols.
  std::size_t weight() const {
    std::size_t w = 0;
    for (Symbol s : symbols_) w += (s != 0);
    return w;
  }

  // Copy with the symbol at `pos` removed.
  Word erased(std::size_t pos) const {
    if (pos >= size()) throw std::out_of_range("erase position out of range");
    Word out(*this);
    out.symbols_.erase(out.symbols_.begin() + static_cast<std::ptrdiff_t>(pos));
    return out;
  }

  // Copy with `s` inserted before position `pos` (pos == size() appends).
  Word inserted(std::size_t pos, Symbol s) const {
    if (pos > size()) throw std::out_of_range("insert position out of range");
    if (s >= q_) throw std::invalid_argument("symbol value exceeds alphabet");
    Word out(*this);
    out.symbols_.insert(out.symbols_.begin() + static_cast<std::ptrdiff_t>(pos), s);
    return out;
  }

  std::string str() const {
    std::string s;
    s.reserve(size());
    for (Symbol c : symbols_) s.push_back(static_cast<char>('0' + c));
    return s;
  }

  friend bool operator==(const Word& a, const Word& b) {
    return a.q_ == b.q_ && a.symbols_ == b.symbols_;
  }
  friend bool operator!=(const Word& a, const Word& b) { return !(a == b); }

  friend bool operator<(const Word& a, const Word& b) {
    if (a.q_ != b.q_) return a.q_ < b.q_;
    if (a.size() != b.size()) return a.size() < b.size();
    return a.symbols_ < b.symbols_;
  }

 private:
  std::vector<Symbol> symbols_;
  unsigned q_ = 2;
};

// The length-`length` word whose digits are the base-q expansion of `value`,
// most significant digit first. Numeric order of `value` equals lexicographic
// order of the words, which makes exhaustive scans deterministic.
inline Word word_from_index(std::uint64_t value, std::size_t length, unsigned alphabet = 2) {
  std::vector<Symbol> symbols(length, 0);
  for (std::size_t i = length; i-- > 0;) {
    symbols[i] = static_cast<Symbol>(value % alphabet);
    value /= alphabet;
  }
  if (value != 0) throw std::invalid_argument("index does not fit in the given length");
  return Word(std::move(symbols), alphabet);
}

}  // namespace vt
