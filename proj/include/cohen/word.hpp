#pragma once

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <string_view>
#include <vector>

#include "cohen/errors.hpp"

namespace cohen {

struct Letter {
  std::size_t generator;
  std::int64_t exponent;

  friend bool operator==(const Letter&, const Letter&) = default;
};

// An element of a free group, kept freely reduced: adjacent letters never
// share a generator and no exponent is zero. The empty word is the identity.
class FreeWord {
 public:
  FreeWord() = default;

  explicit FreeWord(const std::vector<Letter>& letters) {
    for (const auto& l : letters) push(l);
  }

  static FreeWord generator(std::size_t g, std::int64_t exponent = 1) {
    FreeWord w;
    w.push({g, exponent});
    return w;
  }

  const std::vector<Letter>& letters() const noexcept { return letters_; }
  bool empty() const noexcept { return letters_.empty(); }

  // Total number of unit letters, i.e. the sum of |exponent|.
  std::size_t length() const {
    std::size_t n = 0;
    for (const auto& l : letters_) n += static_cast<std::size_t>(std::llabs(l.exponent));
    return n;
  }

  // Number of generator symbols the word needs: 1 + largest index, or 0.
  std::size_t alphabet_bound() const {
    std::size_t m = 0;
    for (const auto& l : letters_) m = std::max(m, l.generator + 1);
    return m;
  }

  FreeWord inverse() const {
    FreeWord w;
    w.letters_.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
      w.letters_.push_back({it->generator, -it->exponent});
    return w;
  }

  FreeWord& operator*=(const FreeWord& rhs) {
    for (const auto& l : rhs.letters_) push(l);
    return *this;
  }

  friend FreeWord operator*(FreeWord lhs, const FreeWord& rhs) {
    lhs *= rhs;
    return lhs;
  }

  // c * w * c^-1
  FreeWord conjugated_by(const FreeWord& c) const { return c * *this * c.inverse(); }

  // Sequence of unit letters encoded as 2*g (for g) and 2*g+1 (for g^-1).
  std::vector<std::size_t> columns() const {
    std::vector<std::size_t> out;
    out.reserve(length());
    for (const auto& l : letters_) {
      std::size_t col = 2 * l.generator + (l.exponent < 0 ? 1 : 0);
      for (std::int64_t k = 0; k < std::llabs(l.exponent); ++k) out.push_back(col);
    }
    return out;
  }

  std::vector<std::int64_t> exponent_sums(std::size_t num_generators) const {
    std::vector<std::int64_t> sums(num_generators, 0);
    for (const auto& l : letters_) sums.at(l.generator) += l.exponent;
    return sums;
  }

  // Replaces every occurrence of generator `g` by `replacement`.
  FreeWord substitute(std::size_t g, const FreeWord& replacement) const {
    FreeWord out;
    const FreeWord inv = replacement.inverse();
    for (const auto& l : letters_) {
      if (l.generator != g) {
        out.push(l);
        continue;
      }
      const FreeWord& piece = l.exponent > 0 ? replacement : inv;
      for (std::int64_t k = 0; k < std::llabs(l.exponent); ++k) out *= piece;
    }
    return out;
  }

  // Renames generators through `map`; used after deleting a generator.
  template <typename Map>
  FreeWord relabel(Map&& map) const {
    FreeWord out;
    for (const auto& l : letters_) out.push({map(l.generator), l.exponent});
    return out;
  }

  std::size_t occurrences(std::size_t g) const {
    std::size_t n = 0;
    for (const auto& l : letters_)
      if (l.generator == g) n += static_cast<std::size_t>(std::llabs(l.exponent));
    return n;
  }

  friend bool operator==(const FreeWord&, const FreeWord&) = default;

 private:
  void push(Letter l) {
    if (l.exponent == 0) return;
    if (!letters_.empty() && letters_.back().generator == l.generator) {
      letters_.back().exponent += l.exponent;
      if (letters_.back().exponent == 0) letters_.pop_back();
      return;
    }
    letters_.push_back(l);
  }

  std::vector<Letter> letters_;
};

namespace detail {

inline std::vector<std::string_view> split_whitespace(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    if (j > i) out.push_back(text.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace detail

// Parses whitespace-separated letters `name` or `name^k` (k a nonzero
// integer, possibly negative). The token "1" and the empty string denote
// the identity.
inline FreeWord parse_word(std::string_view text, const std::vector<std::string>& names,
                           const std::string& path = {}) {
  FreeWord w;
  for (auto token : detail::split_whitespace(text)) {
    if (token == "1") continue;
    std::string_view name = token;
    std::int64_t exponent = 1;
    if (auto caret = token.find('^'); caret != std::string_view::npos) {
      name = token.substr(0, caret);
      auto digits = token.substr(caret + 1);
      if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
      auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), exponent);
      if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size())
        throw ParseError(path, std::string(token), "bad exponent");
    }
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) throw ParseError(path, std::string(token), "unknown generator");
    w *= FreeWord::generator(static_cast<std::size_t>(it - names.begin()), exponent);
  }
  return w;
}

// Relator syntax: a word, or a relation "u = v" which becomes u v^-1.
inline FreeWord parse_relator(std::string_view text, const std::vector<std::string>& names,
                              const std::string& path = {}) {
  auto eq = text.find('=');
  if (eq == std::string_view::npos) return parse_word(text, names, path);
  if (text.find('=', eq + 1) != std::string_view::npos)
    throw ParseError(path, std::string(text), "more than one '=' in relation");
  return parse_word(text.substr(0, eq), names, path) *
         parse_word(text.substr(eq + 1), names, path).inverse();
}

inline std::string format_word(const FreeWord& w, const std::vector<std::string>& names) {
  if (w.empty()) return "";
  std::string out;
  for (const auto& l : w.letters()) {
    if (!out.empty()) out += ' ';
    out += l.generator < names.size() ? names[l.generator]
                                      : "?" + std::to_string(l.generator);
    if (l.exponent != 1) out += '^' + std::to_string(l.exponent);
  }
  return out;
}

}  // namespace cohen
