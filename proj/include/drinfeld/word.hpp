#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace drinfeld {

enum class Letter : std::uint8_t { X = 0, Y = 1 };

/// A word over {x, y}, packed one bit per letter (x = 0, y = 1), letter i at bit i.
/// Holds up to 64 letters.
class Word {
public:
  static constexpr int kMaxLength = 64;

  Word() = default;
  static Word from_letters(std::string_view letters);  // "xxyx", no exponents
  static Word x_power(int n);
  static Word y_power(int n);
  /// x^a y x^b
  static Word xyx(int a, int b);
  /// x^a y x^b y x^c
  static Word xyxyx(int a, int b, int c);

  int size() const { return len_; }
  bool empty() const { return len_ == 0; }
  Letter operator[](int i) const { return static_cast<Letter>((bits_ >> i) & 1u); }
  int y_degree() const { return std::popcount(bits_); }
  int x_degree() const { return len_ - y_degree(); }
  std::uint64_t bits() const { return bits_; }

  Word& push_back(Letter l);
  Word concat(const Word& other) const;
  Word prefix(int n) const;
  Word suffix_from(int start) const;
  Word rotated(int k) const;
  /// w(y, x): every x becomes y and vice versa.
  Word swapped() const;
  Word reversed() const;

  /// Exponents of the x-runs around the y letters: x^{r0} y x^{r1} ... y x^{rk}.
  std::vector<int> x_runs() const;

  /// Plain letters, e.g. "xxyxxxxy".
  std::string letters() const;
  /// Canonical rendering collapsing runs, e.g. "x^2yx^4y"; empty word renders as "1".
  std::string to_string() const;

  friend bool operator==(const Word& a, const Word& b) = default;
  /// Shortlex order: by length, then lexicographically with x < y.
  friend bool operator<(const Word& a, const Word& b);

private:
  std::uint64_t bits_ = 0;
  std::uint8_t len_ = 0;
};

/// Lexicographic order with x < y (a proper prefix is smaller).
bool lex_less(const Word& a, const Word& b);

/// Parses "x^2yx^4y", "xxyxxxxy", "x^2 y x^4 y". Rejects unknown characters,
/// zero exponents and empty input.
Word parse_word(std::string_view text);

/// A finite sequence of positive integers, the index of ζ(n1, ..., nk).
class Composition {
public:
  Composition() = default;
  Composition(std::initializer_list<int> parts);
  explicit Composition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int depth() const { return static_cast<int>(parts_.size()); }
  int weight() const;
  bool empty() const { return parts_.empty(); }
  /// Empty, or first part at least 2.
  bool admissible() const { return parts_.empty() || parts_.front() >= 2; }
  int operator[](int i) const { return parts_[static_cast<std::size_t>(i)]; }

  /// x^{n1-1} y x^{n2-1} y ... x^{nk-1} y
  Word to_word() const;
  /// Inverse of to_word for words ending in y (or empty).
  static Composition from_word(const Word& w);

  Composition prepend(int part) const;

  /// "(4,2)"; the empty composition renders as "()".
  std::string to_string() const;

  friend bool operator==(const Composition&, const Composition&) = default;
  friend auto operator<=>(const Composition&, const Composition&) = default;

private:
  std::vector<int> parts_;
};

/// Parses "4,2", "(4,2)" or "4 2". Parts must be positive.
Composition parse_composition(std::string_view text);

}  // namespace drinfeld

template <>
struct std::hash<drinfeld::Word> {
  std::size_t operator()(const drinfeld::Word& w) const noexcept {
    return std::hash<std::uint64_t>{}(w.bits() * 0x9E3779B97F4A7C15ull ^ static_cast<std::uint64_t>(w.size()));
  }
};
