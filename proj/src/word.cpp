#include "drinfeld/word.hpp"

#include <cctype>

#include "drinfeld/errors.hpp"

namespace drinfeld {

namespace {

void check_length(int n) {
  if (n < 0 || n > Word::kMaxLength) throw RangeError("word length out of range: " + std::to_string(n));
}

}  // namespace

Word Word::from_letters(std::string_view letters) {
  Word w;
  for (char c : letters) {
    if (c == 'x') w.push_back(Letter::X);
    else if (c == 'y') w.push_back(Letter::Y);
    else throw ParseError(std::string("invalid letter '") + c + "'");
  }
  return w;
}

Word Word::x_power(int n) {
  check_length(n);
  Word w;
  w.len_ = static_cast<std::uint8_t>(n);
  return w;
}

Word Word::y_power(int n) {
  check_length(n);
  Word w;
  for (int i = 0; i < n; ++i) w.push_back(Letter::Y);
  return w;
}

Word Word::xyx(int a, int b) { return x_power(a).concat(y_power(1)).concat(x_power(b)); }

Word Word::xyxyx(int a, int b, int c) {
  return x_power(a).concat(y_power(1)).concat(x_power(b)).concat(y_power(1)).concat(x_power(c));
}

Word& Word::push_back(Letter l) {
  check_length(len_ + 1);
  if (l == Letter::Y) bits_ |= (std::uint64_t{1} << len_);
  ++len_;
  return *this;
}

Word Word::concat(const Word& other) const {
  check_length(len_ + other.len_);
  Word w = *this;
  if (other.len_ > 0) w.bits_ |= other.bits_ << len_;
  w.len_ = static_cast<std::uint8_t>(len_ + other.len_);
  return w;
}

Word Word::prefix(int n) const {
  Word w;
  w.len_ = static_cast<std::uint8_t>(n);
  w.bits_ = n >= 64 ? bits_ : (bits_ & ((std::uint64_t{1} << n) - 1));
  return w;
}

Word Word::suffix_from(int start) const {
  Word w;
  w.len_ = static_cast<std::uint8_t>(len_ - start);
  w.bits_ = start >= 64 ? 0 : (bits_ >> start);
  return w;
}

Word Word::rotated(int k) const {
  if (len_ == 0) return *this;
  k %= len_;
  return suffix_from(k).concat(prefix(k));
}

Word Word::swapped() const {
  Word w;
  for (int i = 0; i < len_; ++i) w.push_back((*this)[i] == Letter::X ? Letter::Y : Letter::X);
  return w;
}

Word Word::reversed() const {
  Word w;
  for (int i = len_ - 1; i >= 0; --i) w.push_back((*this)[i]);
  return w;
}

std::vector<int> Word::x_runs() const {
  std::vector<int> runs{0};
  for (int i = 0; i < len_; ++i) {
    if ((*this)[i] == Letter::Y) runs.push_back(0);
    else ++runs.back();
  }
  return runs;
}

std::string Word::letters() const {
  std::string s;
  for (int i = 0; i < len_; ++i) s.push_back((*this)[i] == Letter::X ? 'x' : 'y');
  return s;
}

std::string Word::to_string() const {
  if (len_ == 0) return "1";
  std::string s;
  int i = 0;
  while (i < len_) {
    Letter l = (*this)[i];
    int j = i;
    while (j < len_ && (*this)[j] == l) ++j;
    s.push_back(l == Letter::X ? 'x' : 'y');
    if (j - i > 1) s += "^" + std::to_string(j - i);
    i = j;
  }
  return s;
}

bool lex_less(const Word& a, const Word& b) {
  int n = std::min(a.size(), b.size());
  for (int i = 0; i < n; ++i) {
    if (a[i] != b[i]) return a[i] == Letter::X;
  }
  return a.size() < b.size();
}

bool operator<(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return lex_less(a, b);
}

Word parse_word(std::string_view text) {
  Word w;
  bool any = false;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) { ++i; continue; }
    if (c != 'x' && c != 'y') throw ParseError(std::string("invalid character '") + c + "' in word");
    Letter l = c == 'x' ? Letter::X : Letter::Y;
    ++i;
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    long exponent = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (start == i) throw ParseError("missing exponent after '^'");
      if (i - start > 3) throw ParseError("exponent too large");
      exponent = std::stol(std::string(text.substr(start, i - start)));
      if (exponent == 0) throw ParseError("zero exponent in word");
    }
    if (w.size() + exponent > Word::kMaxLength) throw ParseError("word too long");
    for (long k = 0; k < exponent; ++k) w.push_back(l);
    any = true;
  }
  if (!any) throw ParseError("empty word");
  return w;
}

Composition::Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_)
    if (p < 1) throw std::invalid_argument("composition parts must be positive");
}

int Composition::weight() const {
  int s = 0;
  for (int p : parts_) s += p;
  return s;
}

Word Composition::to_word() const {
  Word w;
  for (int p : parts_) w = w.concat(Word::x_power(p - 1)).concat(Word::y_power(1));
  return w;
}

Composition Composition::from_word(const Word& w) {
  if (!w.empty() && w[w.size() - 1] != Letter::Y)
    throw std::invalid_argument("word does not end in y: " + w.to_string());
  std::vector<int> parts;
  int run = 0;
  for (int i = 0; i < w.size(); ++i) {
    if (w[i] == Letter::X) ++run;
    else { parts.push_back(run + 1); run = 0; }
  }
  return Composition(std::move(parts));
}

Composition Composition::prepend(int part) const {
  std::vector<int> p;
  p.reserve(parts_.size() + 1);
  p.push_back(part);
  p.insert(p.end(), parts_.begin(), parts_.end());
  return Composition(std::move(p));
}

std::string Composition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

Composition parse_composition(std::string_view text) {
  std::vector<int> parts;
  std::size_t i = 0;
  bool expect_number = true;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c)) || c == '(' || c == ')') { ++i; continue; }
    if (c == ',') {
      if (expect_number) throw ParseError("misplaced ',' in composition");
      expect_number = true;
      ++i;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw ParseError(std::string("invalid character '") + c + "' in composition");
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i - start > 3) throw ParseError("composition part too large");
    int v = std::stoi(std::string(text.substr(start, i - start)));
    if (v < 1) throw ParseError("composition parts must be positive");
    parts.push_back(v);
    expect_number = false;
  }
  if (parts.empty()) throw ParseError("empty composition");
  if (expect_number) throw ParseError("trailing ',' in composition");
  return Composition(std::move(parts));
}

}  // namespace drinfeld
