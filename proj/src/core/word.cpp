#include "stacksort/word.hpp"

#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>

#include "stacksort/error.hpp"

namespace stacksort {

namespace {

bool is_separator(char c) { return std::isspace(static_cast<unsigned char>(c)) || c == ','; }

std::vector<std::string_view> split_tokens(std::string_view text) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && is_separator(text[i])) ++i;
    std::size_t start = i;
    while (i < text.size() && !is_separator(text[i])) ++i;
    if (i > start) tokens.push_back(text.substr(start, i - start));
  }
  return tokens;
}

Letter parse_letter(std::string_view tok) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw InvalidInput("malformed letter '" + std::string(tok) + "'");
  if (value == 0) throw InvalidInput("letters must be positive integers");
  if (value > 0xFFFFFFFFull) throw InvalidInput("letter '" + std::string(tok) + "' too large");
  return static_cast<Letter>(value);
}

}  // namespace

Word parse_word(std::string_view text) {
  auto tokens = split_tokens(text);
  Word w;
  bool has_separator = false;
  for (char c : text)
    if (is_separator(c)) has_separator = true;
  if (tokens.size() == 1 && !has_separator && tokens[0].size() > 1) {
    for (char c : tokens[0]) {
      if (c < '1' || c > '9')
        throw InvalidInput("compact word form accepts digits 1-9 only, got '" + std::string(tokens[0]) + "'");
      w.push_back(static_cast<Letter>(c - '0'));
    }
    return w;
  }
  w.reserve(tokens.size());
  for (auto tok : tokens) w.push_back(parse_letter(tok));
  return w;
}

std::string format_word(WordView w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out.push_back(' ');
    out += std::to_string(w[i]);
  }
  return out;
}

std::string format_word_compact(WordView w) {
  for (Letter a : w)
    if (a > 9) return format_word(w);
  std::string out;
  for (Letter a : w) out.push_back(static_cast<char>('0' + a));
  return out;
}

std::uint64_t DescentVector::total() const {
  return std::accumulate(counts_.begin(), counts_.end(), std::uint64_t{0});
}

DescentVector& DescentVector::operator+=(const DescentVector& other) {
  if (counts_.size() < other.counts_.size()) counts_.resize(other.counts_.size(), 0);
  for (std::size_t i = 0; i < other.counts_.size(); ++i) counts_[i] += other.counts_[i];
  return *this;
}

std::string format_descent_vector(const DescentVector& k) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < k.types(); ++i) os << (i ? "," : "") << k[i];
  os << ')';
  return os.str();
}

Lambda::Lambda(std::vector<unsigned> cuts, unsigned r) : cuts_(std::move(cuts)), r_(r) {
  if (r_ == 0) throw InvalidInput("lambda: r must be positive");
  if (cuts_.empty()) throw InvalidInput("lambda: at least one cut required");
  if (cuts_.front() == 0) throw InvalidInput("lambda: cuts must be positive");
  for (std::size_t i = 1; i < cuts_.size(); ++i)
    if (cuts_[i] <= cuts_[i - 1]) throw InvalidInput("lambda: cuts must be strictly increasing");
  if (cuts_.back() != r_)
    throw InvalidInput("lambda: last cut must equal r = " + std::to_string(r_));
}

std::vector<unsigned> parse_unsigned_list(std::string_view text) {
  std::vector<unsigned> out;
  for (auto tok : split_tokens(text)) {
    unsigned v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
      throw InvalidInput("malformed integer '" + std::string(tok) + "'");
    out.push_back(v);
  }
  return out;
}

Word KTuple::concatenation() const {
  Word out;
  for (const auto& c : components) out.insert(out.end(), c.begin(), c.end());
  return out;
}

std::size_t KTuple::letter_count() const {
  std::size_t n = 0;
  for (const auto& c : components) n += c.size();
  return n;
}

std::vector<Word> parse_tuple(std::string_view text) {
  std::vector<Word> out;
  std::size_t start = 0;
  while (true) {
    std::size_t bar = text.find('|', start);
    auto part = text.substr(start, bar == std::string_view::npos ? bar : bar - start);
    // Trim so that "12 | 3" reads the first component in compact form.
    while (!part.empty() && is_separator(part.front())) part.remove_prefix(1);
    while (!part.empty() && is_separator(part.back())) part.remove_suffix(1);
    out.push_back(parse_word(part));
    if (bar == std::string_view::npos) break;
    start = bar + 1;
  }
  return out;
}

std::string format_tuple(const std::vector<Word>& components) {
  std::string out;
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (i) out += " | ";
    out += format_word(components[i]);
  }
  return out;
}

}  // namespace stacksort
