#include "obfudet/text.hpp"

#include <cctype>

namespace obfudet {

namespace {

bool ascii_space(unsigned char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

bool ascii_punct(unsigned char c) {
  return c < 0x80 && std::ispunct(c) != 0;
}

// Simple case folding over UTF-8 for the ASCII and Latin-1 ranges, which
// covers the Swahili texts this toolkit targets; other code points pass
// through unchanged.
std::string fold_case(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size();) {
    const unsigned char c = static_cast<unsigned char>(text[i]);
    if (c < 0x80) {
      out.push_back(static_cast<char>(std::tolower(c)));
      ++i;
    } else if (c == 0xC3 && i + 1 < text.size()) {
      unsigned char next = static_cast<unsigned char>(text[i + 1]);
      if (next >= 0x80 && next <= 0x9E && next != 0x97) {  // U+00C0..U+00DE minus the times sign
        next = static_cast<unsigned char>(next + 0x20);
      }
      out.push_back(static_cast<char>(c));
      out.push_back(static_cast<char>(next));
      i += 2;
    } else {
      out.push_back(static_cast<char>(c));
      ++i;
    }
  }
  return out;
}

std::string_view strip_edge_punct(std::string_view token) {
  std::size_t begin = 0;
  std::size_t end = token.size();
  while (begin < end && ascii_punct(static_cast<unsigned char>(token[begin]))) ++begin;
  while (end > begin && ascii_punct(static_cast<unsigned char>(token[end - 1]))) --end;
  return token.substr(begin, end - begin);
}

}  // namespace

std::vector<std::string> tokenize(std::string_view text, const TokenizerOptions& options) {
  const std::string folded = options.fold_case ? fold_case(text) : std::string(text);
  std::vector<std::string> tokens;
  std::size_t i = 0;
  while (i < folded.size()) {
    while (i < folded.size() && ascii_space(static_cast<unsigned char>(folded[i]))) ++i;
    std::size_t start = i;
    while (i < folded.size() && !ascii_space(static_cast<unsigned char>(folded[i]))) ++i;
    if (i > start) {
      const std::string_view token = strip_edge_punct(std::string_view(folded).substr(start, i - start));
      if (!token.empty()) {
        tokens.emplace_back(token);
      }
    }
  }
  return tokens;
}

}  // namespace obfudet
