#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace obfudet {

struct TokenizerOptions {
  bool fold_case = true;  // lowercase before splitting

  bool operator==(const TokenizerOptions&) const = default;
};

// Whitespace-split tokens, case-folded, with leading and trailing punctuation
// stripped per token. Interior punctuation and digits survive: marks such as
// "mj1nga" or "m*inga" are the signal this toolkit exists to detect, not
// noise. Empty input yields an empty list.
std::vector<std::string> tokenize(std::string_view text, const TokenizerOptions& options = {});

}  // namespace obfudet
