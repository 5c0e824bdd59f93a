#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "obfudet/corpus.hpp"

namespace obfudet {

enum class PositionPolicy { kFirst, kMiddle, kRandom };

// Character-level transformations that stand in for real-world evasion
// patterns: leet substitutions, separator insertion, character doubling,
// word splitting.
struct ObfuscationRule {
  enum class Kind { kSubstitute, kInsertSeparator, kRepeatChar, kSpaceSplit };

  Kind kind = Kind::kSubstitute;
  double probability = 1.0;  // chance the rule fires on a given text, in [0, 1]

  // kSubstitute: every `from` becomes `to`; from != to.
  char from = 0;
  char to = 0;

  // kInsertSeparator: `separator` after every `every_n` characters.
  char separator = '.';
  std::size_t every_n = 1;

  // kRepeatChar: which character gets doubled.
  PositionPolicy position = PositionPolicy::kRandom;

  bool operator==(const ObfuscationRule&) const = default;
};

// Leet substitutions (i->1, e->3, a->@, o->0), period insertion, character
// doubling, word splitting.
std::vector<ObfuscationRule> default_rules();

// Neutral everyday Swahili phrases. The repo ships no abusive content;
// researchers supply their own sensitive lexicons via file.
std::vector<std::string> default_lexicon();

// Applies each rule independently with its probability; redraws until the
// output differs from the input, so a label-1 text is genuinely altered.
// Throws when the rule set cannot change the text.
std::string obfuscate_text(std::string_view text, const std::vector<ObfuscationRule>& rules,
                           std::uint64_t seed);

struct SynthConfig {
  std::vector<std::string> lexicon = default_lexicon();
  std::size_t n_docs = 200;
  double obfuscated_fraction = 0.3;  // in (0, 1); both classes must be realized
  std::vector<ObfuscationRule> rules = default_rules();
  std::uint64_t seed = 0;
};

// round(n_docs * obfuscated_fraction) documents labeled 1 (obfuscated from a
// seeded lexicon draw), the rest labeled 0 (plain phrases, half of them with
// a seeded word-order shuffle). Byte-identical output per seed.
LabeledCorpus generate_synthetic_corpus(const SynthConfig& config);

// JSON config; absent fields fall back to the defaults above. A "lexicon"
// array inlines phrases, a "lexicon_file" points at one phrase per line.
SynthConfig load_synth_config(const std::filesystem::path& path);
std::string synth_config_json(const SynthConfig& config);

}  // namespace obfudet
