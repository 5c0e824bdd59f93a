#include "obfudet/synth.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "obfudet/errors.hpp"
#include "obfudet/rng.hpp"

namespace obfudet {

std::vector<ObfuscationRule> default_rules() {
  std::vector<ObfuscationRule> rules;
  auto substitution = [](char from, char to, double p) {
    ObfuscationRule rule;
    rule.kind = ObfuscationRule::Kind::kSubstitute;
    rule.from = from;
    rule.to = to;
    rule.probability = p;
    return rule;
  };
  rules.push_back(substitution('i', '1', 0.45));
  rules.push_back(substitution('e', '3', 0.45));
  rules.push_back(substitution('a', '@', 0.45));
  rules.push_back(substitution('o', '0', 0.45));

  ObfuscationRule separator;
  separator.kind = ObfuscationRule::Kind::kInsertSeparator;
  separator.separator = '.';
  separator.every_n = 2;
  separator.probability = 0.25;
  rules.push_back(separator);

  ObfuscationRule repeat;
  repeat.kind = ObfuscationRule::Kind::kRepeatChar;
  repeat.position = PositionPolicy::kRandom;
  repeat.probability = 0.3;
  rules.push_back(repeat);

  ObfuscationRule split;
  split.kind = ObfuscationRule::Kind::kSpaceSplit;
  split.probability = 0.2;
  rules.push_back(split);
  return rules;
}

std::vector<std::string> default_lexicon() {
  // Neutral everyday Swahili phrases; stand-ins for whatever sensitive
  // lexicon a researcher supplies via file.
  return {
      "habari za asubuhi rafiki",
      "karibu tena nyumbani kwetu",
      "asante sana kwa msaada wako",
      "pole na kazi ndugu yangu",
      "tutaonana kesho mchana",
      "chakula hiki ni kitamu",
      "mvua inanyesha leo jioni",
      "watoto wanacheza uwanjani sasa",
      "safari yetu ilikuwa njema",
      "soko liko wazi asubuhi",
      "nimefurahi kukuona tena hapa",
      "tafadhali niletee maji baridi",
      "shule inafunguliwa wiki ijayo",
      "jua kali sana mchana huu",
      "usiku mwema lala salama",
      "nyumba yetu iko karibu",
      "wageni wamefika mapema leo",
      "kitabu hiki kinafundisha mengi",
      "barabara hii inaelekea mjini",
      "furaha yangu ni kubwa",
  };
}

namespace {

void validate_rules(const std::vector<ObfuscationRule>& rules) {
  if (rules.empty()) {
    throw ValidationError("obfuscate_text: empty rule list");
  }
  for (const auto& rule : rules) {
    if (!(rule.probability >= 0.0 && rule.probability <= 1.0)) {
      throw ValidationError("obfuscation rule probability must lie in [0, 1]");
    }
    if (rule.kind == ObfuscationRule::Kind::kSubstitute && rule.from == rule.to) {
      throw ValidationError("substitution source and target must differ");
    }
    if (rule.kind == ObfuscationRule::Kind::kInsertSeparator && rule.every_n == 0) {
      throw ValidationError("insert_separator interval must be positive");
    }
  }
}

std::string apply_rule(const std::string& text, const ObfuscationRule& rule, Rng& rng) {
  switch (rule.kind) {
    case ObfuscationRule::Kind::kSubstitute: {
      std::string out = text;
      std::replace(out.begin(), out.end(), rule.from, rule.to);
      return out;
    }
    case ObfuscationRule::Kind::kInsertSeparator: {
      std::string out;
      out.reserve(text.size() + text.size() / rule.every_n + 1);
      std::size_t since_last = 0;
      for (std::size_t i = 0; i < text.size(); ++i) {
        out.push_back(text[i]);
        if (++since_last == rule.every_n && i + 1 < text.size()) {
          out.push_back(rule.separator);
          since_last = 0;
        }
      }
      return out;
    }
    case ObfuscationRule::Kind::kRepeatChar: {
      std::size_t position = 0;
      switch (rule.position) {
        case PositionPolicy::kFirst: position = 0; break;
        case PositionPolicy::kMiddle: position = text.size() / 2; break;
        case PositionPolicy::kRandom: position = rng.index(text.size()); break;
      }
      std::string out = text;
      out.insert(out.begin() + static_cast<std::ptrdiff_t>(position), text[position]);
      return out;
    }
    case ObfuscationRule::Kind::kSpaceSplit: {
      if (text.size() < 2) return text;
      const std::size_t position = 1 + rng.index(text.size() - 1);
      std::string out = text;
      out.insert(out.begin() + static_cast<std::ptrdiff_t>(position), ' ');
      return out;
    }
  }
  return text;
}

std::string obfuscate_with(const std::string& text, const std::vector<ObfuscationRule>& rules,
                           Rng& rng) {
  // Redraw until some rule actually changes the text; a label-1 document must
  // differ from its source.
  constexpr int kMaxAttempts = 128;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    std::string out = text;
    for (const auto& rule : rules) {
      if (rng.uniform01() < rule.probability) {
        out = apply_rule(out, rule, rng);
      }
    }
    if (out != text) {
      return out;
    }
  }
  throw ValidationError("obfuscate_text: rules cannot change the text '" + text + "'");
}

}  // namespace

std::string obfuscate_text(std::string_view text, const std::vector<ObfuscationRule>& rules,
                           std::uint64_t seed) {
  if (text.empty()) {
    throw ValidationError("obfuscate_text: empty text");
  }
  validate_rules(rules);
  Rng rng(seed);
  return obfuscate_with(std::string(text), rules, rng);
}

LabeledCorpus generate_synthetic_corpus(const SynthConfig& config) {
  if (config.lexicon.empty()) {
    throw ValidationError("generate_synthetic_corpus: empty lexicon");
  }
  if (config.n_docs < 2) {
    throw ValidationError("generate_synthetic_corpus: n_docs must be at least 2");
  }
  if (!(config.obfuscated_fraction > 0.0 && config.obfuscated_fraction < 1.0)) {
    throw ValidationError("generate_synthetic_corpus: obfuscated_fraction must lie in (0, 1)");
  }
  validate_rules(config.rules);
  for (const auto& phrase : config.lexicon) {
    if (phrase.empty()) {
      throw ValidationError("generate_synthetic_corpus: lexicon contains an empty phrase");
    }
  }

  const std::size_t obfuscated_count = static_cast<std::size_t>(
      std::lround(static_cast<double>(config.n_docs) * config.obfuscated_fraction));
  const std::size_t plain_count = config.n_docs - obfuscated_count;
  if (obfuscated_count == 0 || plain_count == 0) {
    throw ValidationError("generate_synthetic_corpus: fraction leaves a class empty at this n_docs");
  }

  Rng rng(config.seed);
  std::vector<std::pair<std::string, int>> records;
  records.reserve(config.n_docs);

  for (std::size_t i = 0; i < obfuscated_count; ++i) {
    const std::string& phrase = config.lexicon[rng.index(config.lexicon.size())];
    records.emplace_back(obfuscate_with(phrase, config.rules, rng), 1);
  }
  for (std::size_t i = 0; i < plain_count; ++i) {
    const std::string& phrase = config.lexicon[rng.index(config.lexicon.size())];
    std::string text = phrase;
    if (rng.uniform01() < 0.5) {
      // Benign paraphrase noise: a word-order shuffle, nothing character-level.
      std::istringstream words_in(text);
      std::vector<std::string> words;
      std::string word;
      while (words_in >> word) words.push_back(word);
      rng.shuffle(words);
      text.clear();
      for (std::size_t w = 0; w < words.size(); ++w) {
        if (w > 0) text.push_back(' ');
        text += words[w];
      }
    }
    records.emplace_back(std::move(text), 0);
  }
  rng.shuffle(records);
  return make_corpus(std::move(records));
}

}  // namespace obfudet
