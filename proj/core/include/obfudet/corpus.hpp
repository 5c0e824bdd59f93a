#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

namespace obfudet {

struct Document {
  std::size_t id = 0;  // ordinal within the corpus, 0..n-1
  std::string text;    // raw, unnormalized
  int label = 0;       // 1 = obfuscated, 0 = not obfuscated
};

// Ordered dataset with binary labels. Build through make_corpus or
// load_corpus so the invariants (consecutive ids, label in {0,1}, text
// non-blank) hold by construction. Immutable after construction and safe to
// share across threads.
struct LabeledCorpus {
  std::vector<Document> documents;
  std::array<std::size_t, 2> class_counts{0, 0};  // indexed by label

  std::size_t size() const { return documents.size(); }
};

// Validates records and assigns ids in input order.
LabeledCorpus make_corpus(std::vector<std::pair<std::string, int>> records);

enum class CorpusFormat { kCsv, kJsonl };

// CSV dialect: comma delimiter, double-quote escaping, UTF-8, required header
// "text,label". JSONL records are objects with string "text" and integer
// "label". Errors name the offending line.
LabeledCorpus load_corpus(const std::filesystem::path& path, CorpusFormat format);
void save_corpus(const LabeledCorpus& corpus, const std::filesystem::path& path, CorpusFormat format);

// Hex FNV-1a over the (text, label) sequence in document order.
std::string corpus_fingerprint(const LabeledCorpus& corpus);

struct FoldPlan {
  std::size_t k = 0;
  std::vector<std::size_t> assignments;  // per-document fold index in [0, k)

  std::vector<std::size_t> test_ids(std::size_t fold) const;
  std::vector<std::size_t> train_ids(std::size_t fold) const;
};

// Per-class seeded shuffle followed by a single round-robin cursor across
// folds. The rolling cursor is what guarantees both balance invariants:
// fold sizes within 1 of each other, and per-fold class counts within 1 of
// each other.
FoldPlan stratified_k_fold(const std::vector<int>& labels, std::size_t k, std::uint64_t seed);
FoldPlan stratified_k_fold(const LabeledCorpus& corpus, std::size_t k, std::uint64_t seed);

}  // namespace obfudet
