#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace obfudet {

// Sparse non-negative feature vector. Entries are kept sorted by column and
// explicit zeros are never stored.
class FeatureVector {
 public:
  FeatureVector() = default;
  explicit FeatureVector(std::size_t dimension) : dimension_(dimension) {}

  static FeatureVector from_dense(const std::vector<double>& values);

  std::size_t dimension() const { return dimension_; }
  const std::vector<std::pair<std::uint32_t, double>>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  // 0.0 when the column has no stored entry.
  double value_at(std::size_t column) const;

  // Columns must be pushed in strictly ascending order; zero values are
  // dropped.
  void push_entry(std::uint32_t column, double value);

  std::vector<double> to_dense() const;

  bool operator==(const FeatureVector&) const = default;

 private:
  std::size_t dimension_ = 0;
  std::vector<std::pair<std::uint32_t, double>> entries_;
};

struct FeatureMatrix {
  std::size_t dimension = 0;
  std::vector<FeatureVector> rows;

  std::size_t row_count() const { return rows.size(); }

  bool operator==(const FeatureMatrix&) const = default;
};

struct Vocabulary {
  std::vector<std::string> terms;                          // lexicographic order
  std::unordered_map<std::string, std::uint32_t> index;    // term -> column ordinal

  std::size_t size() const { return terms.size(); }
};

// Raw mode is ln(N / df), which zeroes terms that occur in every document.
// Smoothed mode is ln((1 + N) / (1 + df)) + 1, always positive; useful on
// tiny corpora where raw IDF nullifies most features.
enum class TfIdfMode { kRaw, kSmoothed };

struct TfIdfModel {
  Vocabulary vocabulary;
  std::vector<double> idf;      // per term
  std::vector<std::size_t> df;  // per term document frequency
  std::size_t n_docs = 0;
  TfIdfMode mode = TfIdfMode::kRaw;
};

// Vocabulary is the sorted union of tokens across documents. Throws when
// every document is empty ("empty vocabulary").
TfIdfModel fit_tfidf(const std::vector<std::vector<std::string>>& docs, TfIdfMode mode = TfIdfMode::kRaw);

// weight(t) = TF(t, d) * IDF(t), where the TF denominator counts only
// in-vocabulary tokens of d. Out-of-vocabulary tokens contribute nothing; an
// empty or fully-OOV document maps to the zero vector.
FeatureVector transform_tfidf(const TfIdfModel& model, const std::vector<std::string>& tokens);

FeatureMatrix transform_all(const TfIdfModel& model, const std::vector<std::vector<std::string>>& docs);

// Human-readable file of sorted (term, df, idf) triples plus n_docs; the
// round-trip is bit-exact on weights.
void save_tfidf(const TfIdfModel& model, const std::filesystem::path& path);
TfIdfModel load_tfidf(const std::filesystem::path& path);

}  // namespace obfudet
