#include "obfudet/tfidf.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "obfudet/errors.hpp"

namespace obfudet {

FeatureVector FeatureVector::from_dense(const std::vector<double>& values) {
  FeatureVector v(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] != 0.0) {
      v.entries_.emplace_back(static_cast<std::uint32_t>(i), values[i]);
    }
  }
  return v;
}

double FeatureVector::value_at(std::size_t column) const {
  const auto it = std::lower_bound(entries_.begin(), entries_.end(), column,
                                   [](const auto& entry, std::size_t col) { return entry.first < col; });
  if (it != entries_.end() && it->first == column) return it->second;
  return 0.0;
}

void FeatureVector::push_entry(std::uint32_t column, double value) {
  if (value == 0.0) return;
  if (!entries_.empty() && entries_.back().first >= column) {
    throw ValidationError("feature entries must be pushed in ascending column order");
  }
  entries_.emplace_back(column, value);
}

std::vector<double> FeatureVector::to_dense() const {
  std::vector<double> out(dimension_, 0.0);
  for (const auto& [column, value] : entries_) {
    out[column] = value;
  }
  return out;
}

TfIdfModel fit_tfidf(const std::vector<std::vector<std::string>>& docs, TfIdfMode mode) {
  if (docs.empty()) {
    throw ValidationError("fit_tfidf requires at least one document");
  }
  // std::map keeps the vocabulary lexicographic without a separate sort.
  std::map<std::string, std::size_t> document_frequency;
  for (const auto& doc : docs) {
    std::set<std::string_view> seen;
    for (const auto& token : doc) {
      seen.insert(token);
    }
    for (const auto token : seen) {
      document_frequency[std::string(token)] += 1;
    }
  }
  if (document_frequency.empty()) {
    throw ValidationError("empty vocabulary: every document is empty");
  }

  TfIdfModel model;
  model.mode = mode;
  model.n_docs = docs.size();
  model.vocabulary.terms.reserve(document_frequency.size());
  model.idf.reserve(document_frequency.size());
  model.df.reserve(document_frequency.size());
  const double n = static_cast<double>(docs.size());
  for (const auto& [term, df] : document_frequency) {
    const std::uint32_t column = static_cast<std::uint32_t>(model.vocabulary.terms.size());
    model.vocabulary.index.emplace(term, column);
    model.vocabulary.terms.push_back(term);
    model.df.push_back(df);
    const double d = static_cast<double>(df);
    model.idf.push_back(mode == TfIdfMode::kRaw ? std::log(n / d)
                                                : std::log((1.0 + n) / (1.0 + d)) + 1.0);
  }
  return model;
}

FeatureVector transform_tfidf(const TfIdfModel& model, const std::vector<std::string>& tokens) {
  FeatureVector vector(model.vocabulary.size());
  // column -> raw count; the map keeps columns sorted for push_entry.
  std::map<std::uint32_t, std::size_t> counts;
  std::size_t in_vocab_total = 0;
  for (const auto& token : tokens) {
    const auto it = model.vocabulary.index.find(token);
    if (it == model.vocabulary.index.end()) continue;  // OOV tokens contribute nothing
    counts[it->second] += 1;
    ++in_vocab_total;
  }
  if (in_vocab_total == 0) {
    return vector;  // empty or fully-OOV document: zero vector
  }
  const double denominator = static_cast<double>(in_vocab_total);
  for (const auto& [column, count] : counts) {
    const double tf = static_cast<double>(count) / denominator;
    vector.push_entry(column, tf * model.idf[column]);
  }
  return vector;
}

FeatureMatrix transform_all(const TfIdfModel& model, const std::vector<std::vector<std::string>>& docs) {
  FeatureMatrix matrix;
  matrix.dimension = model.vocabulary.size();
  matrix.rows.reserve(docs.size());
  for (const auto& doc : docs) {
    matrix.rows.push_back(transform_tfidf(model, doc));
  }
  return matrix;
}

}  // namespace obfudet
