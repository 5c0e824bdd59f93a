#include "obfudet/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "obfudet/errors.hpp"
#include "obfudet/fingerprint.hpp"
#include "obfudet/rng.hpp"

namespace obfudet {

namespace {

bool is_blank(const std::string& text) {
  return std::all_of(text.begin(), text.end(),
                     [](unsigned char c) { return std::isspace(c) != 0; });
}

void validate_record(const std::string& text, int label, std::size_t line) {
  if (label != 0 && label != 1) {
    throw ValidationError("line " + std::to_string(line) + ": label must be 0 or 1, got " +
                          std::to_string(label));
  }
  if (text.empty() || is_blank(text)) {
    throw ValidationError("line " + std::to_string(line) + ": empty text field");
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open " + path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// RFC-4180-style records: comma delimiter, double-quote escaping, quoted
// fields may contain commas, quotes, and newlines. Returns one vector of
// fields per record along with the physical line the record started on.
std::vector<std::pair<std::vector<std::string>, std::size_t>> parse_csv(const std::string& content) {
  std::vector<std::pair<std::vector<std::string>, std::size_t>> records;
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  bool field_started = false;
  std::size_t line = 1;
  std::size_t record_line = 1;

  auto end_field = [&] {
    fields.push_back(std::move(field));
    field.clear();
    field_started = false;
  };
  auto end_record = [&] {
    end_field();
    records.emplace_back(std::move(fields), record_line);
    fields.clear();
  };

  for (std::size_t i = 0; i < content.size(); ++i) {
    const char c = content[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < content.size() && content[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        if (c == '\n') ++line;
        field.push_back(c);
      }
      continue;
    }
    switch (c) {
      case '"':
        quoted = true;
        field_started = true;
        break;
      case ',':
        end_field();
        field_started = true;  // the next field exists even if empty
        break;
      case '\r':
        break;
      case '\n':
        if (field_started || !field.empty() || !fields.empty()) {
          end_record();
        }
        ++line;
        record_line = line;
        break;
      default:
        field.push_back(c);
        field_started = true;
        break;
    }
  }
  if (quoted) {
    throw ValidationError("line " + std::to_string(record_line) + ": unterminated quoted field");
  }
  if (field_started || !field.empty() || !fields.empty()) {
    end_record();
  }
  return records;
}

int parse_label(const std::string& raw, std::size_t line) {
  std::string trimmed = raw;
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back()))) trimmed.pop_back();
  std::size_t start = 0;
  while (start < trimmed.size() && std::isspace(static_cast<unsigned char>(trimmed[start]))) ++start;
  trimmed = trimmed.substr(start);
  if (trimmed.empty()) {
    throw ValidationError("line " + std::to_string(line) + ": missing label");
  }
  std::size_t consumed = 0;
  long value = 0;
  try {
    value = std::stol(trimmed, &consumed);
  } catch (const std::exception&) {
    throw ValidationError("line " + std::to_string(line) + ": label is not an integer: '" + raw + "'");
  }
  if (consumed != trimmed.size()) {
    throw ValidationError("line " + std::to_string(line) + ": label is not an integer: '" + raw + "'");
  }
  return static_cast<int>(value);
}

std::vector<std::pair<std::string, int>> load_csv_records(const std::filesystem::path& path) {
  const auto records = parse_csv(read_file(path));
  if (records.empty()) {
    throw ValidationError(path.string() + ": missing header 'text,label'");
  }
  const auto& header = records.front().first;
  if (header.size() != 2 || header[0] != "text" || header[1] != "label") {
    throw ValidationError(path.string() + ": line 1: expected header 'text,label'");
  }
  std::vector<std::pair<std::string, int>> out;
  for (std::size_t r = 1; r < records.size(); ++r) {
    const auto& [fields, line] = records[r];
    if (fields.size() != 2) {
      throw ValidationError("line " + std::to_string(line) + ": expected 2 fields, got " +
                            std::to_string(fields.size()));
    }
    const int label = parse_label(fields[1], line);
    validate_record(fields[0], label, line);
    out.emplace_back(fields[0], label);
  }
  return out;
}

std::vector<std::pair<std::string, int>> load_jsonl_records(const std::filesystem::path& path) {
  const std::string content = read_file(path);
  std::vector<std::pair<std::string, int>> out;
  std::istringstream stream(content);
  std::string raw_line;
  std::size_t line = 0;
  while (std::getline(stream, raw_line)) {
    ++line;
    if (is_blank(raw_line)) continue;
    nlohmann::json record;
    try {
      record = nlohmann::json::parse(raw_line);
    } catch (const nlohmann::json::exception& e) {
      throw ValidationError("line " + std::to_string(line) + ": invalid JSON: " + e.what());
    }
    if (!record.is_object() || !record.contains("text") || !record.contains("label")) {
      throw ValidationError("line " + std::to_string(line) +
                            ": expected an object with 'text' and 'label'");
    }
    if (!record["text"].is_string() || !record["label"].is_number_integer()) {
      throw ValidationError("line " + std::to_string(line) +
                            ": 'text' must be a string and 'label' an integer");
    }
    const std::string text = record["text"].get<std::string>();
    const int label = record["label"].get<int>();
    validate_record(text, label, line);
    out.emplace_back(text, label);
  }
  return out;
}

std::string csv_escape(const std::string& field) {
  const bool needs_quotes = field.find_first_of(",\"\n\r") != std::string::npos ||
                            (!field.empty() && (field.front() == ' ' || field.back() == ' '));
  if (!needs_quotes) return field;
  std::string out = "\"";
  for (const char c : field) {
    if (c == '"') out += "\"\"";
    else out.push_back(c);
  }
  out.push_back('"');
  return out;
}

}  // namespace

LabeledCorpus make_corpus(std::vector<std::pair<std::string, int>> records) {
  if (records.empty()) {
    throw ValidationError("zero records");
  }
  LabeledCorpus corpus;
  corpus.documents.reserve(records.size());
  for (std::size_t i = 0; i < records.size(); ++i) {
    auto& [text, label] = records[i];
    if (label != 0 && label != 1) {
      throw ValidationError("record " + std::to_string(i) + ": label must be 0 or 1");
    }
    if (text.empty() || is_blank(text)) {
      throw ValidationError("record " + std::to_string(i) + ": empty text");
    }
    corpus.class_counts[static_cast<std::size_t>(label)] += 1;
    corpus.documents.push_back(Document{i, std::move(text), label});
  }
  return corpus;
}

LabeledCorpus load_corpus(const std::filesystem::path& path, CorpusFormat format) {
  if (!std::filesystem::exists(path)) {
    throw IoError("no such file: " + path.string());
  }
  auto records = format == CorpusFormat::kCsv ? load_csv_records(path) : load_jsonl_records(path);
  if (records.empty()) {
    throw ValidationError(path.string() + ": zero records");
  }
  return make_corpus(std::move(records));
}

void save_corpus(const LabeledCorpus& corpus, const std::filesystem::path& path, CorpusFormat format) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw IoError("cannot write " + path.string());
  }
  if (format == CorpusFormat::kCsv) {
    out << "text,label\n";
    for (const auto& doc : corpus.documents) {
      out << csv_escape(doc.text) << ',' << doc.label << '\n';
    }
  } else {
    for (const auto& doc : corpus.documents) {
      nlohmann::ordered_json record;
      record["text"] = doc.text;
      record["label"] = doc.label;
      out << record.dump() << '\n';
    }
  }
  if (!out) {
    throw IoError("write failed: " + path.string());
  }
}

std::string corpus_fingerprint(const LabeledCorpus& corpus) {
  std::uint64_t h = fnv1a64("obfudet-corpus");
  for (const auto& doc : corpus.documents) {
    const std::string size_tag = std::to_string(doc.text.size()) + ":";
    h = fnv1a64(size_tag, h);
    h = fnv1a64(doc.text, h);
    h = fnv1a64(doc.label == 1 ? "|1" : "|0", h);
  }
  return to_hex64(h);
}

std::vector<std::size_t> FoldPlan::test_ids(std::size_t fold) const {
  std::vector<std::size_t> ids;
  for (std::size_t i = 0; i < assignments.size(); ++i) {
    if (assignments[i] == fold) ids.push_back(i);
  }
  return ids;
}

std::vector<std::size_t> FoldPlan::train_ids(std::size_t fold) const {
  std::vector<std::size_t> ids;
  for (std::size_t i = 0; i < assignments.size(); ++i) {
    if (assignments[i] != fold) ids.push_back(i);
  }
  return ids;
}

FoldPlan stratified_k_fold(const std::vector<int>& labels, std::size_t k, std::uint64_t seed) {
  if (k < 2) {
    throw ValidationError("k must be at least 2");
  }
  if (k > labels.size()) {
    throw ValidationError("k (" + std::to_string(k) + ") exceeds the number of documents (" +
                          std::to_string(labels.size()) + ")");
  }
  std::array<std::vector<std::size_t>, 2> by_class;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] != 0 && labels[i] != 1) {
      throw ValidationError("labels must be 0 or 1");
    }
    by_class[static_cast<std::size_t>(labels[i])].push_back(i);
  }
  if (by_class[0].empty() || by_class[1].empty()) {
    throw ValidationError("each class must be present at least once");
  }

  Rng rng(seed);
  FoldPlan plan;
  plan.k = k;
  plan.assignments.assign(labels.size(), 0);
  std::size_t cursor = 0;  // rolls across classes so fold sizes stay within 1
  for (auto& ids : by_class) {
    rng.shuffle(ids);
    for (const std::size_t id : ids) {
      plan.assignments[id] = cursor % k;
      ++cursor;
    }
  }
  return plan;
}

FoldPlan stratified_k_fold(const LabeledCorpus& corpus, std::size_t k, std::uint64_t seed) {
  std::vector<int> labels;
  labels.reserve(corpus.size());
  for (const auto& doc : corpus.documents) labels.push_back(doc.label);
  return stratified_k_fold(labels, k, seed);
}

}  // namespace obfudet
