#include "topicmetrics/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <unordered_set>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "topicmetrics/error.hpp"
#include "topicmetrics/io.hpp"

namespace topicmetrics {

using nlohmann::json;

std::optional<std::size_t> Vocabulary::find(const std::string& term) const {
  auto it = index.find(term);
  if (it == index.end()) return std::nullopt;
  return it->second;
}

Vocabulary build_vocabulary(const std::vector<Document>& documents) {
  std::map<std::string, std::size_t> df;
  for (const auto& doc : documents) {
    std::set<std::string_view> seen(doc.tokens.begin(), doc.tokens.end());
    for (auto t : seen) ++df[std::string(t)];
  }
  Vocabulary vocab;
  vocab.terms.reserve(df.size());
  vocab.doc_freq.reserve(df.size());
  for (auto& [term, count] : df) {
    vocab.index.emplace(term, vocab.terms.size());
    vocab.terms.push_back(term);
    vocab.doc_freq.push_back(count);
  }
  return vocab;
}

CorpusFormat format_for_path(const std::filesystem::path& path) {
  auto ext = path.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return std::tolower(c); });
  return ext == ".csv" ? CorpusFormat::csv : CorpusFormat::jsonl;
}

namespace {

int parse_stance_value(double v, std::size_t line) {
  if (v != 0.0 && v != 1.0) throw DataError(fmt::format("stance out of range at line {}", line));
  return static_cast<int>(v);
}

double check_sentiment(double v, std::size_t line) {
  if (!std::isfinite(v) || v < -1.0 || v > 1.0) {
    throw DataError(fmt::format("sentiment out of range at line {}", line));
  }
  return v;
}

Document document_from_json(const json& obj, std::size_t line, std::size_t ordinal, bool& has_tokens) {
  if (!obj.is_object()) throw DataError(fmt::format("malformed record at line {}", line));
  Document doc;
  auto text_it = obj.find("text");
  if (text_it == obj.end() || !text_it->is_string()) {
    throw DataError(fmt::format("missing text field at line {}", line));
  }
  doc.raw_text = text_it->get<std::string>();
  if (auto it = obj.find("id"); it != obj.end() && !it->is_null()) {
    if (it->is_string()) {
      doc.id = it->get<std::string>();
    } else if (it->is_number_integer()) {
      doc.id = std::to_string(it->get<long long>());
    } else {
      throw DataError(fmt::format("malformed id at line {}", line));
    }
  } else {
    doc.id = std::to_string(ordinal);
  }
  if (auto it = obj.find("stance"); it != obj.end() && !it->is_null()) {
    if (!it->is_number()) throw DataError(fmt::format("stance out of range at line {}", line));
    doc.stance = parse_stance_value(it->get<double>(), line);
  }
  if (auto it = obj.find("sentiment"); it != obj.end() && !it->is_null()) {
    if (!it->is_number()) throw DataError(fmt::format("sentiment out of range at line {}", line));
    doc.sentiment = check_sentiment(it->get<double>(), line);
  }
  if (auto it = obj.find("tokens"); it != obj.end()) {
    if (!it->is_array()) throw DataError(fmt::format("malformed tokens at line {}", line));
    for (const auto& t : *it) {
      if (!t.is_string()) throw DataError(fmt::format("malformed tokens at line {}", line));
      doc.tokens.push_back(t.get<std::string>());
    }
    has_tokens = true;
  }
  return doc;
}

Corpus parse_jsonl(const std::string& content) {
  Corpus corpus;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  bool first_record = true;
  std::size_t with_tokens = 0;
  while (pos <= content.size()) {
    auto nl = content.find('\n', pos);
    if (nl == std::string::npos) nl = content.size();
    std::string_view line(content.data() + pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.find_first_not_of(" \t") == std::string_view::npos) {
      if (nl == content.size()) break;
      continue;
    }
    json obj;
    try {
      obj = json::parse(line);
    } catch (const json::parse_error&) {
      throw DataError(fmt::format("malformed record at line {}", line_no));
    }
    if (first_record && obj.is_object() && obj.contains("_config")) {
      first_record = false;
      continue;
    }
    first_record = false;
    bool has_tokens = false;
    corpus.documents.push_back(document_from_json(obj, line_no, corpus.documents.size(), has_tokens));
    if (has_tokens) ++with_tokens;
    if (nl == content.size()) break;
  }
  corpus.preprocessed = !corpus.documents.empty() && with_tokens == corpus.documents.size();
  return corpus;
}

// RFC 4180 records; quoted fields may contain separators, quotes ("") and newlines.
struct CsvRecord {
  std::vector<std::string> fields;
  std::size_t line = 0;
};

std::vector<CsvRecord> read_csv(const std::string& content) {
  std::vector<CsvRecord> records;
  std::size_t i = 0;
  std::size_t line = 1;
  const std::size_t n = content.size();
  while (i < n) {
    CsvRecord rec;
    rec.line = line;
    std::string field;
    bool in_quotes = false;
    bool field_quoted = false;
    bool done = false;
    while (!done) {
      if (i >= n) {
        if (in_quotes) throw DataError(fmt::format("unterminated quoted field at line {}", rec.line));
        rec.fields.push_back(std::move(field));
        break;
      }
      const char c = content[i];
      if (in_quotes) {
        if (c == '"') {
          if (i + 1 < n && content[i + 1] == '"') {
            field.push_back('"');
            i += 2;
          } else {
            in_quotes = false;
            ++i;
          }
        } else {
          if (c == '\n') ++line;
          field.push_back(c);
          ++i;
        }
        continue;
      }
      switch (c) {
        case '"':
          if (!field.empty() || field_quoted) {
            throw DataError(fmt::format("malformed record at line {}", rec.line));
          }
          in_quotes = true;
          field_quoted = true;
          ++i;
          break;
        case ',':
          rec.fields.push_back(std::move(field));
          field.clear();
          field_quoted = false;
          ++i;
          break;
        case '\r':
          ++i;
          break;
        case '\n':
          rec.fields.push_back(std::move(field));
          ++i;
          ++line;
          done = true;
          break;
        default:
          if (field_quoted) throw DataError(fmt::format("malformed record at line {}", rec.line));
          field.push_back(c);
          ++i;
      }
    }
    const bool blank = rec.fields.size() == 1 && rec.fields[0].empty();
    if (!blank) records.push_back(std::move(rec));
  }
  return records;
}

double parse_number(const std::string& cell, std::size_t line, const char* what) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(cell, &used);
  } catch (const std::exception&) {
    throw DataError(fmt::format("malformed {} at line {}", what, line));
  }
  if (cell.find_first_not_of(" \t", used) != std::string::npos) {
    throw DataError(fmt::format("malformed {} at line {}", what, line));
  }
  return v;
}

Corpus parse_csv(const std::string& content) {
  auto records = read_csv(content);
  if (records.empty()) throw DataError("csv corpus has no header row");
  std::map<std::string, std::size_t> col;
  for (std::size_t i = 0; i < records[0].fields.size(); ++i) col[records[0].fields[i]] = i;
  if (!col.contains("text")) throw DataError("csv header lacks a text column");
  auto cell = [&](const CsvRecord& r, const char* name) -> std::optional<std::string> {
    auto it = col.find(name);
    if (it == col.end() || it->second >= r.fields.size()) return std::nullopt;
    if (r.fields[it->second].empty()) return std::nullopt;
    return r.fields[it->second];
  };
  Corpus corpus;
  for (std::size_t k = 1; k < records.size(); ++k) {
    const auto& r = records[k];
    if (r.fields.size() != records[0].fields.size()) {
      throw DataError(fmt::format("malformed record at line {}", r.line));
    }
    Document doc;
    auto text_col = col.at("text");
    doc.raw_text = r.fields[text_col];
    doc.id = cell(r, "id").value_or(std::to_string(corpus.documents.size()));
    if (auto s = cell(r, "stance")) doc.stance = parse_stance_value(parse_number(*s, r.line, "stance"), r.line);
    if (auto s = cell(r, "sentiment")) doc.sentiment = check_sentiment(parse_number(*s, r.line, "sentiment"), r.line);
    corpus.documents.push_back(std::move(doc));
  }
  return corpus;
}

void check_unique_ids(const Corpus& corpus) {
  std::unordered_set<std::string_view> ids;
  for (const auto& d : corpus.documents) {
    if (!ids.insert(d.id).second) throw DataError("duplicate document id '" + d.id + "'");
  }
}

}  // namespace

Corpus parse_corpus(const std::string& content, CorpusFormat format) {
  Corpus corpus = format == CorpusFormat::csv ? parse_csv(content) : parse_jsonl(content);
  check_unique_ids(corpus);
  if (corpus.preprocessed) corpus.vocabulary = build_vocabulary(corpus.documents);
  return corpus;
}

Corpus load_corpus(const std::filesystem::path& path, CorpusFormat format) {
  return parse_corpus(io::read_file(path), format);
}

Corpus preprocess_corpus(Corpus corpus, const PreprocessOptions& options) {
  for (auto& doc : corpus.documents) doc.tokens = preprocess_text(doc.raw_text, options);
  corpus.vocabulary = build_vocabulary(corpus.documents);
  corpus.preprocessed = true;
  return corpus;
}

std::string serialize_corpus_jsonl(const Corpus& corpus, const std::string& header_json) {
  std::string out;
  if (!header_json.empty()) {
    json header;
    header["_config"] = json::parse(header_json);
    out += header.dump();
    out += '\n';
  }
  for (const auto& doc : corpus.documents) {
    json obj;
    obj["id"] = doc.id;
    obj["text"] = doc.raw_text;
    if (doc.stance) obj["stance"] = *doc.stance;
    if (doc.sentiment) obj["sentiment"] = *doc.sentiment;
    obj["tokens"] = doc.tokens;
    out += obj.dump();
    out += '\n';
  }
  return out;
}

DocTermMatrix DocTermMatrix::from_dense(const std::vector<std::vector<double>>& rows,
                                        Weighting weighting, std::vector<std::string> terms) {
  const std::size_t n = rows.size();
  const std::size_t m = n == 0 ? terms.size() : rows[0].size();
  if (terms.empty()) {
    for (std::size_t j = 0; j < m; ++j) terms.push_back("t" + std::to_string(j));
  }
  if (terms.size() != m) throw PreconditionError("term count does not match column count");
  DocTermMatrix dtm;
  dtm.weighting = weighting;
  std::vector<Eigen::Triplet<double>> triplets;
  dtm.vocabulary.doc_freq.assign(m, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != m) throw PreconditionError("ragged dense matrix");
    for (std::size_t j = 0; j < m; ++j) {
      if (rows[i][j] != 0.0) {
        triplets.emplace_back(static_cast<int>(i), static_cast<int>(j), rows[i][j]);
        ++dtm.vocabulary.doc_freq[j];
      }
    }
  }
  for (std::size_t j = 0; j < m; ++j) dtm.vocabulary.index.emplace(terms[j], j);
  dtm.vocabulary.terms = std::move(terms);
  dtm.values.resize(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(m));
  dtm.values.setFromTriplets(triplets.begin(), triplets.end());
  dtm.values.makeCompressed();
  return dtm;
}

DocTermMatrix build_doc_term_matrix(const Corpus& corpus, Weighting weighting, std::size_t min_df) {
  if (min_df < 1) throw PreconditionError("min_df must be at least 1");
  if (!corpus.preprocessed) throw PreconditionError("corpus must be preprocessed before building a matrix");
  const auto& full = corpus.vocabulary;

  DocTermMatrix dtm;
  dtm.weighting = weighting;
  std::vector<std::size_t> remap(full.size(), static_cast<std::size_t>(-1));
  for (std::size_t j = 0; j < full.size(); ++j) {
    if (full.doc_freq[j] < min_df) continue;
    remap[j] = dtm.vocabulary.terms.size();
    dtm.vocabulary.index.emplace(full.terms[j], remap[j]);
    dtm.vocabulary.terms.push_back(full.terms[j]);
    dtm.vocabulary.doc_freq.push_back(full.doc_freq[j]);
  }
  if (dtm.vocabulary.size() == 0) throw DataError("vocabulary is empty after min_df filtering");

  const auto n_docs = static_cast<double>(corpus.size());
  std::vector<Eigen::Triplet<double>> triplets;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    std::map<std::size_t, double> counts;
    for (const auto& tok : corpus.documents[i].tokens) {
      auto j = full.find(tok);
      if (!j || remap[*j] == static_cast<std::size_t>(-1)) continue;
      counts[remap[*j]] += 1.0;
    }
    if (weighting == Weighting::tfidf) {
      double norm2 = 0.0;
      for (auto& [j, v] : counts) {
        const double df = static_cast<double>(dtm.vocabulary.doc_freq[j]);
        v *= 1.0 + std::log((1.0 + n_docs) / (1.0 + df));
        norm2 += v * v;
      }
      const double norm = std::sqrt(norm2);
      if (norm > 0.0) {
        for (auto& [j, v] : counts) v /= norm;
      }
    }
    for (auto& [j, v] : counts) triplets.emplace_back(static_cast<int>(i), static_cast<int>(j), v);
  }
  dtm.values.resize(static_cast<Eigen::Index>(corpus.size()),
                    static_cast<Eigen::Index>(dtm.vocabulary.size()));
  dtm.values.setFromTriplets(triplets.begin(), triplets.end());
  dtm.values.makeCompressed();
  return dtm;
}

CorpusStats corpus_stats(const Corpus& corpus) {
  if (corpus.documents.empty()) throw PreconditionError("corpus is empty");
  std::size_t total = 0;
  for (const auto& d : corpus.documents) total += d.tokens.size();
  return {corpus.size(), static_cast<double>(total) / static_cast<double>(corpus.size())};
}

}  // namespace topicmetrics
