#include <nlohmann/json.hpp>

#include "topicmetrics/error.hpp"
#include "topicmetrics/io.hpp"
#include "topicmetrics/topics.hpp"

namespace topicmetrics {

using nlohmann::json;

namespace {

json rows_to_json(const Dense& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

Dense rows_from_json(const json& rows, Eigen::Index expected_cols, const char* what) {
  if (!rows.is_array()) throw DataError(std::string("model field ") + what + " is not an array");
  Dense m(static_cast<Eigen::Index>(rows.size()), expected_cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& row = rows[i];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != expected_cols) {
      throw DataError(std::string("model field ") + what + " has a malformed row");
    }
    for (std::size_t j = 0; j < row.size(); ++j) {
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = row[j].get<double>();
    }
  }
  return m;
}

}  // namespace

// nlohmann/json prints doubles in shortest round-trip form, so values read
// back are bit-identical to the ones written.
std::string serialize_model(const TopicModelResult& r, const std::string& config_json) {
  json doc;
  if (!config_json.empty()) doc["config"] = json::parse(config_json);
  doc["model_kind"] = std::string(to_string(r.kind));
  doc["K"] = r.k;
  doc["seed"] = r.seed;
  doc["vocabulary"] = r.terms;
  doc["topic_term"] = rows_to_json(r.topic_term);
  doc["doc_topic"] = rows_to_json(r.doc_topic);
  doc["assignments"] = r.assignments;
  return doc.dump() + "\n";
}

TopicModelResult parse_model(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw DataError(std::string("model file is not valid JSON: ") + e.what());
  }
  try {
    TopicModelResult r;
    r.kind = parse_model_kind(doc.at("model_kind").get<std::string>());
    r.k = doc.at("K").get<std::size_t>();
    r.seed = doc.at("seed").get<std::uint64_t>();
    r.terms = doc.at("vocabulary").get<std::vector<std::string>>();
    r.topic_term = rows_from_json(doc.at("topic_term"), static_cast<Eigen::Index>(r.terms.size()), "topic_term");
    r.doc_topic = rows_from_json(doc.at("doc_topic"), static_cast<Eigen::Index>(r.k), "doc_topic");
    r.assignments = doc.at("assignments").get<std::vector<std::size_t>>();
    if (static_cast<std::size_t>(r.topic_term.rows()) != r.k) throw DataError("topic_term row count differs from K");
    if (r.assignments.size() != r.n_docs()) throw DataError("assignments length differs from doc_topic rows");
    for (auto a : r.assignments) {
      if (a >= r.k) throw DataError("assignment out of range");
    }
    return r;
  } catch (const json::exception& e) {
    throw DataError(std::string("malformed model file: ") + e.what());
  }
}

TopicModelResult load_model(const std::filesystem::path& path) { return parse_model(io::read_file(path)); }

}  // namespace topicmetrics
