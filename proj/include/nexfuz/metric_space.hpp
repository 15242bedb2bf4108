#ifndef NEXFUZ_METRIC_SPACE_HPP
#define NEXFUZ_METRIC_SPACE_HPP

#include "nexfuz/rational.hpp"

#include <json.hpp>

#include <cstddef>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

namespace nexfuz {

/// Finite label space with an explicit rational distance matrix.
class MetricSpace {
 public:
  MetricSpace() = default;

  /// Validates the metric axioms; throws ParseError on any violation.
  MetricSpace(std::vector<std::string> labels, std::vector<std::vector<Rational>> dist)
      : labels_(std::move(labels)), dist_(std::move(dist)) {
    validate();
  }

  static MetricSpace from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("labels") || !j.contains("dist")) {
      throw ParseError("metric space JSON needs \"labels\" and \"dist\"");
    }
    std::vector<std::string> labels;
    for (const auto& l : j["labels"]) {
      if (!l.is_string()) throw ParseError("metric labels must be strings");
      labels.push_back(l.get<std::string>());
    }
    std::vector<std::vector<Rational>> dist;
    for (const auto& row : j["dist"]) {
      std::vector<Rational> r;
      for (const auto& entry : row) {
        if (!entry.is_string()) throw ParseError("metric distances must be rational strings");
        r.push_back(Rational::parse(entry.get<std::string>()));
      }
      dist.push_back(std::move(r));
    }
    return MetricSpace(std::move(labels), std::move(dist));
  }

  static MetricSpace load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open metric space file '" + path + "'");
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw ParseError("metric space file '" + path + "': " + e.what());
    }
    return from_json(j);
  }

  nlohmann::json to_json() const {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : dist_) {
      nlohmann::json r = nlohmann::json::array();
      for (const auto& d : row) r.push_back(d.str());
      rows.push_back(r);
    }
    return {{"labels", labels_}, {"dist", rows}};
  }

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  const Rational& distance(std::size_t a, std::size_t b) const { return dist_.at(a).at(b); }

  std::optional<std::size_t> index_of(const std::string& label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      if (labels_[i] == label) return i;
    }
    return std::nullopt;
  }

  std::size_t require(const std::string& label) const {
    auto i = index_of(label);
    if (!i) throw ParseError("unknown metric label '" + label + "'");
    return *i;
  }

  friend bool operator==(const MetricSpace& a, const MetricSpace& b) {
    return a.labels_ == b.labels_ && a.dist_ == b.dist_;
  }

 private:
  void validate() const {
    const std::size_t n = labels_.size();
    if (n == 0) throw ParseError("metric space needs at least one label");
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (labels_[i] == labels_[j]) throw ParseError("duplicate metric label '" + labels_[i] + "'");
      }
    }
    if (dist_.size() != n) throw ParseError("distance matrix must be " + std::to_string(n) + "x" + std::to_string(n));
    for (const auto& row : dist_) {
      if (row.size() != n) throw ParseError("distance matrix must be square");
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (!dist_[i][i].is_zero()) throw ParseError("d(" + labels_[i] + "," + labels_[i] + ") must be 0");
      for (std::size_t j = 0; j < n; ++j) {
        if (dist_[i][j].sign() < 0) throw ParseError("negative distance");
        if (dist_[i][j] != dist_[j][i]) throw ParseError("distance matrix is not symmetric");
        if (i != j && dist_[i][j].is_zero()) {
          throw ParseError("distinct labels " + labels_[i] + " and " + labels_[j] + " at distance 0");
        }
        for (std::size_t k = 0; k < n; ++k) {
          if (dist_[i][k] > dist_[i][j] + dist_[j][k]) throw ParseError("triangle inequality violated");
        }
      }
    }
  }

  std::vector<std::string> labels_;
  std::vector<std::vector<Rational>> dist_;
};

}  // namespace nexfuz

#endif  // NEXFUZ_METRIC_SPACE_HPP
