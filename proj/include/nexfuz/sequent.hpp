#ifndef NEXFUZ_SEQUENT_HPP
#define NEXFUZ_SEQUENT_HPP

#include "nexfuz/formula.hpp"
#include "nexfuz/interval.hpp"
#include "nexfuz/parser.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>

namespace nexfuz {

/// A tableau sequent: at most one interval per label.
///
/// Labels are formulas, one-step formulas, or variables (Formula::var).
/// Inserting a label that is already present intersects the intervals, so a
/// Sequent is always clean and complete; it is exact over its own label set.
/// Empty intervals are kept so that the closing rule can fire explicitly.
class Sequent {
 public:
  using Map = std::map<Formula, Interval>;
  using const_iterator = Map::const_iterator;

  Sequent() = default;
  Sequent(std::initializer_list<std::pair<const Formula, Interval>> lits) {
    for (const auto& [f, i] : lits) insert(f, i);
  }

  Sequent& insert(const Formula& label, const Interval& interval) {
    auto [it, fresh] = literals_.try_emplace(label, interval);
    if (!fresh) it->second = it->second.intersect(interval);
    return *this;
  }

  Sequent with(const Formula& label, const Interval& interval) const {
    Sequent s = *this;
    s.insert(label, interval);
    return s;
  }

  void erase(const Formula& label) { literals_.erase(label); }

  bool contains(const Formula& label) const { return literals_.count(label) != 0; }

  const Interval& at(const Formula& label) const {
    auto it = literals_.find(label);
    if (it == literals_.end()) throw std::out_of_range("label not in sequent: " + label.str());
    return it->second;
  }

  /// Interval for a label, or [0,1] when the label is absent.
  Interval get_or_unit(const Formula& label) const {
    auto it = literals_.find(label);
    return it == literals_.end() ? Interval::unit() : it->second;
  }

  bool has_empty() const {
    for (const auto& [f, i] : literals_) {
      if (i.is_empty()) return true;
    }
    return false;
  }

  std::size_t size() const { return literals_.size(); }
  bool empty() const { return literals_.empty(); }
  const_iterator begin() const { return literals_.begin(); }
  const_iterator end() const { return literals_.end(); }
  const Map& literals() const { return literals_; }

  std::size_t modal_depth() const {
    std::size_t d = 0;
    for (const auto& [f, i] : literals_) d = std::max(d, f.modal_depth());
    return d;
  }

  std::string str() const {
    std::string out = "{";
    bool first = true;
    for (const auto& [f, i] : literals_) {
      if (!first) out += ", ";
      first = false;
      out += f.str() + " in " + i.str();
    }
    return out + "}";
  }

  friend bool operator==(const Sequent& a, const Sequent& b) { return a.literals_ == b.literals_; }
  friend bool operator<(const Sequent& a, const Sequent& b) {
    return std::lexicographical_compare(a.literals_.begin(), a.literals_.end(), b.literals_.begin(),
                                        b.literals_.end(), [](const auto& x, const auto& y) {
                                          if (x.first != y.first) return x.first < y.first;
                                          return interval_less(x.second, y.second);
                                        });
  }

 private:
  static bool interval_less(const Interval& a, const Interval& b) {
    if (a.is_empty() || b.is_empty()) return a.is_empty() && !b.is_empty();
    if (a.lo() != b.lo()) return a.lo() < b.lo();
    if (a.lo_open() != b.lo_open()) return !a.lo_open();
    if (a.hi() != b.hi()) return a.hi() < b.hi();
    return !a.hi_open() && b.hi_open();
  }

  Map literals_;
};

/// True iff sub(l) ⊆ sup(l) for every label; both must have the same label set.
inline bool is_subsequent(const Sequent& sub, const Sequent& sup) {
  if (sub.size() != sup.size()) throw std::invalid_argument("sub-sequent check over different label sets");
  for (auto a = sub.begin(), b = sup.begin(); a != sub.end(); ++a, ++b) {
    if (a->first != b->first) throw std::invalid_argument("sub-sequent check over different label sets");
    if (!a->second.subset_of(b->second)) return false;
  }
  return true;
}

/// Literal size |φ| + len(a1)+len(b1)+len(a2)+len(b2) + 3.
inline std::size_t literal_size(const Formula& f, const Interval& i) { return f.size() + i.endpoint_size() + 3; }

inline std::size_t combined_size(const Sequent& s) {
  std::size_t total = 0;
  for (const auto& [f, i] : s) total += literal_size(f, i);
  return total;
}

inline nlohmann::json sequent_to_json(const Sequent& s) {
  nlohmann::json lits = nlohmann::json::array();
  for (const auto& [f, i] : s) lits.push_back({{"formula", f.str()}, {"interval", i.str()}});
  return {{"literals", lits}};
}

inline Sequent sequent_from_json(const nlohmann::json& j, const ModalityCheck& check = {}) {
  if (!j.is_object() || !j.contains("literals") || !j["literals"].is_array()) {
    throw ParseError("sequent JSON needs a \"literals\" array");
  }
  Sequent s;
  for (const auto& lit : j["literals"]) {
    if (!lit.contains("formula") || !lit.contains("interval") || !lit["formula"].is_string() ||
        !lit["interval"].is_string()) {
      throw ParseError("sequent literal needs string fields \"formula\" and \"interval\"");
    }
    s.insert(parse_formula(lit["formula"].get<std::string>(), check),
             Interval::parse(lit["interval"].get<std::string>()));
  }
  return s;
}

}  // namespace nexfuz

#endif  // NEXFUZ_SEQUENT_HPP
