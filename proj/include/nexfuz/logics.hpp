#ifndef NEXFUZ_LOGICS_HPP
#define NEXFUZ_LOGICS_HPP

#include "nexfuz/logic_alc.hpp"
#include "nexfuz/logic_metric.hpp"
#include "nexfuz/logic_prob.hpp"
#include "nexfuz/onestep.hpp"

#include <memory>
#include <string>
#include <vector>

namespace nexfuz {

inline const std::vector<std::string>& logic_names() {
  static const std::vector<std::string> names = {"alc", "lgen", "mp", "metric-fuzzy", "metric-crisp"};
  return names;
}

inline bool needs_space(const std::string& name) { return name == "metric-fuzzy" || name == "metric-crisp"; }

/// The bare instance logic by name (no atoms wrapper).
inline std::shared_ptr<const OneStepLogic> make_instance(const std::string& name,
                                                         std::shared_ptr<const MetricSpace> space = nullptr) {
  if (name == "alc") return std::make_shared<AlcLogic>();
  if (name == "lgen") return std::make_shared<ProbLogic>(ProbVariant::Generally);
  if (name == "mp") return std::make_shared<ProbLogic>(ProbVariant::MoreThan);
  if (needs_space(name)) {
    if (!space) throw ParseError("logic " + name + " needs a metric space (--space)");
    return std::make_shared<MetricLogic>(std::move(space), name == "metric-crisp");
  }
  throw ParseError("unknown logic '" + name + "'");
}

/// The instance logic by name, extended with atoms.
inline std::shared_ptr<const OneStepLogic> make_logic(const std::string& name,
                                                      std::shared_ptr<const MetricSpace> space = nullptr) {
  return with_atoms(make_instance(name, std::move(space)));
}

}  // namespace nexfuz

#endif  // NEXFUZ_LOGICS_HPP
