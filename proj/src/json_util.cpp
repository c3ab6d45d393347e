#include "grasp/json_util.hpp"

#include <algorithm>
#include <stdexcept>

namespace grasp
{

void check_keys(const nlohmann::json& j, const std::vector<std::string>& required,
                const std::vector<std::string>& optional, const std::string& context)
{
  if (!j.is_object()) {
    throw std::invalid_argument(context + ": expected a JSON object");
  }
  for (const std::string& key : required) {
    if (!j.contains(key)) {
      throw std::invalid_argument(context + ": missing required key '" + key + "'");
    }
  }
  for (const auto& item : j.items()) {
    const std::string& key = item.key();
    const bool known = std::find(required.begin(), required.end(), key) != required.end() ||
                       std::find(optional.begin(), optional.end(), key) != optional.end();
    if (!known) {
      throw std::invalid_argument(context + ": unknown key '" + key + "'");
    }
  }
}

}  // namespace grasp
