#ifndef GRASP_JSON_UTIL_HPP_
#define GRASP_JSON_UTIL_HPP_

#include <string>
#include <vector>

#include <json.hpp>

namespace grasp
{

/// Rejects unknown keys and enforces required ones. Every config loader in
/// the project goes through this so schema drift fails loudly.
void check_keys(const nlohmann::json& j, const std::vector<std::string>& required,
                const std::vector<std::string>& optional, const std::string& context);

}  // namespace grasp

#endif  // GRASP_JSON_UTIL_HPP_
