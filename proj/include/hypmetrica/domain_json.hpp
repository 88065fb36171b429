#pragma once

#include <string>

#include <json.hpp>

#include "hypmetrica/geometry.hpp"

namespace hm {

DomainSpec domain_spec_from_json(const nlohmann::json& j);
nlohmann::json domain_spec_to_json(const DomainSpec& s);
DomainSpec domain_spec_from_string(const std::string& text);

// named domains used by scenarios, tests and the CLI
DomainSpec named_domain(const std::string& name);

}  // namespace hm
