#pragma once

#include <json.hpp>

#include "nichols/cocycle.hpp"
#include "nichols/dynkin.hpp"
#include "nichols/group.hpp"
#include "nichols/oracle.hpp"
#include "nichols/ydmodule.hpp"

namespace nichols {

using Json = nlohmann::ordered_json;

// malformed or inconsistent descriptors raise this; the CLI maps it to exit 2
struct DescriptorError : std::runtime_error {
    explicit DescriptorError(const std::string& what) : std::runtime_error(what) {}
};

Phase phase_from_json(const Json& j);
Json phase_to_json(const Phase& p);

FinAbGroup group_from_json(const Json& j);
Json group_to_json(const FinAbGroup& g);

GroupElement element_from_json(const FinAbGroup& g, const Json& j);
Json element_to_json(const GroupElement& e);

CocyclePtr cocycle_from_json(const Json& j);
Json cocycle_to_json(const CocycleEval& phi);

Cochain2 cochain_from_json(const Json& j);
Json cochain_to_json(const Cochain2& c);

YDModule module_from_json(const Json& j);
Json module_to_json(const YDModule& v);

Json report_to_json(const FiniteTypeReport& report, const FinAbGroup& g);

}  // namespace nichols
