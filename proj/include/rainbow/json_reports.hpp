#pragma once

#include <json.hpp>

#include "rainbow/constructions.hpp"
#include "rainbow/structure.hpp"
#include "rainbow/suite.hpp"
#include "rainbow/transforms.hpp"

namespace rainbow {

nlohmann::json to_json(const CycleWitness& w);
nlohmann::json to_json(const ReversalProfile& p);
nlohmann::json to_json(const LiReport& r);
nlohmann::json to_json(const NonRainbowBound& r);
nlohmann::json to_json(const ConstructionChecklist& c);
nlohmann::json to_json(const AppendixUnionReport& r);
nlohmann::json to_json(const ExtremalityResult& r);
nlohmann::json to_json(const StructureReport& r);
nlohmann::json to_json(const VerificationSuite& s);
nlohmann::json to_json(const ThresholdReport& r);
nlohmann::json to_json(const ExtremalCycleCountReport& r);

}  // namespace rainbow
