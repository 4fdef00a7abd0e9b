#include "pwt/report.hpp"

#include <json.hpp>

namespace pwt {

std::string SolveReport::to_json(int indent) const {
    nlohmann::json j;
    j["algorithm"] = algorithm;
    j["reward"] = reward;
    j["mode"] = mode;
    j["alpha"] = alpha ? nlohmann::json(*alpha) : nlohmann::json(nullptr);
    j["delta"] = delta ? nlohmann::json(*delta) : nlohmann::json(nullptr);
    j["bound"] = bound ? nlohmann::json(*bound) : nlohmann::json(nullptr);
    j["seed"] = seed;
    j["objective"] = objective;
    j["total_weight"] = total_weight;
    j["surrogate_weight"] =
        surrogate_weight ? nlohmann::json(*surrogate_weight) : nlohmann::json(nullptr);
    j["items"] = items;
    j["evaluations"] = evaluations;
    j["runtime_ms"] = runtime_ms;
    if (!trajectory.empty()) j["trajectory"] = trajectory;
    if (!sequence.empty()) j["sequence"] = sequence;
    return j.dump(indent);
}

}  // namespace pwt
