#pragma once

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace interlim {

struct Estimate {
    std::string label;
    double value = 0.0;
    double stderr_ = 0.0;
};

// Machine-readable experiment outcome.
struct Report {
    std::string name;
    nlohmann::json params = nlohmann::json::object();
    std::uint64_t seed = 0;
    std::vector<Estimate> estimates;
    bool pass = true;
    nlohmann::json threshold = nlohmann::json::object();
    nlohmann::json details = nlohmann::json::object();

    void add(std::string label, double value, double se = 0.0) { estimates.push_back({std::move(label), value, se}); }

    const Estimate* find(const std::string& label) const {
        for (auto& e : estimates)
            if (e.label == label) return &e;
        return nullptr;
    }

    nlohmann::json to_json() const {
        nlohmann::json j;
        j["name"] = name;
        j["params"] = params;
        j["seed"] = seed;
        j["estimates"] = nlohmann::json::array();
        for (auto& e : estimates) j["estimates"].push_back({{"label", e.label}, {"value", e.value}, {"stderr", e.stderr_}});
        j["pass"] = pass;
        j["threshold"] = threshold;
        if (!details.empty()) j["details"] = details;
        return j;
    }
};

}  // namespace interlim
