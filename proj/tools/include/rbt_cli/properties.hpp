#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "rbt_cli/shapes.hpp"

namespace rbt::cli {

struct PropertyResult {
    std::string name;
    std::string statement;
    double max_residual = 0.0;
    double threshold = 0.0;
    std::size_t cases = 0;
    /// Non-empty if some case threw instead of producing a residual.
    std::string error;
    bool passed() const { return error.empty() && max_residual <= threshold; }
};

struct SuiteOptions {
    std::uint64_t seed = 20240601;
    std::vector<Shape> shapes = default_verify_shapes();
    static std::vector<Shape> default_verify_shapes() { return {{3, 3, 2}, {4, 3, 4}, {3, 5, 3}, {6, 6, 4}}; }
};

/// Names of every property, in execution order.
std::vector<std::string> property_names();

/// Runs every property on every shape. Each property draws its inputs from a
/// generator seeded by (seed, property index, shape index), so one property's
/// outcome does not depend on which others ran.
std::vector<PropertyResult> run_property_suite(const SuiteOptions& opt,
                                               const std::function<void(const PropertyResult&)>& on_result = {});

}  // namespace rbt::cli
