#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "fracwave/harness.hpp"

namespace fracwave {

/// `N,l2_error,l2_order,linf_error,linf_order`; floats as %.5e, orders empty
/// where undefined.
std::string convergence_csv(const std::vector<ConvergenceRow>& rows);

/// `t,mass,energy,l2,linf`
std::string diagnostics_csv(const Diagnostics& diagnostics);

/// `x,u`
std::string snapshot_csv(const Snapshot& snapshot);

/// `<experiment>_t<time>_N<nodes>.csv`, time printed with %g.
std::string snapshot_filename(std::string_view experiment, double t, int nodes);

/// Writes to a sibling temporary file, then renames over `path`.
void write_atomic(const std::filesystem::path& path, std::string_view contents);

nlohmann::json to_json(const ModelParams& params);
nlohmann::json to_json(const ExperimentSpec& spec);
nlohmann::json to_json(const ConvergenceRow& row);

/// Build identifier recorded in manifests.
std::string_view build_describe();

}  // namespace fracwave
