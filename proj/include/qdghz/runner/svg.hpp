#pragma once

#include <filesystem>
#include <span>
#include <string>

#include "qdghz/runner/simulation.hpp"

namespace qdghz {

/// Self-contained 960x600 line plot of p_ghz against t, one polyline per trajectory.
std::string render_svg(std::span<const Trajectory> trajs, const std::string& title = {});
void emit_svg(const std::filesystem::path& path, std::span<const Trajectory> trajs,
              const std::string& title = {});

}  // namespace qdghz
