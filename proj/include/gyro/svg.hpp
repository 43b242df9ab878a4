#pragma once

#include <string>

#include "gyro/scene.hpp"

namespace gyro {

/// Renders a resolved scene: the boundary circle (500 px radius), every
/// figure side and declared gyroline as a path, transversals highlighted,
/// labeled point markers and side/transversal intersection markers.
/// Output is a pure function of the model.
std::string render_svg(const scene::Model& model);

}  // namespace gyro
