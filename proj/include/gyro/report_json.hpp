#pragma once

// JSON encodings shared by the CLI and the Python bindings.
//
//   DiscPoint   [re, im]   (the ball radius lives on the enclosing object as "s")
//   Gyroline    {"kind":"diameter","theta":…} | {"kind":"arc","cx":…,"cy":…,"r":…}
//   Report      {"theorem":"T2|T3|T4|T5","ratios":[…],"product":…,"deviation":…,"intersections":[…]}

#include <json.hpp>

#include "gyro/gyroline.hpp"
#include "gyro/menelaus.hpp"

namespace gyro {

nlohmann::json to_json(const DiscPoint& p);
DiscPoint point_from_json(const nlohmann::json& j, BallParam ball = {});

nlohmann::json to_json(const Gyroline& line);
Gyroline gyroline_from_json(const nlohmann::json& j, BallParam ball = {});

nlohmann::json to_json(const MenelausReport& report);

}  // namespace gyro
