#pragma once

#include <json.hpp>

#include "sqheat/cycles.hpp"

namespace sqheat {

// Field names (stable):
//   kind, config{tau_cold, tau_hot, r_work},
//   strokes[{label, state_in{n_th, r, theta}, state_out{...}, work_on, heat_in}],
//   w_net_extracted, q_hot_in, q_cold_out, efficiency,
//   classicality_trace{stroke[], r[], n_th[], classicality[]}  (parallel arrays),
//   region
[[nodiscard]] nlohmann::json to_json(const CycleReport& report);

[[nodiscard]] nlohmann::json to_json(const SqueezedThermalState& state);

}  // namespace sqheat
