#include "sqheat/report_json.hpp"

#include <string>

namespace sqheat {

nlohmann::json to_json(const SqueezedThermalState& state) {
  return {{"n_th", state.n_th()}, {"r", state.r()}, {"theta", state.theta()}};
}

nlohmann::json to_json(const CycleReport& report) {
  using nlohmann::json;
  json strokes = json::array();
  for (const StrokeRecord& s : report.strokes) {
    strokes.push_back({{"label", std::string(to_string(s.label))},
                       {"state_in", to_json(s.state_in)},
                       {"state_out", to_json(s.state_out)},
                       {"work_on", s.work_on},
                       {"heat_in", s.heat_in}});
  }

  json stroke_col = json::array();
  json r_col = json::array();
  json n_col = json::array();
  json c_col = json::array();
  for (const TracePoint& p : report.classicality_trace) {
    stroke_col.push_back(std::string(to_string(p.stroke)));
    r_col.push_back(p.r);
    n_col.push_back(p.n_th);
    c_col.push_back(p.classicality);
  }

  return {
      {"kind", std::string(to_string(report.kind))},
      {"config",
       {{"tau_cold", report.config.tau_cold.value()},
        {"tau_hot", report.config.tau_hot.value()},
        {"r_work", report.config.r_work}}},
      {"strokes", std::move(strokes)},
      {"w_net_extracted", report.w_net_extracted},
      {"q_hot_in", report.q_hot_in},
      {"q_cold_out", report.q_cold_out},
      {"efficiency", report.efficiency},
      {"classicality_trace",
       {{"stroke", std::move(stroke_col)},
        {"r", std::move(r_col)},
        {"n_th", std::move(n_col)},
        {"classicality", std::move(c_col)}}},
      {"region", std::string(to_string(report.region))},
  };
}

}  // namespace sqheat
