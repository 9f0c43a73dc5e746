#pragma once

#include <json.hpp>

#include "brickwall/joints.hpp"
#include "brickwall/spectral.hpp"
#include "brickwall/stats.hpp"

namespace brickwall {

// {"v_max", "joints": [{"x","y0","y1"}], "crossings": {type: bool}}.
// Random rules report crossings per option as "type[k]"; block rules report
// none.
nlohmann::json joint_report_json(const joint_report& report, const substitution_rule& rule);

nlohmann::json prop2_json(const prop2_verdict& verdict);

// {"pf_eigenvalue", "expected", "frequencies": {type: float},
//  "matrix": [["num/den", ...], ...], "area_identity": bool}
nlohmann::json spectrum_json(const substitution_rule& rule);

// {"p": "num/den" | null, "n", "trials", "min", "max", "mean",
//  "histogram": {value: count}, "base_seed"}
nlohmann::json stats_json(const vmax_stats& stats);

}
