#pragma once

#include <string>

#include "json.hpp"

#include "idealproj/escalier.hpp"
#include "idealproj/finite_difference.hpp"
#include "idealproj/problem.hpp"
#include "idealproj/projector.hpp"

namespace idealproj {

// Problem schema:
//   {
//     "dimension": 2,
//     "sites": [
//       { "point": ["0", "0"], "delta": [[0,0], [0,1], [1,0]] },
//       ...
//     ]
//   }
// Points are arrays of rational strings, derivative orders arrays of
// nonnegative integers. Unknown or missing keys and type mismatches raise
// ValidationError naming the offending path, e.g. "sites[1].point[0]".
Problem problem_from_json(const nlohmann::json& j);

// Reads and validates a problem file. File and JSON syntax errors are
// reported as ValidationError naming the file.
Problem load_problem(const std::string& path);

nlohmann::json problem_to_json(const Problem& problem);

nlohmann::json escalier_to_json(const Escalier& escalier);
nlohmann::json interpolant_to_json(const Interpolant& interpolant);
nlohmann::json border_to_json(const BorderBasis& border);
nlohmann::json table_to_json(const ConvergenceTable& table);
nlohmann::json report_to_json(const DifferenceReport& report);

// Wrapper all CLI JSON output goes through: {"command": ..., "result": ...}.
nlohmann::json envelope(const std::string& command, nlohmann::json result);

}  // namespace idealproj
