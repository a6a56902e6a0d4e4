#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace idealproj {

// Everything a single invocation needs; filled by run_cli from argv.
struct RunConfig {
    std::string subcommand;
    std::string problem_path;
    std::string function_text;   // interpolate, converge
    std::string perturb;         // single step h, empty = derivative conditions
    std::string h_list;          // converge: comma-separated rationals
    std::string tree_format = "ascii";
    bool json = false;
    std::uint64_t seed = 20260816;
    std::size_t trials = 200;
};

// Executes one subcommand. Returns the process exit status; all failures
// print "error: ..." with the offending input location to err and return
// nonzero. Output is byte-identical for identical config.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// argv front end: parses flags into a RunConfig and dispatches to run.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace idealproj
