#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

namespace braidforge {

struct CommandOutcome {
  int exit_code = 0;  // 0 success, 1 domain error, 2 input error
  nlohmann::ordered_json payload;
};

// Parses and executes one invocation (argv without the program name).
// Success payloads carry "schema": "braidforge/1" and are written to `out`
// as an aligned table, or as JSON under --json. Errors write a
// machine-readable {"error": {...}} object to `err`; InputError maps to
// exit code 2, DomainError to 1. --help at any level prints usage and
// succeeds. Dispatch is single-threaded; BRAIDFORGE_THREADS caps the
// parallelism of the underlying operations.
CommandOutcome run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);
CommandOutcome run(const std::vector<std::string>& argv);

}  // namespace braidforge
