#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "distidx/verify.hpp"

namespace distidx::cli {

// Fixed field order: statement, params, size, optimum, optimizers, expected,
// mode, unique, margin, pass, audit, details. Rationals are "p" or "p/q"
// strings, graphs are graph6 strings.
nlohmann::ordered_json to_json(const CheckReport& report);

// Single-line JSON.
std::string to_json_line(const CheckReport& report);

// Short human-readable summary line.
std::string to_text_line(const CheckReport& report);

}  // namespace distidx::cli
