// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tauplus/integer.hpp"
#include "tauplus/modular_adder.hpp"

namespace tauplus::cli {

// Flat JSON object whose values are unbounded integers, written as bare integer literals.
std::string to_json(const std::vector<std::pair<std::string, Int>>& fields);

std::string residue_json(const ResidueVector& rv);

// Reads {"q":..,"x1":..,"x2":..,"x3":..}. Values may be integer literals of any size or
// decimal strings. Throws std::invalid_argument on malformed input.
ResidueVector parse_residue_json(const std::string& text);

}  // namespace tauplus::cli
