#pragma once

#include <stdexcept>
#include <string>

namespace arborize {

// Malformed or out-of-contract input (bad JSON, loops, bad degree bounds).
class input_error : public std::invalid_argument {
public:
    explicit input_error(const std::string& what) : std::invalid_argument(what) {}
};

// Instance exceeds an enumeration/search budget; the caller may retry smaller.
class budget_error : public std::runtime_error {
public:
    explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace arborize
