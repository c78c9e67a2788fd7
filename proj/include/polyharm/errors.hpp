#pragma once

#include <stdexcept>
#include <string>

namespace polyharm {

// Resource limit hit: ball vertex budget, basis size budget, exact solver cap.
class budget_error : public std::runtime_error {
public:
    explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

// Input rejected by validation (bad group data, malformed generating set, bad file).
class validation_error : public std::invalid_argument {
public:
    explicit validation_error(const std::string& what) : std::invalid_argument(what) {}
};

// An exactness invariant failed. This signals a broken internal assumption,
// not bad user input.
class consistency_error : public std::logic_error {
public:
    explicit consistency_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace polyharm
