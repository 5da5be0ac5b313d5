#pragma once

#include <stdexcept>
#include <string>

namespace coxtoric {

// Request outside the supported (type, rank) catalog.
class catalog_error : public std::invalid_argument {
public:
    explicit catalog_error(const std::string& msg) : std::invalid_argument(msg) {}
};

// Enumeration size guard exceeded.
class resource_error : public std::runtime_error {
public:
    explicit resource_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace coxtoric
