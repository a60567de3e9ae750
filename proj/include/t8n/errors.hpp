#pragma once

#include <stdexcept>
#include <string>

namespace t8n {

// Thrown when a decision procedure is asked about a set whose shape it does
// not cover (distinct from a negative verdict).
class not_applicable : public std::runtime_error {
public:
    explicit not_applicable(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace t8n
