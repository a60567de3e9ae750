#pragma once

#include <string>
#include <vector>

#include "t8n/spectrum.hpp"

namespace t8n {

/// A one-parameter family of connected integral Cayley graphs over T_{8n}
/// with a closed-form spectrum, named by its degree.
struct integral_family {
    std::string name;         // "7n-1", "5n-1", "4n+2"
    std::string description;
    std::string expression;   // set-language expression, valid for every n >= 1
};

const std::vector<integral_family>& builtin_integral_families();

/// The family's closed-form spectrum at parameter n.
spectrum family_spectrum(const integral_family& fam, int n);

}  // namespace t8n
