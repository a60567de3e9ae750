#include "t8n/families.hpp"

#include <stdexcept>

namespace t8n {

const std::vector<integral_family>& builtin_integral_families() {
    static const std::vector<integral_family> families{
        {"7n-1", "<a^2>\\{e} u <a>b^2 u <a>b u <a>b^3",
         "cyclic(2,0) - identity + coset(2) + coset(1) + coset(3)"},
        {"5n-1", "<a^2>\\{e} u <a>b u <a>b^3",
         "cyclic(2,0) - identity + coset(1) + coset(3)"},
        {"4n+2", "[b^2] u <a>b u <a>b^3 (normal)",
         "genclass(0,2) + coset(1) + coset(3)"},
    };
    return families;
}

spectrum family_spectrum(const integral_family& fam, int n) {
    if (n < 1) throw std::invalid_argument("family parameter n must be >= 1");
    const long long ln = n;
    if (fam.name == "7n-1")
        return make_exact_spectrum(
            {{7 * ln - 1, 1}, {-ln - 1, 3}, {ln - 1, 4}, {-1, 8 * (n - 1)}});
    if (fam.name == "5n-1")
        return make_exact_spectrum(
            {{5 * ln - 1, 1}, {-3 * ln - 1, 1}, {ln - 1, 6}, {-1, 8 * (n - 1)}});
    if (fam.name == "4n+2")
        return make_exact_spectrum(
            {{4 * ln + 2, 1}, {-4 * ln + 2, 1}, {2, 2 * n - 2}, {-2, 2 * n}, {0, 4 * n}});
    throw std::invalid_argument("unknown family: " + fam.name);
}

}  // namespace t8n
