#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "t8n/characters.hpp"
#include "t8n/cyclotomic.hpp"
#include "t8n/group.hpp"

namespace t8n {

struct spectrum_entry {
    double value = 0.0;
    long long int_value = 0;  // meaningful when integral
    bool integral = false;
    int multiplicity = 0;
};

/// Adjacency spectrum as a multiset of eigenvalues.  Entries are sorted
/// descending; multiplicities of a spectrum over T_{8n} sum to 8n.  Exact
/// spectra carry integer eigenvalues, inexact ones carry floating values
/// from quadratic roots (or from the numeric eigensolver).
struct spectrum {
    std::vector<spectrum_entry> entries;
    bool exact = true;

    int total_multiplicity() const;
};

spectrum make_exact_spectrum(std::vector<std::pair<long long, int>> pairs);
spectrum make_float_spectrum(const std::vector<double>& values, double merge_tol = 1e-9);

bool spectra_equal_exact(const spectrum& a, const spectrum& b);
/// Multiset comparison after expanding multiplicities, within tol.
bool spectra_match(const spectrum& a, const spectrum& b, double tol);
std::vector<double> expanded_values(const spectrum& s);  // descending

std::string to_string(const spectrum& s);

bool is_perfect_square(const bigint& m);

/// Per-character eigenvalue groups from the power-sum equations: a linear
/// character chi_j contributes chi_j(S) once; a degree-2 character with
/// p = chi(S) and q = chi(S^2) contributes the two roots of
/// x^2 - p x + (p^2 - q)/2, each with multiplicity 2.
struct character_eigenvalues {
    character_id id;
    bool exact = false;
    std::vector<long long> int_roots;  // when exact
    std::vector<double> roots;         // always set
    int multiplicity_each = 1;         // 1 for linear, 2 for degree 2
};

std::vector<character_eigenvalues> spectrum_by_character(const character_table& tbl,
                                                         const connection_set& s);

/// Requires symmetric S (undirected graphs only).
spectrum compute_spectrum(const character_table& tbl, const connection_set& s);

/// Eigenvalues of the circulant graph Cay(Z_m, exponents):
/// lambda_k = sum over s of zeta_m^(ks), k = 0..m-1.
spectrum circulant_spectrum(int m, const std::vector<int>& exponents);

struct discriminant_entry {
    std::optional<bigint> value;
    std::string obstruction;  // set when a required character sum is not an integer
};

struct discriminants {
    std::vector<discriminant_entry> phi;  // index k-1, k = 1..n-1
    std::vector<discriminant_entry> psi;  // index h-1
};

/// Delta_phi(k) = 2(phi_k(S1^2) + phi_k(S2^2)) - phi_k(S1)^2, and likewise
/// for psi; defined when the involved sums are rational integers.
discriminants compute_discriminants(const character_table& tbl, const connection_set& s);

enum class check_method { theorem3, theorem4, theorem5, oracle };
std::string to_string(check_method m);

struct verdict_failure {
    std::string condition;
    std::string witness;  // character name, or offending element for theorem5
};

struct integrality_verdict {
    check_method method = check_method::theorem3;
    bool applicable = true;
    bool integral = false;
    std::string reason;  // set when not applicable
    std::vector<verdict_failure> failures;
};

/// Character-sum criterion; applicable to every symmetric identity-free S.
integrality_verdict check_integral_theorem3(const character_table& tbl, const connection_set& s);

/// Boolean-algebra criterion; requires S1 within <a^2> and S2 within
/// <a>b u <a>b^3 (otherwise not applicable).
integrality_verdict check_integral_theorem4(const character_table& tbl, const connection_set& s);

/// Power-closure criterion for normal S (union of conjugacy classes);
/// not applicable otherwise.  The structural route (generator-class atoms
/// plus the parity menu for S2) is verified against is_power_closed.
integrality_verdict check_integral_theorem5(const character_table& tbl, const connection_set& s);

struct enumeration_result {
    std::vector<connection_set> sets;
    bool truncated = false;
};

/// All symmetric normal power-closed connection sets over T_{8n}: unions of
/// generator-class atoms [a^r], [a^r b^2] combined with the parity menu for
/// the b/b^3 part, restricted to unions of conjugacy classes.  Deterministic
/// order (by size, then lexicographic); truncated at `limit`.
enumeration_result enumerate_integral_normal(int n, std::size_t limit);

}  // namespace t8n
