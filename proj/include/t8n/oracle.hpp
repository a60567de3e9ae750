#pragma once

#include <optional>
#include <vector>

#include "t8n/group.hpp"
#include "t8n/spectrum.hpp"

namespace t8n {

/// 0/1 adjacency matrix of Cay(T_{8n}, S): vertices are the group elements
/// in (j, r) order, entry (x, y) = 1 iff x y^-1 is in S.  Requires
/// symmetric S; the result is |S|-regular with zero diagonal.
class adjacency_matrix {
public:
    explicit adjacency_matrix(const connection_set& s);

    int dim() const noexcept { return dim_; }
    int degree() const noexcept { return degree_; }
    int at(int row, int col) const { return bits_[row * dim_ + col]; }
    const group& grp() const noexcept { return g_; }

private:
    group g_;
    int dim_;
    int degree_;
    std::vector<unsigned char> bits_;
};

/// Monic characteristic polynomial det(xI - A) with exact integer
/// coefficients, stored by descending power (coeffs[0] = 1).
struct charpoly {
    std::vector<bigint> coeffs;

    int degree() const { return (int)coeffs.size() - 1; }
    bigint eval(const bigint& x) const;
};

charpoly char_poly(const adjacency_matrix& a);
/// Same computation on an arbitrary square integer matrix.
charpoly char_poly(const std::vector<std::vector<long long>>& a);

/// Full integer spectrum if p splits into linear factors (x - m) with
/// |m| <= bound; absent when the polynomial does not split over Z.
std::optional<spectrum> integer_spectrum(const charpoly& p, long long bound);

/// All eigenvalues of the real symmetric matrix, descending, by cyclic
/// Jacobi rotations (off-diagonal norm driven below 1e-12; absolute
/// accuracy around 1e-8 at these sizes).
std::vector<double> numeric_eigenvalues(std::vector<std::vector<double>> a);
std::vector<double> numeric_eigenvalues(const adjacency_matrix& a);

/// Exact integer spectrum when the graph is integral, else the numeric
/// spectrum flagged inexact.
spectrum oracle_spectrum(const connection_set& s);

integrality_verdict check_integral_oracle(const connection_set& s);

}  // namespace t8n
