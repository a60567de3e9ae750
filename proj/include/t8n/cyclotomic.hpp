#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <memory>
#include <optional>
#include <vector>

namespace t8n {

using bigint = boost::multiprecision::cpp_int;

/// Shared immutable data for the ring of integers Z[zeta_L] of the L-th
/// cyclotomic field: the cyclotomic polynomial Phi_L and the canonical
/// residues of all powers zeta_L^m.
class cyclotomic_context {
public:
    explicit cyclotomic_context(int conductor);

    int conductor() const noexcept { return conductor_; }
    int degree() const noexcept { return degree_; }  // deg Phi_L = phi(L)
    const std::vector<bigint>& modulus() const noexcept { return modulus_; }  // ascending, monic
    const std::vector<bigint>& power(int m) const { return powers_.at(m); }   // zeta^m, 0 <= m < L

private:
    int conductor_;
    int degree_;
    std::vector<bigint> modulus_;
    std::vector<std::vector<bigint>> powers_;
};

using context_ptr = std::shared_ptr<const cyclotomic_context>;

context_ptr make_context(int conductor);

/// Element of Z[zeta_L] as the canonical residue modulo Phi_L.  Two values
/// are equal iff their conductors and coefficient vectors are equal.
class cyclotomic {
public:
    explicit cyclotomic(context_ptr ctx);  // zero
    cyclotomic(context_ptr ctx, bigint constant);
    cyclotomic(context_ptr ctx, std::vector<bigint> coeffs);  // must have size phi(L)

    const context_ptr& context() const noexcept { return ctx_; }
    const std::vector<bigint>& coeffs() const noexcept { return coeffs_; }

    bool is_zero() const;
    /// The integer m when the canonical form is the constant m, absent
    /// otherwise.  (A value in this ring is a rational integer iff its
    /// residue is constant.)
    std::optional<bigint> as_integer() const;
    /// Sum of coeffs[t] * exp(2 pi i t / L) in doubles; absolute error is
    /// bounded by (sum of |coeffs[t]|) * 2^-50.
    std::complex<double> to_complex() const;

    cyclotomic& operator+=(const cyclotomic& rhs);
    cyclotomic& operator-=(const cyclotomic& rhs);
    /// this += k * rhs, without allocating a temporary.
    cyclotomic& add_scaled(const bigint& k, const cyclotomic& rhs);

    friend cyclotomic operator+(cyclotomic lhs, const cyclotomic& rhs) { return lhs += rhs; }
    friend cyclotomic operator-(cyclotomic lhs, const cyclotomic& rhs) { return lhs -= rhs; }
    friend cyclotomic operator*(const cyclotomic& lhs, const cyclotomic& rhs);
    friend cyclotomic operator-(cyclotomic v);

    friend bool operator==(const cyclotomic& lhs, const cyclotomic& rhs);

private:
    void require_same_context(const cyclotomic& other) const;

    context_ptr ctx_;
    std::vector<bigint> coeffs_;  // size phi(L)
};

/// Canonical form of zeta_L^t (t reduced mod L).
cyclotomic root_of_unity(const context_ptr& ctx, long long t);

/// Complex conjugation, zeta |-> zeta^(L-1).
cyclotomic conj(const cyclotomic& v);

}  // namespace t8n
