#pragma once

#include <span>
#include <string>
#include <vector>

#include "t8n/cyclotomic.hpp"
#include "t8n/group.hpp"

namespace t8n {

/// One of the 2n+6 irreducible characters of T_{8n}: chi_j (j = 0..7,
/// degree 1), phi_k or psi_h (k, h = 1..n-1, degree 2).
struct character_id {
    enum class family : unsigned char { linear, phi, psi };
    family fam = family::linear;
    int index = 0;

    std::string name() const;  // "chi_0", "phi_1", "psi_2"
    friend bool operator==(const character_id&, const character_id&) = default;
};

/// A 1x1 or 2x2 matrix over Z[zeta_L]; the image of a group element under an
/// irreducible matrix representation.
class rep_matrix {
public:
    rep_matrix(context_ptr ctx, int dim);  // zero matrix
    static rep_matrix identity(const context_ptr& ctx, int dim);

    int dim() const noexcept { return dim_; }
    const cyclotomic& at(int row, int col) const { return entries_[row * dim_ + col]; }
    cyclotomic& at(int row, int col) { return entries_[row * dim_ + col]; }
    cyclotomic trace() const;

    friend rep_matrix operator*(const rep_matrix& lhs, const rep_matrix& rhs);
    friend bool operator==(const rep_matrix&, const rep_matrix&) = default;

private:
    context_ptr ctx_;
    int dim_;
    std::vector<cyclotomic> entries_;
};

/// The full irreducible character table of T_{8n}, with all values embedded
/// in the single conductor L = 8n (omega = zeta^n, epsilon = zeta^8,
/// xi = zeta^4, i = zeta^(2n)).  Values are materialized per element at
/// construction; the table is immutable afterwards.
class character_table {
public:
    explicit character_table(int n);

    const group& grp() const noexcept { return g_; }
    int n() const noexcept { return g_.n(); }
    const context_ptr& context() const noexcept { return ctx_; }
    const std::vector<character_id>& characters() const noexcept { return ids_; }
    const std::vector<conjugacy_class>& classes() const noexcept { return classes_; }

    int degree(character_id id) const;
    const cyclotomic& value(character_id id, element x) const;

    cyclotomic sum(character_id id, std::span<const element> xs) const;
    cyclotomic sum(character_id id, const connection_set& s) const;

    /// chi(AB) over all |A|*|B| ordered pairs, with multiplicity.
    cyclotomic sum_product(character_id id, std::span<const element> a,
                           std::span<const element> b) const;
    cyclotomic sum_product(character_id id, const connection_set& a,
                           const connection_set& b) const;

    /// The irreducible matrix representation with character `id`, evaluated
    /// at x through the factorization x = a^r b^j.  trace() equals value().
    rep_matrix representation(character_id id, element x) const;

private:
    int ordinal(character_id id) const;
    cyclotomic closed_form_value(character_id id, element x) const;
    rep_matrix generator_image_a(character_id id) const;
    rep_matrix generator_image_b(character_id id) const;
    void require_same_group(const connection_set& s) const;

    group g_;
    context_ptr ctx_;
    std::vector<character_id> ids_;
    std::vector<std::vector<cyclotomic>> values_;  // [ordinal][element index]
    std::vector<conjugacy_class> classes_;
};

}  // namespace t8n
