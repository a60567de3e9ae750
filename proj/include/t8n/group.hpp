#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace t8n {

/// Element of T_{8n} in normal form a^r b^j with 0 <= r < 2n, 0 <= j < 4.
/// The normal form is unique; the identity is (0, 0).
struct element {
    int r = 0;
    int j = 0;

    friend bool operator==(const element&, const element&) = default;
    // Canonical order is by (j, r); it is also the vertex order of the
    // adjacency matrix and the element order used in JSON output.
    friend std::strong_ordering operator<=>(const element& x, const element& y) {
        if (x.j != y.j) return x.j <=> y.j;
        return x.r <=> y.r;
    }
};

std::string to_string(const element& x);

struct conjugacy_class {
    element representative;
    std::vector<element> members;  // sorted by (j, r)
};

/// The group T_{8n} = <a, b | a^{2n} = b^8 = e, a^n = b^4, b^{-1}ab = a^{-1}>.
/// A trivially copyable value; all operations are pure.
class group {
public:
    explicit group(int n);

    int n() const noexcept { return n_; }
    int order() const noexcept { return 8 * n_; }
    int a_order() const noexcept { return 2 * n_; }  // |<a>|

    element identity() const noexcept { return {0, 0}; }
    element make(int r, int j) const noexcept;  // reduces exponents into range

    // Normal form of xy.  Moving a^r past b^j flips the sign of r for odd j;
    // a b-exponent reaching 4 carries a^n.
    element mul(element x, element y) const noexcept;
    element inv(element x) const noexcept;
    element pow(element x, long long k) const noexcept;
    element conjugate(element g, element x) const noexcept;  // g x g^{-1}

    int index_of(element x) const noexcept { return x.j * 2 * n_ + x.r; }
    element at(int index) const noexcept { return {index % (2 * n_), index / (2 * n_)}; }
    std::vector<element> elements() const;  // all 8n elements in index order

    /// Smallest m >= 1 with x^m = e, by iteration.
    int element_order(element x) const;
    /// Closed form: o(a^i) = 2n/gcd(i,2n), o(a^i b^2) = 4n/gcd(2i+n,2n),
    /// o(a^i b^{1,3}) = 8.
    int element_order_closed_form(element x) const;

    std::vector<element> cyclic_subgroup(element x) const;  // <x>, sorted
    /// [x] = { y in <x> : <y> = <x> }, the generator class of x.
    std::vector<element> generator_class(element x) const;

    /// The 2n+6 conjugacy classes, in the fixed order
    /// {e}, {a^n}, {a^r, a^-r} (r=1..n-1), {a^(2r) b}, {a^(2r+1) b},
    /// {b^2}, {a^n b^2}, {a^r b^2, a^-r b^2} (r=1..n-1), {a^(2r) b^3},
    /// {a^(2r+1) b^3}.
    std::vector<conjugacy_class> conjugacy_classes() const;
    int class_count() const noexcept { return 2 * n_ + 6; }
    int class_index(element x) const noexcept;

    bool in_a2(element x) const noexcept { return x.j == 0 && x.r % 2 == 0; }

    friend bool operator==(const group&, const group&) = default;

private:
    int n_;
};

/// Connection set S of a Cayley graph over T_{8n}: a duplicate-free set of
/// non-identity elements, stored sorted by (j, r).
class connection_set {
public:
    connection_set(group g, std::vector<element> members);

    const group& grp() const noexcept { return g_; }
    int n() const noexcept { return g_.n(); }
    const std::vector<element>& members() const noexcept { return members_; }
    std::size_t size() const noexcept { return members_.size(); }
    bool empty() const noexcept { return members_.empty(); }
    bool contains(element x) const;
    bool symmetric() const;  // S = S^{-1}

    friend bool operator==(const connection_set&, const connection_set&) = default;

private:
    group g_;
    std::vector<element> members_;
};

/// S1 = members with j in {0,2}, S2 = members with j in {1,3}.
std::pair<connection_set, connection_set> split_connection_set(const connection_set& s);

/// True iff for every x in S the whole generator class [x] lies in S.
bool is_power_closed(const connection_set& s);

bool is_union_of_conjugacy_classes(const connection_set& s);

/// Membership of S1 in the Boolean algebra B(<a^2>) generated by the
/// subgroups of the cyclic group <a^2>; its atoms are the generator classes.
/// Throws not_applicable if a member lies outside <a^2>.
bool is_in_boolean_algebra_a2(const connection_set& s1);

/// True iff <S> = T_{8n}; for symmetric S this is connectivity of Cay(T_{8n}, S).
bool generates_group(const connection_set& s);

}  // namespace t8n
