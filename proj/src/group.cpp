#include "t8n/group.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "t8n/errors.hpp"

namespace t8n {

std::string to_string(const element& x) {
    if (x.r == 0 && x.j == 0) return "e";
    std::string out;
    if (x.r == 1)
        out += "a";
    else if (x.r > 1)
        out += "a^" + std::to_string(x.r);
    if (x.j >= 1) {
        if (!out.empty()) out += " ";
        out += x.j == 1 ? "b" : "b^" + std::to_string(x.j);
    }
    return out;
}

group::group(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("group parameter n must be >= 1");
}

static int mod(int v, int m) {
    int r = v % m;
    return r < 0 ? r + m : r;
}

element group::make(int r, int j) const noexcept { return {mod(r, 2 * n_), mod(j, 4)}; }

element group::mul(element x, element y) const noexcept {
    const int sign = (x.j % 2 == 0) ? 1 : -1;
    int r = x.r + sign * y.r;
    int j = x.j + y.j;
    if (j >= 4) {
        j -= 4;
        r += n_;  // b^4 = a^n
    }
    return {mod(r, 2 * n_), j};
}

element group::inv(element x) const noexcept {
    switch (x.j) {
        case 0: return {mod(-x.r, 2 * n_), 0};
        case 1: return {mod(x.r + n_, 2 * n_), 3};
        case 2: return {mod(n_ - x.r, 2 * n_), 2};
        default: return {mod(x.r + n_, 2 * n_), 1};
    }
}

element group::pow(element x, long long k) const noexcept {
    element base = k < 0 ? inv(x) : x;
    unsigned long long e = k < 0 ? -(unsigned long long)k : (unsigned long long)k;
    element acc = identity();
    while (e > 0) {
        if (e & 1) acc = mul(acc, base);
        base = mul(base, base);
        e >>= 1;
    }
    return acc;
}

element group::conjugate(element g, element x) const noexcept { return mul(mul(g, x), inv(g)); }

std::vector<element> group::elements() const {
    std::vector<element> out;
    out.reserve(order());
    for (int j = 0; j < 4; ++j)
        for (int r = 0; r < 2 * n_; ++r) out.push_back({r, j});
    return out;
}

int group::element_order(element x) const {
    element y = x;
    for (int m = 1; m <= order(); ++m) {
        if (y == identity()) return m;
        y = mul(y, x);
    }
    throw std::logic_error("element order exceeds group order");
}

int group::element_order_closed_form(element x) const {
    const int two_n = 2 * n_;
    if (x.j == 1 || x.j == 3) return 8;
    if (x.j == 0) return two_n / std::gcd(x.r, two_n);
    // j == 2: (a^i b^2)^2 = a^(2i+n), and odd powers keep the b^2 factor.
    return 2 * (two_n / std::gcd(mod(2 * x.r + n_, two_n), two_n));
}

std::vector<element> group::cyclic_subgroup(element x) const {
    std::vector<element> out;
    element y = identity();
    do {
        out.push_back(y);
        y = mul(y, x);
    } while (y != identity());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<element> group::generator_class(element x) const {
    // <y> = <x> for y in <x> iff o(y) = o(x), since subgroups of a cyclic
    // group are determined by their order.
    const int ord = element_order(x);
    std::vector<element> out;
    for (const element& y : cyclic_subgroup(x))
        if (element_order(y) == ord) out.push_back(y);
    return out;
}

std::vector<conjugacy_class> group::conjugacy_classes() const {
    std::vector<conjugacy_class> out;
    out.reserve(class_count());
    auto add = [&](element rep, std::vector<element> members) {
        std::sort(members.begin(), members.end());
        members.erase(std::unique(members.begin(), members.end()), members.end());
        out.push_back({rep, std::move(members)});
    };
    const int two_n = 2 * n_;
    add(identity(), {identity()});
    add({n_, 0}, {{n_, 0}});
    for (int r = 1; r < n_; ++r) add({r, 0}, {{r, 0}, {two_n - r, 0}});
    std::vector<element> even_b, odd_b, even_b3, odd_b3;
    for (int r = 0; r < two_n; ++r) {
        (r % 2 == 0 ? even_b : odd_b).push_back({r, 1});
        (r % 2 == 0 ? even_b3 : odd_b3).push_back({r, 3});
    }
    add({0, 1}, even_b);
    add({1, 1}, odd_b);
    add({0, 2}, {{0, 2}});
    add({n_, 2}, {{n_, 2}});
    for (int r = 1; r < n_; ++r) add({r, 2}, {{r, 2}, {two_n - r, 2}});
    add({0, 3}, even_b3);
    add({1, 3}, odd_b3);
    return out;
}

int group::class_index(element x) const noexcept {
    const int two_n = 2 * n_;
    switch (x.j) {
        case 0:
            if (x.r == 0) return 0;
            if (x.r == n_) return 1;
            return 1 + std::min(x.r, two_n - x.r);
        case 1: return n_ + 1 + x.r % 2;
        case 2:
            if (x.r == 0) return n_ + 3;
            if (x.r == n_) return n_ + 4;
            return n_ + 4 + std::min(x.r, two_n - x.r);
        default: return 2 * n_ + 4 + x.r % 2;
    }
}

connection_set::connection_set(group g, std::vector<element> members) : g_(g) {
    for (element& x : members) x = g_.make(x.r, x.j);
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    if (std::binary_search(members.begin(), members.end(), g_.identity()))
        throw std::invalid_argument("connection set must not contain the identity");
    members_ = std::move(members);
}

bool connection_set::contains(element x) const {
    return std::binary_search(members_.begin(), members_.end(), x);
}

bool connection_set::symmetric() const {
    for (const element& x : members_)
        if (!contains(g_.inv(x))) return false;
    return true;
}

std::pair<connection_set, connection_set> split_connection_set(const connection_set& s) {
    std::vector<element> s1, s2;
    for (const element& x : s.members()) (x.j % 2 == 0 ? s1 : s2).push_back(x);
    return {connection_set(s.grp(), std::move(s1)), connection_set(s.grp(), std::move(s2))};
}

bool is_power_closed(const connection_set& s) {
    for (const element& x : s.members())
        for (const element& y : s.grp().generator_class(x))
            if (!s.contains(y)) return false;
    return true;
}

bool is_union_of_conjugacy_classes(const connection_set& s) {
    const group& g = s.grp();
    std::vector<int> count(g.class_count(), 0);
    for (const element& x : s.members()) ++count[g.class_index(x)];
    for (const conjugacy_class& c : g.conjugacy_classes()) {
        const int got = count[g.class_index(c.representative)];
        if (got != 0 && got != (int)c.members.size()) return false;
    }
    return true;
}

bool is_in_boolean_algebra_a2(const connection_set& s1) {
    const group& g = s1.grp();
    for (const element& x : s1.members())
        if (!g.in_a2(x))
            throw not_applicable("element " + to_string(x) + " lies outside <a^2>");
    // e is never in a connection set, so membership in B(<a^2>) is exactly
    // closure under the generator-class atoms.
    return is_power_closed(s1);
}

bool generates_group(const connection_set& s) {
    const group& g = s.grp();
    std::vector<char> seen(g.order(), 0);
    std::vector<element> frontier{g.identity()};
    seen[g.index_of(g.identity())] = 1;
    std::size_t reached = 1;
    while (!frontier.empty()) {
        std::vector<element> next;
        for (const element& x : frontier)
            for (const element& s_el : s.members()) {
                element y = g.mul(s_el, x);
                if (!seen[g.index_of(y)]) {
                    seen[g.index_of(y)] = 1;
                    ++reached;
                    next.push_back(y);
                }
            }
        frontier = std::move(next);
    }
    return reached == (std::size_t)g.order();
}

}  // namespace t8n
