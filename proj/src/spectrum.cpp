#include "t8n/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "t8n/errors.hpp"

namespace t8n {

int spectrum::total_multiplicity() const {
    int total = 0;
    for (const spectrum_entry& e : entries) total += e.multiplicity;
    return total;
}

spectrum make_exact_spectrum(std::vector<std::pair<long long, int>> pairs) {
    std::map<long long, int> merged;
    for (const auto& [value, mult] : pairs)
        if (mult > 0) merged[value] += mult;
    spectrum out;
    out.exact = true;
    for (auto it = merged.rbegin(); it != merged.rend(); ++it)
        out.entries.push_back({(double)it->first, it->first, true, it->second});
    return out;
}

spectrum make_float_spectrum(const std::vector<double>& values, double merge_tol) {
    std::vector<double> sorted = values;
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    spectrum out;
    out.exact = false;
    for (double v : sorted) {
        if (!out.entries.empty() && std::abs(out.entries.back().value - v) <= merge_tol)
            ++out.entries.back().multiplicity;
        else
            out.entries.push_back({v, 0, false, 1});
    }
    return out;
}

bool spectra_equal_exact(const spectrum& a, const spectrum& b) {
    if (!a.exact || !b.exact || a.entries.size() != b.entries.size()) return false;
    for (std::size_t i = 0; i < a.entries.size(); ++i)
        if (a.entries[i].int_value != b.entries[i].int_value ||
            a.entries[i].multiplicity != b.entries[i].multiplicity)
            return false;
    return true;
}

std::vector<double> expanded_values(const spectrum& s) {
    std::vector<double> out;
    for (const spectrum_entry& e : s.entries)
        out.insert(out.end(), e.multiplicity, e.value);
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

bool spectra_match(const spectrum& a, const spectrum& b, double tol) {
    const std::vector<double> va = expanded_values(a), vb = expanded_values(b);
    if (va.size() != vb.size()) return false;
    for (std::size_t i = 0; i < va.size(); ++i)
        if (std::abs(va[i] - vb[i]) > tol) return false;
    return true;
}

std::string to_string(const spectrum& s) {
    std::ostringstream out;
    out << "{";
    bool first = true;
    for (const spectrum_entry& e : s.entries) {
        if (!first) out << ", ";
        first = false;
        out << "[";
        if (e.integral)
            out << e.int_value;
        else
            out << e.value;
        out << "]";
        if (e.multiplicity != 1) out << "^" << e.multiplicity;
    }
    out << "}";
    return out.str();
}

bool is_perfect_square(const bigint& m) {
    if (m < 0) return false;
    const bigint root = boost::multiprecision::sqrt(m);
    return root * root == m;
}

std::string to_string(check_method m) {
    switch (m) {
        case check_method::theorem3: return "theorem3";
        case check_method::theorem4: return "theorem4";
        case check_method::theorem5: return "theorem5";
        default: return "oracle";
    }
}

namespace {

void require_symmetric(const connection_set& s) {
    if (!s.symmetric())
        throw std::invalid_argument("connection set must be symmetric (S = S^-1)");
}

double real_part(const cyclotomic& v) { return v.to_complex().real(); }

long long to_ll(const bigint& v) { return v.convert_to<long long>(); }

}  // namespace

std::vector<character_eigenvalues> spectrum_by_character(const character_table& tbl,
                                                         const connection_set& s) {
    require_symmetric(s);
    std::vector<character_eigenvalues> out;
    for (const character_id& id : tbl.characters()) {
        character_eigenvalues group_entry;
        group_entry.id = id;
        if (tbl.degree(id) == 1) {
            const cyclotomic v = tbl.sum(id, s);
            group_entry.multiplicity_each = 1;
            if (auto iv = v.as_integer()) {
                group_entry.exact = true;
                group_entry.int_roots = {to_ll(*iv)};
                group_entry.roots = {(double)group_entry.int_roots[0]};
            } else {
                group_entry.roots = {real_part(v)};
            }
        } else {
            const cyclotomic p = tbl.sum(id, s);
            const cyclotomic q = tbl.sum_product(id, s, s);
            group_entry.multiplicity_each = 2;
            const auto pi = p.as_integer();
            const auto qi = q.as_integer();
            if (pi && qi) {
                const bigint disc = 2 * (*qi) - (*pi) * (*pi);
                if (disc < 0)
                    throw std::logic_error("negative discriminant for symmetric set");
                if (is_perfect_square(disc)) {
                    const bigint d = boost::multiprecision::sqrt(disc);
                    group_entry.exact = true;
                    group_entry.int_roots = {to_ll((*pi + d) / 2), to_ll((*pi - d) / 2)};
                    group_entry.roots = {(double)group_entry.int_roots[0],
                                         (double)group_entry.int_roots[1]};
                    out.push_back(std::move(group_entry));
                    continue;
                }
            }
            const double pf = pi ? (double)to_ll(*pi) : real_part(p);
            const double qf = qi ? (double)to_ll(*qi) : real_part(q);
            const double disc = std::max(2.0 * qf - pf * pf, 0.0);
            const double root = std::sqrt(disc);
            group_entry.roots = {(pf + root) / 2.0, (pf - root) / 2.0};
        }
        out.push_back(std::move(group_entry));
    }
    return out;
}

spectrum compute_spectrum(const character_table& tbl, const connection_set& s) {
    const std::vector<character_eigenvalues> groups = spectrum_by_character(tbl, s);
    bool all_exact = true;
    for (const character_eigenvalues& g : groups) all_exact &= g.exact;
    if (all_exact) {
        std::vector<std::pair<long long, int>> pairs;
        for (const character_eigenvalues& g : groups)
            for (long long root : g.int_roots) pairs.emplace_back(root, g.multiplicity_each);
        return make_exact_spectrum(std::move(pairs));
    }
    std::vector<double> values;
    for (const character_eigenvalues& g : groups)
        for (double root : g.roots)
            values.insert(values.end(), g.multiplicity_each, root);
    return make_float_spectrum(values);
}

spectrum circulant_spectrum(int m, const std::vector<int>& exponents) {
    if (m < 1) throw std::invalid_argument("circulant order must be >= 1");
    std::set<int> expo(exponents.begin(), exponents.end());
    for (int s : expo) {
        if (s < 1 || s > m - 1)
            throw std::invalid_argument("circulant exponents must lie in 1..m-1");
        if (!expo.count((m - s) % m))
            throw std::invalid_argument("circulant exponents must be closed under negation");
    }
    const context_ptr ctx = make_context(m);
    std::vector<std::optional<long long>> exact(m);
    std::vector<double> approx(m);
    bool all_exact = true;
    for (int k = 0; k < m; ++k) {
        cyclotomic acc(ctx);
        for (int s : expo) acc += root_of_unity(ctx, (long long)k * s);
        if (auto iv = acc.as_integer()) {
            exact[k] = to_ll(*iv);
            approx[k] = (double)*exact[k];
        } else {
            all_exact = false;
            approx[k] = real_part(acc);
        }
    }
    if (all_exact) {
        std::vector<std::pair<long long, int>> pairs;
        for (int k = 0; k < m; ++k) pairs.emplace_back(*exact[k], 1);
        return make_exact_spectrum(std::move(pairs));
    }
    return make_float_spectrum(approx);
}

discriminants compute_discriminants(const character_table& tbl, const connection_set& s) {
    require_symmetric(s);
    const auto [s1, s2] = split_connection_set(s);
    discriminants out;
    const int n = tbl.n();
    for (int index = 1; index < n; ++index) {
        for (auto fam : {character_id::family::phi, character_id::family::psi}) {
            const character_id id{fam, index};
            const auto p = tbl.sum(id, s1).as_integer();
            const auto q = (tbl.sum_product(id, s1, s1) + tbl.sum_product(id, s2, s2)).as_integer();
            discriminant_entry entry;
            if (!p)
                entry.obstruction = id.name() + "(S1) is not an integer";
            else if (!q)
                entry.obstruction = id.name() + "(S1^2) + " + id.name() + "(S2^2) is not an integer";
            else
                entry.value = 2 * (*q) - (*p) * (*p);
            (fam == character_id::family::phi ? out.phi : out.psi).push_back(std::move(entry));
        }
    }
    return out;
}

namespace {

// Shared condition bookkeeping: record the first failing condition per
// character, in table order.
struct failure_log {
    std::vector<verdict_failure> failures;
    void fail(const std::string& condition, const std::string& witness) {
        failures.push_back({condition, witness});
    }
};

integrality_verdict finish(check_method method, failure_log log) {
    integrality_verdict v;
    v.method = method;
    v.applicable = true;
    v.failures = std::move(log.failures);
    v.integral = v.failures.empty();
    return v;
}

integrality_verdict inapplicable(check_method method, std::string reason) {
    integrality_verdict v;
    v.method = method;
    v.applicable = false;
    v.integral = false;
    v.failures.push_back({"not_applicable", reason});
    v.reason = std::move(reason);
    return v;
}

}  // namespace

integrality_verdict check_integral_theorem3(const character_table& tbl,
                                            const connection_set& s) {
    require_symmetric(s);
    const auto [s1, s2] = split_connection_set(s);
    failure_log log;
    for (int j = 0; j < 8; ++j) {
        const character_id id{character_id::family::linear, j};
        if (!tbl.sum(id, s).as_integer()) log.fail("chi_integer", id.name());
    }
    for (auto fam : {character_id::family::phi, character_id::family::psi}) {
        const char* tag = fam == character_id::family::phi ? "phi" : "psi";
        for (int index = 1; index < tbl.n(); ++index) {
            const character_id id{fam, index};
            const auto p = tbl.sum(id, s1).as_integer();
            if (!p) {
                log.fail(std::string(tag) + "_s1_integer", id.name());
                continue;
            }
            const auto q = (tbl.sum_product(id, s1, s1) + tbl.sum_product(id, s2, s2)).as_integer();
            if (!q) {
                log.fail(std::string(tag) + "_square_sum_integer", id.name());
                continue;
            }
            if (!is_perfect_square(2 * (*q) - (*p) * (*p)))
                log.fail(std::string(tag) + "_discriminant_square", id.name());
        }
    }
    return finish(check_method::theorem3, std::move(log));
}

integrality_verdict check_integral_theorem4(const character_table& tbl,
                                            const connection_set& s) {
    require_symmetric(s);
    for (const element& x : s.members()) {
        if (x.j == 2 || (x.j == 0 && x.r % 2 != 0))
            return inapplicable(check_method::theorem4,
                                "element " + to_string(x) +
                                    " is outside <a^2> u <a>b u <a>b^3");
    }
    const auto [s1, s2] = split_connection_set(s);
    failure_log log;
    if (!is_in_boolean_algebra_a2(s1)) log.fail("s1_boolean_algebra", "S1");
    for (int j = 0; j < 8; ++j) {
        const character_id id{character_id::family::linear, j};
        if (!tbl.sum(id, s).as_integer()) log.fail("chi_integer", id.name());
    }
    for (int k = 1; k < tbl.n(); ++k) {
        const character_id id{character_id::family::phi, k};
        if (!tbl.sum(id, s1).as_integer()) log.fail("phi_s1_integer", id.name());
    }
    for (auto fam : {character_id::family::phi, character_id::family::psi}) {
        const char* tag = fam == character_id::family::phi ? "phi" : "psi";
        for (int index = 1; index < tbl.n(); ++index) {
            const character_id id{fam, index};
            const auto q = tbl.sum_product(id, s2, s2).as_integer();
            if (!q || !is_perfect_square(2 * (*q)))
                log.fail(std::string(tag) + "_s2sq_square", id.name());
        }
    }
    return finish(check_method::theorem4, std::move(log));
}

namespace {

// The b/b^3 part of a normal power-closed set: empty, everything, or (for
// even n) the even-r or odd-r half.
bool s2_in_menu(const group& g, const connection_set& s2) {
    if (s2.empty()) return true;
    const int two_n = g.a_order();
    std::vector<element> full, evens, odds;
    for (int r = 0; r < two_n; ++r)
        for (int j : {1, 3}) {
            full.push_back({r, j});
            (r % 2 == 0 ? evens : odds).push_back({r, j});
        }
    auto matches = [&](std::vector<element> v) {
        std::sort(v.begin(), v.end());
        return s2.members() == v;
    };
    if (matches(full)) return true;
    if (g.n() % 2 == 0 && (matches(evens) || matches(odds))) return true;
    return false;
}

}  // namespace

integrality_verdict check_integral_theorem5(const character_table& tbl,
                                            const connection_set& s) {
    require_symmetric(s);
    if (tbl.n() != s.n())
        throw std::invalid_argument("connection set and character table have different n");
    if (!is_union_of_conjugacy_classes(s))
        return inapplicable(check_method::theorem5, "S is not a union of conjugacy classes");

    const group& g = s.grp();
    failure_log log;
    for (const element& x : s.members()) {
        bool closed = true;
        for (const element& y : g.generator_class(x))
            if (!s.contains(y)) closed = false;
        if (!closed) log.fail("power_closed", to_string(x));
    }

    // Structural route: S1 a union of [a^r] / [a^r b^2] atoms, S2 from the
    // parity menu; must agree with the power-closure verdict.
    const auto [s1, s2] = split_connection_set(s);
    bool structural = s2_in_menu(g, s2);
    for (const element& x : s1.members())
        for (const element& y : g.generator_class(x))
            if (!s1.contains(y)) structural = false;
    integrality_verdict v = finish(check_method::theorem5, std::move(log));
    if (structural != v.integral)
        throw std::logic_error("power-closure and structural routes disagree");
    return v;
}

enumeration_result enumerate_integral_normal(int n, std::size_t limit) {
    const group g(n);
    const int two_n = g.a_order();

    std::set<std::vector<element>> atom_set;
    for (int r = 1; r < two_n; ++r) atom_set.insert(g.generator_class({r, 0}));
    for (int r = 0; r < two_n; ++r) atom_set.insert(g.generator_class({r, 2}));
    const std::vector<std::vector<element>> atoms(atom_set.begin(), atom_set.end());
    if (atoms.size() > 22) throw std::invalid_argument("enumeration too large for this n");

    std::vector<std::vector<element>> menus;
    menus.push_back({});
    std::vector<element> full, evens, odds;
    for (int r = 0; r < two_n; ++r)
        for (int j : {1, 3}) {
            full.push_back({r, j});
            (r % 2 == 0 ? evens : odds).push_back({r, j});
        }
    if (n % 2 == 0) {
        menus.push_back(evens);
        menus.push_back(odds);
    }
    menus.push_back(full);

    std::vector<connection_set> found;
    for (std::size_t mask = 0; mask < (std::size_t{1} << atoms.size()); ++mask) {
        std::vector<element> base;
        for (std::size_t i = 0; i < atoms.size(); ++i)
            if (mask & (std::size_t{1} << i))
                base.insert(base.end(), atoms[i].begin(), atoms[i].end());
        for (const std::vector<element>& menu : menus) {
            std::vector<element> members = base;
            members.insert(members.end(), menu.begin(), menu.end());
            if (members.empty()) continue;
            connection_set s(g, std::move(members));
            if (!is_union_of_conjugacy_classes(s)) continue;
            found.push_back(std::move(s));
        }
    }
    std::sort(found.begin(), found.end(), [](const connection_set& a, const connection_set& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.members() < b.members();
    });
    found.erase(std::unique(found.begin(), found.end()), found.end());

    enumeration_result out;
    if (found.size() > limit) {
        out.truncated = true;
        found.erase(found.begin() + (std::ptrdiff_t)limit, found.end());
    }
    out.sets = std::move(found);
    return out;
}

}  // namespace t8n
