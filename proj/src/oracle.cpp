#include "t8n/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace t8n {

adjacency_matrix::adjacency_matrix(const connection_set& s) : g_(s.grp()), dim_(g_.order()) {
    if (!s.symmetric())
        throw std::invalid_argument("adjacency matrix requires a symmetric connection set");
    degree_ = (int)s.size();
    bits_.assign((std::size_t)dim_ * dim_, 0);
    const std::vector<element> verts = g_.elements();
    for (int row = 0; row < dim_; ++row) {
        for (int col = 0; col < dim_; ++col) {
            if (row == col) continue;
            if (s.contains(g_.mul(verts[row], g_.inv(verts[col]))))
                bits_[(std::size_t)row * dim_ + col] = 1;
        }
    }
}

bigint charpoly::eval(const bigint& x) const {
    bigint acc = 0;
    for (const bigint& c : coeffs) acc = acc * x + c;
    return acc;
}

namespace {

using int128 = __int128;

// Overflow-checked arithmetic on __int128 without UB; on overflow the
// caller falls back to the bigint path.
bool add_ck(int128 a, int128 b, int128& out) {
    const unsigned __int128 ur = (unsigned __int128)a + (unsigned __int128)b;
    out = (int128)ur;
    return ((a ^ out) & (b ^ out)) >= 0;
}

bool mul_ck(int128 a, int128 b, int128& out) {
    if (a == 0 || b == 0) {
        out = 0;
        return true;
    }
    const bool neg = (a < 0) != (b < 0);
    const unsigned __int128 ua = a < 0 ? 0 - (unsigned __int128)a : (unsigned __int128)a;
    const unsigned __int128 ub = b < 0 ? 0 - (unsigned __int128)b : (unsigned __int128)b;
    if (ua > ~(unsigned __int128)0 / ub) return false;
    const unsigned __int128 up = ua * ub;
    const unsigned __int128 limit =
        neg ? (unsigned __int128)1 << 127 : ((unsigned __int128)1 << 127) - 1;
    if (up > limit) return false;
    out = neg ? (int128)(0 - up) : (int128)up;
    return true;
}

// Berkowitz: division-free charpoly by iterated Toeplitz products over the
// leading principal submatrices.  Coefficients come out by descending power.
template <class Int, class Mul, class Add>
bool berkowitz(const std::vector<std::vector<long long>>& a, Mul mul, Add add,
               std::vector<Int>& out) {
    const int d = (int)a.size();
    std::vector<Int> poly{Int(1)};
    std::vector<Int> t, v, w, next;
    for (int r = 1; r <= d; ++r) {
        t.assign(r + 1, Int(0));
        t[0] = Int(1);
        t[1] = Int(-a[r - 1][r - 1]);
        if (r >= 2) {
            v.assign(r - 1, Int(0));
            for (int i = 0; i < r - 1; ++i) v[i] = Int(a[i][r - 1]);  // column slice
            for (int i = 2; i <= r; ++i) {
                Int dot(0);
                for (int k = 0; k < r - 1; ++k) {
                    Int term;
                    if (!mul(Int(a[r - 1][k]), v[k], term)) return false;
                    if (!add(dot, term, dot)) return false;
                }
                t[i] = -dot;
                if (i < r) {
                    w.assign(r - 1, Int(0));
                    for (int row = 0; row < r - 1; ++row) {
                        Int acc(0);
                        for (int k = 0; k < r - 1; ++k) {
                            if (a[row][k] == 0 || v[k] == Int(0)) continue;
                            Int term;
                            if (!mul(Int(a[row][k]), v[k], term)) return false;
                            if (!add(acc, term, acc)) return false;
                        }
                        w[row] = acc;
                    }
                    v.swap(w);
                }
            }
        }
        next.assign(r + 1, Int(0));
        for (int m = 0; m <= r; ++m) {
            Int acc(0);
            const int hi = std::min(m, r);
            for (int i = 0; i <= hi; ++i) {
                if (m - i >= (int)poly.size()) continue;
                Int term;
                if (!mul(t[i], poly[m - i], term)) return false;
                if (!add(acc, term, acc)) return false;
            }
            next[m] = acc;
        }
        poly.swap(next);
    }
    out = std::move(poly);
    return true;
}

charpoly char_poly_impl(const std::vector<std::vector<long long>>& a) {
    std::vector<int128> fast;
    const bool ok = berkowitz<int128>(
        a, [](int128 x, int128 y, int128& out) { return mul_ck(x, y, out); },
        [](int128 x, int128 y, int128& out) { return add_ck(x, y, out); }, fast);
    charpoly p;
    if (ok) {
        p.coeffs.reserve(fast.size());
        for (int128 c : fast) {
            const bool neg = c < 0;
            unsigned __int128 u = neg ? 0 - (unsigned __int128)c : (unsigned __int128)c;
            bigint b = (std::uint64_t)(u >> 64);
            b <<= 64;
            b += (std::uint64_t)u;
            p.coeffs.push_back(neg ? -b : b);
        }
        return p;
    }
    std::vector<bigint> exact;
    berkowitz<bigint>(
        a,
        [](const bigint& x, const bigint& y, bigint& out) {
            out = x * y;
            return true;
        },
        [](const bigint& x, const bigint& y, bigint& out) {
            out = x + y;
            return true;
        },
        exact);
    p.coeffs = std::move(exact);
    return p;
}

}  // namespace

charpoly char_poly(const std::vector<std::vector<long long>>& a) {
    for (const auto& row : a)
        if (row.size() != a.size()) throw std::invalid_argument("matrix must be square");
    if (a.empty()) return charpoly{{bigint(1)}};
    return char_poly_impl(a);
}

charpoly char_poly(const adjacency_matrix& a) {
    std::vector<std::vector<long long>> m(a.dim(), std::vector<long long>(a.dim()));
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) m[i][j] = a.at(i, j);
    return char_poly_impl(m);
}

std::optional<spectrum> integer_spectrum(const charpoly& p, long long bound) {
    std::vector<bigint> coeffs = p.coeffs;
    std::vector<std::pair<long long, int>> roots;
    for (long long m = bound; m >= -bound; --m) {
        for (;;) {
            if (coeffs.size() == 1) break;
            bigint value = 0;
            for (const bigint& c : coeffs) value = value * m + c;
            if (value != 0) break;
            // synthetic division by (x - m)
            std::vector<bigint> quot(coeffs.size() - 1);
            bigint carry = 0;
            for (std::size_t i = 0; i + 1 < coeffs.size(); ++i) {
                carry = carry * m + coeffs[i];
                quot[i] = carry;
            }
            coeffs = std::move(quot);
            if (!roots.empty() && roots.back().first == m)
                ++roots.back().second;
            else
                roots.emplace_back(m, 1);
        }
    }
    if (coeffs.size() != 1) return std::nullopt;  // does not split over Z
    return make_exact_spectrum(std::move(roots));
}

std::vector<double> numeric_eigenvalues(std::vector<std::vector<double>> a) {
    const int d = (int)a.size();
    const double tol = 1e-12;
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < d; ++p)
            for (int q = p + 1; q < d; ++q) off += 2.0 * a[p][q] * a[p][q];
        if (std::sqrt(off) < tol) break;
        for (int p = 0; p < d; ++p) {
            for (int q = p + 1; q < d; ++q) {
                if (std::abs(a[p][q]) < tol / (d * d + 1.0)) continue;
                const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (int k = 0; k < d; ++k) {
                    const double akp = a[k][p], akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for (int k = 0; k < d; ++k) {
                    const double apk = a[p][k], aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    std::vector<double> eig(d);
    for (int i = 0; i < d; ++i) eig[i] = a[i][i];
    std::sort(eig.begin(), eig.end(), std::greater<>());
    return eig;
}

std::vector<double> numeric_eigenvalues(const adjacency_matrix& a) {
    std::vector<std::vector<double>> m(a.dim(), std::vector<double>(a.dim()));
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) m[i][j] = a.at(i, j);
    return numeric_eigenvalues(std::move(m));
}

spectrum oracle_spectrum(const connection_set& s) {
    const adjacency_matrix a(s);
    if (auto exact = integer_spectrum(char_poly(a), a.degree())) return *exact;
    return make_float_spectrum(numeric_eigenvalues(a), 1e-7);
}

integrality_verdict check_integral_oracle(const connection_set& s) {
    const adjacency_matrix a(s);
    integrality_verdict v;
    v.method = check_method::oracle;
    v.applicable = true;
    v.integral = integer_spectrum(char_poly(a), a.degree()).has_value();
    if (!v.integral)
        v.failures.push_back({"integer_roots", "characteristic polynomial does not split over Z"});
    return v;
}

}  // namespace t8n
