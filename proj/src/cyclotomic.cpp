#include "t8n/cyclotomic.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace t8n {

namespace {

// Ascending-coefficient polynomials over bigint.

std::vector<bigint> poly_mul(const std::vector<bigint>& a, const std::vector<bigint>& b) {
    std::vector<bigint> out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t k = 0; k < b.size(); ++k) out[i + k] += a[i] * b[k];
    }
    return out;
}

// Exact division by a monic divisor; throws if a remainder is left.
std::vector<bigint> poly_divexact(std::vector<bigint> num, const std::vector<bigint>& den) {
    const std::size_t dn = num.size() - 1, dd = den.size() - 1;
    std::vector<bigint> quot(dn - dd + 1);
    for (std::size_t i = dn + 1; i-- > dd;) {
        bigint c = num[i];
        if (c == 0) continue;
        quot[i - dd] = c;
        for (std::size_t k = 0; k <= dd; ++k) num[i - dd + k] -= c * den[k];
    }
    for (const bigint& c : num)
        if (c != 0) throw std::logic_error("inexact polynomial division");
    return quot;
}

std::vector<bigint> cyclotomic_polynomial(int L) {
    // x^L - 1 divided by the product of Phi_d over proper divisors d of L.
    std::vector<bigint> num(L + 1);
    num[0] = -1;
    num[L] = 1;
    std::vector<bigint> den{1};  // constant 1
    for (int d = 1; d < L; ++d)
        if (L % d == 0) den = poly_mul(den, cyclotomic_polynomial(d));
    return poly_divexact(std::move(num), den);
}

}  // namespace

cyclotomic_context::cyclotomic_context(int conductor) : conductor_(conductor) {
    if (conductor < 1) throw std::invalid_argument("conductor must be >= 1");
    modulus_ = cyclotomic_polynomial(conductor);
    degree_ = (int)modulus_.size() - 1;
    powers_.reserve(conductor);
    for (int m = 0; m < conductor; ++m) {
        if (m < degree_) {
            std::vector<bigint> v(degree_);
            v[m] = 1;
            powers_.push_back(std::move(v));
        } else {
            // zeta^m = zeta * zeta^(m-1), reduced mod Phi_L.
            std::vector<bigint> v(degree_ + 1);
            const std::vector<bigint>& prev = powers_[m - 1];
            for (int t = 0; t < degree_; ++t) v[t + 1] = prev[t];
            const bigint lead = v[degree_];
            if (lead != 0)
                for (int t = 0; t < degree_; ++t) v[t] -= lead * modulus_[t];
            v.resize(degree_);
            powers_.push_back(std::move(v));
        }
    }
}

context_ptr make_context(int conductor) {
    return std::make_shared<const cyclotomic_context>(conductor);
}

cyclotomic::cyclotomic(context_ptr ctx) : ctx_(std::move(ctx)), coeffs_(ctx_->degree()) {}

cyclotomic::cyclotomic(context_ptr ctx, bigint constant) : cyclotomic(std::move(ctx)) {
    coeffs_[0] = std::move(constant);
}

cyclotomic::cyclotomic(context_ptr ctx, std::vector<bigint> coeffs)
    : ctx_(std::move(ctx)), coeffs_(std::move(coeffs)) {
    if ((int)coeffs_.size() != ctx_->degree())
        throw std::invalid_argument("coefficient vector has wrong length");
}

void cyclotomic::require_same_context(const cyclotomic& other) const {
    if (ctx_->conductor() != other.ctx_->conductor())
        throw std::invalid_argument("cyclotomic values from different conductors");
}

bool cyclotomic::is_zero() const {
    for (const bigint& c : coeffs_)
        if (c != 0) return false;
    return true;
}

std::optional<bigint> cyclotomic::as_integer() const {
    for (std::size_t t = 1; t < coeffs_.size(); ++t)
        if (coeffs_[t] != 0) return std::nullopt;
    return coeffs_[0];
}

std::complex<double> cyclotomic::to_complex() const {
    const double step = 2.0 * std::numbers::pi / ctx_->conductor();
    std::complex<double> out{0.0, 0.0};
    for (std::size_t t = 0; t < coeffs_.size(); ++t) {
        if (coeffs_[t] == 0) continue;
        const double c = coeffs_[t].convert_to<double>();
        out += std::complex<double>{c * std::cos(step * t), c * std::sin(step * t)};
    }
    return out;
}

cyclotomic& cyclotomic::operator+=(const cyclotomic& rhs) {
    require_same_context(rhs);
    for (std::size_t t = 0; t < coeffs_.size(); ++t) coeffs_[t] += rhs.coeffs_[t];
    return *this;
}

cyclotomic& cyclotomic::operator-=(const cyclotomic& rhs) {
    require_same_context(rhs);
    for (std::size_t t = 0; t < coeffs_.size(); ++t) coeffs_[t] -= rhs.coeffs_[t];
    return *this;
}

cyclotomic& cyclotomic::add_scaled(const bigint& k, const cyclotomic& rhs) {
    require_same_context(rhs);
    if (k != 0)
        for (std::size_t t = 0; t < coeffs_.size(); ++t)
            if (rhs.coeffs_[t] != 0) coeffs_[t] += k * rhs.coeffs_[t];
    return *this;
}

cyclotomic operator*(const cyclotomic& lhs, const cyclotomic& rhs) {
    lhs.require_same_context(rhs);
    const int deg = lhs.ctx_->degree();
    const std::vector<bigint>& mod = lhs.ctx_->modulus();
    std::vector<bigint> prod(2 * deg - 1);
    for (int i = 0; i < deg; ++i) {
        if (lhs.coeffs_[i] == 0) continue;
        for (int k = 0; k < deg; ++k)
            if (rhs.coeffs_[k] != 0) prod[i + k] += lhs.coeffs_[i] * rhs.coeffs_[k];
    }
    for (int i = 2 * deg - 2; i >= deg; --i) {
        const bigint c = prod[i];
        if (c == 0) continue;
        for (int k = 0; k < deg; ++k) prod[i - deg + k] -= c * mod[k];
        prod[i] = 0;
    }
    prod.resize(deg);
    return cyclotomic(lhs.ctx_, std::move(prod));
}

cyclotomic operator-(cyclotomic v) {
    for (bigint& c : v.coeffs_) c = -c;
    return v;
}

bool operator==(const cyclotomic& lhs, const cyclotomic& rhs) {
    return lhs.ctx_->conductor() == rhs.ctx_->conductor() && lhs.coeffs_ == rhs.coeffs_;
}

cyclotomic root_of_unity(const context_ptr& ctx, long long t) {
    const int L = ctx->conductor();
    long long m = t % L;
    if (m < 0) m += L;
    return cyclotomic(ctx, ctx->power((int)m));
}

cyclotomic conj(const cyclotomic& v) {
    const context_ptr& ctx = v.context();
    const int L = ctx->conductor();
    cyclotomic out(ctx);
    const std::vector<bigint>& c = v.coeffs();
    for (int t = 0; t < (int)c.size(); ++t) {
        if (c[t] == 0) continue;
        out.add_scaled(c[t], cyclotomic(ctx, ctx->power((L - t) % L)));
    }
    return out;
}

}  // namespace t8n
