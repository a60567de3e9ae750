#include "t8n/characters.hpp"

#include <stdexcept>

namespace t8n {

std::string character_id::name() const {
    switch (fam) {
        case family::linear: return "chi_" + std::to_string(index);
        case family::phi: return "phi_" + std::to_string(index);
        default: return "psi_" + std::to_string(index);
    }
}

rep_matrix::rep_matrix(context_ptr ctx, int dim) : ctx_(std::move(ctx)), dim_(dim) {
    entries_.assign(dim_ * dim_, cyclotomic(ctx_));
}

rep_matrix rep_matrix::identity(const context_ptr& ctx, int dim) {
    rep_matrix m(ctx, dim);
    for (int i = 0; i < dim; ++i) m.at(i, i) = cyclotomic(ctx, 1);
    return m;
}

cyclotomic rep_matrix::trace() const {
    cyclotomic t(ctx_);
    for (int i = 0; i < dim_; ++i) t += at(i, i);
    return t;
}

rep_matrix operator*(const rep_matrix& lhs, const rep_matrix& rhs) {
    if (lhs.dim_ != rhs.dim_) throw std::invalid_argument("matrix dimension mismatch");
    rep_matrix out(lhs.ctx_, lhs.dim_);
    for (int i = 0; i < lhs.dim_; ++i)
        for (int k = 0; k < lhs.dim_; ++k)
            for (int j = 0; j < lhs.dim_; ++j) out.at(i, j) += lhs.at(i, k) * rhs.at(k, j);
    return out;
}

character_table::character_table(int n)
    : g_(n), ctx_(make_context(8 * n)), classes_(g_.conjugacy_classes()) {
    for (int j = 0; j < 8; ++j) ids_.push_back({character_id::family::linear, j});
    for (int k = 1; k < n; ++k) ids_.push_back({character_id::family::phi, k});
    for (int h = 1; h < n; ++h) ids_.push_back({character_id::family::psi, h});
    values_.reserve(ids_.size());
    for (const character_id& id : ids_) {
        std::vector<cyclotomic> row;
        row.reserve(g_.order());
        for (const element& x : g_.elements()) row.push_back(closed_form_value(id, x));
        values_.push_back(std::move(row));
    }
}

int character_table::ordinal(character_id id) const {
    const int n = g_.n();
    switch (id.fam) {
        case character_id::family::linear:
            if (id.index < 0 || id.index > 7)
                throw std::out_of_range("linear character index out of range");
            return id.index;
        case character_id::family::phi:
            if (id.index < 1 || id.index > n - 1)
                throw std::out_of_range("phi character index out of range");
            return 8 + (id.index - 1);
        default:
            if (id.index < 1 || id.index > n - 1)
                throw std::out_of_range("psi character index out of range");
            return 8 + (n - 1) + (id.index - 1);
    }
}

int character_table::degree(character_id id) const {
    ordinal(id);
    return id.fam == character_id::family::linear ? 1 : 2;
}

// Table entries with omega = zeta^n, epsilon = zeta^8, xi = zeta^4,
// i = zeta^(2n), -1 = zeta^(4n); the two parities of n have different rows.
cyclotomic character_table::closed_form_value(character_id id, element x) const {
    const int n = g_.n();
    const long long r = x.r, m = x.j;
    auto root = [&](long long t) { return root_of_unity(ctx_, t); };
    auto pair_sum = [&](long long e, long long shift) {
        return root(e + shift) + root(-e + shift);
    };

    if (id.fam == character_id::family::linear) {
        const long long j = id.index;
        if (n % 2 == 1) return root(4LL * n * r * j + (long long)n * j * m);
        if (j % 2 == 0) return root((long long)n * j * m);
        return root(4LL * n * r + (long long)n * (j - 1) * m);
    }

    if (m == 1 || m == 3) return cyclotomic(ctx_);  // phi and psi vanish off <a> u <a>b^2

    if (id.fam == character_id::family::phi) {
        const long long k = id.index;
        if (n % 2 == 1) {
            const long long shift = (m == 2 && k % 2 == 1) ? 4LL * n : 0;  // (-1)^k on b^2
            return pair_sum(8 * k * r, shift);
        }
        const long long shift = (m == 2 && k % 2 == 1) ? 2LL * n : 0;  // i on b^2, odd k
        return pair_sum(4 * k * r, shift);
    }

    const long long h = id.index;
    if (n % 2 == 1) {
        // (-1)^(r(h+1)) (xi^(hr) + xi^(-hr)); on the b^2 coset the factor is
        // i for odd h and -i for even h (psi_h and psi_(n-h) share the same
        // values on <a> and are distinguished by the sign of that factor)
        long long shift = 4LL * n * (r * (h + 1) % 2);
        if (m == 2) shift += (h % 2 == 1) ? 2LL * n : 6LL * n;
        return pair_sum(4 * h * r, shift);
    }
    long long shift = 0;
    if (m == 2) shift = (h % 2 == 0) ? 4LL * n : 6LL * n;  // -1 resp. -i
    return pair_sum(4 * h * r, shift);
}

const cyclotomic& character_table::value(character_id id, element x) const {
    return values_[ordinal(id)][g_.index_of(g_.make(x.r, x.j))];
}

cyclotomic character_table::sum(character_id id, std::span<const element> xs) const {
    const std::vector<cyclotomic>& row = values_[ordinal(id)];
    cyclotomic acc(ctx_);
    for (const element& x : xs) acc += row[g_.index_of(x)];
    return acc;
}

void character_table::require_same_group(const connection_set& s) const {
    if (s.n() != g_.n())
        throw std::invalid_argument("connection set and character table have different n");
}

cyclotomic character_table::sum(character_id id, const connection_set& s) const {
    require_same_group(s);
    return sum(id, std::span<const element>(s.members()));
}

cyclotomic character_table::sum_product(character_id id, std::span<const element> a,
                                        std::span<const element> b) const {
    const std::vector<cyclotomic>& row = values_[ordinal(id)];
    std::vector<long long> hist(g_.order(), 0);
    for (const element& x : a)
        for (const element& y : b) ++hist[g_.index_of(g_.mul(x, y))];
    cyclotomic acc(ctx_);
    for (int idx = 0; idx < g_.order(); ++idx)
        if (hist[idx] != 0) acc.add_scaled(bigint(hist[idx]), row[idx]);
    return acc;
}

cyclotomic character_table::sum_product(character_id id, const connection_set& a,
                                        const connection_set& b) const {
    require_same_group(a);
    require_same_group(b);
    return sum_product(id, std::span<const element>(a.members()),
                       std::span<const element>(b.members()));
}

rep_matrix character_table::generator_image_a(character_id id) const {
    const int n = g_.n();
    auto root = [&](long long t) { return root_of_unity(ctx_, t); };
    if (id.fam == character_id::family::linear) {
        rep_matrix m(ctx_, 1);
        const int j = id.index;
        if (n % 2 == 1)
            m.at(0, 0) = root(4LL * n * j);  // (-1)^j
        else
            m.at(0, 0) = root(j % 2 == 0 ? 0 : 4LL * n);
        return m;
    }
    rep_matrix m(ctx_, 2);
    const long long k = id.index;
    if (n % 2 == 1) {
        if (id.fam == character_id::family::phi) {
            m.at(0, 0) = root(8 * k);  // epsilon^k
            m.at(1, 1) = root(-8 * k);
        } else {
            const long long sign = 4LL * n * ((k + 1) % 2);  // (-1)^(h+1)
            m.at(0, 0) = root(4 * k + sign);
            m.at(1, 1) = root(-4 * k + sign);
        }
    } else {
        m.at(0, 0) = root(4 * k);  // xi^k
        m.at(1, 1) = root(-4 * k);
    }
    return m;
}

rep_matrix character_table::generator_image_b(character_id id) const {
    const int n = g_.n();
    auto root = [&](long long t) { return root_of_unity(ctx_, t); };
    if (id.fam == character_id::family::linear) {
        rep_matrix m(ctx_, 1);
        const int j = id.index;
        if (n % 2 == 1)
            m.at(0, 0) = root((long long)n * j);  // omega^j
        else
            m.at(0, 0) = root((long long)n * (j % 2 == 0 ? j : j - 1));
        return m;
    }
    rep_matrix m(ctx_, 2);
    const int k = id.index;
    if (n % 2 == 1) {
        if (id.fam == character_id::family::phi) {
            m.at(0, 1) = root(k % 2 == 0 ? 0 : 4LL * n);  // (-1)^k
            m.at(1, 0) = root(0);
        } else {
            m.at(0, 1) = root(0);
            m.at(1, 0) = root(k % 2 == 1 ? 2LL * n : 6LL * n);  // i resp. -i
        }
    } else {
        if (id.fam == character_id::family::phi)
            m.at(0, 1) = root(k % 2 == 0 ? 0 : 2LL * n);  // 1 resp. i
        else
            m.at(0, 1) = root(k % 2 == 0 ? 4LL * n : 6LL * n);  // -1 resp. -i
        m.at(1, 0) = root(0);
    }
    return m;
}

rep_matrix character_table::representation(character_id id, element x) const {
    ordinal(id);
    x = g_.make(x.r, x.j);
    const rep_matrix a = generator_image_a(id);
    const rep_matrix b = generator_image_b(id);
    rep_matrix out = rep_matrix::identity(ctx_, a.dim());
    for (int i = 0; i < x.r; ++i) out = out * a;
    for (int i = 0; i < x.j; ++i) out = out * b;
    return out;
}

}  // namespace t8n
