#include "enriques/lattice.hpp"

namespace enriques {

Lattice::Lattice(IntMatrix g, std::string name)
    : rank(g.rows()), gram(std::move(g)), label(std::move(name)) {
    if (gram.rows() != gram.cols()) throw InputError("gram matrix must be square");
    for (std::size_t i = 0; i < rank; ++i)
        for (std::size_t j = i + 1; j < rank; ++j)
            if (gram(i, j) != gram(j, i)) throw InputError("gram matrix must be symmetric");
}

bool Lattice::is_even() const {
    for (std::size_t i = 0; i < rank; ++i)
        if (gram(i, i) % 2 != 0) return false;
    return true;
}

Lattice hyperbolic_U() {
    return Lattice(IntMatrix::from_rows({{0, 1}, {1, 0}}), "U");
}

Lattice e8_minus() {
    // Negated Cartan matrix of E8, simple-root basis, Bourbaki numbering:
    // chain 1-3-4-5-6-7-8 with node 2 attached to node 4.
    static const int edges[][2] = {{1, 3}, {2, 4}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}};
    IntMatrix g(8, 8);
    for (std::size_t i = 0; i < 8; ++i) g(i, i) = -2;
    for (const auto& e : edges) {
        g(e[0] - 1, e[1] - 1) = 1;
        g(e[1] - 1, e[0] - 1) = 1;
    }
    return Lattice(std::move(g), "E8(-1)");
}

Lattice rank_one(const Int& k) {
    IntMatrix g(1, 1);
    g(0, 0) = k;
    return Lattice(std::move(g), "<" + k.get_str() + ">");
}

Lattice direct_sum(const std::vector<Lattice>& parts) {
    IntMatrix g(0, 0);
    std::string label;
    for (const Lattice& p : parts) {
        g = IntMatrix::block_diag(g, p.gram);
        if (!p.label.empty()) label += (label.empty() ? "" : " + ") + p.label;
    }
    return Lattice(std::move(g), std::move(label));
}

Int q(const Lattice& L, const LatticeVector& v) { return bilinear(L, v, v); }

Int bilinear(const Lattice& L, const LatticeVector& v, const LatticeVector& w) {
    if (v.size() != L.rank || w.size() != L.rank)
        throw InputError("bilinear: vector length does not match lattice rank");
    Int s = 0;
    for (std::size_t i = 0; i < L.rank; ++i) {
        if (v[i] == 0) continue;
        for (std::size_t j = 0; j < L.rank; ++j) s += v[i] * L.gram(i, j) * w[j];
    }
    return s;
}

int F2QuadSpace::pairing(const F2Vec& v, const F2Vec& w) const {
    int s = 0;
    for (std::size_t i = 0; i < dim; ++i) {
        if (!v[i]) continue;
        for (std::size_t j = 0; j < dim; ++j) s ^= v[i] & w[j] & bilinear[i][j];
    }
    return s;
}

int F2QuadSpace::qtilde(const F2Vec& v) const {
    if (v.size() != dim) throw InputError("qtilde: dimension mismatch");
    // refinement law: q(sum e_i) = sum q(e_i) + sum_{i<j} b(e_i, e_j)
    int s = 0;
    for (std::size_t i = 0; i < dim; ++i) {
        if (!v[i]) continue;
        s ^= qtilde_basis[i];
        for (std::size_t j = i + 1; j < dim; ++j) s ^= v[j] & bilinear[i][j];
    }
    return s;
}

F2QuadSpace mod2_reduce(const Lattice& L) {
    if (!L.is_even()) throw InputError("quadratic refinement undefined: lattice is not even");
    F2QuadSpace s;
    s.dim = L.rank;
    s.bilinear.assign(L.rank, F2Vec(L.rank, 0));
    s.qtilde_basis.assign(L.rank, 0);
    for (std::size_t i = 0; i < L.rank; ++i) {
        s.qtilde_basis[i] = static_cast<int>(mpz_tstbit(Int(L.gram(i, i) / 2).get_mpz_t(), 0));
        for (std::size_t j = 0; j < L.rank; ++j)
            s.bilinear[i][j] = static_cast<int>(mpz_tstbit(L.gram(i, j).get_mpz_t(), 0));
    }
    return s;
}

namespace f2 {

F2Vec reduce(const IntVec& v) {
    F2Vec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        r[i] = static_cast<int>(mpz_tstbit(v[i].get_mpz_t(), 0));
    return r;
}

F2Vec add(const F2Vec& a, const F2Vec& b) {
    F2Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] ^ b[i];
    return r;
}

bool is_zero(const F2Vec& v) {
    for (int x : v)
        if (x) return false;
    return true;
}

std::size_t rank(std::vector<F2Vec> rows) {
    std::size_t r = 0;
    const std::size_t n = rows.empty() ? 0 : rows[0].size();
    for (std::size_t col = 0; col < n && r < rows.size(); ++col) {
        std::size_t p = r;
        while (p < rows.size() && !rows[p][col]) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[r]);
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (i != r && rows[i][col]) rows[i] = add(rows[i], rows[r]);
        ++r;
    }
    return r;
}

std::optional<F2Vec> solve_span(const std::vector<F2Vec>& vectors, const F2Vec& v) {
    // Gaussian elimination on the system (vectors as columns) x = v,
    // with the identity appended to recover coefficients.
    const std::size_t m = v.size(), k = vectors.size();
    std::vector<F2Vec> aug(m, F2Vec(k + 1, 0));
    for (std::size_t j = 0; j < k; ++j) {
        if (vectors[j].size() != m) throw InputError("solve_span: length mismatch");
        for (std::size_t i = 0; i < m; ++i) aug[i][j] = vectors[j][i];
    }
    for (std::size_t i = 0; i < m; ++i) aug[i][k] = v[i];
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t col = 0; col < k && r < m; ++col) {
        std::size_t p = r;
        while (p < m && !aug[p][col]) ++p;
        if (p == m) continue;
        std::swap(aug[p], aug[r]);
        for (std::size_t i = 0; i < m; ++i)
            if (i != r && aug[i][col]) aug[i] = add(aug[i], aug[r]);
        pivot_col.push_back(col);
        ++r;
    }
    for (std::size_t i = r; i < m; ++i)
        if (aug[i][k]) return std::nullopt;
    F2Vec x(k, 0);
    for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = aug[i][k];
    return x;
}

bool in_span(const std::vector<F2Vec>& basis, const F2Vec& v) {
    return solve_span(basis, v).has_value();
}

std::vector<F2Vec> kernel(const std::vector<F2Vec>& rows, std::size_t ncols) {
    std::vector<F2Vec> a = rows;
    std::vector<std::size_t> pivot_of_col(ncols, SIZE_MAX);
    std::size_t r = 0;
    for (std::size_t col = 0; col < ncols && r < a.size(); ++col) {
        std::size_t p = r;
        while (p < a.size() && !a[p][col]) ++p;
        if (p == a.size()) continue;
        std::swap(a[p], a[r]);
        for (std::size_t i = 0; i < a.size(); ++i)
            if (i != r && a[i][col]) a[i] = add(a[i], a[r]);
        pivot_of_col[col] = r;
        ++r;
    }
    std::vector<F2Vec> basis;
    for (std::size_t col = 0; col < ncols; ++col) {
        if (pivot_of_col[col] != SIZE_MAX) continue;
        F2Vec v(ncols, 0);
        v[col] = 1;
        for (std::size_t c = 0; c < ncols; ++c)
            if (pivot_of_col[c] != SIZE_MAX) v[c] = a[pivot_of_col[c]][col];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace f2

}  // namespace enriques
