#include "enriques/mod2_criterion.hpp"

namespace enriques {

namespace {

long check_odd(long n) {
    if (n < 1 || n % 2 == 0) throw InputError("mod-2 criterion requires n odd");
    return n;
}

F2Vec u_part_mod2(const LatticeVector& v) {
    const std::size_t r = v.size();
    return f2::reduce({v[r - 2], v[r - 1]});
}

}  // namespace

std::size_t k3n_rank(long n) { return check_odd(n) == 1 ? 22 : 23; }

F2Vec epsilon(long n) {
    F2Vec v(k3n_rank(n), 0);
    v[v.size() - 2] = 1;
    v[v.size() - 1] = 1;
    return v;
}

std::vector<F2Vec> invariant_mod2_subspace(long n) {
    CyclicGModule m = k3n_module(check_odd(n));
    // mod 2, 1 - sigma and 1 + sigma coincide
    IntMatrix one_minus = m.one_minus_sigma();
    std::vector<F2Vec> mat(m.rank, F2Vec(m.rank, 0));
    for (std::size_t i = 0; i < m.rank; ++i)
        for (std::size_t j = 0; j < m.rank; ++j)
            mat[i][j] = static_cast<int>(mpz_tstbit(one_minus(i, j).get_mpz_t(), 0));
    return f2::kernel(mat, m.rank);
}

std::vector<F2Vec> image_pullback_mod2(long n) {
    const std::size_t r = k3n_rank(n);
    std::vector<F2Vec> basis;
    for (std::size_t i = 0; i < 10; ++i) {
        F2Vec v(r, 0);
        v[i] = 1;
        v[10 + i] = 1;
        basis.push_back(std::move(v));
    }
    if (n > 1) {
        F2Vec d(r, 0);
        d[20] = 1;
        basis.push_back(std::move(d));
    }
    basis.push_back(epsilon(n));
    return basis;
}

bool in_image_pullback_mod2(long n, const F2Vec& v) {
    if (v.size() != k3n_rank(n)) throw InputError("vector dimension mismatch");
    return f2::in_span(image_pullback_mod2(n), v);
}

bool in_kernel_pushforward_U2(const F2Vec& u2) {
    if (u2.size() != 2) throw InputError("expected a vector in U mod 2");
    return (u2[0] == 0 && u2[1] == 0) || (u2[0] == 1 && u2[1] == 1);
}

bool condition_anti_qmod4(long n, const LatticeVector& lambda) {
    CyclicGModule m = k3n_module(check_odd(n));
    if (lambda.size() != m.rank) throw InputError("vector dimension mismatch");
    IntVec image = m.action.apply(lambda);
    for (std::size_t i = 0; i < m.rank; ++i)
        if (image[i] != -lambda[i]) return false;
    Int qq = q(*m.lattice, lambda);
    Int rem = ((qq % 4) + 4) % 4;
    return rem == 2;
}

bool condition_kernel_not_coboundary(long n, const LatticeVector& lambda) {
    CyclicGModule m = k3n_module(check_odd(n));
    if (lambda.size() != m.rank) throw InputError("vector dimension mismatch");
    IntVec image = m.action.apply(lambda);
    for (std::size_t i = 0; i < m.rank; ++i)
        if (image[i] != -lambda[i]) return false;
    if (!in_kernel_pushforward_U2(u_part_mod2(lambda))) return false;
    return !solve(m.one_minus_sigma(), lambda).has_value();
}

VanishingResult vanishing_criterion(long n, const std::vector<LatticeVector>& picard_generators) {
    CyclicGModule m = k3n_module(check_odd(n));
    IntMatrix gens = IntMatrix::from_columns(m.rank, picard_generators);
    for (const LatticeVector& g : picard_generators) {
        if (g.size() != m.rank) throw InputError("generator dimension mismatch");
        if (!solve(gens, m.action.apply(g)))
            throw PreconditionError("picard generators do not span a sigma-stable sublattice");
    }
    IntMatrix span = column_span_basis(gens);
    IntMatrix one_plus = IntMatrix::identity(m.rank) + m.action;
    IntMatrix anti = span * kernel_basis(one_plus * span);  // anti-invariant part of the span
    std::vector<F2Vec> u_parts;
    for (std::size_t j = 0; j < anti.cols(); ++j) u_parts.push_back(u_part_mod2(anti.column(j)));
    auto coeffs = f2::solve_span(u_parts, {1, 1});
    if (!coeffs) return {};
    LatticeVector witness(m.rank, 0);
    for (std::size_t j = 0; j < anti.cols(); ++j) {
        if (!(*coeffs)[j]) continue;
        IntVec c = anti.column(j);
        for (std::size_t i = 0; i < m.rank; ++i) witness[i] += c[i];
    }
    return {true, std::move(witness)};
}

}  // namespace enriques
