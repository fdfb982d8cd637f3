#include "enriques/norm_descent.hpp"

namespace enriques {

IntVec partial_norm(const CyclicGModule& M, const IntVec& c, unsigned k) {
    if (c.size() != M.rank) throw InputError("class dimension mismatch");
    if (k > M.order) throw InputError("partial norm index exceeds the group order");
    IntVec acc(M.rank);
    IntVec cur = c;
    for (unsigned i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < M.rank; ++j) acc[j] += cur[j];
        if (i + 1 < k) cur = M.action.apply(cur);
    }
    return acc;
}

bool norm_trivial(const CyclicGModule& M, const IntVec& c) {
    for (const Int& x : partial_norm(M, c, M.order))
        if (x != 0) return false;
    return true;
}

std::optional<IntVec> descent_trivial(const CyclicGModule& M, const IntVec& c) {
    if (!norm_trivial(M, c)) throw PreconditionError("class not in norm kernel");
    auto m = solve(M.one_minus_sigma(), c);
    if (!m) return std::nullopt;
    return reduce_mod_lattice(*m, invariants_sublattice(M));
}

IntVec bundle_class(const CyclicGModule& M, const IntVec& c) {
    if (!norm_trivial(M, c)) throw PreconditionError("class not in norm kernel");
    IntVec acc(M.rank);
    for (unsigned k = 0; k < M.order; ++k) {
        IntVec nk = partial_norm(M, c, k);
        for (std::size_t j = 0; j < M.rank; ++j) acc[j] += nk[j];
    }
    return acc;
}

AbelianGroupInvariants brauer_pullback_kernel(const CyclicGModule& M,
                                              const std::vector<IntVec>& ns_generators) {
    IntMatrix gens = IntMatrix::from_columns(M.rank, ns_generators);
    for (const IntVec& g : ns_generators)
        if (!solve(gens, M.action.apply(g)))
            throw PreconditionError("generators do not span a sigma-stable sublattice");
    IntMatrix span = column_span_basis(gens);
    IntMatrix norm = norm_endomorphism(M);
    IntMatrix inter = span * kernel_basis(norm * span);  // Ker N meet span
    return subquotient_invariants(inter, M.one_minus_sigma() * span);
}

}  // namespace enriques
