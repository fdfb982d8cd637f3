#include "enriques/cyclic_gmodule.hpp"

namespace enriques {

CyclicGModule::CyclicGModule(IntMatrix generator, unsigned d, std::optional<Lattice> form)
    : rank(generator.rows()), action(std::move(generator)), order(d), lattice(std::move(form)) {
    if (action.rows() != action.cols()) throw InputError("action matrix must be square");
    if (order == 0) throw InputError("group order must be >= 1");
    // The declared order need not be the exact order of the matrix (the
    // group may act non-faithfully, e.g. trivially on a summand), but
    // action^order must be the identity.
    if (!action.pow(order).is_identity())
        throw InputError("action^order is not the identity");
    if (lattice) {
        if (lattice->rank != rank) throw InputError("lattice rank does not match module rank");
        if (action.transpose() * lattice->gram * action != lattice->gram)
            throw InputError("action is not an isometry of the attached form");
    }
}

IntMatrix norm_endomorphism(const CyclicGModule& M) {
    IntMatrix n(M.rank, M.rank);
    IntMatrix p = IntMatrix::identity(M.rank);
    for (unsigned k = 0; k < M.order; ++k) {
        n = n + p;
        p = p * M.action;
    }
    return n;
}

IntMatrix invariants_sublattice(const CyclicGModule& M) {
    return kernel_basis(M.one_minus_sigma());
}

IntMatrix kernel_of_norm(const CyclicGModule& M) { return kernel_basis(norm_endomorphism(M)); }

AbelianGroupInvariants cohomology(const CyclicGModule& M, unsigned p) {
    if (p == 0) {
        AbelianGroupInvariants g;
        g.free_rank = invariants_sublattice(M).cols();
        return g;
    }
    if (p % 2 == 1) return subquotient_invariants(kernel_of_norm(M), M.one_minus_sigma());
    return subquotient_invariants(invariants_sublattice(M), norm_endomorphism(M));
}

}  // namespace enriques
