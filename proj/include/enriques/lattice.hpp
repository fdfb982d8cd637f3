#pragma once
#include <optional>
#include <string>
#include <vector>

#include "enriques/int_matrix.hpp"

namespace enriques {

using LatticeVector = IntVec;

/// Finite-rank integral lattice: a free Z-module with a fixed basis and a
/// symmetric Gram matrix.
struct Lattice {
    std::size_t rank = 0;
    IntMatrix gram;
    std::string label;

    Lattice() = default;
    Lattice(IntMatrix g, std::string name = "");

    bool is_even() const;
};

Lattice hyperbolic_U();
Lattice e8_minus();
Lattice rank_one(const Int& k);
Lattice direct_sum(const std::vector<Lattice>& parts);

Int q(const Lattice& L, const LatticeVector& v);
Int bilinear(const Lattice& L, const LatticeVector& v, const LatticeVector& w);

using F2Vec = std::vector<int>;  // entries 0/1

/// Mod-2 reduction of an even lattice with the quadratic refinement
/// qtilde(v) = (q(v)/2) mod 2. Stored on basis vectors; evaluation on
/// arbitrary vectors goes through the refinement law.
struct F2QuadSpace {
    std::size_t dim = 0;
    std::vector<F2Vec> bilinear;  // gram mod 2
    F2Vec qtilde_basis;           // (gram diagonal / 2) mod 2

    int qtilde(const F2Vec& v) const;
    int pairing(const F2Vec& v, const F2Vec& w) const;
};

F2QuadSpace mod2_reduce(const Lattice& L);

// Small GF(2) utilities shared by the mod-2 machinery.
namespace f2 {

F2Vec reduce(const IntVec& v);
F2Vec add(const F2Vec& a, const F2Vec& b);
bool is_zero(const F2Vec& v);

/// Row-reduce in place, returning the rank.
std::size_t rank(std::vector<F2Vec> rows);

bool in_span(const std::vector<F2Vec>& basis, const F2Vec& v);

/// Coefficients expressing v in the given spanning set, if any.
std::optional<F2Vec> solve_span(const std::vector<F2Vec>& vectors, const F2Vec& v);

/// Basis of {x : A x = 0} over GF(2), A given by rows.
std::vector<F2Vec> kernel(const std::vector<F2Vec>& rows, std::size_t ncols);

}  // namespace f2

}  // namespace enriques
