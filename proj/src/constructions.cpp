#include "enriques/constructions.hpp"

#include <algorithm>
#include <cctype>

namespace enriques {

std::string family_name(Family f) {
    switch (f) {
        case Family::En: return "En";
        case Family::Kn: return "Kn";
        case Family::Tn: return "Tn";
        case Family::Rn: return "Rn";
    }
    throw InputError("unknown family");
}

Family family_from_name(const std::string& name) {
    std::string s = name;
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    if (s == "en") return Family::En;
    if (s == "kn") return Family::Kn;
    if (s == "tn") return Family::Tn;
    if (s == "rn") return Family::Rn;
    throw InputError("unknown family '" + name + "' (expected En, Kn, Tn or Rn)");
}

FamilySpec::FamilySpec(Family f, long p) : family(f), param(p) {
    if (p < 1) throw InputError("family parameter must be positive");
    switch (f) {
        case Family::En:
            if (p % 2 == 0) throw InputError("En requires odd n >= 1");
            break;
        case Family::Kn:
            if (p % 2 == 0 || p < 3) throw InputError("Kn requires odd n >= 3");
            break;
        case Family::Tn:
        case Family::Rn:
            break;  // any m >= 1
    }
}

long FamilySpec::n() const {
    switch (family) {
        case Family::En:
        case Family::Kn: return param;
        case Family::Tn: return 3 * param - 1;
        case Family::Rn: return 4 * param - 1;
    }
    throw InputError("unknown family");
}

unsigned FamilySpec::index() const {
    switch (family) {
        case Family::En:
        case Family::Kn: return 2;
        case Family::Tn: return 3;
        case Family::Rn: return 4;
    }
    throw InputError("unknown family");
}

namespace {

// Swap the two F blocks, fix the middle coordinates, negate the final U.
IntMatrix swap_negate_action(std::size_t middle) {
    const std::size_t rank = 20 + middle + 2;
    IntMatrix a(rank, rank);
    for (std::size_t i = 0; i < 10; ++i) {
        a(i, 10 + i) = 1;
        a(10 + i, i) = 1;
    }
    for (std::size_t i = 20; i < 20 + middle; ++i) a(i, i) = 1;
    a(rank - 2, rank - 2) = -1;
    a(rank - 1, rank - 1) = -1;
    return a;
}

}  // namespace

CyclicGModule k3_enriques_module() {
    Lattice F = direct_sum({e8_minus(), hyperbolic_U()});
    Lattice L = direct_sum({F, F, hyperbolic_U()});
    L.label = "K3";
    return CyclicGModule(swap_negate_action(0), 2, std::move(L));
}

CyclicGModule k3n_module(long n) {
    if (n < 1 || n % 2 == 0) throw InputError("fixed point free requires n odd");
    if (n == 1) return k3_enriques_module();
    Lattice F = direct_sum({e8_minus(), hyperbolic_U()});
    Lattice L = direct_sum({F, F, rank_one(Int(-2 * (n - 1))), hyperbolic_U()});
    L.label = "K3[" + std::to_string(n) + "]";
    return CyclicGModule(swap_negate_action(1), 2, std::move(L));
}

CyclicGModule abelian_surface_module(unsigned d) {
    IntMatrix block(2, 2);
    switch (d) {
        case 2:
            block = IntMatrix::from_rows({{-1, 0}, {0, -1}});
            break;
        case 3:
            block = IntMatrix::from_rows({{0, -1}, {1, -1}});
            break;
        case 4:
            block = IntMatrix::from_rows({{0, -1}, {1, 0}});
            break;
        default: throw InputError("abelian surface action defined for d in {2,3,4}");
    }
    IntMatrix a = IntMatrix::identity(1);
    a = IntMatrix::block_diag(a, block);
    a = IntMatrix::block_diag(a, block);
    a = IntMatrix::block_diag(a, IntMatrix::identity(1));
    return CyclicGModule(std::move(a), d);
}

CyclicGModule kummer_module(long n, unsigned d) {
    if (n < 1) throw InputError("kummer_module requires n >= 1");
    if (d == 0 || (n + 1) % static_cast<long>(d) != 0)
        throw InputError("kummer_module requires d | n+1");
    CyclicGModule base = abelian_surface_module(d);
    // exceptional class: one more trivial coordinate
    IntMatrix a = IntMatrix::block_diag(base.action, IntMatrix::identity(1));
    return CyclicGModule(std::move(a), d);
}

CyclicGModule family_module(const FamilySpec& spec) {
    if (spec.family == Family::En) return k3n_module(spec.param);
    return kummer_module(spec.n(), spec.index());
}

}  // namespace enriques
