#pragma once
#include <string>

#include "enriques/constructions.hpp"

namespace enriques {

/// How the degree-3 differential acts on H^1(G, H^2) for a family:
/// either it surjects onto Z/d (Hilbert-scheme case) or it vanishes
/// (Kummer cases).
enum class DifferentialMode { SurjectiveOntoZd, Zero };

std::string mode_name(DifferentialMode m);

struct BrauerResult {
    FamilySpec spec;
    AbelianGroupInvariants h1;  // H^1(G, H^2(X, Z))
    DifferentialMode mode = DifferentialMode::Zero;
    AbelianGroupInvariants group;  // the Brauer group
    bool conditional = false;      // true when torsion-freeness of H^3 is unproven
    std::string note;
    std::string citation;
};

BrauerResult brauer_group(const FamilySpec& spec);

/// Fixed table of the four families with parameters, H^1, mode, Brauer
/// group, conditionality and citations. Byte-deterministic.
std::string reproduction_report_markdown();
std::string reproduction_report_json();

}  // namespace enriques
