#pragma once

#include "sol/symmetry.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sol {

struct UnclassifiableLattice : LatticeError {
    using LatticeError::LatticeError;
};

enum class Bravais {
    I1, I2, I3, I4,
    II1, II2, II3, II4, II5, II6, II7, II8, II9, II10, II11, II12, II13
};

constexpr int kBravaisCount = 17;
Bravais bravais_from_index(int i);

struct BravaisInfo {
    const char* label;
    int main_case;  // 1 or 2
    PointGroup group;
    bool has_z_sublattice;
    std::optional<Centering> base;  // nullopt: unconstrained
    bool zero_reflection_word;      // vanishing (tau3^delta) tau3 configuration
};

const BravaisInfo& info(Bravais t);
const std::string& to_string(Bravais t);
Bravais bravais_from_string(const std::string& label);

/// Fixed decision order: main case by offset class, then point group, then
/// the vanishing reflection word, then the vertical sublattice line, then
/// centering.  All branch tests are exact and invariant under basis change,
/// base rescaling, and offset translation by base vectors.
Bravais classify(const SolLattice& L);

struct ClassifyReport {
    Bravais type;
    int main_case;
    PointGroup group;
    bool z_sublattice;
    Centering base;
    std::optional<Certificate> cert;
};

ClassifyReport classify_report(const SolLattice& L);

struct RealizeResult {
    std::optional<SolLattice> lattice;
    std::string reason;  // set when unrealizable

    bool ok() const { return lattice.has_value(); }
};

/// Constructs an example lattice of the requested type for the given trace
/// parameter, or explains why none exists.  Every returned lattice has been
/// validated and classified back to the requested type.
RealizeResult realize_type(long N, Bravais t);

std::vector<Bravais> realizable_types(long N);

}  // namespace sol
