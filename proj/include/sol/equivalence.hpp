#pragma once

#include "sol/lattice.hpp"

#include <array>
#include <optional>
#include <utility>
#include <vector>

namespace sol {

/// Basis-change matrix (u v; w wbar) with determinant +-1.
struct UnimodularMatrix {
    long u = 1, v = 0, w = 0, wbar = 1;

    long det() const { return u * wbar - v * w; }
    UnimodularMatrix inverse() const;
    bool operator==(const UnimodularMatrix&) const = default;
};

/// U^-1 Phi U, exact; trace and determinant are preserved.
LatticeMatrix conjugate_matrix(const LatticeMatrix& phi, const UnimodularMatrix& U);

/// All (p, q, r) with 0 <= p <= N/2, q > 0, q r = p(N - p) - 1.
std::vector<std::array<long, 3>> candidate_parameters(long N);

enum class SearchOutcome { Equivalent, NotFoundWithinBound, TraceMismatch };

struct SearchResult {
    SearchOutcome outcome;
    std::optional<UnimodularMatrix> witness;
    long bound = 0;
};

/// Exhaustive scan over unimodular matrices with entries bounded in
/// absolute value; a miss is only a bounded statement, never a proof of
/// inequivalence.
SearchResult equivalence_search(const LatticeMatrix& a, const LatticeMatrix& b, long bound);

struct EquivalenceClass {
    std::array<long, 3> representative;           // minimal (p, q, r) member
    std::vector<std::array<long, 3>> members;
    std::vector<std::pair<std::array<long, 3>, UnimodularMatrix>> witnesses;  // member -> rep
};

struct Partition {
    long N = 0;
    long bound = 0;
    std::vector<EquivalenceClass> classes;
};

/// Groups the candidate parameters by pairwise bounded conjugacy search;
/// deterministic ordering independent of any internal parallelism.
Partition class_representatives(long N, long bound);

}  // namespace sol
