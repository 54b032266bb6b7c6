#include "sol/equivalence.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace sol {

UnimodularMatrix UnimodularMatrix::inverse() const {
    long d = det();
    if (d != 1 && d != -1) throw LatticeError("matrix is not unimodular");
    return {d * wbar, -d * v, -d * w, d * u};
}

LatticeMatrix conjugate_matrix(const LatticeMatrix& phi, const UnimodularMatrix& U) {
    UnimodularMatrix V = U.inverse();
    // V * phi
    long a = V.u * phi.p + V.v * phi.r;
    long b = V.u * phi.q + V.v * phi.s;
    long c = V.w * phi.p + V.wbar * phi.r;
    long d = V.w * phi.q + V.wbar * phi.s;
    return {a * U.u + b * U.w, a * U.v + b * U.wbar, c * U.u + d * U.w, c * U.v + d * U.wbar};
}

std::vector<std::array<long, 3>> candidate_parameters(long N) {
    if (N < 3) throw NotALatticeParameter("trace parameter must be at least 3");
    std::vector<std::array<long, 3>> out;
    for (long p = 0; 2 * p <= N; ++p) {
        long v = p * (N - p) - 1;
        long av = v < 0 ? -v : v;
        for (long q = 1; q <= av; ++q) {
            if (av % q == 0) out.push_back({p, q, v / q});
        }
    }
    return out;
}

namespace {

bool conjugates_to(const LatticeMatrix& a, const LatticeMatrix& b, const UnimodularMatrix& U) {
    // a U == U b  <=>  U^-1 a U == b
    long l11 = a.p * U.u + a.q * U.w, l12 = a.p * U.v + a.q * U.wbar;
    long l21 = a.r * U.u + a.s * U.w, l22 = a.r * U.v + a.s * U.wbar;
    long r11 = U.u * b.p + U.v * b.r, r12 = U.u * b.q + U.v * b.s;
    long r21 = U.w * b.p + U.wbar * b.r, r22 = U.w * b.q + U.wbar * b.s;
    return l11 == r11 && l12 == r12 && l21 == r21 && l22 == r22;
}

UnimodularMatrix canonical_sign(UnimodularMatrix U) {
    long lead[4] = {U.u, U.v, U.w, U.wbar};
    for (long v : lead) {
        if (v > 0) return U;
        if (v < 0) return {-U.u, -U.v, -U.w, -U.wbar};
    }
    return U;
}

}  // namespace

SearchResult equivalence_search(const LatticeMatrix& a, const LatticeMatrix& b, long bound) {
    if (a.trace() != b.trace()) return {SearchOutcome::TraceMismatch, std::nullopt, bound};
    // Shells of increasing max-entry give the smallest witness first.
    for (long M = 0; M <= bound; ++M) {
        auto in_shell = [&](const UnimodularMatrix& U) {
            long m = std::max({std::abs(U.u), std::abs(U.v), std::abs(U.w), std::abs(U.wbar)});
            return m == M;
        };
        for (long u = -M; u <= M; ++u) {
            for (long v = -M; v <= M; ++v) {
                for (long w = -M; w <= M; ++w) {
                    if (u != 0) {
                        for (long det : {1L, -1L}) {
                            long num = det + v * w;
                            if (num % u != 0) continue;
                            long wbar = num / u;
                            if (std::abs(wbar) > M) continue;
                            UnimodularMatrix U{u, v, w, wbar};
                            if (!in_shell(U)) continue;
                            if (conjugates_to(a, b, U))
                                return {SearchOutcome::Equivalent, canonical_sign(U), bound};
                        }
                    } else {
                        if (v * w != 1 && v * w != -1) continue;
                        for (long wbar = -M; wbar <= M; ++wbar) {
                            UnimodularMatrix U{0, v, w, wbar};
                            if (!in_shell(U)) continue;
                            if (conjugates_to(a, b, U))
                                return {SearchOutcome::Equivalent, canonical_sign(U), bound};
                        }
                    }
                }
            }
        }
    }
    return {SearchOutcome::NotFoundWithinBound, std::nullopt, bound};
}

Partition class_representatives(long N, long bound) {
    std::vector<std::array<long, 3>> cands = candidate_parameters(N);
    std::sort(cands.begin(), cands.end());
    size_t n = cands.size();
    std::vector<size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](size_t i) {
        while (parent[i] != i) i = parent[i] = parent[parent[i]];
        return i;
    };
    auto phi_of = [&](const std::array<long, 3>& c) {
        return LatticeMatrix{c[0], c[1], c[2], N - c[0]};
    };
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i + 1; j < n; ++j) {
            if (find(i) == find(j)) continue;
            SearchResult res = equivalence_search(phi_of(cands[i]), phi_of(cands[j]), bound);
            if (res.outcome == SearchOutcome::Equivalent) parent[find(j)] = find(i);
        }
    }
    Partition part{N, bound, {}};
    std::vector<std::pair<size_t, std::vector<size_t>>> groups;
    for (size_t i = 0; i < n; ++i) {
        size_t root = find(i);
        auto it = std::find_if(groups.begin(), groups.end(),
                               [&](const auto& g) { return g.first == root; });
        if (it == groups.end())
            groups.push_back({root, {i}});
        else
            it->second.push_back(i);
    }
    for (const auto& [root, idxs] : groups) {
        (void)root;
        EquivalenceClass cls;
        cls.representative = cands[idxs.front()];
        for (size_t i : idxs) cls.members.push_back(cands[i]);
        for (size_t i : idxs) {
            if (cands[i] == cls.representative) continue;
            SearchResult res =
                equivalence_search(phi_of(cands[i]), phi_of(cls.representative), bound);
            if (res.outcome == SearchOutcome::Equivalent)
                cls.witnesses.push_back({cands[i], *res.witness});
        }
        part.classes.push_back(std::move(cls));
    }
    std::sort(part.classes.begin(), part.classes.end(),
              [](const EquivalenceClass& a, const EquivalenceClass& b) {
                  return a.representative < b.representative;
              });
    return part;
}

}  // namespace sol
