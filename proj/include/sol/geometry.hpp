#pragma once

#include "sol/lattice.hpp"

#include <map>
#include <string>
#include <vector>

namespace sol {

struct FloatPoint {
    double x = 0, y = 0, z = 0;
};

struct CurveSamples {
    std::vector<FloatPoint> points;
    std::vector<double> params;  // in [0, 1], same length as points
};

/// Vertices of the fundamental parallelepiped in the affine model: the
/// base cell O, P, P', Q, its sheared copies Q', P'', and the translates
/// P3 (= O^tau3), P^tau3, P'^tau3, Q^tau3.  Exact values are converted to
/// doubles at the end.
std::map<std::string, FloatPoint> parallelepiped_vertices(const SolLattice& L);

/// Closed-form sampling of the translation curve from start to
/// start * target: relative to start the curve is
///   x(t) = a (1 - e^{-ct}) / (1 - e^{-c}),
///   y(t) = b (e^{ct} - 1) / (e^{c} - 1),  z(t) = c t,
/// with c = k log(lambda); c = 0 degenerates to the straight segment.
CurveSamples translation_curve(const FloatPoint& start, const SolTranslation& target, int n);

/// Composite quadrature of ds^2 = e^{2z} dx^2 + e^{-2z} dy^2 + dz^2 along
/// the samples, second order in the sample count.
double arclength(const CurveSamples& samples);

enum class ExportFormat { Json, Obj };

/// Deterministic byte output: vertex map plus the four bent side curves.
std::string export_geometry(const SolLattice& L, ExportFormat format, int samples = 64);

}  // namespace sol
