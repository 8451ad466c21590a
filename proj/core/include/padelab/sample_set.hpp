#ifndef PADELAB_SAMPLE_SET_HPP
#define PADELAB_SAMPLE_SET_HPP

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "padelab/errors.hpp"
#include "padelab/scalar.hpp"

namespace padelab {

/// Deterministic polar grid over a closed disk: `density` rings of
/// 4*density angles each, plus the center.
struct DiskDescriptor {
    Complex center;
    double radius = 0.0;
    int density = 16;
};

/// Equispaced points on a circle.
struct CircleDescriptor {
    Complex center;
    double radius = 0.0;
    int count = 0;
};

/// Polar grid between two radii, boundary circles included.
struct AnnulusDescriptor {
    Complex center;
    double r_inner = 0.0;
    double r_outer = 0.0;
    int density = 16;
};

/// Explicit list of points.
struct PointListDescriptor {
    std::vector<Complex> points;
};

using Descriptor =
    std::variant<DiskDescriptor, CircleDescriptor, AnnulusDescriptor, PointListDescriptor>;

/// Finite point cloud standing in for a compact set. Sup-norms over the
/// set are maxima over these samples; the bounds produced by the
/// perturbation constructors hold pointwise, so sample-level checks are
/// faithful wherever they are evaluated.
struct SampleSet {
    std::vector<Complex> points;
    std::string label;
    Descriptor descriptor;
};

/// Builds the deterministic grid for a descriptor. Identical descriptors
/// yield identical point lists.
SampleSet build(const Descriptor& descriptor, std::string label = "");

/// Region for exhaustion by closed disks of growing radius m.
struct PlaneRegion {};
struct DiskRegion {
    Complex center;
    double radius = 0.0;
};
struct AnnulusRegion {
    Complex center;
    double r_inner = 0.0;
    double r_outer = 0.0;
};
/// The plane with finitely many open disks removed.
struct PlaneMinusDisksRegion {
    std::vector<DiskRegion> holes;
};
using Region = std::variant<PlaneRegion, DiskRegion, AnnulusRegion, PlaneMinusDisksRegion>;

/// Sample grid for the intersection of the closed region with the closed
/// disk of radius m about the origin. Monotone in m: the truncated region
/// for m is contained in the one for m+1.
SampleSet exhaustion(const Region& region, int m, int density = 16);

/// Anything point-evaluable together with its derivatives: maps (z, l) to
/// the l-th derivative value, throwing PoleAtPoint where undefined.
using EvalFn = std::function<Complex(Complex, int)>;

/// Max over the samples of |a^(l) - b^(l)|; nullopt (the pole flag) if
/// either side hits a pole on the set. A finite result therefore certifies
/// that every sample evaluation succeeded.
std::optional<double> sup_diff(const EvalFn& a, const EvalFn& b, const SampleSet& k, int ell);

} // namespace padelab

#endif
