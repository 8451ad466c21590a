#include "padelab/sample_set.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace padelab {

namespace {

constexpr double kTau = 2.0 * std::numbers::pi;

std::vector<Complex> ring(Complex center, double radius, int angles) {
    std::vector<Complex> pts;
    pts.reserve(static_cast<std::size_t>(angles));
    for (int j = 0; j < angles; ++j) {
        double theta = kTau * static_cast<double>(j) / static_cast<double>(angles);
        pts.emplace_back(center + radius * Complex(std::cos(theta), std::sin(theta)));
    }
    return pts;
}

std::vector<Complex> make_points(const DiskDescriptor& d) {
    if (d.radius <= 0.0) throw DescriptorError("disk radius must be positive");
    if (d.density < 1) throw DescriptorError("grid density must be positive");
    std::vector<Complex> pts{d.center};
    const int angles = 4 * d.density;
    for (int i = 1; i <= d.density; ++i) {
        double r = d.radius * static_cast<double>(i) / static_cast<double>(d.density);
        auto shell = ring(d.center, r, angles);
        pts.insert(pts.end(), shell.begin(), shell.end());
    }
    return pts;
}

std::vector<Complex> make_points(const CircleDescriptor& c) {
    if (c.radius <= 0.0) throw DescriptorError("circle radius must be positive");
    if (c.count < 1) throw DescriptorError("circle needs at least one point");
    return ring(c.center, c.radius, c.count);
}

std::vector<Complex> make_points(const AnnulusDescriptor& a) {
    if (a.r_inner <= 0.0) throw DescriptorError("annulus inner radius must be positive");
    if (a.r_inner >= a.r_outer) throw DescriptorError("annulus needs r_inner < r_outer");
    if (a.density < 1) throw DescriptorError("grid density must be positive");
    std::vector<Complex> pts;
    const int angles = 4 * a.density;
    for (int i = 0; i <= a.density; ++i) {
        double r = a.r_inner +
                   (a.r_outer - a.r_inner) * static_cast<double>(i) / static_cast<double>(a.density);
        auto shell = ring(a.center, r, angles);
        pts.insert(pts.end(), shell.begin(), shell.end());
    }
    return pts;
}

std::vector<Complex> make_points(const PointListDescriptor& p) {
    if (p.points.empty()) throw DescriptorError("point list must be nonempty");
    return p.points;
}

} // namespace

SampleSet build(const Descriptor& descriptor, std::string label) {
    auto pts = std::visit([](const auto& d) { return make_points(d); }, descriptor);
    return {std::move(pts), std::move(label), descriptor};
}

SampleSet exhaustion(const Region& region, int m, int density) {
    if (m < 1) throw ArgumentError("exhaustion index must be at least 1");
    const double radius = static_cast<double>(m);

    if (std::holds_alternative<PlaneRegion>(region))
        return build(DiskDescriptor{Complex{0.0, 0.0}, radius, density}, "K_" + std::to_string(m));

    if (const auto* disk = std::get_if<DiskRegion>(&region)) {
        auto base = build(DiskDescriptor{disk->center, disk->radius, density},
                          "K_" + std::to_string(m));
        if (std::abs(disk->center) + disk->radius <= radius) return base;
        // Truncate by filtering the region's own grid; the base grid is
        // independent of m, so the kept points grow monotonically with m.
        std::vector<Complex> kept;
        for (auto z : base.points)
            if (std::abs(z) <= radius) kept.push_back(z);
        if (kept.empty()) throw DescriptorError("truncated region contains no samples");
        base.points = std::move(kept);
        return base;
    }

    if (const auto* ann = std::get_if<AnnulusRegion>(&region)) {
        auto base = build(AnnulusDescriptor{ann->center, ann->r_inner, ann->r_outer, density},
                          "K_" + std::to_string(m));
        if (std::abs(ann->center) + ann->r_outer <= radius) return base;
        std::vector<Complex> kept;
        for (auto z : base.points)
            if (std::abs(z) <= radius) kept.push_back(z);
        if (kept.empty()) throw DescriptorError("truncated region contains no samples");
        base.points = std::move(kept);
        return base;
    }

    const auto& holes = std::get<PlaneMinusDisksRegion>(region).holes;
    if (holes.size() == 1 && holes[0].center == Complex{0.0, 0.0}) {
        if (holes[0].radius >= radius)
            throw DescriptorError("truncated region contains no samples");
        return build(AnnulusDescriptor{Complex{0.0, 0.0}, holes[0].radius, radius, density},
                     "K_" + std::to_string(m));
    }
    auto base = build(DiskDescriptor{Complex{0.0, 0.0}, radius, density}, "K_" + std::to_string(m));
    std::vector<Complex> kept;
    for (auto z : base.points) {
        bool inside_hole = false;
        for (const auto& h : holes)
            if (std::abs(z - h.center) < h.radius) { inside_hole = true; break; }
        if (!inside_hole) kept.push_back(z);
    }
    if (kept.empty()) throw DescriptorError("truncated region contains no samples");
    base.points = std::move(kept);
    return base;
}

std::optional<double> sup_diff(const EvalFn& a, const EvalFn& b, const SampleSet& k, int ell) {
    double sup = 0.0;
    for (auto z : k.points) {
        try {
            sup = std::max(sup, std::abs(a(z, ell) - b(z, ell)));
        } catch (const PoleAtPoint&) {
            return std::nullopt;
        }
    }
    return sup;
}

} // namespace padelab
