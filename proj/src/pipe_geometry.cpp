#include "pipeclimb/pipe_geometry.hpp"

#include <Eigen/Geometry>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace pipeclimb {

double segment_arc_length(const Segment& segment) {
    if (const auto* s = std::get_if<StraightSegment>(&segment)) {
        return s->length;
    }
    const auto& b = std::get<BendSegment>(segment);
    return b.bend_radius * b.bend_angle;
}

namespace {

void validate_segment(const Segment& segment, double inner_radius, std::size_t index) {
    std::ostringstream where;
    where << "segment " << index << ": ";
    if (const auto* s = std::get_if<StraightSegment>(&segment)) {
        if (!(s->length > 0.0)) {
            throw std::invalid_argument(where.str() + "straight length must be > 0");
        }
        return;
    }
    const auto& b = std::get<BendSegment>(segment);
    if (!(b.bend_radius > inner_radius)) {
        throw std::invalid_argument(where.str() +
                                    "bend radius must exceed the pipe inner radius");
    }
    if (!(b.bend_angle > 0.0) || b.bend_angle > std::numbers::pi) {
        throw std::invalid_argument(where.str() + "bend angle must be in (0, pi]");
    }
    if (b.clearance_delta < 0.0) {
        throw std::invalid_argument(where.str() + "clearance delta must be >= 0");
    }
}

CenterlinePose origin_pose() {
    return CenterlinePose{Vec3::Zero(), Vec3::UnitZ(), Vec3::UnitX(), Vec3::UnitY()};
}

// Pose inside one segment at local arc coordinate u from the segment's entry
// pose. Straights translate along the tangent; bends rotate the frame about
// the bend-plane normal while the position sweeps the torus centerline.
CenterlinePose advance_pose(const CenterlinePose& entry, const Segment& segment, double u) {
    if (const auto* s = std::get_if<StraightSegment>(&segment)) {
        (void)s;
        CenterlinePose out = entry;
        out.position = entry.position + u * entry.tangent;
        return out;
    }
    const auto& b = std::get<BendSegment>(segment);
    const double angle = u / b.bend_radius;
    // Direction from the centerline toward the center of curvature.
    const Vec3 center_dir =
        std::cos(b.plane_roll) * entry.normal + std::sin(b.plane_roll) * entry.binormal;
    const Vec3 axis = entry.tangent.cross(center_dir).normalized();
    const Eigen::AngleAxisd rot(angle, axis);
    CenterlinePose out;
    out.position = entry.position + b.bend_radius * std::sin(angle) * entry.tangent +
                   b.bend_radius * (1.0 - std::cos(angle)) * center_dir;
    out.tangent = rot * entry.tangent;
    out.normal = rot * entry.normal;
    out.binormal = rot * entry.binormal;
    return out;
}

}  // namespace

PipeNetwork::PipeNetwork(double inner_radius, std::vector<Segment> segments)
    : inner_radius_(inner_radius), segments_(std::move(segments)) {
    if (!(inner_radius_ > 0.0)) {
        throw std::invalid_argument("pipe inner radius must be > 0");
    }
    if (segments_.empty()) {
        throw std::invalid_argument("pipe network needs at least one segment");
    }
    cumulative_.reserve(segments_.size() + 1);
    entry_poses_.reserve(segments_.size());
    cumulative_.push_back(0.0);
    CenterlinePose pose = origin_pose();
    for (std::size_t i = 0; i < segments_.size(); ++i) {
        validate_segment(segments_[i], inner_radius_, i);
        entry_poses_.push_back(pose);
        const double len = segment_arc_length(segments_[i]);
        cumulative_.push_back(cumulative_.back() + len);
        pose = advance_pose(pose, segments_[i], len);
    }
}

std::pair<std::size_t, double> PipeNetwork::segment_at(double s) const {
    if (!(s >= 0.0) || s > total_length()) {
        std::ostringstream msg;
        msg << "arc position " << s << " outside [0, " << total_length() << "]";
        throw std::domain_error(msg.str());
    }
    if (s == total_length()) {
        return {segments_.size() - 1, s - cumulative_[segments_.size() - 1]};
    }
    const auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), s);
    const auto index = static_cast<std::size_t>(it - cumulative_.begin()) - 1;
    return {index, s - cumulative_[index]};
}

CenterlinePose PipeNetwork::centerline_pose(double s) const {
    const auto [index, local] = segment_at(s);
    return advance_pose(entry_poses_[index], segments_[index], local);
}

double effective_radius(const BendSegment& bend, double psi, double contact_radius) {
    if (!(contact_radius >= 0.0) || !(contact_radius < bend.bend_radius)) {
        throw std::domain_error("contact radius must be in [0, bend radius)");
    }
    return bend.bend_radius + contact_radius * std::cos(psi);
}

namespace {

struct CatalogRow {
    const char* key;
    double inner_radius;  // mm, schedule 40
    double bend_radius;   // mm, long-radius elbow, 1.5 x nominal diameter
};

// Schedule-40 inner diameters from the published tables (7.981", 10.020",
// 11.938", 13.124"), converted to radii in mm. See README for sources.
constexpr CatalogRow kCatalog[] = {
    {"NPS8", 101.3587, 304.8},
    {"NPS10", 127.254, 381.0},
    {"NPS12", 151.6126, 457.2},
    {"NPS14", 166.6748, 533.4},
};

std::string normalize_key(const std::string& key) {
    std::string out;
    for (char c : key) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        out.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
    }
    return out;
}

}  // namespace

ElbowSpec elbow_catalog(const std::string& nominal_size) {
    const std::string key = normalize_key(nominal_size);
    for (const auto& row : kCatalog) {
        if (key == row.key) {
            return ElbowSpec{row.inner_radius, row.bend_radius};
        }
    }
    std::ostringstream msg;
    msg << "unknown pipe size '" << nominal_size << "'; available:";
    for (const auto& row : kCatalog) {
        msg << ' ' << row.key;
    }
    throw std::out_of_range(msg.str());
}

std::vector<std::string> elbow_catalog_keys() {
    std::vector<std::string> keys;
    for (const auto& row : kCatalog) {
        keys.emplace_back(row.key);
    }
    return keys;
}

}  // namespace pipeclimb
