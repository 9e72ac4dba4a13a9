#pragma once

#include <Eigen/Core>

#include <cstddef>
#include <string>
#include <utility>
#include <variant>
#include <vector>

// Pipe networks as chains of straight and toroidal-bend segments with a
// uniform inner radius. All lengths in millimeters, all angles in radians.

namespace pipeclimb {

using Vec3 = Eigen::Vector3d;

struct StraightSegment {
    double length = 0.0;  // mm, > 0

    bool operator==(const StraightSegment&) const = default;
};

struct BendSegment {
    double bend_radius = 0.0;     // mm, centerline radius R, > pipe inner radius
    double bend_angle = 0.0;      // rad, in (0, pi]
    double plane_roll = 0.0;      // rad, bend plane orientation about the incoming axis
    double clearance_delta = 1.5; // mm, radial clearance swing declared for this bend

    bool operator==(const BendSegment&) const = default;
};

using Segment = std::variant<StraightSegment, BendSegment>;

/// Centerline arc length of one segment (straight: length; bend: R * angle).
double segment_arc_length(const Segment& segment);

/// Position and frame of the centerline at one arc position. `normal` is the
/// reference direction for module angular positions; `binormal` completes the
/// right-handed frame (binormal = tangent x normal).
struct CenterlinePose {
    Vec3 position;
    Vec3 tangent;
    Vec3 normal;
    Vec3 binormal;
};

class PipeNetwork {
  public:
    /// Validates all segment invariants; throws std::invalid_argument on the
    /// first violation (empty segment list, nonpositive lengths, bend radius
    /// not exceeding the inner radius, bend angle outside (0, pi]).
    PipeNetwork(double inner_radius, std::vector<Segment> segments);

    double inner_radius() const { return inner_radius_; }
    const std::vector<Segment>& segments() const { return segments_; }

    double total_length() const { return cumulative_.back(); }

    /// Arc length from the network origin to the start of segment i.
    double segment_start(std::size_t i) const { return cumulative_[i]; }

    /// Segment index and local arc coordinate for arc position s. A boundary
    /// value maps to the later segment, except s == total_length which maps
    /// to the last. Out-of-range s throws std::domain_error.
    std::pair<std::size_t, double> segment_at(double s) const;

    /// Pose at arc position s, composed from the segment entry frames. The
    /// network origin pose is position (0,0,0), tangent +Z, normal +X.
    CenterlinePose centerline_pose(double s) const;

    bool operator==(const PipeNetwork& other) const {
        return inner_radius_ == other.inner_radius_ && segments_ == other.segments_;
    }

  private:
    double inner_radius_;
    std::vector<Segment> segments_;
    std::vector<double> cumulative_;           // size n+1, cumulative_[n] = total
    std::vector<CenterlinePose> entry_poses_;  // pose at the start of each segment
};

/// Distance from a bend's center of curvature to a track contact point at
/// cross-section angle psi, measured from the bend plane's outward direction:
/// R + r_c * cos(psi). Maximum at psi = 0 (outer wall), minimum at psi = pi.
/// Requires 0 <= contact_radius < bend_radius.
double effective_radius(const BendSegment& bend, double psi, double contact_radius);

/// Schedule-40 inner radius and long-radius elbow centerline radius (1.5 x
/// nominal diameter) for one nominal pipe size.
struct ElbowSpec {
    double inner_radius;  // mm
    double bend_radius;   // mm
};

/// Catalog lookup by nominal size key ("NPS8", "NPS10", "NPS12", "NPS14";
/// spaces and case are ignored). Unknown keys throw std::out_of_range with
/// the available keys listed.
ElbowSpec elbow_catalog(const std::string& nominal_size);

/// Keys shipped in the catalog, in size order.
std::vector<std::string> elbow_catalog_keys();

}  // namespace pipeclimb
