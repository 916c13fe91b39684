#pragma once

#include <cmath>
#include <stdexcept>

namespace fusetrack {

/// Planar position in meters. All world modelling is 2-D.
struct Point2D {
  double x = 0.0;
  double y = 0.0;

  friend Point2D operator+(Point2D a, Point2D b) { return {a.x + b.x, a.y + b.y}; }
  friend Point2D operator-(Point2D a, Point2D b) { return {a.x - b.x, a.y - b.y}; }
  friend Point2D operator*(Point2D a, double s) { return {a.x * s, a.y * s}; }
  friend Point2D operator*(double s, Point2D a) { return a * s; }

  double norm() const { return std::hypot(x, y); }
};

inline double distance(Point2D a, Point2D b) { return (a - b).norm(); }

/// Planar velocity in meters per second.
struct Velocity2D {
  double vx = 0.0;
  double vy = 0.0;

  double norm() const { return std::hypot(vx, vy); }
};

/// Wi-Fi link geometry. In LoS mode the endpoints are the transmitter and
/// receiver of one link; in receiver-pair mode they are the two receivers
/// that share the transmitter-to-target path segment.
enum class LinkMode { Los, NlosReceiverPair };

struct LinkGeometry {
  Point2D tx;
  Point2D rx;
  LinkMode mode = LinkMode::Los;

  double baseline() const { return distance(tx, rx); }
};

/// The two synchronized speakers acting as hyperbola foci.
struct SpeakerPair {
  Point2D s1;
  Point2D s2;

  double baseline() const { return distance(s1, s2); }
};

/// Axis-aligned feasible floor-plan rectangle.
struct Arena {
  double x_min = 0.0;
  double x_max = 0.0;
  double y_min = 0.0;
  double y_max = 0.0;

  bool valid() const { return x_min < x_max && y_min < y_max; }
  bool contains(Point2D p) const {
    return p.x >= x_min && p.x <= x_max && p.y >= y_min && p.y <= y_max;
  }
  double width() const { return x_max - x_min; }
  double height() const { return y_max - y_min; }
};

/// Round-trip reflection path length |p - tx| + |p - rx| for a LoS link.
/// Level sets are the confocal ellipses with the transceivers as foci.
double reflection_path_length(Point2D p, const LinkGeometry& link);

/// Signed path difference |p - s1| - |p - s2|. Level sets are the confocal
/// hyperbolas with the speakers as foci; the value is bounded by the baseline.
double path_difference(Point2D p, const SpeakerPair& pair);

/// Euclidean projection onto the arena rectangle (identity for interior points).
Point2D nearest_feasible_point(Point2D p, const Arena& arena);

}  // namespace fusetrack
