#include "fusetrack/geometry.hpp"

#include <algorithm>

namespace fusetrack {

double reflection_path_length(Point2D p, const LinkGeometry& link) {
  return distance(p, link.tx) + distance(p, link.rx);
}

double path_difference(Point2D p, const SpeakerPair& pair) {
  return distance(p, pair.s1) - distance(p, pair.s2);
}

Point2D nearest_feasible_point(Point2D p, const Arena& arena) {
  return {std::clamp(p.x, arena.x_min, arena.x_max),
          std::clamp(p.y, arena.y_min, arena.y_max)};
}

}  // namespace fusetrack
