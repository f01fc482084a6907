#pragma once

#include <string>
#include <vector>

#include "railyard/covering.hpp"

namespace railyard {

/// Rows are indexed by the integer ry with ordinate y = ry + 1/2.
struct Window {
    int ry_min, ry_max;  // inclusive
};

/// One present edge, anchored at its even endpoint (2*zone, ry + 1/2).
/// kind 'L': horizontal to (2*zone-1, ry+1/2); 'R': horizontal to
/// (2*zone+1, ry+1/2); 'D': the zone-typed diagonal.
struct Edge {
    int zone;
    int ry;
    char kind;
    friend bool operator==(const Edge&, const Edge&) = default;
};

struct EdgeConfiguration {
    int l = 0, r = 0;
    Window window{0, 0};
    std::vector<LR> zone_a;
    std::vector<Sign> zone_b;
    std::vector<Edge> edges;

    LR a_at(int zone) const { return zone_a.at(zone - l); }
    Sign b_at(int zone) const { return zone_b.at(zone - l); }

    /// Endpoint coordinates (x1,y1,x2,y2) of an edge, even endpoint first.
    std::array<double, 4> endpoints(const Edge& e) const;

    /// CSV with header x1,y1,x2,y2.
    std::string to_csv() const;
};

/// Smallest window guaranteed to contain every non-tail row of m with margin.
Window minimal_window(const RailYardSpec& spec, const DimerCovering& m);

/// Builds the geometric edge set of m. The window must contain
/// minimal_window(spec, m); otherwise an exception is thrown.
EdgeConfiguration to_edge_configuration(const RailYardSpec& spec, const DimerCovering& m,
                                        const Window& window);

/// Particle indicator on column col (abscissa 2*col-1) derived from the edge
/// set alone: an odd vertex is a particle when its present edge lies on its
/// left (boundary rows with no edge: left boundary -> particle, right
/// boundary -> hole).
bool edge_particle(const EdgeConfiguration& config, int col, int ry);

/// Charge per Eq-style counting: particles above the axis minus holes below
/// it, computed from the geometric edge view.
int charge(const EdgeConfiguration& config, int col);

/// Recovers the partition sequence from the edge view (inverse of
/// to_edge_configuration for pure coverings).
std::vector<Partition> extract_partitions(const EdgeConfiguration& config);

enum class ColumnSide { LeftOfColumn, RightOfColumn };

/// Face (staircase) height at x = 2m - 1/2 (LeftOfColumn) or x = 2m + 1/2
/// (RightOfColumn), for y strictly between edge ordinates. Always an even
/// integer: twice the number of holes below y on the governing column.
int height_at(const RailYardSpec& spec, const DimerCovering& m, int column, double y,
              ColumnSide side);

/// Same height computed purely from edge crossings per the two crossing
/// formulas (present horizontals + diagonals on odd-left lines; absent
/// horizontals - diagonals on even-left lines).
int height_from_edges(const EdgeConfiguration& config, int column, double y, ColumnSide side);

/// Piecewise-linear height profile of a single column partition: slope 2 off
/// particle intervals, 0 across them, value 0 below -l(lambda). This is the
/// profile whose exponential transform reproduces gamma_k exactly.
double height_linear(const Partition& lambda, double y);

/// integral over R of height_linear(lambda, y) * t^{k y} dy, evaluated by
/// Gauss-Legendre panels between the knots plus the analytic tail.
double height_transform_integral(const Partition& lambda, int k, double t);

}  // namespace railyard
