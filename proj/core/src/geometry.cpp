#include "railyard/geometry.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace railyard {

namespace {

// Particle indicator of a partition column: rows lambda_i - i for i <= l, and
// every row <= -l(lambda) - 1 (the deterministic tail).
bool partition_particle(const Partition& p, int ry) {
    if (ry <= -p.length() - 1) return true;
    for (int i = 1; i <= p.length(); ++i)
        if (p.part(i) - i == ry) return true;
    return false;
}

int max_particle_row(const Partition& p) { return p.length() == 0 ? -1 : p.part(1) - 1; }

}  // namespace

std::array<double, 4> EdgeConfiguration::endpoints(const Edge& e) const {
    double ex = 2.0 * e.zone, ey = e.ry + 0.5;
    double ox, oy;
    switch (e.kind) {
        case 'L': ox = ex - 1; oy = ey; break;
        case 'R': ox = ex + 1; oy = ey; break;
        case 'D': {
            bool left = a_at(e.zone) == LR::L;
            bool up = b_at(e.zone) == Sign::Plus;
            ox = left ? ex - 1 : ex + 1;
            oy = up ? ey + 1 : ey - 1;
            break;
        }
        default: throw std::logic_error("EdgeConfiguration: bad edge kind");
    }
    return {ex, ey, ox, oy};
}

std::string EdgeConfiguration::to_csv() const {
    std::ostringstream os;
    os << "x1,y1,x2,y2\n";
    for (const auto& e : edges) {
        auto p = endpoints(e);
        os << p[0] << "," << p[1] << "," << p[2] << "," << p[3] << "\n";
    }
    return os.str();
}

Window minimal_window(const RailYardSpec&, const DimerCovering& m) {
    int lo = 0, hi = 0;
    for (const auto& p : m.partitions) {
        lo = std::min(lo, -p.length() - 1);
        hi = std::max(hi, max_particle_row(p));
    }
    return Window{lo - 2, hi + 2};
}

EdgeConfiguration to_edge_configuration(const RailYardSpec& spec, const DimerCovering& m,
                                        const Window& window) {
    if (!covering_valid(spec, m))
        throw std::invalid_argument("to_edge_configuration: invalid covering");
    Window need = minimal_window(spec, m);
    if (window.ry_min > need.ry_min || window.ry_max < need.ry_max)
        throw std::invalid_argument("to_edge_configuration: window too small");

    EdgeConfiguration cfg;
    cfg.l = spec.l;
    cfg.r = spec.r();
    cfg.window = window;
    cfg.zone_a = spec.a;
    cfg.zone_b = spec.b;

    for (int zone = spec.l; zone <= spec.r(); ++zone) {
        const Partition& left = m.at(zone, spec);
        const Partition& right = m.at(zone + 1, spec);
        std::set<int> used;  // consumed even rows
        auto use = [&](int ry, char kind) {
            if (ry < window.ry_min || ry > window.ry_max)
                throw std::logic_error("to_edge_configuration: edge outside window");
            if (!used.insert(ry).second)
                throw std::logic_error("to_edge_configuration: even vertex consumed twice");
            cfg.edges.push_back({zone, ry, kind});
        };

        bool is_left_zone = spec.a_at(zone) == LR::L;
        bool is_plus = spec.b_at(zone) == Sign::Plus;

        if (is_left_zone) {
            // particles of column zone+1 are forced onto the right horizontal
            for (int ry = window.ry_min; ry <= window.ry_max; ++ry)
                if (partition_particle(right, ry)) use(ry, 'R');
            // holes of column zone pick the left horizontal when free, else
            // the zone diagonal; cascade direction follows the diagonal slope
            auto resolve = [&](int z) {
                if (!used.count(z)) {
                    use(z, 'L');
                } else {
                    int d = is_plus ? z - 1 : z + 1;
                    use(d, 'D');
                }
            };
            if (is_plus) {
                for (int z = window.ry_max; z >= window.ry_min; --z)
                    if (!partition_particle(left, z)) resolve(z);
            } else {
                for (int z = window.ry_min; z <= window.ry_max; ++z)
                    if (!partition_particle(left, z)) resolve(z);
            }
        } else {
            // holes of column zone are forced onto the left horizontal
            for (int ry = window.ry_min; ry <= window.ry_max; ++ry)
                if (!partition_particle(left, ry)) use(ry, 'L');
            // particles of column zone+1 pick the right horizontal when free
            auto resolve = [&](int z) {
                if (!used.count(z)) {
                    use(z, 'R');
                } else {
                    int d = is_plus ? z - 1 : z + 1;
                    use(d, 'D');
                }
            };
            if (is_plus) {
                for (int z = window.ry_max; z >= window.ry_min; --z)
                    if (partition_particle(right, z)) resolve(z);
            } else {
                for (int z = window.ry_min; z <= window.ry_max; ++z)
                    if (partition_particle(right, z)) resolve(z);
            }
        }

        if (static_cast<int>(used.size()) != window.ry_max - window.ry_min + 1)
            throw std::logic_error("to_edge_configuration: uncovered even vertex in window");
    }
    return cfg;
}

namespace {

// Incidence of present edges at the odd vertex (2*col - 1, ry + 1/2):
// returns (has_left_edge, has_right_edge).
std::pair<bool, bool> odd_incidence(const EdgeConfiguration& config, int col, int ry) {
    bool left = false, right = false;
    for (const auto& e : config.edges) {
        if (e.zone == col) {  // zone col sits on the right of column col
            if (e.kind == 'L' && e.ry == ry) right = true;
            if (e.kind == 'D' && config.a_at(e.zone) == LR::L) {
                int odd_ry = config.b_at(e.zone) == Sign::Plus ? e.ry + 1 : e.ry - 1;
                if (odd_ry == ry) right = true;
            }
        }
        if (e.zone == col - 1) {  // zone col-1 sits on the left
            if (e.kind == 'R' && e.ry == ry) left = true;
            if (e.kind == 'D' && config.a_at(e.zone) == LR::R) {
                int odd_ry = config.b_at(e.zone) == Sign::Plus ? e.ry + 1 : e.ry - 1;
                if (odd_ry == ry) left = true;
            }
        }
    }
    return {left, right};
}

}  // namespace

bool edge_particle(const EdgeConfiguration& config, int col, int ry) {
    auto [left, right] = odd_incidence(config, col, ry);
    if (left && right) throw std::logic_error("edge_particle: doubly covered odd vertex");
    if (left) return true;
    if (right) return false;
    // no incident present edge: only legal on the boundaries
    if (col == config.l) return true;
    if (col == config.r + 1) return false;
    throw std::logic_error("edge_particle: uncovered inner odd vertex");
}

int charge(const EdgeConfiguration& config, int col) {
    // margin rows next to the window boundary may reference diagonals beyond
    // it; stay one row inside
    int c = 0;
    for (int ry = 0; ry <= config.window.ry_max - 1; ++ry)
        if (edge_particle(config, col, ry)) ++c;
    for (int ry = config.window.ry_min + 1; ry < 0; ++ry)
        if (!edge_particle(config, col, ry)) --c;
    return c;
}

std::vector<Partition> extract_partitions(const EdgeConfiguration& config) {
    std::vector<Partition> out;
    for (int col = config.l; col <= config.r + 1; ++col) {
        std::vector<int> particle_rows;
        for (int ry = config.window.ry_max - 1; ry >= config.window.ry_min + 1; --ry)
            if (edge_particle(config, col, ry)) particle_rows.push_back(ry);
        std::vector<int> parts;
        for (size_t i = 0; i < particle_rows.size(); ++i) {
            int lam = particle_rows[i] + static_cast<int>(i) + 1;  // lambda_i = row_i + i
            if (lam <= 0) break;
            parts.push_back(lam);
        }
        out.emplace_back(std::move(parts));
    }
    return out;
}

namespace {

// Number of holes of the column partition strictly below y.
int holes_below(const Partition& p, double y) {
    int b = -p.length();  // no holes at rows <= -l(lambda) - 1
    if (y <= b) return 0;
    // rows ry with b <= ry and ry + 1/2 < y
    int top = static_cast<int>(std::floor(y - 0.5 - 1e-12));
    if (top < b) return 0;
    int rows = top - b + 1;
    int particles = 0;
    for (int i = 1; i <= p.length(); ++i) {
        int ry = p.part(i) - i;
        if (ry >= b && ry <= top) ++particles;
    }
    return rows - particles;
}

}  // namespace

int height_at(const RailYardSpec& spec, const DimerCovering& m, int column, double y,
              ColumnSide side) {
    const Partition& p =
        side == ColumnSide::LeftOfColumn ? m.at(column, spec) : m.at(column + 1, spec);
    return 2 * holes_below(p, y);
}

int height_from_edges(const EdgeConfiguration& config, int column, double y, ColumnSide side) {
    // Each crossing is tallied at the ordinate of its odd endpoint: a crossed
    // diagonal and the face steps it creates belong to the odd vertex it
    // serves, half a unit away from the geometric midpoint.
    if (side == ColumnSide::LeftOfColumn) {
        // x = 2*column - 1/2 crosses zone-(column) left horizontals and, when
        // the zone has letter L, its diagonals; h = 2 (present horizontals +
        // present diagonals below y)
        int zone = column;
        if (zone > config.r || zone < config.l)
            throw std::invalid_argument("height_from_edges: column out of range");
        int count = 0;
        for (const auto& e : config.edges) {
            if (e.zone != zone) continue;
            if (e.kind == 'L' && e.ry + 0.5 < y) ++count;
            if (e.kind == 'D' && config.a_at(zone) == LR::L) {
                int odd_ry = e.ry + (config.b_at(zone) == Sign::Plus ? 1 : -1);
                if (odd_ry + 0.5 < y) ++count;
            }
        }
        return 2 * count;
    }
    // x = 2*column + 1/2: crossed by zone-(column) right horizontals (even on
    // the left) and, for letter R, its diagonals; h = 2 (absent horizontals -
    // present diagonals below y)
    int zone = column;
    if (zone < config.l || zone > config.r)
        throw std::invalid_argument("height_from_edges: column out of range");
    std::set<int> right_rows;
    int diag = 0;
    for (const auto& e : config.edges) {
        if (e.zone != zone) continue;
        if (e.kind == 'R') right_rows.insert(e.ry);
        if (e.kind == 'D' && config.a_at(zone) == LR::R) {
            int odd_ry = e.ry + (config.b_at(zone) == Sign::Plus ? 1 : -1);
            if (odd_ry + 0.5 < y) ++diag;
        }
    }
    int absent = 0;
    for (int ry = config.window.ry_min; ry <= config.window.ry_max; ++ry) {
        if (ry + 0.5 >= y) break;
        if (!right_rows.count(ry)) ++absent;
    }
    return 2 * (absent - diag);
}

double height_linear(const Partition& lambda, double y) {
    double b = -lambda.length();
    if (y <= b) return 0.0;
    double h = 2.0 * (y - b);
    for (int i = 1; i <= lambda.length(); ++i) {
        double c = lambda.part(i) - i + 0.5;  // particle ordinate
        double lo = std::max(b, c - 0.5), hi = std::min(y, c + 0.5);
        if (hi > lo) h -= 2.0 * (hi - lo);
    }
    return h;
}

double height_transform_integral(const Partition& lambda, int k, double t) {
    if (!(t > 0.0 && t < 1.0)) throw std::invalid_argument("height_transform_integral: t in (0,1)");
    double a = k * std::log(t);  // negative
    // knots: B and every particle interval endpoint in (B, top]
    double b = -lambda.length();
    std::vector<double> knots{b};
    for (int i = lambda.length(); i >= 1; --i) {
        double c = lambda.part(i) - i + 0.5;
        knots.push_back(c - 0.5);
        knots.push_back(c + 0.5);
    }
    std::sort(knots.begin(), knots.end());
    knots.erase(std::unique(knots.begin(), knots.end(),
                            [](double u, double v) { return std::abs(u - v) < 1e-12; }),
                knots.end());
    double top = knots.back();

    // 20-point Gauss-Legendre on [-1, 1]
    static const double gx[10] = {0.0765265211334973, 0.2277858511416451, 0.3737060887154196,
                                  0.5108670019508271, 0.6360536807265150, 0.7463319064601508,
                                  0.8391169718222188, 0.9122344282513259, 0.9639719272779138,
                                  0.9931285991850949};
    static const double gw[10] = {0.1527533871307258, 0.1491729864726037, 0.1420961093183821,
                                  0.1316886384491766, 0.1181945319615184, 0.1019301198172404,
                                  0.0832767415767048, 0.0626720483341091, 0.0406014298003869,
                                  0.0176140071391521};

    double total = 0.0;
    for (size_t i = 0; i + 1 < knots.size(); ++i) {
        double lo = knots[i], hi = knots[i + 1];
        double c = 0.5 * (lo + hi), hw = 0.5 * (hi - lo);
        double s = 0.0;
        for (int g = 0; g < 10; ++g) {
            for (double sgn : {-1.0, 1.0}) {
                double yy = c + sgn * hw * gx[g];
                s += gw[g] * height_linear(lambda, yy) * std::exp(a * yy);
            }
        }
        total += s * hw;
    }
    // tail above top: h = h(top) + 2 (y - top), integral of (c0 + 2 u) e^{a (top+u)}
    double htop = height_linear(lambda, top);
    double etop = std::exp(a * top);
    total += etop * (htop * (-1.0 / a) + 2.0 / (a * a));
    return total;
}

}  // namespace railyard
