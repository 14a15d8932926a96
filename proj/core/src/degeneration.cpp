#include "hirzebruch/degeneration.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hirzebruch {

namespace {

struct CellPredicates {
    int k, a, b;

    // Veronese block m (1-based) starts at column X_m and fills the lower
    // (m odd) or upper (m even) triangular half of [X_m, X_m+b] x [0, b].
    int block_x(int m) const { return a + b * ((m - 1) / 2); }

    bool lower(int x, int y) const {
        if (y < 0 || y >= b) return false;
        if (x >= 0 && x < a) return true;
        for (int m = 1; m <= k; ++m) {
            int X = block_x(m);
            if (m % 2 == 1) {
                if (x >= X && (x - X) + y <= b - 1) return true;
            } else {
                if (x + 1 <= X + b && (x - X) + y >= b) return true;
            }
        }
        return false;
    }

    bool upper(int x, int y) const {
        if (y < 0 || y >= b) return false;
        if (x >= 0 && x < a) return true;
        for (int m = 1; m <= k; ++m) {
            int X = block_x(m);
            if (m % 2 == 1) {
                if (x >= X && (x - X) + y <= b - 2) return true;
            } else {
                if (x + 1 <= X + b && (x - X) + y >= b - 1) return true;
            }
        }
        return false;
    }
};

using Edge = std::pair<GridPoint, GridPoint>;

Edge make_edge(GridPoint p, GridPoint q) {
    return p < q ? Edge{p, q} : Edge{q, p};
}

LineKind edge_kind(const Edge& e) {
    if (e.first.x == e.second.x) return LineKind::vertical;
    if (e.first.y == e.second.y) return LineKind::horizontal;
    return LineKind::diagonal;
}

}  // namespace

DegenerationComplex build_complex(int k, int a, int b) {
    if (b < 1 || a < 0 || k < 0 || (a < 1 && k < 1))
        throw std::invalid_argument("need b >= 1 and a >= 1 or k >= 1");

    DegenerationComplex c;
    c.k = k;
    c.a = a;
    c.b = b;

    CellPredicates in{k, a, b};
    int max_x = a + b * ((k + 1) / 2);
    for (int x = 0; x < max_x; ++x) {
        for (int y = 0; y < b; ++y) {
            if (in.lower(x, y))
                c.triangles.push_back(
                    {{GridPoint{x, y}, GridPoint{x + 1, y}, GridPoint{x, y + 1}}});
            if (in.upper(x, y))
                c.triangles.push_back({{GridPoint{x + 1, y}, GridPoint{x + 1, y + 1},
                                        GridPoint{x, y + 1}}});
        }
    }
    long long expected_triangles =
        2LL * a * b + static_cast<long long>(k) * b * b;
    if (static_cast<long long>(c.triangles.size()) != expected_triangles)
        throw std::logic_error("triangle census mismatch");

    // Vertices: right to left, bottom to top.
    std::set<GridPoint> corner_set;
    for (const auto& t : c.triangles)
        for (const auto& p : t.corners) corner_set.insert(p);
    std::vector<GridPoint> ordered(corner_set.begin(), corner_set.end());
    std::sort(ordered.begin(), ordered.end(),
              [](const GridPoint& p, const GridPoint& q) {
                  return std::pair(-p.x, p.y) < std::pair(-q.x, q.y);
              });
    std::map<GridPoint, int> vertex_id;
    for (std::size_t i = 0; i < ordered.size(); ++i) {
        ComplexVertex v;
        v.id = static_cast<int>(i) + 1;
        v.at = ordered[i];
        c.vertices.push_back(v);
        vertex_id[ordered[i]] = v.id;
    }

    // Inner edges border exactly two triangles.
    std::map<Edge, int> edge_count;
    for (const auto& t : c.triangles) {
        edge_count[make_edge(t.corners[0], t.corners[1])]++;
        edge_count[make_edge(t.corners[1], t.corners[2])]++;
        edge_count[make_edge(t.corners[0], t.corners[2])]++;
    }
    std::vector<ComplexLine> inner;
    for (const auto& [edge, count] : edge_count) {
        if (count > 2) throw std::logic_error("edge borders more than two cells");
        if (count != 2) continue;
        ComplexLine line;
        line.a = edge.first;
        line.b = edge.second;
        int va = vertex_id.at(edge.first);
        int vb = vertex_id.at(edge.second);
        line.vertex_low = std::min(va, vb);
        line.vertex_high = std::max(va, vb);
        line.kind = edge_kind(edge);
        inner.push_back(line);
    }
    std::sort(inner.begin(), inner.end(),
              [](const ComplexLine& u, const ComplexLine& v) {
                  return std::pair(u.vertex_high, u.vertex_low) <
                         std::pair(v.vertex_high, v.vertex_low);
              });
    for (std::size_t j = 0; j < inner.size(); ++j) {
        inner[j].id = static_cast<int>(j) + 1;
        c.lines.push_back(inner[j]);
    }

    for (const ComplexLine& line : c.lines) {
        c.vertices[static_cast<std::size_t>(line.vertex_low - 1)].lines.push_back(line.id);
        c.vertices[static_cast<std::size_t>(line.vertex_high - 1)].lines.push_back(line.id);
    }
    for (ComplexVertex& v : c.vertices)
        std::sort(v.lines.begin(), v.lines.end());

    for (const auto& t : c.triangles)
        for (const auto& p : t.corners)
            c.vertices[static_cast<std::size_t>(vertex_id.at(p) - 1)].triangle_count++;

    return c;
}

std::tuple<long long, long long, long long> counts(const DegenerationComplex& c) {
    return {static_cast<long long>(c.triangles.size()),
            static_cast<long long>(c.lines.size()),
            static_cast<long long>(c.vertices.size())};
}

std::vector<VertexClass> classify_vertices(const DegenerationComplex& c) {
    std::vector<VertexClass> out;
    out.reserve(c.vertices.size());
    for (const ComplexVertex& v : c.vertices) {
        VertexClass cls;
        cls.incident_lines = v.lines;
        switch (v.lines.size()) {
            case 0:
                cls.kind = VertexKind::nonsingular_off_curve;
                break;
            case 1:
                cls.kind = VertexKind::nonsingular_on_curve;
                break;
            case 2: {
                cls.kind = VertexKind::three_point;
                if (v.triangle_count != 3)
                    throw std::logic_error("3-point without 3 incident cells");
                const ComplexLine& lower =
                    c.lines[static_cast<std::size_t>(v.lines[0] - 1)];
                const ComplexLine& upper =
                    c.lines[static_cast<std::size_t>(v.lines[1] - 1)];
                cls.lower_line_kind = lower.kind;
                bool lower_at_high = lower.vertex_high == v.id;
                bool upper_at_high = upper.vertex_high == v.id;
                cls.meet = lower_at_high == upper_at_high
                               ? (lower_at_high ? MeetPattern::both_higher
                                                : MeetPattern::both_lower)
                               : MeetPattern::mixed;
                break;
            }
            case 6: {
                cls.kind = VertexKind::six_point;
                if (v.triangle_count != 6)
                    throw std::logic_error("6-point without 6 incident cells");
                if (c.a >= 1 && v.at.x < c.a)
                    cls.six_type = 1;
                else if (v.at.x >= c.a && (v.at.x - c.a) % c.b == 0)
                    cls.six_type = 2;
                else
                    cls.six_type = 3;
                break;
            }
            default:
                throw std::logic_error("vertex with unexpected line count");
        }
        out.push_back(std::move(cls));
    }
    return out;
}

std::string render_ascii(const DegenerationComplex& c) {
    std::set<Edge> edges;
    for (const auto& t : c.triangles) {
        edges.insert(make_edge(t.corners[0], t.corners[1]));
        edges.insert(make_edge(t.corners[1], t.corners[2]));
        edges.insert(make_edge(t.corners[0], t.corners[2]));
    }
    auto has = [&edges](GridPoint p, GridPoint q) {
        return edges.count(make_edge(p, q)) > 0;
    };
    std::set<GridPoint> points;
    for (const auto& t : c.triangles)
        for (const auto& p : t.corners) points.insert(p);

    int max_x = 0;
    for (const auto& p : points) max_x = std::max(max_x, p.x);

    std::ostringstream os;
    for (int y = c.b; y >= 0; --y) {
        for (int x = 0; x <= max_x; ++x) {
            os << (points.count(GridPoint{x, y}) ? '+' : ' ');
            if (x < max_x)
                os << (has({x, y}, {x + 1, y}) ? "---" : "   ");
        }
        os << '\n';
        if (y == 0) break;
        for (int x = 0; x <= max_x; ++x) {
            os << (has({x, y - 1}, {x, y}) ? '|' : ' ');
            if (x < max_x)
                os << ' ' << (has({x + 1, y - 1}, {x, y}) ? '/' : ' ') << ' ';
        }
        os << '\n';
    }
    return os.str();
}

std::vector<std::pair<int, int>> disjoint_line_pairs(const DegenerationComplex& c) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i <= c.p0(); ++i) {
        const ComplexLine& li = c.lines[static_cast<std::size_t>(i - 1)];
        for (int j = i + 1; j <= c.p0(); ++j) {
            const ComplexLine& lj = c.lines[static_cast<std::size_t>(j - 1)];
            bool share = li.vertex_low == lj.vertex_low ||
                         li.vertex_low == lj.vertex_high ||
                         li.vertex_high == lj.vertex_low ||
                         li.vertex_high == lj.vertex_high;
            if (!share) pairs.emplace_back(i, j);
        }
    }
    return pairs;
}

InducedArrangement induced_arrangement(const DegenerationComplex& c,
                                       unsigned seed) {
    if (c.p0() == 0)
        throw std::invalid_argument("complex has no intersection lines");

    std::set<std::pair<int, int>> disjoint;
    for (auto pr : disjoint_line_pairs(c)) disjoint.insert(pr);

    for (unsigned attempt = 0; attempt < 64; ++attempt) {
        unsigned s = seed + attempt;
        std::mt19937 rng(s);
        std::uniform_int_distribution<int> nudge(-1000, 1000);

        std::vector<std::pair<Rational, Rational>> images;
        images.reserve(c.vertices.size());
        for (const ComplexVertex& v : c.vertices) {
            Rational y = Rational(v.at.y) + Rational(nudge(rng), 1000000);
            images.emplace_back(Rational(-v.id), y);
        }

        std::vector<Line> lines;
        lines.reserve(static_cast<std::size_t>(c.p0()));
        for (const ComplexLine& line : c.lines) {
            const auto& plo = images[static_cast<std::size_t>(line.vertex_low - 1)];
            const auto& phi = images[static_cast<std::size_t>(line.vertex_high - 1)];
            Rational slope = (phi.second - plo.second) / (phi.first - plo.first);
            Rational intercept = plo.second - slope * plo.first;
            lines.push_back({slope, intercept});
        }

        try {
            LineArrangement arr(std::move(lines));

            // Incidences must be exactly the complex's.
            bool faithful = true;
            for (const ComplexVertex& v : c.vertices) {
                const auto& img = images[static_cast<std::size_t>(v.id - 1)];
                for (const ComplexLine& line : c.lines) {
                    bool on = arr.line(line.id - 1).y_at(img.first) == img.second;
                    bool expected =
                        line.vertex_low == v.id || line.vertex_high == v.id;
                    if (on != expected) {
                        faithful = false;
                        break;
                    }
                }
                if (!faithful) break;
            }
            if (!faithful) continue;

            CriticalData data = critical_data(arr);

            std::map<std::pair<Rational, Rational>, int> image_of;
            for (const ComplexVertex& v : c.vertices)
                image_of[images[static_cast<std::size_t>(v.id - 1)]] = v.id;

            std::vector<std::pair<int, int>> extras;
            bool consistent = true;
            for (const ArrangementVertex& av : data.vertices) {
                auto it = image_of.find({av.x, av.y});
                if (it != image_of.end()) {
                    const ComplexVertex& cv =
                        c.vertices[static_cast<std::size_t>(it->second - 1)];
                    std::vector<int> got;
                    for (int idx : av.lines) got.push_back(idx + 1);
                    if (got != cv.lines) {
                        consistent = false;
                        break;
                    }
                } else {
                    if (av.lines.size() != 2) {
                        consistent = false;
                        break;
                    }
                    std::pair<int, int> pr{av.lines[0] + 1, av.lines[1] + 1};
                    if (!disjoint.count(pr)) {
                        consistent = false;
                        break;
                    }
                    extras.push_back(pr);
                }
            }
            if (!consistent) continue;
            if (extras.size() != disjoint.size())
                continue;  // some crossing fell outside general position

            std::sort(extras.begin(), extras.end());
            InducedArrangement result{std::move(arr), std::move(images),
                                      std::move(extras), s};
            return result;
        } catch (const std::invalid_argument&) {
            continue;
        }
    }
    throw std::runtime_error(
        "failed to find a generic planar realization after 64 seeds");
}

}  // namespace hirzebruch
