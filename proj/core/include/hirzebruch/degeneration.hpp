#pragma once

#include <array>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "hirzebruch/arrangement.hpp"

namespace hirzebruch {

struct GridPoint {
    int x = 0;
    int y = 0;
    friend bool operator==(const GridPoint&, const GridPoint&) = default;
    friend auto operator<=>(const GridPoint&, const GridPoint&) = default;
};

enum class LineKind { diagonal, vertical, horizontal };
enum class VertexKind {
    three_point,
    six_point,
    nonsingular_on_curve,
    nonsingular_off_curve
};
enum class MeetPattern { both_higher, both_lower, mixed };

struct ComplexTriangle {
    std::array<GridPoint, 3> corners;
};

struct ComplexLine {
    int id = 0;  // 1-based; L_id
    GridPoint a, b;
    int vertex_low = 0;   // endpoint with the smaller vertex number
    int vertex_high = 0;  // endpoint with the bigger vertex number
    LineKind kind = LineKind::horizontal;
};

struct ComplexVertex {
    int id = 0;  // 1-based; a_id
    GridPoint at;
    std::vector<int> lines;  // incident line ids, ascending
    int triangle_count = 0;
};

struct VertexClass {
    VertexKind kind = VertexKind::nonsingular_off_curve;
    std::vector<int> incident_lines;
    // three_point only:
    std::optional<LineKind> lower_line_kind;
    std::optional<MeetPattern> meet;
    // six_point only:
    std::optional<int> six_type;  // 1, 2 or 3
};

/// Triangulated model of the degenerated surface: 2ab + kb^2 unit triangles
/// on the integer grid, numbered intersection lines and vertices.
struct DegenerationComplex {
    int k = 0;
    int a = 0;
    int b = 1;
    std::vector<ComplexTriangle> triangles;
    std::vector<ComplexVertex> vertices;  // vertices[i-1] is a_i
    std::vector<ComplexLine> lines;       // lines[j-1] is L_j

    int nu0() const { return static_cast<int>(vertices.size()); }
    int p0() const { return static_cast<int>(lines.size()); }
    int m0() const { return b * (b + 1) / 2 + 1; }
};

DegenerationComplex build_complex(int k, int a, int b);

/// (planes, lines, vertices)
std::tuple<long long, long long, long long> counts(const DegenerationComplex& c);

std::vector<VertexClass> classify_vertices(const DegenerationComplex& c);

std::string render_ascii(const DegenerationComplex& c);

/// Planar realization of the complex: vertex a_i maps to (-i, y_i) with a
/// seeded rational nudge on y_i, each line L_j to the line through its two
/// endpoint images. Crossings of images of disjoint lines are recorded; they
/// are exactly the extra factors of the planar monodromy.
struct InducedArrangement {
    LineArrangement arrangement;  // arrangement line j-1 is the image of L_j
    std::vector<std::pair<Rational, Rational>> vertex_images;  // b_i at [i-1]
    std::vector<std::pair<int, int>> extra_crossings;  // disjoint pairs (i<j)
    unsigned seed_used = 0;
};

InducedArrangement induced_arrangement(const DegenerationComplex& c,
                                       unsigned seed = 0);

/// All unordered pairs of line ids with no common vertex, ascending.
std::vector<std::pair<int, int>> disjoint_line_pairs(const DegenerationComplex& c);

}  // namespace hirzebruch
