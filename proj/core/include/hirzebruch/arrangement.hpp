#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hirzebruch/braid.hpp"
#include "hirzebruch/numeric.hpp"

namespace hirzebruch {

struct Line {
    Rational slope;
    Rational intercept;

    Rational y_at(const Rational& x) const { return slope * x + intercept; }
    friend bool operator==(const Line&, const Line&) = default;
};

/// Finite set of non-vertical real lines with pairwise distinct slopes,
/// projected to the x-axis.
class LineArrangement {
public:
    explicit LineArrangement(std::vector<Line> lines);

    int size() const { return static_cast<int>(lines_.size()); }
    const std::vector<Line>& lines() const { return lines_; }
    const Line& line(int index) const { return lines_.at(static_cast<std::size_t>(index)); }

private:
    std::vector<Line> lines_;
};

/// A point where two or more lines meet; `lines` holds 0-based indices.
struct ArrangementVertex {
    Rational x;
    Rational y;
    std::vector<int> lines;
};

struct CriticalData {
    std::vector<ArrangementVertex> vertices;  // ascending x
    std::vector<Rational> critical_xs;        // ascending, one per vertex
    Rational basepoint;                       // u, strictly right of every critical x
    std::vector<Rational> fiber;              // y-values at u, increasing
    std::vector<int> fiber_lines;             // 0-based line at each fiber slot
};

/// Loop order for the monodromy factorization: one loop per critical x,
/// visited from the value nearest the basepoint (largest x) leftward.
struct GBase {
    std::vector<int> vertex_order;  // indices into CriticalData::vertices
};

enum class ExponentClass { twist = 0, branch = 1, node = 2, cusp = 3 };

/// Conjugation recipe word = conjugator^{-1} (H_path)^nu conjugator, kept so
/// factors can be rewritten in cuspidal normal form.
struct FactorSeed {
    PuncturePath path;
    int nu = 1;
    BraidWord conjugator;
};

struct FactorMeta {
    std::string source;
    ExponentClass nu = ExponentClass::twist;
    long long claimed_degree = 0;
};

struct Factor {
    std::optional<BraidWord> word;
    FactorMeta meta;
    std::optional<FactorSeed> seed;
};

struct Factorization {
    int strand_count = 0;
    std::vector<Factor> factors;
    bool complete = false;
    std::string level;  // "degenerate" or "regenerated"
};

CriticalData critical_data(const LineArrangement& arr);
GBase g_base(const CriticalData& data);

/// Braid of the motion of the fiber along the standard loop around the
/// loop_index-th critical value (1-based, in g-base order).
BraidWord monodromy_oracle(const LineArrangement& arr, int loop_index);

Factorization arrangement_monodromy_factorization(const LineArrangement& arr);

/// Local braid monodromy of y^2 = x^nu: sigma_1^nu in B_2.
BraidWord local_model(int nu);

bool verify_product_is_full_twist(const Factorization& f);

long long total_claimed_degree(const Factorization& f);
BraidWord factor_product(const Factorization& f);

}  // namespace hirzebruch
