#include "hirzebruch/arrangement.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <utility>

namespace hirzebruch {

LineArrangement::LineArrangement(std::vector<Line> lines)
    : lines_(std::move(lines)) {
    if (lines_.empty())
        throw std::invalid_argument("arrangement needs at least one line");
    for (std::size_t i = 0; i < lines_.size(); ++i)
        for (std::size_t j = i + 1; j < lines_.size(); ++j)
            if (lines_[i].slope == lines_[j].slope)
                throw std::invalid_argument(
                    "non-generic arrangement: equal slopes");
}

CriticalData critical_data(const LineArrangement& arr) {
    int p = arr.size();
    std::map<std::pair<Rational, Rational>, std::set<int>> points;
    for (int i = 0; i < p; ++i) {
        for (int j = i + 1; j < p; ++j) {
            const Line& li = arr.line(i);
            const Line& lj = arr.line(j);
            Rational x = (lj.intercept - li.intercept) / (li.slope - lj.slope);
            Rational y = li.y_at(x);
            auto& group = points[{x, y}];
            group.insert(i);
            group.insert(j);
        }
    }

    CriticalData data;
    for (const auto& [pt, group] : points) {
        ArrangementVertex v;
        v.x = pt.first;
        v.y = pt.second;
        v.lines.assign(group.begin(), group.end());
        data.vertices.push_back(std::move(v));
    }
    std::sort(data.vertices.begin(), data.vertices.end(),
              [](const ArrangementVertex& a, const ArrangementVertex& b) {
                  return a.x < b.x;
              });
    for (std::size_t i = 0; i + 1 < data.vertices.size(); ++i)
        if (data.vertices[i].x == data.vertices[i + 1].x)
            throw std::invalid_argument(
                "non-generic arrangement: two intersection points share an "
                "x-coordinate");
    for (const auto& v : data.vertices) data.critical_xs.push_back(v.x);

    data.basepoint = data.vertices.empty()
                         ? Rational(1)
                         : data.vertices.back().x + 1;

    std::vector<int> order(static_cast<std::size_t>(p));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int i, int j) {
        return arr.line(i).y_at(data.basepoint) < arr.line(j).y_at(data.basepoint);
    });
    for (int i : order) {
        data.fiber_lines.push_back(i);
        data.fiber.push_back(arr.line(i).y_at(data.basepoint));
    }
    for (std::size_t i = 0; i + 1 < data.fiber.size(); ++i)
        if (data.fiber[i] == data.fiber[i + 1])
            throw std::logic_error("coincident fiber values at the basepoint");
    return data;
}

GBase g_base(const CriticalData& data) {
    GBase g;
    int r = static_cast<int>(data.vertices.size());
    for (int i = r - 1; i >= 0; --i) g.vertex_order.push_back(i);
    return g;
}

namespace {

struct SweepStep {
    int first = 1;  // 1-based fiber position of the block
    int size = 0;
};

/// For each critical value in g-base order, the consecutive fiber positions
/// occupied by its lines just to the right of it.
std::vector<SweepStep> sweep_blocks(const LineArrangement& arr,
                                    const CriticalData& data,
                                    const GBase& gbase) {
    int p = arr.size();
    std::vector<SweepStep> steps;
    Rational right = data.basepoint;
    for (int vi : gbase.vertex_order) {
        const ArrangementVertex& v = data.vertices[static_cast<std::size_t>(vi)];
        Rational mid = (v.x + right) / 2;
        std::vector<int> order(static_cast<std::size_t>(p));
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int i, int j) {
            return arr.line(i).y_at(mid) < arr.line(j).y_at(mid);
        });
        std::vector<int> pos(static_cast<std::size_t>(p));
        for (int slot = 0; slot < p; ++slot)
            pos[static_cast<std::size_t>(order[static_cast<std::size_t>(slot)])] =
                slot + 1;
        int lo = p + 1, hi = 0;
        for (int line : v.lines) {
            lo = std::min(lo, pos[static_cast<std::size_t>(line)]);
            hi = std::max(hi, pos[static_cast<std::size_t>(line)]);
        }
        if (hi - lo + 1 != static_cast<int>(v.lines.size()))
            throw std::logic_error(
                "lines through a vertex are not consecutive in the fiber");
        steps.push_back({lo, static_cast<int>(v.lines.size())});
        right = v.x;
    }
    return steps;
}

BraidWord corridor_word(int p, const std::vector<SweepStep>& steps, int upto) {
    BraidWord t(p);
    for (int j = 0; j < upto; ++j)
        t = compose(t, inverse(block_half_twist(p, steps[static_cast<std::size_t>(j)].first,
                                                steps[static_cast<std::size_t>(j)].size)));
    return t;
}

Factor oracle_factor(const LineArrangement& arr, const CriticalData& data,
                     const std::vector<SweepStep>& steps, int loop_index) {
    int p = arr.size();
    const SweepStep& step = steps[static_cast<std::size_t>(loop_index - 1)];
    BraidWord t = corridor_word(p, steps, loop_index - 1);
    BraidWord word =
        compose(compose(t, block_full_twist(p, step.first, step.size)), inverse(t));

    Factor f;
    f.word = word;
    f.meta.source = "loop:" + std::to_string(loop_index);
    f.meta.claimed_degree =
        static_cast<long long>(step.size) * (step.size - 1);
    f.meta.nu = step.size == 2 ? ExponentClass::node : ExponentClass::twist;
    if (step.size == 2) {
        f.seed = FactorSeed{PuncturePath::below(step.first, step.first + 1), 2,
                            inverse(t)};
    }
    return f;
}

}  // namespace

BraidWord monodromy_oracle(const LineArrangement& arr, int loop_index) {
    CriticalData data = critical_data(arr);
    GBase gbase = g_base(data);
    int r = static_cast<int>(gbase.vertex_order.size());
    if (loop_index < 1 || loop_index > r)
        throw std::invalid_argument("loop index out of range");
    std::vector<SweepStep> steps = sweep_blocks(arr, data, gbase);
    return *oracle_factor(arr, data, steps, loop_index).word;
}

Factorization arrangement_monodromy_factorization(const LineArrangement& arr) {
    CriticalData data = critical_data(arr);
    GBase gbase = g_base(data);
    std::vector<SweepStep> steps = sweep_blocks(arr, data, gbase);

    Factorization f;
    f.strand_count = arr.size();
    f.level = "degenerate";
    f.complete = true;
    int r = static_cast<int>(gbase.vertex_order.size());
    for (int i = 1; i <= r; ++i)
        f.factors.push_back(oracle_factor(arr, data, steps, i));
    return f;
}

BraidWord local_model(int nu) {
    if (nu < 1 || nu > 3)
        throw std::invalid_argument("exponent class must be 1, 2 or 3");
    return power(BraidWord::generator(2, 1), nu);
}

long long total_claimed_degree(const Factorization& f) {
    long long total = 0;
    for (const Factor& factor : f.factors) total += factor.meta.claimed_degree;
    return total;
}

BraidWord factor_product(const Factorization& f) {
    BraidWord prod(std::max(f.strand_count, 1));
    for (const Factor& factor : f.factors) {
        if (!factor.word)
            throw std::invalid_argument(
                "factorization contains a word-free placeholder");
        prod = compose(prod, *factor.word);
    }
    return prod;
}

bool verify_product_is_full_twist(const Factorization& f) {
    if (!f.complete)
        throw std::invalid_argument("factorization is not declared complete");
    if (f.strand_count == 0) return f.factors.empty();
    return are_equal(factor_product(f), full_twist(f.strand_count));
}

}  // namespace hirzebruch
