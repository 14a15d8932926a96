#include "hirzebruch/regeneration.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <stdexcept>
#include <string>

namespace hirzebruch {

namespace {

int line_of_puncture(int c) { return (c + 1) / 2; }

// Path between two punctures whose detour sides follow the endpoint rule:
// an intermediate puncture of line r is passed above exactly when r >= pivot.
PuncturePath pivot_path(int from, int to, int pivot) {
    PuncturePath path;
    path.from = from;
    path.to = to;
    for (int c = from + 1; c < to; ++c) {
        path.detours.push_back(line_of_puncture(c) >= pivot
                                   ? Detour::above
                                   : Detour::below);
    }
    return path;
}

BraidWord below_half_twist(int p, int u, int v) {
    if (u > v) std::swap(u, v);
    return half_twist(PuncturePath::below(u, v), p);
}

std::string vertex_source(int vertex_id) {
    return "vertex:" + std::to_string(vertex_id);
}

std::string pair_source(int i, int j) {
    return "pair:" + std::to_string(i) + "," + std::to_string(j);
}

Factor half_twist_power_factor(const BraidWord& base, const PuncturePath& path,
                               int nu, const BraidWord& conjugator,
                               std::string source) {
    Factor f;
    BraidWord powered = power(base, nu);
    f.word = conjugator.empty() ? powered : conjugate(powered, conjugator);
    f.meta.source = std::move(source);
    f.meta.nu = static_cast<ExponentClass>(nu);
    f.meta.claimed_degree = nu;
    f.seed = FactorSeed{path, nu, conjugator};
    return f;
}

const ComplexVertex& vertex_at(const DegenerationComplex& c, int vertex_id) {
    if (vertex_id < 1 || vertex_id > c.nu0())
        throw std::domain_error("vertex id out of range");
    return c.vertices[static_cast<std::size_t>(vertex_id) - 1];
}

const ComplexLine& line_at(const DegenerationComplex& c, int line_id) {
    if (line_id < 1 || line_id > c.p0())
        throw std::domain_error("line id out of range");
    return c.lines[static_cast<std::size_t>(line_id) - 1];
}

struct RegenerationCounts {
    long long pairs = 0;
    long long three_points = 0;
    long long six_points = 0;
    long long on_curve = 0;
};

RegenerationCounts regeneration_counts(const DegenerationComplex& c) {
    RegenerationCounts n;
    n.pairs = static_cast<long long>(disjoint_line_pairs(c).size());
    for (const VertexClass& vc : classify_vertices(c)) {
        switch (vc.kind) {
            case VertexKind::three_point: ++n.three_points; break;
            case VertexKind::six_point: ++n.six_points; break;
            case VertexKind::nonsingular_on_curve: ++n.on_curve; break;
            case VertexKind::nonsingular_off_curve: break;
        }
    }
    return n;
}

long long claimed_total(const RegenerationCounts& n, ThreePointMode mode) {
    long long per_three = (mode == ThreePointMode::cubed ? 10 : 4);
    return 8 * n.pairs + per_three * n.three_points + 132 * n.six_points +
           n.on_curve;
}

}  // namespace

int j_zero(const DegenerationComplex& c, int j) {
    const ComplexLine& lj = line_at(c, j);
    const ComplexVertex& v = vertex_at(c, lj.vertex_high);
    for (int id : v.lines)
        if (id != j) return id;
    return j;
}

std::vector<Factor> regenerate_pair_block(const DegenerationComplex& c, int i,
                                          int j) {
    if (i >= j) throw std::invalid_argument("pair must satisfy i < j");
    const ComplexLine& li = line_at(c, i);
    const ComplexLine& lj = line_at(c, j);
    if (li.vertex_low == lj.vertex_low || li.vertex_low == lj.vertex_high ||
        li.vertex_high == lj.vertex_low || li.vertex_high == lj.vertex_high)
        throw std::invalid_argument("lines share a vertex");

    const int p = 2 * c.p0();
    const int pivot = j_zero(c, j);
    std::vector<Factor> out;
    for (int x : {puncture_low(i), puncture_high(i)}) {
        for (int y : {puncture_low(j), puncture_high(j)}) {
            PuncturePath path = pivot_path(x, y, pivot);
            out.push_back(half_twist_power_factor(
                half_twist(path, p), path, 2, BraidWord(p), pair_source(i, j)));
        }
    }
    return out;
}

std::vector<Factor> three_point_local(const DegenerationComplex& c,
                                      int vertex_id, ThreePointMode mode) {
    const ComplexVertex& v = vertex_at(c, vertex_id);
    if (v.lines.size() != 2)
        throw std::invalid_argument("vertex is not a 3-point");

    const ComplexLine& first = line_at(c, v.lines[0]);
    const ComplexLine& second = line_at(c, v.lines[1]);
    bool first_diag = first.kind == LineKind::diagonal;
    bool second_diag = second.kind == LineKind::diagonal;
    if (first_diag && second_diag)
        throw std::logic_error("two collinear diagonals at a 3-point");

    // The factors are written around the line playing the diagonal role; at
    // a right-angle corner the vertical line takes that role.
    int k;
    if (first_diag || second_diag) {
        k = first_diag ? first.id : second.id;
    } else {
        k = first.kind == LineKind::vertical ? first.id : second.id;
    }
    int j = (k == v.lines[0]) ? v.lines[1] : v.lines[0];

    const int p = 2 * c.p0();
    const int qk = puncture_low(k);
    const int qj = puncture_low(j);
    const BraidWord sigma_j = BraidWord::generator(p, 2 * j - 1);
    const std::string src = vertex_source(vertex_id);

    PuncturePath path1 = PuncturePath::below(std::min(qk, qj),
                                             std::max(qk, qj));
    PuncturePath path2 = PuncturePath::below(std::min(qk, 2 * j),
                                             std::max(qk, 2 * j));

    int nu = (mode == ThreePointMode::cubed) ? 3 : 1;
    std::vector<Factor> out;
    out.push_back(half_twist_power_factor(half_twist(path1, p), path1, nu,
                                          BraidWord(p), src));
    out.push_back(half_twist_power_factor(half_twist(path2, p), path2, nu,
                                          BraidWord(p), src));
    out.push_back(half_twist_power_factor(half_twist(path2, p), path2, nu,
                                          sigma_j, src));

    BraidWord b(p);
    if (k < j) {
        b = compose(compose(below_half_twist(p, 2 * k, 2 * j - 1),
                            inverse(sigma_j)),
                    below_half_twist(p, 2 * k - 1, 2 * j));
    } else {
        b = compose(compose(below_half_twist(p, 2 * j - 1, 2 * k - 1),
                            inverse(sigma_j)),
                    below_half_twist(p, 2 * j - 1, 2 * k));
    }
    PuncturePath path4 = PuncturePath::below(qk, qk + 1);
    out.push_back(half_twist_power_factor(BraidWord::generator(p, qk), path4,
                                          1, b, src));
    return out;
}

SixPointLocal six_point_local(const DegenerationComplex& c, int vertex_id) {
    const ComplexVertex& v = vertex_at(c, vertex_id);
    if (v.lines.size() != 6)
        throw std::invalid_argument("vertex is not a 6-point");

    static const std::map<std::pair<int, int>, std::string> direction_name = {
        {{1, -1}, "down-right"}, {{1, 0}, "right"},  {{0, -1}, "down"},
        {{0, 1}, "up"},          {{-1, 0}, "left"},  {{-1, 1}, "up-left"},
        {{-1, -1}, "down-left"}, {{1, 1}, "up-right"},
    };
    static const std::vector<std::string> expected_slots = {
        "down-right", "right", "down", "up", "left", "up-left"};

    SixPointPlaceholder info;
    info.vertex_id = vertex_id;
    info.local_lines = v.lines;
    for (int id : v.lines) {
        const ComplexLine& l = line_at(c, id);
        const ComplexVertex& other = vertex_at(
            c, l.vertex_low == vertex_id ? l.vertex_high : l.vertex_low);
        std::pair<int, int> d{other.at.x - v.at.x, other.at.y - v.at.y};
        info.support.push_back(puncture_low(id));
        info.support.push_back(puncture_high(id));
        info.slots.push_back(direction_name.at(d));
    }
    if (info.slots != expected_slots)
        throw std::logic_error("unexpected local line order at a 6-point");

    std::vector<VertexClass> classes = classify_vertices(c);
    info.type = classes[static_cast<std::size_t>(vertex_id) - 1]
                    .six_type.value();
    if (info.type == 1) {
        // Rotating the local picture a quarter turn clockwise carries it to
        // the reference position; (dx, dy) goes to (dy, -dx).
        for (int id : v.lines) {
            const ComplexLine& l = line_at(c, id);
            const ComplexVertex& other = vertex_at(
                c, l.vertex_low == vertex_id ? l.vertex_high : l.vertex_low);
            std::pair<int, int> d{other.at.y - v.at.y, -(other.at.x - v.at.x)};
            info.turned_slots.push_back(direction_name.at(d));
        }
    }

    SixPointLocal out;
    out.info = info;
    out.factor.word = std::nullopt;
    out.factor.meta.source = vertex_source(vertex_id);
    out.factor.meta.nu = ExponentClass::twist;
    out.factor.meta.claimed_degree = 132;
    return out;
}

std::vector<Factor> special_vertex_local(const DegenerationComplex& c,
                                         int vertex_id) {
    const ComplexVertex& v = vertex_at(c, vertex_id);
    if (v.lines.size() >= 2)
        throw std::invalid_argument("vertex is not a nonsingular point");
    if (v.lines.empty()) return {};

    const int p = 2 * c.p0();
    int line = v.lines[0];
    PuncturePath path = PuncturePath::below(puncture_low(line),
                                            puncture_high(line));
    return {half_twist_power_factor(BraidWord::generator(p, 2 * line - 1),
                                    path, 1, BraidWord(p),
                                    vertex_source(vertex_id))};
}

ThreePointMode audit_selected_mode(const DegenerationComplex& c) {
    RegenerationCounts n = regeneration_counts(c);
    long long p = 2 * static_cast<long long>(c.p0());
    long long expected = p * (p - 1);
    long long res_literal =
        std::llabs(expected - claimed_total(n, ThreePointMode::literal));
    long long res_cubed =
        std::llabs(expected - claimed_total(n, ThreePointMode::cubed));
    return res_literal < res_cubed ? ThreePointMode::literal
                                   : ThreePointMode::cubed;
}

namespace {

std::vector<Factor> table_factors(const DegenerationComplex& c,
                                  const SixPointPlaceholder& info,
                                  const std::vector<SixPointTable::TableFactor>&
                                      entries) {
    const int p = 2 * c.p0();
    std::vector<Factor> out;
    for (const SixPointTable::TableFactor& entry : entries) {
        BraidWord word(p);
        for (int letter : entry.letters) {
            int m = std::abs(letter);
            if (m < 1 || m >= static_cast<int>(info.support.size()))
                throw std::invalid_argument(
                    "6-point table letter outside the local braid group");
            int u = info.support[static_cast<std::size_t>(m) - 1];
            int v = info.support[static_cast<std::size_t>(m)];
            BraidWord band = half_twist(PuncturePath::below(u, v), p);
            word = compose(word, letter > 0 ? band : inverse(band));
        }
        Factor f;
        f.word = word;
        f.meta.source = vertex_source(info.vertex_id);
        f.meta.nu = (entry.nu >= 1 && entry.nu <= 3)
                        ? static_cast<ExponentClass>(entry.nu)
                        : ExponentClass::twist;
        f.meta.claimed_degree = exponent_sum(word);
        out.push_back(std::move(f));
    }
    return out;
}

}  // namespace

RegeneratedResult regenerated_factorization(const DegenerationComplex& c,
                                            const RegenerationOptions& options) {
    RegeneratedResult result;
    result.mode_auto_selected = !options.mode.has_value();
    result.mode_used = options.mode.value_or(audit_selected_mode(c));
    result.factorization.strand_count = 2 * c.p0();
    result.factorization.level = "regenerated";

    std::vector<VertexClass> classes = classify_vertices(c);
    // C-tilde slot i collects the full twists of the disjoint pairs whose
    // first line index is i; slots past the last vertex fold into the final
    // slot so every pair is still emitted exactly once.
    std::map<int, std::vector<std::pair<int, int>>> pairs_by_slot;
    for (const auto& [i, j] : disjoint_line_pairs(c))
        pairs_by_slot[std::min(i, c.nu0())].emplace_back(i, j);

    for (int vid = 1; vid <= c.nu0(); ++vid) {
        auto assigned = pairs_by_slot.find(vid);
        if (assigned != pairs_by_slot.end()) {
            for (const auto& [i, j] : assigned->second) {
                std::vector<Factor> block = regenerate_pair_block(c, i, j);
                for (Factor& f : block)
                    result.factorization.factors.push_back(std::move(f));
            }
        }

        const VertexClass& vc = classes[static_cast<std::size_t>(vid) - 1];
        switch (vc.kind) {
            case VertexKind::three_point: {
                for (Factor& f :
                     three_point_local(c, vid, result.mode_used))
                    result.factorization.factors.push_back(std::move(f));
                break;
            }
            case VertexKind::six_point: {
                SixPointLocal local = six_point_local(c, vid);
                const SixPointTable* table = options.six_point_table;
                bool resolved = false;
                if (table) {
                    auto entry = table->by_type.find(local.info.type);
                    if (entry != table->by_type.end()) {
                        for (Factor& f :
                             table_factors(c, local.info, entry->second))
                            result.factorization.factors.push_back(
                                std::move(f));
                        resolved = true;
                    }
                }
                if (!resolved) {
                    result.factorization.factors.push_back(
                        std::move(local.factor));
                    result.placeholders.push_back(std::move(local.info));
                }
                break;
            }
            default: {
                for (Factor& f : special_vertex_local(c, vid))
                    result.factorization.factors.push_back(std::move(f));
                break;
            }
        }
    }

    result.factorization.complete = result.placeholders.empty();
    return result;
}

DegreeAudit degree_audit(const Factorization& f, int p) {
    DegreeAudit audit;
    audit.strand_count = p;
    audit.expected = static_cast<long long>(p) * (p - 1);

    std::map<std::string, std::size_t> row_index;
    for (const Factor& factor : f.factors) {
        auto [it, inserted] =
            row_index.try_emplace(factor.meta.source, audit.rows.size());
        if (inserted) {
            DegreeAuditRow row;
            row.source = factor.meta.source;
            audit.rows.push_back(row);
        }
        DegreeAuditRow& row = audit.rows[it->second];
        row.claimed += factor.meta.claimed_degree;
        audit.total_claimed += factor.meta.claimed_degree;
        if (factor.word.has_value()) {
            long long deg = exponent_sum(*factor.word);
            row.word_degree = row.word_degree.value_or(0) + deg;
            if (deg != factor.meta.claimed_degree)
                audit.factors_match_claims = false;
        } else {
            ++audit.placeholder_count;
        }
    }

    audit.residual = audit.expected - audit.total_claimed;
    audit.passed = audit.residual == 0 && audit.factors_match_claims;
    if (audit.placeholder_count > 0 &&
        audit.residual % audit.placeholder_count == 0) {
        audit.consistent_placeholder_degree =
            132 + audit.residual / audit.placeholder_count;
    }
    return audit;
}

std::vector<std::pair<BraidWord, int>> cuspidal_normal_form(
    const Factorization& f) {
    std::vector<std::pair<BraidWord, int>> out;
    const int p = f.strand_count;
    const BraidWord sigma1 = BraidWord::generator(p, 1);
    std::vector<int> delta_letters;
    for (int i = 1; i < p; ++i) delta_letters.push_back(i);
    const BraidWord delta(p, delta_letters);

    for (const Factor& factor : f.factors) {
        if (!factor.word || !factor.seed)
            throw std::domain_error(
                "factor is not a recorded power of a half-twist");
        const FactorSeed& seed = *factor.seed;
        if (seed.nu < 1 || seed.nu > 3)
            throw std::domain_error("factor exponent outside 1..3");

        BraidWord band = half_twist(seed.path, p);
        std::size_t prefix_len = seed.path.detours.size();
        std::vector<int> prefix(band.letters().begin(),
                                band.letters().begin() +
                                    static_cast<std::ptrdiff_t>(prefix_len));
        BraidWord q = compose(
            compose(power(delta, -(seed.path.from - 1)),
                    inverse(BraidWord(p, std::move(prefix)))),
            seed.conjugator);

        if (!are_equal(conjugate(power(sigma1, seed.nu), q), *factor.word))
            throw std::logic_error("normal form failed verification");
        out.emplace_back(std::move(q), seed.nu);
    }
    return out;
}

}  // namespace hirzebruch
