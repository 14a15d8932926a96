#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hirzebruch/degeneration.hpp"

namespace hirzebruch {

/// How the three half-twist constituents of a 3-point factor are powered:
/// literal keeps them as written (degree 1 each), cubed raises them to cusp
/// powers (degree 3 each). The degree audit selects the default.
enum class ThreePointMode { literal, cubed };

/// Word-level local factorizations for 6-points, supplied externally. Words
/// are written in the 11 generators of the braid group on the 12 local
/// strands and embedded along the support punctures.
struct SixPointTable {
    struct TableFactor {
        std::vector<int> letters;  // signed local generator indices
        int nu = 1;
    };
    std::map<int, std::vector<TableFactor>> by_type;
};

struct SixPointPlaceholder {
    int vertex_id = 0;
    int type = 0;
    std::vector<int> support;             // 12 punctures, ascending
    std::vector<int> local_lines;         // incident line ids, ascending
    std::vector<std::string> slots;       // direction of each local line
    std::vector<std::string> turned_slots;  // type 1: directions after the
                                            // 90-degree clockwise turn
};

struct RegenerationOptions {
    std::optional<ThreePointMode> mode;  // unset: audit-selected
    const SixPointTable* six_point_table = nullptr;
};

struct RegeneratedResult {
    Factorization factorization;
    std::vector<SixPointPlaceholder> placeholders;  // word-free 6-points
    ThreePointMode mode_used = ThreePointMode::cubed;
    bool mode_auto_selected = false;
};

struct SixPointLocal {
    Factor factor;
    SixPointPlaceholder info;
};

/// Index of the first of the two punctures replacing line m.
inline int puncture_low(int line) { return 2 * line - 1; }
inline int puncture_high(int line) { return 2 * line; }

/// Smallest line index other than j through the higher-indexed endpoint
/// vertex of L_j; j itself when that vertex carries no other line.
int j_zero(const DegenerationComplex& c, int j);

std::vector<Factor> regenerate_pair_block(const DegenerationComplex& c, int i,
                                          int j);
std::vector<Factor> three_point_local(const DegenerationComplex& c,
                                      int vertex_id, ThreePointMode mode);
SixPointLocal six_point_local(const DegenerationComplex& c, int vertex_id);
std::vector<Factor> special_vertex_local(const DegenerationComplex& c,
                                         int vertex_id);

ThreePointMode audit_selected_mode(const DegenerationComplex& c);

RegeneratedResult regenerated_factorization(
    const DegenerationComplex& c, const RegenerationOptions& options = {});

struct DegreeAuditRow {
    std::string source;
    long long claimed = 0;
    std::optional<long long> word_degree;  // exponent sums of word factors
};

struct DegreeAudit {
    int strand_count = 0;
    long long expected = 0;  // p(p-1)
    long long total_claimed = 0;
    long long residual = 0;  // expected - total_claimed
    bool factors_match_claims = true;
    bool passed = false;
    long long placeholder_count = 0;
    std::optional<long long> consistent_placeholder_degree;
    std::vector<DegreeAuditRow> rows;  // per-source subtotals, factor order
};

DegreeAudit degree_audit(const Factorization& f, int p);

/// Rewrites every factor as Q^{-1} sigma_1^nu Q; each rewrite is verified
/// with are_equal before it is returned.
std::vector<std::pair<BraidWord, int>> cuspidal_normal_form(
    const Factorization& f);

}  // namespace hirzebruch
