#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <cstring>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "hirzebruch/arrangement.hpp"
#include "hirzebruch/braid.hpp"
#include "hirzebruch/degeneration.hpp"
#include "hirzebruch/galois.hpp"
#include "hirzebruch/regeneration.hpp"

using namespace hirzebruch;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

bool require(std::ostream& os, bool condition, const std::string& what) {
    if (!condition) os << "    FAILED: " << what << "\n";
    return condition;
}

// ------------------------------------------------------------- criterion 1

bool braid_axioms(std::ostream& os) {
    Clock::time_point start = Clock::now();
    bool ok = true;
    for (int n = 2; n <= 8; ++n) {
        for (int i = 1; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                BraidWord left(n), right(n);
                if (j == i + 1) {
                    left = BraidWord(n, {i, j, i});
                    right = BraidWord(n, {j, i, j});
                } else {
                    left = BraidWord(n, {i, j});
                    right = BraidWord(n, {j, i});
                }
                ok &= require(os, are_equal(left, right),
                              "braid relation sigma_" + std::to_string(i) +
                                  ", sigma_" + std::to_string(j) + " on " +
                                  std::to_string(n) + " strands");
            }
        }

        BraidWord d2 = full_twist(n);
        for (int i = 1; i < n; ++i) {
            BraidWord s = BraidWord::generator(n, i);
            ok &= require(os, are_equal(compose(d2, s), compose(s, d2)),
                          "centrality of the full twist on " +
                              std::to_string(n) + " strands");
        }
        ok &= require(os, exponent_sum(d2) == 1LL * n * (n - 1),
                      "exponent sum n(n-1) on " + std::to_string(n) +
                          " strands");

        std::vector<int> boundary;
        for (int i = 1; i <= n; ++i) boundary.push_back(i);
        FreeWord d(n, boundary);
        for (int i = 1; i <= n; ++i) {
            FreeWord x = FreeWord::generator(n, i);
            ok &= require(os, artin_action(d2, x) == d * x * d.inverse(),
                          "boundary conjugation identity on " +
                              std::to_string(n) + " strands");
        }
    }
    double elapsed = seconds_since(start);
    os << "    relations, centrality, exponent sums and the boundary "
          "conjugation identity hold for 2 <= n <= 8 ("
       << elapsed << " s)\n";
    ok &= require(os, elapsed < 10.0, "runtime under 10 s");
    return ok;
}

// ------------------------------------------------------------- criterion 2

LineArrangement pencil_fixture() {
    std::vector<Line> lines;
    for (long long slope : {1, 2, 3, -1})
        lines.push_back({Rational(slope), Rational(1 - slope)});
    lines.push_back({Rational(1, 2), Rational(3)});
    lines.push_back({Rational(-3), Rational(-2)});
    return LineArrangement(lines);
}

LineArrangement triple_point_fixture() {
    return LineArrangement({{Rational(1), Rational(0)},
                            {Rational(-1), Rational(0)},
                            {Rational(1, 2), Rational(0)},
                            {Rational(5), Rational(7, 3)},
                            {Rational(-7), Rational(11, 5)}});
}

bool arrangement_products(std::ostream& os) {
    Clock::time_point start = Clock::now();
    bool ok = true;

    int pencil_count = 0;
    for (const LineArrangement& arr :
         {pencil_fixture(), triple_point_fixture()}) {
        Factorization f = arrangement_monodromy_factorization(arr);
        ok &= require(os, f.complete && verify_product_is_full_twist(f),
                      "product over an arrangement with a concurrent pencil");
        ++pencil_count;
    }

    std::mt19937 rng(2026);
    int random_count = 0;
    while (random_count < 20) {
        int n = 3 + static_cast<int>(rng() % 6);
        std::vector<Line> lines;
        for (int i = 0; i < n; ++i) {
            Rational slope(10 * i + static_cast<int>(rng() % 9) - 4, 7);
            Rational intercept(static_cast<int>(rng() % 21) - 10,
                               1 + static_cast<int>(rng() % 5));
            lines.push_back({slope, intercept});
        }
        try {
            LineArrangement arr(std::move(lines));
            Factorization f = arrangement_monodromy_factorization(arr);
            ok &= require(os,
                          f.complete && verify_product_is_full_twist(f),
                          "product over a random arrangement of " +
                              std::to_string(n) + " lines");
            ++random_count;
        } catch (const std::invalid_argument&) {
            continue;  // degenerate draw, reroll
        }
    }

    double elapsed = seconds_since(start);
    os << "    ordered oracle products equal the full twist for "
       << random_count << " random arrangements and " << pencil_count
       << " arrangements with concurrent pencils, up to 8 lines ("
       << elapsed << " s)\n";
    ok &= require(os, elapsed < 60.0, "runtime under 60 s");
    return ok;
}

// ------------------------------------------------------------- criterion 3

bool degeneration_census(std::ostream& os) {
    bool ok = true;
    for (int a = 1; a <= 10; ++a) {
        for (int b = 1; b <= 10; ++b) {
            for (int k = 0; k <= 4; ++k) {
                auto [planes, lines, vertices] = counts(build_complex(k, a, b));
                ok &= require(os, planes == 2LL * a * b + 1LL * k * b * b,
                              "plane count at k=" + std::to_string(k) + " a=" +
                                  std::to_string(a) + " b=" +
                                  std::to_string(b));
            }

            DegenerationComplex c = build_complex(1, a, b);
            auto [planes, lines, vertices] = counts(c);
            long long expected_lines = (6LL * a * b - 2 * a - 3 * b + 3LL * b * b) / 2;
            long long expected_vertices = b * (b + 1) / 2 + (a + 1LL) * (b + 1);
            ok &= require(os, lines == expected_lines,
                          "line count at a=" + std::to_string(a) + " b=" +
                              std::to_string(b));
            ok &= require(os, vertices == expected_vertices,
                          "vertex count at a=" + std::to_string(a) + " b=" +
                              std::to_string(b));

            long long m0 = b * (b + 1) / 2 + 1;
            std::set<int> expected_special = {
                1, static_cast<int>(m0 + b), static_cast<int>(vertices - b),
                static_cast<int>(vertices)};
            std::set<int> actual;
            std::vector<VertexClass> classes = classify_vertices(c);
            for (std::size_t i = 0; i < classes.size(); ++i) {
                if (classes[i].kind == VertexKind::nonsingular_on_curve ||
                    classes[i].kind == VertexKind::nonsingular_off_curve)
                    actual.insert(static_cast<int>(i) + 1);
            }
            ok &= require(os, actual == expected_special,
                          "special vertex indices at a=" + std::to_string(a) +
                              " b=" + std::to_string(b));
        }
    }
    os << "    plane, line, vertex and special-vertex counts match their "
          "closed forms for 1 <= a,b <= 10\n";
    return ok;
}

// ------------------------------------------------------------- criterion 4

bool regeneration_audit(std::ostream& os) {
    bool ok = true;
    for (auto [a, b] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 2}}) {
        DegenerationComplex c = build_complex(1, a, b);

        RegeneratedResult selected = regenerated_factorization(c);
        DegreeAudit audit = degree_audit(selected.factorization,
                                         selected.factorization.strand_count);

        RegenerationOptions alternate;
        alternate.mode = selected.mode_used == ThreePointMode::cubed
                             ? ThreePointMode::literal
                             : ThreePointMode::cubed;
        DegreeAudit alt_audit = degree_audit(
            regenerated_factorization(c, alternate).factorization,
            selected.factorization.strand_count);

        const char* mode_name =
            selected.mode_used == ThreePointMode::cubed ? "cubed" : "literal";
        const char* alt_name =
            selected.mode_used == ThreePointMode::cubed ? "literal" : "cubed";

        os << "    (1," << a << "," << b << "): selected 3-point mode "
           << mode_name << ", expected " << audit.expected << ", claimed "
           << audit.total_claimed << ", residual " << audit.residual;
        if (audit.placeholder_count > 0) {
            os << "; " << audit.placeholder_count
               << " word-free 6-point factor(s) counted at 132";
            if (audit.consistent_placeholder_degree)
                os << " (residual vanishes at "
                   << *audit.consistent_placeholder_degree << " each)";
        }
        os << "\n";
        os << "    (1," << a << "," << b << "): non-selected mode " << alt_name
           << " residual " << alt_audit.residual
           << " (discrepancy report: the two readings of a 3-point factor "
              "claim 3+3+3+1 = 10 or 1+1+1+1 = 4)\n";

        ok &= require(os,
                      audit.residual == 0 && audit.factors_match_claims,
                      "audit residual 0 for (1," + std::to_string(a) + "," +
                          std::to_string(b) + ")");
    }
    if (!ok) {
        os << "    analysis: the audit closes exactly on the 6-point-free "
              "surface (1,1,1); once 6-points appear the claimed degree 132 "
              "overshoots, and each audit balances only if a word-free "
              "6-point contributes 126\n";
        os << "    analysis: neither 3-point reading absorbs the gap (the "
              "residuals have opposite signs), so the count is recorded as a "
              "discrepancy instead of being patched\n";
    }
    return ok;
}

// ------------------------------------------------------------- criterion 5

bool chern_identities(std::ostream& os) {
    Clock::time_point start = Clock::now();
    bool ok = true;
    for (long long k = 0; k <= 6; ++k) {
        for (long long a = 1; a <= 8; ++a) {
            for (long long b = 1; b <= 8; ++b) {
                SurfaceParams p{k, a, b};
                ChernPair pair = chern_Y(p);  // throws if the three routes split
                ChernValue tau = signature(p);
                ok &= require(os,
                              tau.coefficient * 3 ==
                                  pair.c1sq_coeff - 2 * pair.c2_coeff,
                              "signature identity at k=" + std::to_string(k) +
                                  " a=" + std::to_string(a) + " b=" +
                                  std::to_string(b));
                if (k <= 1)
                    ok &= require(os, specialized_chern(p) == pair,
                                  "specialization at k=" + std::to_string(k));
            }
        }
    }
    for (long long b = 1; b <= 8; ++b)
        ok &= require(os, veronese_chern(b) == chern_Y({1, 0, b}),
                      "embedded-plane closed form at b=" + std::to_string(b));
    double elapsed = seconds_since(start);
    os << "    expanded, factored and pipeline Chern values agree, with the "
          "signature and specialization identities, for k <= 6, a,b <= 8 ("
       << elapsed << " s)\n";
    ok &= require(os, elapsed < 5.0, "runtime under 5 s");
    return ok;
}

// ------------------------------------------------------------- criterion 6

bool equal_chern_pairs(std::ostream& os) {
    bool ok = true;
    int pairs = 0;
    for (long long s = 1; s <= 9; s += 2) {
        for (long long t = 1; t <= 9; t += 2) {
            if (std::gcd(s, t) != 1) continue;
            PairReport report = equal_chern_pair(s, t);
            std::string label = "s=" + std::to_string(s) + " t=" +
                                std::to_string(t);
            ok &= require(os, report.chern_equal,
                          "Chern numbers agree at " + label);
            ok &= require(os, report.first_pi1.trivial(),
                          "first cover simply connected at " + label);
            ok &= require(os,
                          report.second_pi1.torsion_order == 2 &&
                              report.second_pi1.rank ==
                                  4 * s * t + 4 * t * t - 2,
                          "second cover is (Z_2)^(4st+4t^2-2) at " + label);
            ++pairs;
        }
    }
    os << "    " << pairs
       << " odd coprime pairs share both Chern numbers while one cover is "
          "simply connected and the other has 2-torsion\n";
    return ok;
}

// ------------------------------------------------------------- criterion 7

bool classification_cross_checks(std::ostream& os) {
    bool ok = true;
    std::vector<SurfaceParams> sign_mismatches;
    for (long long k = 0; k <= 10; ++k) {
        for (long long a = 1; a <= 20; ++a) {
            for (long long b = 1; b <= 20; ++b) {
                SurfaceParams p{k, a, b};
                ClassifyFlags flags = classify(p);
                BranchInvariants inv = branch_invariants(p);
                ok &= require(os, flags.spin == (inv.m % 4 != 0),
                              "spin residue law at k=" + std::to_string(k) +
                                  " a=" + std::to_string(a) + " b=" +
                                  std::to_string(b));
                ok &= require(os, flags.general_type == (inv.m > 6),
                              "general-type threshold at k=" +
                                  std::to_string(k) + " a=" +
                                  std::to_string(a) + " b=" +
                                  std::to_string(b));
                if (b >= 4 &&
                    (flags.signature_sign > 0) != flags.positivity_table)
                    sign_mismatches.push_back(p);
            }
        }
    }
    os << "    spin and general-type laws hold across 0 <= k <= 10, "
          "1 <= a,b <= 20\n";
    if (!sign_mismatches.empty()) {
        os << "    FAILED: " << sign_mismatches.size()
           << " triples with b >= 4 have positive signature but fall outside "
              "the eleven-row condition table:\n";
        std::size_t shown = 0;
        for (const SurfaceParams& p : sign_mismatches) {
            if (shown == 8) {
                os << "      ...\n";
                break;
            }
            os << "      (" << p.k << "," << p.a << "," << p.b
               << "): tau sign " << signature(p).sign() << ", table member "
               << (positivity_table(p) ? "yes" : "no") << "\n";
            ++shown;
        }
        os << "    analysis: the condition table is sound (membership forces "
              "tau > 0) but not sharp; every mismatch falls in one of two "
              "families.\n";
        os << "      For k = 0 the sign of tau is governed by "
              "(a-3)(b-3) > 4, so a = 4 (b >= 8) and a = 5 (b >= 6) give "
              "tau > 0, while the table demands a >= 8 when b = 4 and "
              "a >= 6 when b >= 5; e.g. (0,4,8) and (0,5,6).\n";
        os << "      For k >= 4 the single row admits only a = 1, yet "
              "tau > 0 for every a >= 2 with b >= 4; e.g. (4,2,4).\n";
        os << "      The rows for k = 1, 2, 3 are exact over this range.\n";
        ok = false;
    }
    return ok;
}

// ------------------------------------------------------------- criterion 8

bool distinguished_quadruples(std::ostream& os) {
    bool ok = true;
    auto check_row = [&os, &ok](const SurfaceParams& p, int expected_sign) {
        ClassifyFlags flags = classify(p);
        bool row_ok = flags.simply_connected && flags.general_type &&
                      flags.signature_sign == expected_sign && flags.spin;
        os << "    (" << p.k << "," << p.a << "," << p.b
           << "): simply connected " << (flags.simply_connected ? "yes" : "NO")
           << ", general type " << (flags.general_type ? "yes" : "NO")
           << ", tau sign " << flags.signature_sign << " (want "
           << expected_sign << ")" << ", spin " << (flags.spin ? "yes" : "NO")
           << (row_ok ? "" : "  <- fails") << "\n";
        ok &= row_ok;
    };
    for (const SurfaceParams& p : std::vector<SurfaceParams>{
             {0, 7, 4}, {1, 5, 4}, {2, 3, 4}, {3, 1, 4}})
        check_row(p, 0);
    for (long long b = 5; b <= 8; ++b) check_row({1, 3, b}, 1);
    if (!ok) {
        os << "    analysis: (1,3,5) has branch degree 144 and (1,3,6) degree "
              "192, both divisible by 4, so the parity criterion denies spin; "
              "(1,3,6) also has gcd(3,6) = 3, giving fundamental group "
              "(Z_3)^70 instead of a trivial one\n";
    }
    return ok;
}

struct Criterion {
    int number;
    const char* title;
    bool (*run)(std::ostream&);
};

const Criterion kCriteria[] = {
    {1, "braid group axioms and the full twist", braid_axioms},
    {2, "monodromy products over random line arrangements",
     arrangement_products},
    {3, "degeneration census closed forms", degeneration_census},
    {4, "regenerated degree audit", regeneration_audit},
    {5, "Chern number identities", chern_identities},
    {6, "equal-Chern pairs with distinct fundamental groups",
     equal_chern_pairs},
    {7, "classification cross-checks", classification_cross_checks},
    {8, "distinguished quadruple classification", distinguished_quadruples},
};

}  // namespace

int main(int argc, char** argv) {
    int selected = 0;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc)
            selected = std::atoi(argv[++i]);
    }

    bool all_ok = true;
    for (const Criterion& criterion : kCriteria) {
        if (selected != 0 && criterion.number != selected) continue;
        std::ostringstream detail;
        bool ok = false;
        try {
            ok = criterion.run(detail);
        } catch (const std::exception& e) {
            detail << "    exception: " << e.what() << "\n";
        }
        std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion "
                  << criterion.number << ": " << criterion.title << "\n"
                  << detail.str();
        all_ok &= ok;
    }
    return all_ok ? 0 : 1;
}
