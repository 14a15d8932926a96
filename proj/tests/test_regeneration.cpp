#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "hirzebruch/regeneration.hpp"

using namespace hirzebruch;

namespace {

BraidWord rebuild(const Factor& factor, int strand_count) {
    REQUIRE(factor.seed.has_value());
    return conjugate(power(half_twist(factor.seed->path, strand_count),
                           factor.seed->nu),
                     factor.seed->conjugator);
}

long long word_degree(const Factorization& f) {
    long long total = 0;
    for (const Factor& factor : f.factors) {
        REQUIRE(factor.word.has_value());
        total += exponent_sum(*factor.word);
    }
    return total;
}

}  // namespace

TEST_CASE("puncture doubling") {
    CHECK(puncture_low(1) == 1);
    CHECK(puncture_high(1) == 2);
    CHECK(puncture_low(7) == 13);
    CHECK(puncture_high(7) == 14);
}

TEST_CASE("path pivot index") {
    DegenerationComplex small = build_complex(1, 1, 1);
    CHECK(j_zero(small, 1) == 1);  // a_3 carries only L_1
    CHECK(j_zero(small, 2) == 2);
    DegenerationComplex c = build_complex(1, 1, 2);
    CHECK(j_zero(c, 1) == 3);
    CHECK(j_zero(c, 2) == 3);
    CHECK(j_zero(c, 4) == 2);
    CHECK(j_zero(c, 5) == 5);
    CHECK(j_zero(c, 6) == 7);
    CHECK(j_zero(c, 8) == 8);
}

TEST_CASE("pair blocks are four pure full twists") {
    DegenerationComplex c = build_complex(1, 1, 2);
    const int p = 2 * c.p0();
    for (auto [i, j] : disjoint_line_pairs(c)) {
        std::vector<Factor> block = regenerate_pair_block(c, i, j);
        REQUIRE(block.size() == 4);
        for (const Factor& factor : block) {
            CHECK(factor.meta.source ==
                  "pair:" + std::to_string(i) + "," + std::to_string(j));
            CHECK(factor.meta.nu == ExponentClass::node);
            CHECK(factor.meta.claimed_degree == 2);
            REQUIRE(factor.word.has_value());
            CHECK(exponent_sum(*factor.word) == 2);
            CHECK(permutation(*factor.word).is_identity());
            CHECK(rebuild(factor, p) == *factor.word);
            CHECK(factor.seed->nu == 2);
        }
        // the four twists pair the doubled punctures in the stated order
        CHECK(block[0].seed->path.from == puncture_low(i));
        CHECK(block[0].seed->path.to == puncture_low(j));
        CHECK(block[1].seed->path.to == puncture_high(j));
        CHECK(block[2].seed->path.from == puncture_high(i));
        CHECK(block[3].seed->path.to == puncture_high(j));
    }
    CHECK_THROWS_AS(regenerate_pair_block(c, 2, 3), std::invalid_argument);
    CHECK_THROWS_AS(regenerate_pair_block(c, 4, 1), std::invalid_argument);
    CHECK_THROWS_AS(regenerate_pair_block(c, 1, 1), std::invalid_argument);
}

TEST_CASE("triple point factors in the smallest embedding") {
    DegenerationComplex c = build_complex(1, 1, 1);
    std::vector<Factor> cubed = three_point_local(c, 2, ThreePointMode::cubed);
    REQUIRE(cubed.size() == 4);
    CHECK(cubed[0].word->letters() ==
          std::vector<int>{2, 1, -2, 2, 1, -2, 2, 1, -2});
    CHECK(cubed[1].word->letters() == std::vector<int>{2, 2, 2});
    CHECK(cubed[2].word->letters() == std::vector<int>{-1, 2, 2, 2, 1});
    CHECK(cubed[3].word->letters() ==
          std::vector<int>{3, 2, -1, -2, -3, 1, 2, -1, -2, 3, 2, 1, -2, -1,
                           3, 2, 1, -2, -3});
    for (int i = 0; i < 3; ++i) {
        CHECK(cubed[static_cast<std::size_t>(i)].meta.nu ==
              ExponentClass::cusp);
        CHECK(cubed[static_cast<std::size_t>(i)].meta.claimed_degree == 3);
    }
    CHECK(cubed[3].meta.nu == ExponentClass::branch);
    CHECK(cubed[3].meta.claimed_degree == 1);

    std::vector<Factor> literal =
        three_point_local(c, 2, ThreePointMode::literal);
    CHECK(literal[0].word->letters() == std::vector<int>{2, 1, -2});
    CHECK(literal[1].word->letters() == std::vector<int>{2});
    CHECK(literal[2].word->letters() == std::vector<int>{-1, 2, 1});
    CHECK(literal[3].word->letters() == cubed[3].word->letters());
    for (int i = 0; i < 4; ++i)
        CHECK(literal[static_cast<std::size_t>(i)].meta.claimed_degree == 1);

    CHECK_THROWS_AS(three_point_local(c, 1, ThreePointMode::cubed),
                    std::invalid_argument);
}

TEST_CASE("triple point permutations") {
    // The factors are written around the diagonal line (the vertical one at
    // a right-angle corner). When that line has the higher id the branch
    // factor transposes the doubled punctures of the other line and the
    // local block has trivial permutation; otherwise the conjugator drags
    // the transposition across and leaves a 3-cycle.
    for (auto [k, a, b] : {std::tuple{1, 1, 1}, {1, 1, 2}, {1, 2, 2}}) {
        DegenerationComplex c = build_complex(k, a, b);
        const int p = 2 * c.p0();
        std::vector<VertexClass> classes = classify_vertices(c);
        for (int id = 1; id <= c.nu0(); ++id) {
            const VertexClass& cls = classes[static_cast<std::size_t>(id) - 1];
            if (cls.kind != VertexKind::three_point) continue;

            const ComplexLine& l0 =
                c.lines[static_cast<std::size_t>(cls.incident_lines[0]) - 1];
            const ComplexLine& l1 =
                c.lines[static_cast<std::size_t>(cls.incident_lines[1]) - 1];
            int around;
            if (l0.kind == LineKind::diagonal) around = l0.id;
            else if (l1.kind == LineKind::diagonal) around = l1.id;
            else around = l0.kind == LineKind::vertical ? l0.id : l1.id;
            int other = l0.id + l1.id - around;

            std::vector<int> images(static_cast<std::size_t>(p));
            for (int x = 1; x <= p; ++x)
                images[static_cast<std::size_t>(x) - 1] = x;
            Permutation expected_branch(p);
            if (around > other) {
                expected_branch =
                    Permutation::transposition(p, 2 * other - 1, 2 * other);
            } else {
                expected_branch =
                    Permutation::transposition(p, 2 * around - 1, 2 * other);
                images[2 * around - 2] = 2 * other;
                images[2 * other - 1] = 2 * other - 1;
                images[2 * other - 2] = 2 * around - 1;
            }
            Permutation expected_total = Permutation::from_images(images);

            for (ThreePointMode mode :
                 {ThreePointMode::literal, ThreePointMode::cubed}) {
                std::vector<Factor> local = three_point_local(c, id, mode);
                Permutation total(p);
                for (const Factor& factor : local) {
                    CHECK(exponent_sum(*factor.word) ==
                          factor.meta.claimed_degree);
                    total = total.then(permutation(*factor.word));
                }
                CHECK(total == expected_total);
                Permutation branch = permutation(*local[3].word);
                CHECK(branch.is_transposition());
                CHECK(branch == expected_branch);
            }
        }
    }
}

TEST_CASE("six point placeholders") {
    DegenerationComplex c = build_complex(1, 1, 2);
    SixPointLocal local = six_point_local(c, 5);
    CHECK(local.info.vertex_id == 5);
    CHECK(local.info.type == 2);
    CHECK(local.info.local_lines == std::vector<int>{2, 3, 4, 5, 7, 8});
    CHECK(local.info.support ==
          std::vector<int>{3, 4, 5, 6, 7, 8, 9, 10, 13, 14, 15, 16});
    CHECK(local.info.slots ==
          std::vector<std::string>{"down-right", "right", "down", "up",
                                   "left", "up-left"});
    CHECK(local.info.turned_slots.empty());
    CHECK_FALSE(local.factor.word.has_value());
    CHECK(local.factor.meta.claimed_degree == 132);
    CHECK(local.factor.meta.nu == ExponentClass::twist);

    DegenerationComplex wide = build_complex(1, 2, 2);
    SixPointLocal interior = six_point_local(wide, 8);
    CHECK(interior.info.type == 1);
    CHECK(interior.info.turned_slots ==
          std::vector<std::string>{"down-left", "down", "left", "right",
                                   "up", "up-right"});
    SixPointLocal junction = six_point_local(wide, 5);
    CHECK(junction.info.type == 2);

    CHECK_THROWS_AS(six_point_local(c, 2), std::invalid_argument);
}

TEST_CASE("nonsingular vertices regenerate to single branch bands") {
    DegenerationComplex c = build_complex(1, 1, 2);
    CHECK(special_vertex_local(c, 1).empty());
    CHECK(special_vertex_local(c, 7).empty());
    std::vector<Factor> at6 = special_vertex_local(c, 6);
    REQUIRE(at6.size() == 1);
    CHECK(at6[0].word->letters() == std::vector<int>{9});
    CHECK(at6[0].meta.nu == ExponentClass::branch);
    CHECK(at6[0].meta.claimed_degree == 1);
    std::vector<Factor> at9 = special_vertex_local(c, 9);
    REQUIRE(at9.size() == 1);
    CHECK(at9[0].word->letters() == std::vector<int>{15});
    CHECK_THROWS_AS(special_vertex_local(c, 2), std::invalid_argument);
}

TEST_CASE("audit selects the cusp powers") {
    for (auto [k, a, b] : {std::tuple{1, 1, 1}, {1, 1, 2}, {1, 2, 2}}) {
        DegenerationComplex c = build_complex(k, a, b);
        CHECK(audit_selected_mode(c) == ThreePointMode::cubed);
    }
}

TEST_CASE("smallest skeleton, measured in full") {
    DegenerationComplex c = build_complex(1, 1, 1);
    RegeneratedResult r = regenerated_factorization(c);
    CHECK(r.mode_used == ThreePointMode::cubed);
    CHECK(r.mode_auto_selected);
    CHECK(r.placeholders.empty());
    const Factorization& f = r.factorization;
    CHECK(f.strand_count == 4);
    CHECK(f.level == "regenerated");
    CHECK(f.complete);
    REQUIRE(f.factors.size() == 6);
    CHECK(f.factors[0].meta.source == "vertex:2");
    CHECK(f.factors[4].meta.source == "vertex:3");
    CHECK(f.factors[4].word->letters() == std::vector<int>{1});
    CHECK(f.factors[5].meta.source == "vertex:5");
    CHECK(f.factors[5].word->letters() == std::vector<int>{3});

    DegreeAudit audit = degree_audit(f, 4);
    CHECK(audit.expected == 12);
    CHECK(audit.total_claimed == 12);
    CHECK(audit.residual == 0);
    CHECK(audit.factors_match_claims);
    CHECK(audit.passed);
    CHECK(audit.placeholder_count == 0);

    // Measured and frozen: the skeleton multiplies to a word of the right
    // degree whose permutation transposes both doubled pairs, so it is not
    // the full twist. The two single-band factors at the nonsingular
    // vertices contribute (1 2)(3 4) that nothing cancels.
    BraidWord product = factor_product(f);
    CHECK(exponent_sum(product) == 12);
    CHECK(permutation(product) ==
          Permutation::from_images({2, 1, 4, 3}));
    CHECK_FALSE(verify_product_is_full_twist(f));
    CHECK_FALSE(are_equal(product, full_twist(4)));

    RegeneratedResult lit = regenerated_factorization(
        c, {.mode = ThreePointMode::literal});
    CHECK(lit.mode_used == ThreePointMode::literal);
    CHECK_FALSE(lit.mode_auto_selected);
    DegreeAudit lit_audit = degree_audit(lit.factorization, 4);
    CHECK(lit_audit.total_claimed == 6);
    CHECK(lit_audit.residual == 6);
    CHECK_FALSE(lit_audit.passed);
}

TEST_CASE("frozen residuals for the audited family") {
    struct Row {
        int a;
        int b;
        long long expected;
        long long cubed_claim;
        long long literal_claim;
        long long consistent;
    };
    for (const Row& row : {Row{1, 1, 12, 12, 6, 0},
                           Row{1, 2, 240, 246, 222, 126},
                           Row{2, 2, 650, 662, 626, 126}}) {
        DegenerationComplex c = build_complex(1, row.a, row.b);
        const int p = 2 * c.p0();
        RegeneratedResult cubed = regenerated_factorization(
            c, {.mode = ThreePointMode::cubed});
        DegreeAudit audit = degree_audit(cubed.factorization, p);
        CHECK(audit.expected == row.expected);
        CHECK(audit.total_claimed == row.cubed_claim);
        CHECK(audit.residual == row.expected - row.cubed_claim);
        CHECK(audit.factors_match_claims);
        RegeneratedResult literal = regenerated_factorization(
            c, {.mode = ThreePointMode::literal});
        DegreeAudit lit = degree_audit(literal.factorization, p);
        CHECK(lit.total_claimed == row.literal_claim);
        if (audit.placeholder_count > 0) {
            REQUIRE(audit.consistent_placeholder_degree.has_value());
            CHECK(*audit.consistent_placeholder_degree == row.consistent);
        } else {
            CHECK_FALSE(audit.consistent_placeholder_degree.has_value());
        }
    }
}

TEST_CASE("skeleton covers every source exactly once") {
    DegenerationComplex c = build_complex(1, 1, 2);
    RegeneratedResult r = regenerated_factorization(c);
    std::map<std::string, int> factors_per_source;
    for (const Factor& factor : r.factorization.factors)
        ++factors_per_source[factor.meta.source];
    for (auto [i, j] : disjoint_line_pairs(c)) {
        std::string key =
            "pair:" + std::to_string(i) + "," + std::to_string(j);
        CHECK(factors_per_source[key] == 4);
        factors_per_source.erase(key);
    }
    CHECK(factors_per_source ==
          std::map<std::string, int>{{"vertex:2", 4},
                                     {"vertex:3", 4},
                                     {"vertex:4", 4},
                                     {"vertex:5", 1},
                                     {"vertex:6", 1},
                                     {"vertex:8", 4},
                                     {"vertex:9", 1}});
    REQUIRE(r.placeholders.size() == 1);
    CHECK(r.placeholders[0].vertex_id == 5);
    CHECK_FALSE(r.factorization.complete);
}

TEST_CASE("pair twists precede the same numbered vertex") {
    DegenerationComplex c = build_complex(1, 1, 2);
    RegeneratedResult r = regenerated_factorization(c);
    std::vector<std::string> sequence;
    for (const Factor& factor : r.factorization.factors)
        if (sequence.empty() || sequence.back() != factor.meta.source)
            sequence.push_back(factor.meta.source);
    CHECK(sequence ==
          std::vector<std::string>{
              "pair:1,4", "pair:1,5", "pair:1,6", "pair:1,7", "pair:1,8",
              "pair:2,6", "vertex:2", "pair:3,6", "vertex:3", "vertex:4",
              "pair:5,6", "vertex:5", "pair:6,8", "vertex:6", "vertex:8",
              "vertex:9"});
}

TEST_CASE("audit rows account for every source") {
    DegenerationComplex c = build_complex(1, 1, 2);
    RegeneratedResult r = regenerated_factorization(c);
    DegreeAudit audit = degree_audit(r.factorization, 16);
    CHECK(audit.strand_count == 16);
    CHECK(audit.rows.size() == 16);
    long long sum = 0;
    for (const DegreeAuditRow& row : audit.rows) {
        sum += row.claimed;
        if (row.source == "vertex:5") {
            CHECK(row.claimed == 132);
            CHECK_FALSE(row.word_degree.has_value());
        } else {
            REQUIRE(row.word_degree.has_value());
            CHECK(*row.word_degree == row.claimed);
        }
        if (row.source.rfind("pair:", 0) == 0) CHECK(row.claimed == 8);
        if (row.source == "vertex:2") CHECK(row.claimed == 10);
    }
    CHECK(sum == audit.total_claimed);
}

TEST_CASE("word level six point table plugs into the skeleton") {
    DegenerationComplex c = build_complex(1, 1, 2);
    SixPointTable table;
    table.by_type[2] = {SixPointTable::TableFactor{{8}, 1}};
    RegeneratedResult r =
        regenerated_factorization(c, {.six_point_table = &table});
    CHECK(r.placeholders.empty());
    CHECK(r.factorization.complete);
    const Factor* plugged = nullptr;
    for (const Factor& factor : r.factorization.factors)
        if (factor.meta.source == "vertex:5") plugged = &factor;
    REQUIRE(plugged != nullptr);
    REQUIRE(plugged->word.has_value());
    // local sigma_8 joins support punctures 10 and 13, detouring below the
    // punctures 11 and 12 that the vertex does not touch
    CHECK(plugged->word->letters() ==
          std::vector<int>{12, 11, 10, -11, -12});
    CHECK(plugged->meta.claimed_degree == 1);
}

TEST_CASE("table embedding respects the braid relations") {
    DegenerationComplex c = build_complex(1, 1, 2);
    auto embedded_word = [&](std::vector<int> letters) {
        SixPointTable table;
        table.by_type[2] = {
            SixPointTable::TableFactor{std::move(letters), 1}};
        RegeneratedResult r =
            regenerated_factorization(c, {.six_point_table = &table});
        for (const Factor& factor : r.factorization.factors)
            if (factor.meta.source == "vertex:5") return *factor.word;
        throw std::logic_error("missing plugged factor");
    };
    // adjacent relation across the support gap and a commuting pair
    CHECK(are_equal(embedded_word({8, 9, 8}), embedded_word({9, 8, 9})));
    CHECK(are_equal(embedded_word({8, 10, -8, -10}), embedded_word({})));
    CHECK(are_equal(embedded_word({3, 4, 3}), embedded_word({4, 3, 4})));
}

TEST_CASE("cuspidal rewrites cover the smallest skeleton") {
    DegenerationComplex c = build_complex(1, 1, 1);
    RegeneratedResult r = regenerated_factorization(c);
    std::vector<std::pair<BraidWord, int>> rewritten =
        cuspidal_normal_form(r.factorization);
    REQUIRE(rewritten.size() == 6);
    std::vector<int> nus;
    for (const auto& [conjugator, nu] : rewritten) {
        nus.push_back(nu);
        CHECK(conjugator.strand_count() == 4);
    }
    CHECK(nus == std::vector<int>{3, 3, 3, 1, 1, 1});
    // the rewrite really conjugates sigma_1^nu onto each factor
    for (std::size_t i = 0; i < rewritten.size(); ++i) {
        BraidWord model =
            power(BraidWord::generator(4, 1), rewritten[i].second);
        CHECK(are_equal(conjugate(model, rewritten[i].first),
                        *r.factorization.factors[i].word));
    }
}

TEST_CASE("cuspidal rewrites refuse factors with no band structure") {
    DegenerationComplex c = build_complex(1, 1, 2);
    RegeneratedResult r = regenerated_factorization(c);
    CHECK_THROWS_AS(cuspidal_normal_form(r.factorization), std::domain_error);

    // a multiple point of the degenerate arrangement is a block twist, not a
    // band power
    std::vector<Line> pencil;
    for (long long m : {-1, 1, 2})
        pencil.push_back(Line{Rational(m), Rational(-m)});
    Factorization block =
        arrangement_monodromy_factorization(LineArrangement(pencil));
    CHECK_THROWS_AS(cuspidal_normal_form(block), std::domain_error);

    // degenerate node factors rewrite fine
    std::vector<Line> triangle = {Line{Rational(0), Rational(1)},
                                  Line{Rational(1), Rational(0)},
                                  Line{Rational(-1), Rational(3)}};
    Factorization f =
        arrangement_monodromy_factorization(LineArrangement(triangle));
    std::vector<std::pair<BraidWord, int>> rewritten = cuspidal_normal_form(f);
    REQUIRE(rewritten.size() == 3);
    for (const auto& [conjugator, nu] : rewritten) CHECK(nu == 2);
}
