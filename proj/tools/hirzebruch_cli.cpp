#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hirzebruch/arrangement.hpp"
#include "hirzebruch/degeneration.hpp"
#include "hirzebruch/galois.hpp"
#include "hirzebruch/regeneration.hpp"
#include "hirzebruch/serialization.hpp"

namespace hz = hirzebruch;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitVerifyFailed = 2;

struct OutputOptions {
    std::string format = "text";  // text, json or csv
    std::string path;             // empty: stdout
};

void add_output_options(CLI::App* cmd, OutputOptions* out, bool csv_allowed) {
    std::vector<std::string> formats = {"text", "json"};
    if (csv_allowed) formats.push_back("csv");
    cmd->add_option("--format", out->format, "output format")
        ->check(CLI::IsMember(formats));
    cmd->add_option("--output", out->path,
                    "output file (resolved against HIRZEBRUCH_OUTPUT_DIR "
                    "when relative)");
}

void emit(const OutputOptions& out, const std::string& content) {
    if (out.path.empty()) {
        std::cout << content;
        return;
    }
    std::string path = out.path;
    const char* dir = std::getenv("HIRZEBRUCH_OUTPUT_DIR");
    if (dir && *dir && path.front() != '/')
        path = std::string(dir) + "/" + path;
    std::ofstream file(path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open output file: " + path);
    file << content;
}

std::string dump(const hz::Json& j) { return j.dump(2) + "\n"; }

const char* yesno(bool v) { return v ? "yes" : "no"; }
const char* truefalse(bool v) { return v ? "true" : "false"; }

std::string sign_word(int s) {
    if (s > 0) return "positive";
    if (s < 0) return "negative";
    return "zero";
}

hz::ScanRange parse_range(const std::string& text) {
    hz::ScanRange r;
    auto colon = text.find(':');
    try {
        if (colon == std::string::npos) {
            r.lo = r.hi = std::stoll(text);
        } else {
            r.lo = std::stoll(text.substr(0, colon));
            r.hi = std::stoll(text.substr(colon + 1));
        }
    } catch (const std::exception&) {
        throw CLI::ValidationError("range", "expected N or LO:HI, got " + text);
    }
    return r;
}

std::string vertex_kind_name(hz::VertexKind kind) {
    switch (kind) {
        case hz::VertexKind::three_point: return "3-point";
        case hz::VertexKind::six_point: return "6-point";
        case hz::VertexKind::nonsingular_on_curve: return "on-curve";
        case hz::VertexKind::nonsingular_off_curve: return "off-curve";
    }
    return "?";
}

std::string line_kind_name(hz::LineKind kind) {
    switch (kind) {
        case hz::LineKind::diagonal: return "diagonal";
        case hz::LineKind::vertical: return "vertical";
        case hz::LineKind::horizontal: return "horizontal";
    }
    return "?";
}

hz::Json audit_to_json(const hz::DegreeAudit& audit) {
    hz::Json j;
    j["strand_count"] = audit.strand_count;
    j["expected"] = audit.expected;
    j["total_claimed"] = audit.total_claimed;
    j["residual"] = audit.residual;
    j["factors_match_claims"] = audit.factors_match_claims;
    j["passed"] = audit.passed;
    j["placeholder_count"] = audit.placeholder_count;
    if (audit.consistent_placeholder_degree)
        j["consistent_placeholder_degree"] =
            *audit.consistent_placeholder_degree;
    hz::Json rows = hz::Json::array();
    for (const hz::DegreeAuditRow& row : audit.rows) {
        hz::Json rj;
        rj["source"] = row.source;
        rj["claimed"] = row.claimed;
        if (row.word_degree) rj["word_degree"] = *row.word_degree;
        rows.push_back(std::move(rj));
    }
    j["rows"] = std::move(rows);
    return j;
}

void audit_to_text(std::ostream& os, const hz::DegreeAudit& audit,
                   const std::string& label) {
    os << label << ": expected " << audit.expected << ", claimed "
       << audit.total_claimed << ", residual " << audit.residual
       << ", factor words match claims: "
       << yesno(audit.factors_match_claims) << "\n";
    if (audit.placeholder_count > 0) {
        os << label << ": " << audit.placeholder_count
           << " word-free 6-point factor(s) counted at 132";
        if (audit.consistent_placeholder_degree)
            os << "; residual vanishes if each contributes "
               << *audit.consistent_placeholder_degree;
        os << "\n";
    }
}

// ---------------------------------------------------------------- degenerate

int cmd_degenerate(long long k, long long a, long long b,
                   const OutputOptions& out) {
    hz::DegenerationComplex complex = hz::build_complex(
        static_cast<int>(k), static_cast<int>(a), static_cast<int>(b));
    std::vector<hz::VertexClass> classes = hz::classify_vertices(complex);
    auto [planes, lines, vertices] = hz::counts(complex);
    std::vector<std::pair<int, int>> pairs = hz::disjoint_line_pairs(complex);

    if (out.format == "json") {
        hz::Json j;
        j["params"] = {{"k", k}, {"a", a}, {"b", b}};
        j["planes"] = planes;
        j["lines"] = lines;
        j["vertices"] = vertices;
        hz::Json vj = hz::Json::array();
        for (const hz::ComplexVertex& v : complex.vertices) {
            const hz::VertexClass& cls =
                classes[static_cast<std::size_t>(v.id) - 1];
            hz::Json row;
            row["id"] = v.id;
            row["x"] = v.at.x;
            row["y"] = v.at.y;
            row["kind"] = vertex_kind_name(cls.kind);
            row["lines"] = v.lines;
            row["triangles"] = v.triangle_count;
            if (cls.six_type) row["six_point_type"] = *cls.six_type;
            vj.push_back(std::move(row));
        }
        j["vertex_list"] = std::move(vj);
        hz::Json lj = hz::Json::array();
        for (const hz::ComplexLine& l : complex.lines) {
            hz::Json row;
            row["id"] = l.id;
            row["vertices"] = {l.vertex_low, l.vertex_high};
            row["kind"] = line_kind_name(l.kind);
            lj.push_back(std::move(row));
        }
        j["line_list"] = std::move(lj);
        hz::Json pj = hz::Json::array();
        for (auto [i, jdx] : pairs) pj.push_back({i, jdx});
        j["disjoint_pairs"] = std::move(pj);
        j["ascii"] = hz::render_ascii(complex);
        emit(out, dump(j));
        return kExitOk;
    }

    std::ostringstream os;
    os << "degeneration of F_" << k << "(" << a << "," << b << ")\n";
    os << "planes " << planes << ", intersection lines " << lines
       << ", vertices " << vertices << "\n\n";
    os << hz::render_ascii(complex) << "\n";
    os << "vertices:\n";
    for (const hz::ComplexVertex& v : complex.vertices) {
        const hz::VertexClass& cls =
            classes[static_cast<std::size_t>(v.id) - 1];
        os << "  a" << v.id << " at (" << v.at.x << "," << v.at.y << ") "
           << vertex_kind_name(cls.kind);
        if (cls.six_type) os << " type " << *cls.six_type;
        if (!v.lines.empty()) {
            os << "  lines";
            for (int id : v.lines) os << " L" << id;
        }
        os << "\n";
    }
    os << "lines:\n";
    for (const hz::ComplexLine& l : complex.lines) {
        os << "  L" << l.id << " = a" << l.vertex_low << "-a" << l.vertex_high
           << " " << line_kind_name(l.kind) << "\n";
    }
    os << "disjoint line pairs: " << pairs.size() << "\n";
    emit(out, os.str());
    return kExitOk;
}

// ----------------------------------------------------------------- factorize

int cmd_factorize(long long k, long long a, long long b,
                  const std::string& level, const std::string& mode_name,
                  const std::string& table_path, unsigned seed,
                  const OutputOptions& out) {
    hz::DegenerationComplex complex = hz::build_complex(
        static_cast<int>(k), static_cast<int>(a), static_cast<int>(b));

    hz::Json j;
    j["params"] = {{"k", k}, {"a", a}, {"b", b}};
    j["level"] = level;
    std::ostringstream os;
    bool verified = true;

    if (level == "degenerate") {
        hz::InducedArrangement induced = hz::induced_arrangement(complex, seed);
        hz::Factorization f =
            hz::arrangement_monodromy_factorization(induced.arrangement);
        hz::DegreeAudit audit = hz::degree_audit(f, f.strand_count);
        bool product_ok = hz::verify_product_is_full_twist(f);
        verified = audit.passed && product_ok;

        j["seed_used"] = induced.seed_used;
        j["arrangement"] = hz::to_json(induced.arrangement);
        j["factorization"] = hz::to_json(f);
        j["audit"] = audit_to_json(audit);
        j["product_is_full_twist"] = product_ok;

        os << "degenerate-level factorization of F_" << k << "(" << a << ","
           << b << "): " << f.factors.size() << " factors on "
           << f.strand_count << " strands (seed " << induced.seed_used
           << ")\n";
        audit_to_text(os, audit, "audit");
        os << "product equals the full twist: " << yesno(product_ok) << "\n";
    } else {
        hz::RegenerationOptions options;
        if (mode_name == "literal") options.mode = hz::ThreePointMode::literal;
        if (mode_name == "cubed") options.mode = hz::ThreePointMode::cubed;
        hz::SixPointTable table;
        if (!table_path.empty()) {
            std::ifstream in(table_path);
            if (!in)
                throw std::runtime_error("cannot read 6-point table: " +
                                         table_path);
            table = hz::six_point_table_from_json(hz::Json::parse(in));
            options.six_point_table = &table;
        }

        hz::RegeneratedResult result =
            hz::regenerated_factorization(complex, options);
        const hz::Factorization& f = result.factorization;
        hz::DegreeAudit audit = hz::degree_audit(f, f.strand_count);
        verified = audit.passed;

        hz::ThreePointMode other =
            result.mode_used == hz::ThreePointMode::cubed
                ? hz::ThreePointMode::literal
                : hz::ThreePointMode::cubed;
        hz::RegenerationOptions other_options = options;
        other_options.mode = other;
        hz::DegreeAudit other_audit = hz::degree_audit(
            hz::regenerated_factorization(complex, other_options)
                .factorization,
            f.strand_count);

        j["three_point_mode"] =
            result.mode_used == hz::ThreePointMode::cubed ? "cubed"
                                                          : "literal";
        j["mode_auto_selected"] = result.mode_auto_selected;
        j["factorization"] = hz::to_json(f);
        j["audit"] = audit_to_json(audit);
        j["alternate_mode_audit"] = audit_to_json(other_audit);
        hz::Json placeholders = hz::Json::array();
        for (const hz::SixPointPlaceholder& ph : result.placeholders) {
            hz::Json pj;
            pj["vertex_id"] = ph.vertex_id;
            pj["type"] = ph.type;
            pj["support"] = ph.support;
            pj["local_lines"] = ph.local_lines;
            pj["slots"] = ph.slots;
            if (!ph.turned_slots.empty())
                pj["turned_slots"] = ph.turned_slots;
            placeholders.push_back(std::move(pj));
        }
        j["placeholders"] = std::move(placeholders);

        bool product_ok = false;
        if (f.complete) {
            product_ok = hz::verify_product_is_full_twist(f);
            j["product_is_full_twist"] = product_ok;
            verified = verified && product_ok;
        }

        os << "regenerated factorization of F_" << k << "(" << a << "," << b
           << "): " << f.factors.size() << " factors on " << f.strand_count
           << " strands\n";
        os << "3-point mode: " << j["three_point_mode"].get<std::string>()
           << (result.mode_auto_selected ? " (audit-selected)" : "") << "\n";
        audit_to_text(os, audit, "audit");
        audit_to_text(os, other_audit, "alternate-mode audit");
        os << "complete: " << yesno(f.complete) << "\n";
        if (f.complete)
            os << "product equals the full twist: " << yesno(product_ok)
               << "\n";
    }

    emit(out, out.format == "json" ? dump(j) : os.str());
    return verified ? kExitOk : kExitVerifyFailed;
}

// -------------------------------------------------------------------- verify

int cmd_verify(const std::string& file, const OutputOptions& out) {
    std::ifstream in(file);
    if (!in) throw std::runtime_error("cannot read factorization: " + file);
    hz::Json parsed = hz::Json::parse(in);
    if (parsed.is_object() && parsed.contains("factorization"))
        parsed = parsed.at("factorization");
    hz::Factorization f = hz::factorization_from_json(parsed);
    hz::DegreeAudit audit = hz::degree_audit(f, f.strand_count);

    bool product_ok = true;
    bool product_checked = false;
    if (f.complete) {
        product_checked = true;
        product_ok = hz::verify_product_is_full_twist(f);
    }
    bool verified = audit.passed && product_ok;

    if (out.format == "json") {
        hz::Json j;
        j["audit"] = audit_to_json(audit);
        j["product_checked"] = product_checked;
        if (product_checked) j["product_is_full_twist"] = product_ok;
        j["verified"] = verified;
        emit(out, dump(j));
    } else {
        std::ostringstream os;
        os << "factorization on " << f.strand_count << " strands, "
           << f.factors.size() << " factors, level " << f.level << "\n";
        audit_to_text(os, audit, "audit");
        if (product_checked)
            os << "product equals the full twist: " << yesno(product_ok)
               << "\n";
        else
            os << "product not checked (factorization is incomplete)\n";
        os << "verified: " << yesno(verified) << "\n";
        emit(out, os.str());
    }
    return verified ? kExitOk : kExitVerifyFailed;
}

// --------------------------------------------------------------------- chern

int cmd_chern(long long k, long long a, long long b,
              const OutputOptions& out) {
    hz::SurfaceParams p{k, a, b};
    hz::ChernPair chern = hz::chern_Y(p);
    hz::ChernValue tau = hz::signature(p);

    if (out.format == "json") {
        hz::Json j;
        j["params"] = {{"k", k}, {"a", a}, {"b", b}};
        j["n"] = hz::to_json(chern.factorial_index);
        j["chern"] = hz::to_json(chern);
        j["tau"] = hz::to_json(tau);
        emit(out, dump(j));
        return kExitOk;
    }
    if (out.format == "csv") {
        std::ostringstream os;
        os << "k,a,b,n,c1sq_num,c1sq_den,c2_num,c2_den,tau_num,tau_den\n";
        os << k << "," << a << "," << b << "," << chern.factorial_index << ","
           << numerator(chern.c1sq_coeff) << ","
           << denominator(chern.c1sq_coeff) << ","
           << numerator(chern.c2_coeff) << "," << denominator(chern.c2_coeff)
           << "," << numerator(tau.coefficient) << ","
           << denominator(tau.coefficient) << "\n";
        emit(out, os.str());
        return kExitOk;
    }

    std::ostringstream os;
    os << "Y_" << k << "(" << a << "," << b
       << "): n = " << chern.factorial_index << "\n";
    os << "c1^2 = " << hz::to_decimal(chern.c1sq_coeff) << " * "
       << chern.factorial_index << "!";
    if (auto v = chern.c1sq().expanded()) os << " = " << *v;
    os << "\n";
    os << "c2   = " << hz::to_decimal(chern.c2_coeff) << " * "
       << chern.factorial_index << "!";
    if (auto v = chern.c2().expanded()) os << " = " << *v;
    os << "\n";
    os << "tau  = " << hz::to_decimal(tau.coefficient) << " * "
       << tau.factorial_index << "!";
    if (auto v = tau.expanded()) os << " = " << *v;
    os << "  (" << sign_word(tau.sign()) << ")\n";
    emit(out, os.str());
    return kExitOk;
}

// ------------------------------------------------------------------ classify

int cmd_classify(long long k, long long a, long long b,
                 const OutputOptions& out) {
    hz::SurfaceParams p{k, a, b};
    hz::ClassifyFlags flags = hz::classify(p);

    if (out.format == "json") {
        hz::Json j;
        j["params"] = {{"k", k}, {"a", a}, {"b", b}};
        j["general_type"] = flags.general_type;
        j["spin"] = flags.spin;
        j["simply_connected"] = flags.simply_connected;
        j["signature_sign"] = flags.signature_sign;
        j["positivity_table"] = flags.positivity_table;
        emit(out, dump(j));
        return kExitOk;
    }
    if (out.format == "csv") {
        std::ostringstream os;
        os << "k,a,b,general_type,spin,simply_connected,signature_sign,"
              "positivity_table\n";
        os << k << "," << a << "," << b << ","
           << truefalse(flags.general_type) << "," << truefalse(flags.spin)
           << "," << truefalse(flags.simply_connected) << ","
           << flags.signature_sign << "," << truefalse(flags.positivity_table)
           << "\n";
        emit(out, os.str());
        return kExitOk;
    }

    std::ostringstream os;
    os << "Y_" << k << "(" << a << "," << b << ")\n";
    os << "general type:     " << yesno(flags.general_type) << "\n";
    os << "spin:             " << yesno(flags.spin) << "\n";
    os << "simply connected: " << yesno(flags.simply_connected) << "\n";
    os << "signature:        " << sign_word(flags.signature_sign) << "\n";
    os << "positivity table: " << yesno(flags.positivity_table) << "\n";
    emit(out, os.str());
    return kExitOk;
}

// ---------------------------------------------------------------------- pair

int cmd_pair(long long s, long long t, const OutputOptions& out) {
    hz::PairReport report = hz::equal_chern_pair(s, t);

    if (out.format == "json") {
        hz::Json j;
        j["s"] = s;
        j["t"] = t;
        j["first"] = {{"k", report.first.k},
                      {"a", report.first.a},
                      {"b", report.first.b}};
        j["second"] = {{"k", report.second.k},
                       {"a", report.second.a},
                       {"b", report.second.b}};
        j["first_chern"] = hz::to_json(report.first_chern);
        j["second_chern"] = hz::to_json(report.second_chern);
        j["chern_equal"] = report.chern_equal;
        j["first_pi1"] = {
            {"torsion_order", hz::to_json(report.first_pi1.torsion_order)},
            {"rank", hz::to_json(report.first_pi1.rank)}};
        j["second_pi1"] = {
            {"torsion_order", hz::to_json(report.second_pi1.torsion_order)},
            {"rank", hz::to_json(report.second_pi1.rank)}};
        j["displayed_c1sq"] = hz::to_json(report.displayed_c1sq_coeff);
        j["displayed_c2"] = hz::to_json(report.displayed_c2_coeff);
        j["displayed_c1sq_matches"] = report.displayed_c1sq_matches;
        j["displayed_c2_matches"] = report.displayed_c2_matches;
        emit(out, dump(j));
        return kExitOk;
    }

    std::ostringstream os;
    os << "Y_1(" << report.first.a << "," << report.first.b << ") vs Y_0("
       << report.second.a << "," << report.second.b
       << "): n = " << report.first_chern.factorial_index << "\n";
    os << "c1^2 and c2 equal: " << yesno(report.chern_equal) << "\n";
    os << "pi1: "
       << (report.first_pi1.trivial()
               ? std::string("trivial")
               : "(Z_" + hz::to_decimal(report.first_pi1.torsion_order) +
                     ")^" + hz::to_decimal(report.first_pi1.rank))
       << " vs (Z_" << hz::to_decimal(report.second_pi1.torsion_order)
       << ")^" << hz::to_decimal(report.second_pi1.rank) << "\n";
    os << "printed common-value bracket matches c1^2: "
       << yesno(report.displayed_c1sq_matches) << ", c2: "
       << yesno(report.displayed_c2_matches) << "\n";
    emit(out, os.str());
    return kExitOk;
}

// ---------------------------------------------------------------------- scan

hz::ScanPredicates parse_predicates(const std::vector<std::string>& tokens) {
    hz::ScanPredicates preds;
    for (const std::string& token : tokens) {
        if (token == "gt") preds.general_type = true;
        else if (token == "!gt") preds.general_type = false;
        else if (token == "spin") preds.spin = true;
        else if (token == "!spin") preds.spin = false;
        else if (token == "sc") preds.simply_connected = true;
        else if (token == "!sc") preds.simply_connected = false;
        else if (token == "tau+") preds.signature_sign = 1;
        else if (token == "tau0") preds.signature_sign = 0;
        else if (token == "tau-") preds.signature_sign = -1;
        else
            throw CLI::ValidationError(
                "--where", "unknown predicate " + token +
                               " (use gt, !gt, spin, !spin, sc, !sc, tau+, "
                               "tau0, tau-)");
    }
    return preds;
}

int cmd_scan(const std::string& k_range, const std::string& a_range,
             const std::string& b_range,
             const std::vector<std::string>& where,
             const OutputOptions& out) {
    std::vector<hz::SurfaceParams> hits =
        hz::scan(parse_range(k_range), parse_range(a_range),
                 parse_range(b_range), parse_predicates(where));

    if (out.format == "json") {
        hz::Json j = hz::Json::array();
        for (const hz::SurfaceParams& p : hits)
            j.push_back({{"k", p.k}, {"a", p.a}, {"b", p.b}});
        emit(out, dump(j));
        return kExitOk;
    }
    std::ostringstream os;
    if (out.format == "csv") os << "k,a,b\n";
    for (const hz::SurfaceParams& p : hits)
        os << p.k << "," << p.a << "," << p.b << "\n";
    emit(out, os.str());
    return kExitOk;
}

// --------------------------------------------------------------------- table

int cmd_table(const std::string& which, const std::string& k_range,
              const std::string& a_range, const std::string& b_range,
              const OutputOptions& out) {
    std::ostringstream os;
    hz::Json rows = hz::Json::array();

    if (which == "cor5.7") {
        hz::ScanRange kr = parse_range(k_range.empty() ? "0:6" : k_range);
        hz::ScanRange ar = parse_range(a_range.empty() ? "1:12" : a_range);
        hz::ScanRange br = parse_range(b_range.empty() ? "4:12" : b_range);
        if (out.format == "csv") os << "k,a,b,tau_sign,in_table,agree\n";
        for (long long k = kr.lo; k <= kr.hi; ++k)
            for (long long a = std::max(ar.lo, 1LL); a <= ar.hi; ++a)
                for (long long b = std::max(br.lo, 1LL); b <= br.hi; ++b) {
                    hz::SurfaceParams p{k, a, b};
                    int sign = hz::signature(p).sign();
                    bool member = hz::positivity_table(p);
                    bool agree = (sign > 0) == member;
                    if (out.format == "json") {
                        rows.push_back({{"k", k},
                                        {"a", a},
                                        {"b", b},
                                        {"tau_sign", sign},
                                        {"in_table", member},
                                        {"agree", agree}});
                    } else {
                        os << k << "," << a << "," << b << "," << sign << ","
                           << truefalse(member) << "," << truefalse(agree)
                           << "\n";
                    }
                }
    } else if (which == "thm5.8") {
        std::vector<hz::SurfaceParams> fixed = {
            {0, 7, 4}, {1, 5, 4}, {2, 3, 4}, {3, 1, 4}};
        hz::ScanRange br = parse_range(b_range.empty() ? "5:8" : b_range);
        for (long long b = br.lo; b <= br.hi; ++b)
            fixed.push_back({1, 3, b});
        if (out.format == "csv")
            os << "k,a,b,simply_connected,general_type,tau_sign,spin\n";
        for (const hz::SurfaceParams& p : fixed) {
            hz::ClassifyFlags flags = hz::classify(p);
            if (out.format == "json") {
                rows.push_back({{"k", p.k},
                                {"a", p.a},
                                {"b", p.b},
                                {"simply_connected", flags.simply_connected},
                                {"general_type", flags.general_type},
                                {"tau_sign", flags.signature_sign},
                                {"spin", flags.spin}});
            } else {
                os << p.k << "," << p.a << "," << p.b << ","
                   << truefalse(flags.simply_connected) << ","
                   << truefalse(flags.general_type) << ","
                   << flags.signature_sign << "," << truefalse(flags.spin)
                   << "\n";
            }
        }
    } else if (which == "lemma6.1") {
        hz::ScanRange kr = parse_range(k_range.empty() ? "1" : k_range);
        hz::ScanRange ar = parse_range(a_range.empty() ? "0:6" : a_range);
        hz::ScanRange br = parse_range(b_range.empty() ? "1:6" : b_range);
        if (out.format == "csv") os << "k,a,b,n,m,mu,phi,d\n";
        for (long long k = kr.lo; k <= kr.hi; ++k)
            for (long long a = std::max(ar.lo, 0LL); a <= ar.hi; ++a)
                for (long long b = std::max(br.lo, 1LL); b <= br.hi; ++b) {
                    hz::SurfaceParams p{k, a, b};
                    if (!hz::params_valid(p)) continue;
                    hz::BranchInvariants bi = hz::branch_invariants(p);
                    if (out.format == "json") {
                        hz::Json row = {{"k", k},       {"a", a},
                                        {"b", b},       {"n", hz::to_json(bi.n)},
                                        {"m", hz::to_json(bi.m)},
                                        {"mu", hz::to_json(bi.mu)},
                                        {"phi", hz::to_json(bi.phi)}};
                        if (bi.d) row["d"] = hz::to_json(*bi.d);
                        rows.push_back(std::move(row));
                    } else {
                        os << k << "," << a << "," << b << "," << bi.n << ","
                           << bi.m << "," << bi.mu << "," << bi.phi << ",";
                        if (bi.d) os << *bi.d;
                        os << "\n";
                    }
                }
    } else {
        throw CLI::ValidationError(
            "table", "unknown table " + which +
                         " (use cor5.7, thm5.8 or lemma6.1)");
    }

    if (out.format == "json") {
        emit(out, dump(rows));
    } else {
        emit(out, os.str());
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Degenerations, braid monodromy and Galois-cover invariants "
                 "of embedded Hirzebruch surfaces"};
    app.require_subcommand(1);

    long long k = 0, a = 0, b = 1, s = 1, t = 1;
    unsigned seed = 0;
    std::string level = "regenerated";
    std::string mode_name;
    std::string table_path;
    std::string verify_file;
    std::string table_name;
    std::string k_range, a_range, b_range;
    std::vector<std::string> where;
    OutputOptions out_degenerate, out_factorize, out_verify, out_chern,
        out_classify, out_pair, out_scan, out_table;

    CLI::App* degenerate =
        app.add_subcommand("degenerate", "build a degeneration complex");
    degenerate->add_option("k", k)->required();
    degenerate->add_option("a", a)->required();
    degenerate->add_option("b", b)->required();
    add_output_options(degenerate, &out_degenerate, false);

    CLI::App* factorize = app.add_subcommand(
        "factorize", "emit a braid monodromy factorization with its audit");
    factorize->add_option("k", k)->required();
    factorize->add_option("a", a)->required();
    factorize->add_option("b", b)->required();
    factorize->add_option("--level", level, "degenerate or regenerated")
        ->check(CLI::IsMember({"degenerate", "regenerated"}));
    factorize
        ->add_option("--three-point-mode", mode_name,
                     "literal or cubed (default: audit-selected)")
        ->check(CLI::IsMember({"literal", "cubed"}));
    factorize->add_option("--six-point-table", table_path,
                          "JSON file with 6-point local factorizations");
    factorize->add_option("--seed", seed,
                          "nudge seed for the planar realization");
    add_output_options(factorize, &out_factorize, false);

    CLI::App* verify =
        app.add_subcommand("verify", "verify a factorization file");
    verify->add_option("file", verify_file)->required();
    add_output_options(verify, &out_verify, false);

    CLI::App* chern =
        app.add_subcommand("chern", "Chern numbers and signature");
    chern->add_option("k", k)->required();
    chern->add_option("a", a)->required();
    chern->add_option("b", b)->required();
    add_output_options(chern, &out_chern, true);

    CLI::App* classify =
        app.add_subcommand("classify", "classification flags");
    classify->add_option("k", k)->required();
    classify->add_option("a", a)->required();
    classify->add_option("b", b)->required();
    add_output_options(classify, &out_classify, true);

    CLI::App* pair = app.add_subcommand(
        "pair", "equal-Chern pair Y_1(s,2t) vs Y_0(s+t,2t)");
    pair->add_option("s", s)->required();
    pair->add_option("t", t)->required();
    add_output_options(pair, &out_pair, false);

    CLI::App* scan =
        app.add_subcommand("scan", "scan parameter ranges for flags");
    scan->add_option("--k", k_range, "k range N or LO:HI")->required();
    scan->add_option("--a", a_range, "a range")->required();
    scan->add_option("--b", b_range, "b range")->required();
    scan->add_option("--where", where,
                     "predicates: gt !gt spin !spin sc !sc tau+ tau0 tau-")
        ->delimiter(',');
    add_output_options(scan, &out_scan, true);

    CLI::App* table = app.add_subcommand(
        "table", "reproduce a printed table: cor5.7, thm5.8 or lemma6.1");
    table->add_option("name", table_name)->required();
    table->add_option("--k", k_range, "k range override");
    table->add_option("--a", a_range, "a range override");
    table->add_option("--b", b_range, "b range override");
    add_output_options(table, &out_table, true);

    CLI11_PARSE(app, argc, argv);

    try {
        if (degenerate->parsed())
            return cmd_degenerate(k, a, b, out_degenerate);
        if (factorize->parsed())
            return cmd_factorize(k, a, b, level, mode_name, table_path, seed,
                                 out_factorize);
        if (verify->parsed()) return cmd_verify(verify_file, out_verify);
        if (chern->parsed()) return cmd_chern(k, a, b, out_chern);
        if (classify->parsed()) return cmd_classify(k, a, b, out_classify);
        if (pair->parsed()) return cmd_pair(s, t, out_pair);
        if (scan->parsed())
            return cmd_scan(k_range, a_range, b_range, where, out_scan);
        if (table->parsed())
            return cmd_table(table_name, k_range, a_range, b_range,
                             out_table);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    }
    return kExitInvalid;
}
