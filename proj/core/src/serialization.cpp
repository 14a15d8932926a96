#include "hirzebruch/serialization.hpp"

#include <stdexcept>
#include <string>

namespace hirzebruch {

namespace {

const BigInt kMaxJsonSafe("9007199254740991");

std::vector<int> int_vector_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("expected an array");
    std::vector<int> out;
    for (const Json& item : j) out.push_back(item.get<int>());
    return out;
}

}  // namespace

Json to_json(const BigInt& v) {
    if (v <= kMaxJsonSafe && v >= -kMaxJsonSafe)
        return Json(v.convert_to<long long>());
    return Json(v.str());
}

BigInt big_from_json(const Json& j) {
    if (j.is_number_integer()) return BigInt(j.get<long long>());
    if (j.is_string()) return BigInt(j.get<std::string>());
    throw std::invalid_argument("expected an integer or a decimal string");
}

Json to_json(const Rational& v) {
    Json j;
    j["num"] = to_json(numerator(v));
    j["den"] = to_json(denominator(v));
    return j;
}

Rational rational_from_json(const Json& j) {
    BigInt den = big_from_json(j.at("den"));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(big_from_json(j.at("num")), den);
}

Json to_json(const BraidWord& w) {
    Json j;
    j["strand_count"] = w.strand_count();
    j["letters"] = w.letters();
    return j;
}

BraidWord braid_word_from_json(const Json& j) {
    return BraidWord(j.at("strand_count").get<int>(),
                     int_vector_from_json(j.at("letters")));
}

Json to_json(const PuncturePath& p) {
    Json j;
    j["from"] = p.from;
    j["to"] = p.to;
    Json detours = Json::array();
    for (Detour d : p.detours)
        detours.push_back(d == Detour::below ? "below" : "above");
    j["detours"] = std::move(detours);
    return j;
}

PuncturePath path_from_json(const Json& j) {
    PuncturePath p;
    p.from = j.at("from").get<int>();
    p.to = j.at("to").get<int>();
    for (const Json& d : j.at("detours")) {
        std::string side = d.get<std::string>();
        if (side == "below") {
            p.detours.push_back(Detour::below);
        } else if (side == "above") {
            p.detours.push_back(Detour::above);
        } else {
            throw std::invalid_argument("detour must be below or above");
        }
    }
    return p;
}

namespace {

Json nu_to_json(ExponentClass nu) {
    if (nu == ExponentClass::twist) return Json("twist");
    return Json(static_cast<int>(nu));
}

ExponentClass nu_from_json(const Json& j) {
    if (j.is_string()) {
        if (j.get<std::string>() != "twist")
            throw std::invalid_argument("unknown exponent class");
        return ExponentClass::twist;
    }
    int v = j.get<int>();
    if (v < 1 || v > 3)
        throw std::invalid_argument("exponent class must be 1, 2 or 3");
    return static_cast<ExponentClass>(v);
}

}  // namespace

Json to_json(const Factorization& f) {
    Json j;
    j["strand_count"] = f.strand_count;
    j["level"] = f.level;
    j["complete"] = f.complete;
    Json factors = Json::array();
    for (const Factor& factor : f.factors) {
        Json fj;
        fj["source"] = factor.meta.source;
        fj["nu"] = nu_to_json(factor.meta.nu);
        fj["claimed_degree"] = factor.meta.claimed_degree;
        if (factor.word) fj["word"] = factor.word->letters();
        if (factor.seed) {
            Json sj;
            sj["path"] = to_json(factor.seed->path);
            sj["nu"] = factor.seed->nu;
            sj["conjugator"] = factor.seed->conjugator.letters();
            fj["seed"] = std::move(sj);
        }
        factors.push_back(std::move(fj));
    }
    j["factors"] = std::move(factors);
    return j;
}

Factorization factorization_from_json(const Json& j) {
    Factorization f;
    f.strand_count = j.at("strand_count").get<int>();
    f.level = j.at("level").get<std::string>();
    f.complete = j.at("complete").get<bool>();
    for (const Json& fj : j.at("factors")) {
        Factor factor;
        factor.meta.source = fj.at("source").get<std::string>();
        factor.meta.nu = nu_from_json(fj.at("nu"));
        factor.meta.claimed_degree = fj.at("claimed_degree").get<long long>();
        if (fj.contains("word"))
            factor.word =
                BraidWord(f.strand_count, int_vector_from_json(fj.at("word")));
        if (fj.contains("seed")) {
            const Json& sj = fj.at("seed");
            factor.seed = FactorSeed{
                path_from_json(sj.at("path")), sj.at("nu").get<int>(),
                BraidWord(f.strand_count,
                          int_vector_from_json(sj.at("conjugator")))};
        }
        f.factors.push_back(std::move(factor));
    }
    return f;
}

Json to_json(const LineArrangement& arr) {
    Json j = Json::array();
    for (const Line& line : arr.lines()) {
        Json row = Json::array();
        row.push_back(to_json(numerator(line.slope)));
        row.push_back(to_json(denominator(line.slope)));
        row.push_back(to_json(numerator(line.intercept)));
        row.push_back(to_json(denominator(line.intercept)));
        j.push_back(std::move(row));
    }
    return j;
}

LineArrangement arrangement_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("expected a line list");
    std::vector<Line> lines;
    for (const Json& row : j) {
        if (!row.is_array() || row.size() != 4)
            throw std::invalid_argument(
                "each line must be [slope_num, slope_den, intercept_num, "
                "intercept_den]");
        BigInt sden = big_from_json(row[1]);
        BigInt iden = big_from_json(row[3]);
        if (sden == 0 || iden == 0)
            throw std::invalid_argument("zero denominator");
        Line line;
        line.slope = Rational(big_from_json(row[0]), sden);
        line.intercept = Rational(big_from_json(row[2]), iden);
        lines.push_back(std::move(line));
    }
    return LineArrangement(std::move(lines));
}

Json to_json(const ChernPair& pair) {
    Json j;
    j["factorial_index"] = to_json(pair.factorial_index);
    j["c1sq"] = to_json(pair.c1sq_coeff);
    j["c2"] = to_json(pair.c2_coeff);
    if (auto c1 = pair.c1sq().expanded()) j["c1sq_value"] = to_json(*c1);
    if (auto c2 = pair.c2().expanded()) j["c2_value"] = to_json(*c2);
    return j;
}

Json to_json(const ChernValue& value) {
    Json j;
    j["factorial_index"] = to_json(value.factorial_index);
    j["coefficient"] = to_json(value.coefficient);
    if (auto v = value.expanded()) j["value"] = to_json(*v);
    j["sign"] = value.sign();
    return j;
}

SixPointTable six_point_table_from_json(const Json& j) {
    SixPointTable table;
    for (const auto& [key, entry] : j.items()) {
        int type = std::stoi(key);
        if (type < 1 || type > 3)
            throw std::invalid_argument("6-point type must be 1, 2 or 3");
        std::vector<SixPointTable::TableFactor> factors;
        for (const Json& fj : entry.at("factors")) {
            SixPointTable::TableFactor f;
            f.letters = int_vector_from_json(fj.at("letters"));
            f.nu = fj.value("nu", 1);
            factors.push_back(std::move(f));
        }
        table.by_type[type] = std::move(factors);
    }
    return table;
}

}  // namespace hirzebruch
