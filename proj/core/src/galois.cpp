#include "hirzebruch/galois.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hirzebruch {

namespace {

BigInt sq(const BigInt& v) { return v * v; }

}  // namespace

bool params_valid(const SurfaceParams& p) {
    if (p.k < 0 || p.a < 0 || p.b < 1) return false;
    return p.a >= 1 || p.k == 1;
}

void require_valid(const SurfaceParams& p) {
    if (!params_valid(p))
        throw std::domain_error(
            "surface parameters must have b >= 1 and a >= 1, or a = 0 with "
            "k = 1");
}

std::optional<BigInt> ChernValue::expanded() const {
    if (factorial_index < 0 || factorial_index > 40) return std::nullopt;
    Rational value =
        coefficient *
        Rational(factorial(factorial_index.convert_to<long long>()));
    if (denominator(value) != 1)
        throw std::logic_error("expanded Chern value is not an integer");
    return numerator(value);
}

int ChernValue::sign() const { return coefficient.sign(); }

HirzebruchData hirzebruch_data(const SurfaceParams& p) {
    require_valid(p);
    HirzebruchData d;
    BigInt a = p.a, b = p.b, k = p.k;
    d.ek = -2 * a - 2 * b - b * k;
    d.n = 2 * a * b + b * b * k;
    return d;
}

ChernPair galois_chern(const BigInt& ek, const BigInt& n, int c1sq_x,
                       int c2_x) {
    if (n < 1) throw std::domain_error("degree must be at least 1");
    ChernPair out;
    out.factorial_index = n;
    BigInt c1_bracket =
        ek * ek + 6 * n * ek + 9 * n * n - 12 * ek - 36 * n + 36;
    out.c1sq_coeff = Rational(c1_bracket, 4);
    BigInt c2_bracket = 72 - 10 * BigInt(c1sq_x) - 54 * ek - 114 * n +
                        27 * n * n + 14 * BigInt(c2_x) + 3 * ek * ek +
                        18 * n * ek;
    out.c2_coeff = Rational(c2_bracket, 24);
    return out;
}

ChernPair galois_chern(const HirzebruchData& d) {
    return galois_chern(d.ek, d.n, d.c1sq_x, d.c2_x);
}

namespace {

ChernPair expanded_chern(const SurfaceParams& p) {
    BigInt a = p.a, b = p.b, k = p.k;
    ChernPair out;
    out.factorial_index = 2 * a * b + b * b * k;

    BigInt c1_free = 4 * a * a + 4 * b * b - 64 * a * b + 24 * a + 24 * b -
                     24 * a * a * b - 24 * a * b * b + 36 +
                     36 * a * a * b * b;
    BigInt c1_lin = 12 * b + 4 * a * b - 12 * b * b * b +
                    36 * a * b * b * b - 24 * a * b * b - 32 * b * b;
    BigInt c1_quad = b * b - 6 * b * b * b + 9 * b * b * b * b;
    out.c1sq_coeff = Rational(c1_free + k * c1_lin + k * k * c1_quad, 4);

    BigInt c2_free = 4 * (4 + 9 * a + 9 * b - 17 * a * b + a * a + b * b +
                          9 * a * a * b * b - 6 * a * a * b - 6 * a * b * b);
    BigInt c2_lin = 2 * (9 * b - 17 * b * b + 18 * a * b * b * b +
                         2 * a * b - 12 * a * b * b - 6 * b * b * b);
    BigInt c2_quad = 9 * b * b * b * b + b * b - 6 * b * b * b;
    out.c2_coeff = Rational(c2_free + k * c2_lin + k * k * c2_quad, 8);
    return out;
}

ChernPair factored_chern(const SurfaceParams& p) {
    BigInt a = p.a, b = p.b, k = p.k;
    ChernPair out;
    out.factorial_index = 2 * a * b + b * b * k;

    BigInt core = 3 * a * b - a - b - 3;
    BigInt c1 = k * k * b * b * sq(3 * b - 1) +
                4 * k * b * (3 * b - 1) * core + 4 * sq(core);
    out.c1sq_coeff = Rational(c1, 4);

    BigInt c2 = sq(3 * b - 1) * sq(2 * a + k * b) +
                (9 - 17 * b - 6 * b * b) * (4 * a + 2 * k * b) +
                4 * (b * b + 9 * b + 4);
    out.c2_coeff = Rational(c2, 8);
    return out;
}

}  // namespace

ChernPair chern_Y(const SurfaceParams& p) {
    require_valid(p);
    ChernPair expanded = expanded_chern(p);
    ChernPair factored = factored_chern(p);
    ChernPair general = galois_chern(hirzebruch_data(p));
    if (!(expanded == factored) || !(expanded == general))
        throw std::logic_error("Chern closed forms disagree");
    return expanded;
}

ChernPair specialized_chern(const SurfaceParams& p) {
    require_valid(p);
    BigInt a = p.a, b = p.b;
    ChernPair out;
    if (p.k == 0) {
        out.factorial_index = 2 * a * b;
        out.c1sq_coeff = Rational(sq(3 * a * b - a - b - 3));
        BigInt c2 = 4 + 9 * a + 9 * b - 17 * a * b + a * a + b * b +
                    9 * a * a * b * b - 6 * a * a * b - 6 * a * b * b;
        out.c2_coeff = Rational(c2, 2);
    } else if (p.k == 1) {
        out.factorial_index = 2 * a * b + b * b;
        out.c1sq_coeff =
            Rational(sq(3 * b * b + 6 * a * b - 3 * b - 2 * a - 6), 4);
        BigInt c2 = 16 + 54 * b + 36 * a - 64 * a * b + 4 * a * a -
                    29 * b * b + 36 * a * a * b * b - 24 * a * a * b -
                    48 * a * b * b - 18 * b * b * b + 9 * b * b * b * b +
                    36 * a * b * b * b;
        out.c2_coeff = Rational(c2, 8);
    } else {
        throw std::domain_error("closed forms specialize only k = 0 and 1");
    }
    return out;
}

ChernValue signature(const SurfaceParams& p) {
    require_valid(p);
    BigInt a = p.a, b = p.b, k = p.k;
    ChernValue tau;
    tau.factorial_index = 2 * a * b + k * b * b;
    BigInt bracket =
        4 * (a * b - 3 * a - 3 * b + 5) + 2 * k * (b - 3) * b;
    tau.coefficient = Rational(bracket, 12);

    ChernPair chern = chern_Y(p);
    if (tau.coefficient != (chern.c1sq_coeff - 2 * chern.c2_coeff) / 3)
        throw std::logic_error("signature disagrees with (c1^2 - 2 c2)/3");
    return tau;
}

GroupDescriptor pi1(const SurfaceParams& p) {
    require_valid(p);
    if (p.a < 1)
        throw std::domain_error(
            "fundamental group formula requires a >= 1");
    GroupDescriptor g;
    g.torsion_order = std::gcd(p.a, p.b);
    g.rank = hirzebruch_data(p).n - 2;
    return g;
}

BranchInvariants branch_invariants(const SurfaceParams& p) {
    require_valid(p);
    BigInt a = p.a, b = p.b, k = p.k;
    BranchInvariants out;
    if (p.a >= 1) {
        out.n = 2 * a * b + k * b * b;
        out.m = 6 * a * b - 2 * a - 2 * b + k * (3 * b * b - b);
        out.mu = 6 * a * b - 4 * a - 4 * b + 4 + k * (3 * b * b - 2 * b);
        out.phi =
            24 * a * b - 18 * a - 18 * b + 12 + k * (12 * b * b - 9 * b);
    } else {
        out.n = b * b;
        out.m = 3 * b * (b - 1);
        out.mu = 3 * sq(b - 1);
        out.phi = 3 * (b - 1) * (4 * b - 5);
        BigInt twice_d =
            3 * (b - 1) * (3 * b * b * b - 3 * b * b - 14 * b + 16);
        if (twice_d % 2 != 0)
            throw std::logic_error("node count is not an integer");
        out.d = twice_d / 2;
    }
    return out;
}

bool positivity_table(const SurfaceParams& p) {
    long long k = p.k, a = p.a, b = p.b;
    if (k == 0) return (a >= 8 && b == 4) || (a >= 6 && b >= 5);
    if (k == 1)
        return (a >= 6 && b == 4) || (a >= 3 && b == 5) ||
               (a >= 2 && b == 6) || (a >= 1 && b >= 7);
    if (k == 2) return (a >= 4 && b == 4) || (a >= 1 && b >= 5);
    if (k == 3) return (a >= 2 && b == 4) || (a >= 1 && b >= 5);
    return a == 1 && b >= 4;
}

ClassifyFlags classify(const SurfaceParams& p) {
    require_valid(p);
    if (p.a < 1)
        throw std::domain_error("classification requires a >= 1");

    long long k = p.k, a = p.a, b = p.b;
    ClassifyFlags flags;
    flags.general_type = (k == 0 && a * b >= 3) ||
                         ((k == 1 || k == 2) && a * b >= 2) || k >= 3;
    long long br = b % 4;
    flags.spin = (br == 0 && a % 2 == 1) || (br == 1 && k % 2 == 0) ||
                 (br == 2 && (a + k) % 2 == 1) || (br == 3);

    BranchInvariants bi = branch_invariants(p);
    if (flags.general_type != (bi.m > 6))
        throw std::logic_error("general-type criteria disagree");
    if (flags.spin != (bi.m % 4 != 0))
        throw std::logic_error("spin criteria disagree");

    flags.simply_connected = pi1(p).trivial();
    flags.signature_sign = signature(p).sign();
    flags.positivity_table = positivity_table(p);
    return flags;
}

PairReport equal_chern_pair(long long s, long long t) {
    if (s < 1 || t < 1) throw std::invalid_argument("s, t must be positive");
    if (s % 2 == 0 || t % 2 == 0)
        throw std::invalid_argument("s, t must both be odd");
    if (std::gcd(s, t) != 1)
        throw std::invalid_argument("s, t must be coprime");

    PairReport report;
    report.first = SurfaceParams{1, s, 2 * t};
    report.second = SurfaceParams{0, s + t, 2 * t};
    report.first_chern = chern_Y(report.first);
    report.second_chern = chern_Y(report.second);
    report.chern_equal = report.first_chern == report.second_chern;
    report.first_pi1 = pi1(report.first);
    report.second_pi1 = pi1(report.second);

    BigInt S = s, T = t;
    BigInt c1_bracket = 9 + 6 * S + 18 * T + S * S - 30 * S * T -
                        27 * T * T - 12 * T * S * S - 48 * T * T * S -
                        30 * T * T * T + 36 * T * T * S * S +
                        72 * S * T * T * T + 36 * T * T * T * T;
    report.displayed_c1sq_coeff = Rational(c1_bracket);
    BigInt c2_bracket = 4 + 27 * T + 9 * S - 32 * S * T + S * S -
                        29 * T * T + 36 * S * S * T * T - 12 * S * S * T -
                        48 * S * T * T - 36 * T * T * T + 36 * T * T * T * T +
                        72 * S * T * T * T;
    report.displayed_c2_coeff = Rational(c2_bracket, 2);
    report.displayed_c1sq_matches =
        report.displayed_c1sq_coeff == report.first_chern.c1sq_coeff;
    report.displayed_c2_matches =
        report.displayed_c2_coeff == report.first_chern.c2_coeff;
    return report;
}

ChernPair veronese_chern(long long b) {
    if (b < 1) throw std::domain_error("b must be at least 1");
    BigInt B = b;
    ChernPair out;
    out.factorial_index = B * B;
    out.c1sq_coeff =
        Rational(9, 4) *
        Rational(B * B * B * B - 2 * B * B * B - 3 * B * B + 4 * B + 4);
    out.c2_coeff = Rational(16 + 54 * B - 29 * B * B - 18 * B * B * B +
                                9 * B * B * B * B,
                            8);
    return out;
}

std::vector<SurfaceParams> scan(ScanRange k, ScanRange a, ScanRange b,
                                const ScanPredicates& preds) {
    if (k.lo > k.hi || a.lo > a.hi || b.lo > b.hi)
        throw std::invalid_argument("empty scan range");

    std::vector<SurfaceParams> out;
    for (long long kk = k.lo; kk <= k.hi; ++kk) {
        for (long long aa = std::max(a.lo, 1LL); aa <= a.hi; ++aa) {
            for (long long bb = std::max(b.lo, 1LL); bb <= b.hi; ++bb) {
                SurfaceParams p{kk, aa, bb};
                if (!params_valid(p)) continue;
                ClassifyFlags flags = classify(p);
                if (preds.general_type &&
                    flags.general_type != *preds.general_type)
                    continue;
                if (preds.spin && flags.spin != *preds.spin) continue;
                if (preds.simply_connected &&
                    flags.simply_connected != *preds.simply_connected)
                    continue;
                if (preds.signature_sign &&
                    flags.signature_sign != *preds.signature_sign)
                    continue;
                out.push_back(p);
            }
        }
    }
    return out;
}

}  // namespace hirzebruch
