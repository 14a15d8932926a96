#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hirzebruch/numeric.hpp"

namespace hirzebruch {

/// Embedding data (k, a, b) of F_k by the system |aC + bE_0|. Valid when
/// b >= 1 and either a >= 1 or (a, k) = (0, 1).
struct SurfaceParams {
    long long k = 0;
    long long a = 0;
    long long b = 1;

    friend bool operator==(const SurfaceParams&, const SurfaceParams&) =
        default;
};

bool params_valid(const SurfaceParams& p);
void require_valid(const SurfaceParams& p);

struct HirzebruchData {
    BigInt ek;  // E.K of the embedded surface
    BigInt n;   // degree, = E^2
    int c1sq_x = 8;
    int c2_x = 4;
};

/// Exact value carrying an n! factor: value = coefficient * factorial_index!.
/// Expansion to a plain integer is offered only for factorial_index <= 40.
struct ChernValue {
    BigInt factorial_index;
    Rational coefficient;

    std::optional<BigInt> expanded() const;
    int sign() const;

    friend bool operator==(const ChernValue&, const ChernValue&) = default;
};

struct ChernPair {
    BigInt factorial_index;
    Rational c1sq_coeff;
    Rational c2_coeff;

    ChernValue c1sq() const { return {factorial_index, c1sq_coeff}; }
    ChernValue c2() const { return {factorial_index, c2_coeff}; }

    friend bool operator==(const ChernPair&, const ChernPair&) = default;
};

struct BranchInvariants {
    BigInt n;
    BigInt m;    // degree of the branch curve
    BigInt mu;   // degree of the dual curve
    BigInt phi;  // number of cusps
    std::optional<BigInt> d;  // number of nodes, known only for a = 0
};

struct GroupDescriptor {
    BigInt torsion_order;  // c = gcd(a, b)
    BigInt rank;           // n - 2; the group is (Z_c)^rank

    bool trivial() const { return torsion_order == 1; }
};

struct ClassifyFlags {
    bool general_type = false;
    bool spin = false;
    bool simply_connected = false;
    int signature_sign = 0;
    bool positivity_table = false;  // literal condition-table membership
};

HirzebruchData hirzebruch_data(const SurfaceParams& p);

ChernPair galois_chern(const BigInt& ek, const BigInt& n, int c1sq_x,
                       int c2_x);
ChernPair galois_chern(const HirzebruchData& d);

/// Evaluates the expanded and the factored closed forms and the general
/// E.K pipeline; all three must agree or a logic_error is thrown.
ChernPair chern_Y(const SurfaceParams& p);

/// Closed forms specialized to k = 0 and k = 1 (domain_error otherwise).
ChernPair specialized_chern(const SurfaceParams& p);

ChernValue signature(const SurfaceParams& p);

GroupDescriptor pi1(const SurfaceParams& p);

BranchInvariants branch_invariants(const SurfaceParams& p);

/// Eleven-row literal condition table for positive signature.
bool positivity_table(const SurfaceParams& p);

ClassifyFlags classify(const SurfaceParams& p);

struct PairReport {
    SurfaceParams first;   // (1, s, 2t)
    SurfaceParams second;  // (0, s+t, 2t)
    ChernPair first_chern;
    ChernPair second_chern;
    bool chern_equal = false;
    GroupDescriptor first_pi1;
    GroupDescriptor second_pi1;
    // The printed common-value brackets, transcribed as displayed.
    Rational displayed_c1sq_coeff;
    Rational displayed_c2_coeff;
    bool displayed_c1sq_matches = false;
    bool displayed_c2_matches = false;
};

PairReport equal_chern_pair(long long s, long long t);

ChernPair veronese_chern(long long b);

struct ScanPredicates {
    std::optional<bool> general_type;
    std::optional<bool> spin;
    std::optional<bool> simply_connected;
    std::optional<int> signature_sign;
};

struct ScanRange {
    long long lo = 0;
    long long hi = 0;
};

std::vector<SurfaceParams> scan(ScanRange k, ScanRange a, ScanRange b,
                                const ScanPredicates& preds);

}  // namespace hirzebruch
