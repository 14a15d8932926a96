#pragma once

#include <compare>
#include <vector>

namespace hirzebruch {

/// Bijection of {1..n}; composition is left-to-right, matching word order.
class Permutation {
public:
    explicit Permutation(int n);
    static Permutation transposition(int n, int i, int j);
    static Permutation from_images(std::vector<int> images);

    int size() const { return static_cast<int>(images_.size()); }
    int apply(int i) const;
    Permutation then(const Permutation& next) const;
    Permutation inverse() const;
    bool is_identity() const;
    bool is_transposition() const;
    const std::vector<int>& images() const { return images_; }

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> images_;
};

/// Freely reduced word in the free group on x_1..x_rank. Letters are signed
/// indices: +i for x_i, -i for its inverse.
class FreeWord {
public:
    FreeWord(int rank, std::vector<int> letters);
    static FreeWord identity(int rank);
    static FreeWord generator(int rank, int index, int sign = +1);

    int rank() const { return rank_; }
    const std::vector<int>& letters() const { return letters_; }
    bool is_identity() const { return letters_.empty(); }
    FreeWord inverse() const;

    friend FreeWord operator*(const FreeWord& u, const FreeWord& v);
    friend bool operator==(const FreeWord&, const FreeWord&) = default;

private:
    int rank_;
    std::vector<int> letters_;
};

/// Word in the Artin generators of the braid group on strand_count strands.
/// Letters are signed indices: +i for sigma_i, -i for its inverse. The letter
/// sequence is kept exactly as constructed; equality in the group is decided
/// by are_equal, not by the representation.
class BraidWord {
public:
    explicit BraidWord(int strand_count, std::vector<int> letters = {});
    static BraidWord generator(int strand_count, int index, int sign = +1);

    int strand_count() const { return strands_; }
    const std::vector<int>& letters() const { return letters_; }
    std::size_t length() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }

    friend bool operator==(const BraidWord&, const BraidWord&) = default;

private:
    int strands_;
    std::vector<int> letters_;
};

enum class Detour { below, above };

/// Combinatorial path between punctures `from` < `to`, passing each
/// intermediate puncture on the recorded side.
struct PuncturePath {
    int from = 1;
    int to = 2;
    std::vector<Detour> detours;  // one per puncture in (from, to)

    static PuncturePath below(int s, int t);
    static PuncturePath above(int s, int t);

    friend bool operator==(const PuncturePath&, const PuncturePath&) = default;
};

BraidWord compose(const BraidWord& u, const BraidWord& v);
BraidWord inverse(const BraidWord& u);
/// (a)_b = b^{-1} a b.
BraidWord conjugate(const BraidWord& a, const BraidWord& b);
BraidWord power(const BraidWord& u, int e);
long long exponent_sum(const BraidWord& u);
Permutation permutation(const BraidWord& u);

FreeWord artin_action(const BraidWord& beta, const FreeWord& w);
bool are_equal(const BraidWord& u, const BraidWord& v);

/// (sigma_1 ... sigma_{n-1})^n, the generator of the center of B_n.
BraidWord full_twist(int n);
BraidWord half_twist(const PuncturePath& path, int n);

/// Positive half-twist of the `size` consecutive strands starting at `first`:
/// (s_f)(s_{f+1} s_f)...(s_{f+size-2} ... s_f).
BraidWord block_half_twist(int n, int first, int size);
/// Full twist of the block: (s_f ... s_{f+size-2})^size.
BraidWord block_full_twist(int n, int first, int size);

}  // namespace hirzebruch
