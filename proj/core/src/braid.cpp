#include "hirzebruch/braid.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace hirzebruch {

namespace {

void check_rank(int rank) {
    if (rank < 1) throw std::invalid_argument("rank must be positive");
}

std::vector<int> reduce(std::vector<int> letters) {
    std::vector<int> out;
    out.reserve(letters.size());
    for (int x : letters) {
        if (!out.empty() && out.back() == -x)
            out.pop_back();
        else
            out.push_back(x);
    }
    return out;
}

}  // namespace

Permutation::Permutation(int n) {
    check_rank(n);
    images_.resize(n);
    for (int i = 0; i < n; ++i) images_[i] = i + 1;
}

Permutation Permutation::transposition(int n, int i, int j) {
    Permutation p(n);
    if (i < 1 || i > n || j < 1 || j > n || i == j)
        throw std::invalid_argument("transposition indices out of range");
    std::swap(p.images_[i - 1], p.images_[j - 1]);
    return p;
}

Permutation Permutation::from_images(std::vector<int> images) {
    int n = static_cast<int>(images.size());
    Permutation p(n);
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int v : images) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)])
            throw std::invalid_argument("images do not form a bijection");
        seen[static_cast<std::size_t>(v - 1)] = 1;
    }
    p.images_ = std::move(images);
    return p;
}

int Permutation::apply(int i) const {
    if (i < 1 || i > size()) throw std::invalid_argument("point out of range");
    return images_[i - 1];
}

Permutation Permutation::then(const Permutation& next) const {
    if (size() != next.size())
        throw std::invalid_argument("permutation size mismatch");
    Permutation r(size());
    for (int i = 0; i < size(); ++i) r.images_[i] = next.images_[images_[i] - 1];
    return r;
}

Permutation Permutation::inverse() const {
    Permutation r(size());
    for (int i = 0; i < size(); ++i) r.images_[images_[i] - 1] = i + 1;
    return r;
}

bool Permutation::is_identity() const {
    for (int i = 0; i < size(); ++i)
        if (images_[i] != i + 1) return false;
    return true;
}

bool Permutation::is_transposition() const {
    int moved = 0;
    for (int i = 0; i < size(); ++i)
        if (images_[i] != i + 1) ++moved;
    return moved == 2;
}

FreeWord::FreeWord(int rank, std::vector<int> letters) : rank_(rank) {
    check_rank(rank);
    for (int x : letters)
        if (x == 0 || std::abs(x) > rank)
            throw std::invalid_argument("free letter out of range");
    letters_ = reduce(std::move(letters));
}

FreeWord FreeWord::identity(int rank) { return FreeWord(rank, {}); }

FreeWord FreeWord::generator(int rank, int index, int sign) {
    if (index < 1 || index > rank)
        throw std::invalid_argument("generator index out of range");
    return FreeWord(rank, {sign >= 0 ? index : -index});
}

FreeWord FreeWord::inverse() const {
    std::vector<int> rev(letters_.rbegin(), letters_.rend());
    for (int& x : rev) x = -x;
    return FreeWord(rank_, std::move(rev));
}

FreeWord operator*(const FreeWord& u, const FreeWord& v) {
    if (u.rank_ != v.rank_) throw std::invalid_argument("rank mismatch");
    std::vector<int> cat = u.letters_;
    cat.insert(cat.end(), v.letters_.begin(), v.letters_.end());
    return FreeWord(u.rank_, std::move(cat));
}

BraidWord::BraidWord(int strand_count, std::vector<int> letters)
    : strands_(strand_count), letters_(std::move(letters)) {
    check_rank(strand_count);
    for (int x : letters_)
        if (x == 0 || std::abs(x) >= strand_count)
            throw std::invalid_argument("generator index " +
                                        std::to_string(std::abs(x)) +
                                        " out of range for " +
                                        std::to_string(strand_count) +
                                        " strands");
}

BraidWord BraidWord::generator(int strand_count, int index, int sign) {
    return BraidWord(strand_count, {sign >= 0 ? index : -index});
}

PuncturePath PuncturePath::below(int s, int t) {
    PuncturePath p;
    p.from = s;
    p.to = t;
    if (t > s) p.detours.assign(static_cast<std::size_t>(t - s - 1), Detour::below);
    return p;
}

PuncturePath PuncturePath::above(int s, int t) {
    PuncturePath p = below(s, t);
    std::fill(p.detours.begin(), p.detours.end(), Detour::above);
    return p;
}

BraidWord compose(const BraidWord& u, const BraidWord& v) {
    if (u.strand_count() != v.strand_count())
        throw std::invalid_argument("strand count mismatch");
    std::vector<int> cat = u.letters();
    cat.insert(cat.end(), v.letters().begin(), v.letters().end());
    return BraidWord(u.strand_count(), std::move(cat));
}

BraidWord inverse(const BraidWord& u) {
    std::vector<int> rev(u.letters().rbegin(), u.letters().rend());
    for (int& x : rev) x = -x;
    return BraidWord(u.strand_count(), std::move(rev));
}

BraidWord conjugate(const BraidWord& a, const BraidWord& b) {
    return compose(compose(inverse(b), a), b);
}

BraidWord power(const BraidWord& u, int e) {
    BraidWord base = e >= 0 ? u : inverse(u);
    int reps = std::abs(e);
    std::vector<int> out;
    out.reserve(base.length() * static_cast<std::size_t>(reps));
    for (int i = 0; i < reps; ++i)
        out.insert(out.end(), base.letters().begin(), base.letters().end());
    return BraidWord(u.strand_count(), std::move(out));
}

long long exponent_sum(const BraidWord& u) {
    long long s = 0;
    for (int x : u.letters()) s += x > 0 ? 1 : -1;
    return s;
}

Permutation permutation(const BraidWord& u) {
    Permutation p(u.strand_count());
    std::vector<int> img = p.images();
    for (int x : u.letters()) {
        int i = std::abs(x);
        for (int& v : img) {
            if (v == i)
                v = i + 1;
            else if (v == i + 1)
                v = i;
        }
    }
    return Permutation::from_images(std::move(img));
}

namespace {
// Reduced images of generic long words grow exponentially; past this bound
// the computation is abandoned instead of exhausting memory.
constexpr std::size_t kImageLetterCap = 1u << 24;
}  // namespace

FreeWord artin_action(const BraidWord& beta, const FreeWord& w) {
    if (beta.strand_count() != w.rank())
        throw std::invalid_argument("strand count does not match free rank");
    std::vector<int> cur = w.letters();
    for (int letter : beta.letters()) {
        if (cur.size() > kImageLetterCap)
            throw std::runtime_error(
                "free-group image exceeded " +
                std::to_string(kImageLetterCap) + " letters");
        int i = std::abs(letter);
        bool pos = letter > 0;
        std::vector<int> next;
        next.reserve(cur.size() * 2);
        auto push = [&next](int x) {
            if (!next.empty() && next.back() == -x)
                next.pop_back();
            else
                next.push_back(x);
        };
        for (int x : cur) {
            int j = std::abs(x);
            bool xp = x > 0;
            if (pos) {
                if (j == i) {
                    if (xp) {
                        push(i);
                        push(i + 1);
                        push(-i);
                    } else {
                        push(i);
                        push(-(i + 1));
                        push(-i);
                    }
                } else if (j == i + 1) {
                    push(xp ? i : -i);
                } else {
                    push(x);
                }
            } else {
                if (j == i) {
                    push(xp ? (i + 1) : -(i + 1));
                } else if (j == i + 1) {
                    if (xp) {
                        push(-(i + 1));
                        push(i);
                        push(i + 1);
                    } else {
                        push(-(i + 1));
                        push(-i);
                        push(i + 1);
                    }
                } else {
                    push(x);
                }
            }
        }
        cur = std::move(next);
    }
    return FreeWord(w.rank(), std::move(cur));
}

bool are_equal(const BraidWord& u, const BraidWord& v) {
    if (u.strand_count() != v.strand_count())
        throw std::invalid_argument("strand count mismatch");
    if (exponent_sum(u) != exponent_sum(v)) return false;
    if (!(permutation(u) == permutation(v))) return false;
    int n = u.strand_count();
    for (int i = 1; i <= n; ++i) {
        FreeWord x = FreeWord::generator(n, i);
        if (!(artin_action(u, x) == artin_action(v, x))) return false;
    }
    return true;
}

BraidWord full_twist(int n) {
    check_rank(n);
    std::vector<int> letters;
    letters.reserve(static_cast<std::size_t>(n) * (n - 1));
    for (int rep = 0; rep < n; ++rep)
        for (int i = 1; i < n; ++i) letters.push_back(i);
    return BraidWord(n, std::move(letters));
}

BraidWord half_twist(const PuncturePath& path, int n) {
    if (path.from < 1 || path.to > n || path.from >= path.to)
        throw std::invalid_argument("path endpoints out of range");
    if (path.detours.size() != static_cast<std::size_t>(path.to - path.from - 1))
        throw std::invalid_argument("detour list length mismatch");
    auto eps = [&path](int r) {
        return path.detours[static_cast<std::size_t>(r - path.from - 1)] ==
                       Detour::below
                   ? 1
                   : -1;
    };
    std::vector<int> letters;
    letters.reserve(2 * path.detours.size() + 1);
    for (int r = path.to - 1; r > path.from; --r) letters.push_back(eps(r) * r);
    letters.push_back(path.from);
    for (int r = path.from + 1; r < path.to; ++r) letters.push_back(-eps(r) * r);
    return BraidWord(n, std::move(letters));
}

BraidWord block_half_twist(int n, int first, int size) {
    if (size < 1 || first < 1 || first + size - 1 > n)
        throw std::invalid_argument("block out of range");
    std::vector<int> letters;
    letters.reserve(static_cast<std::size_t>(size) * (size - 1) / 2);
    for (int top = first; top <= first + size - 2; ++top)
        for (int i = top; i >= first; --i) letters.push_back(i);
    return BraidWord(n, std::move(letters));
}

BraidWord block_full_twist(int n, int first, int size) {
    if (size < 1 || first < 1 || first + size - 1 > n)
        throw std::invalid_argument("block out of range");
    std::vector<int> letters;
    letters.reserve(static_cast<std::size_t>(size) * (size - 1));
    for (int rep = 0; rep < size; ++rep)
        for (int i = first; i <= first + size - 2; ++i) letters.push_back(i);
    return BraidWord(n, std::move(letters));
}

}  // namespace hirzebruch
