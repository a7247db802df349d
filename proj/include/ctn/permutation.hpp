#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ctn {

/// Largest supported degree; 8! = 40320 vertices.
inline constexpr int kMaxDegree = 8;

/// Set of points of {1..n}, stored as a bitmask (bit i-1 <-> point i).
class PointSet
{
public:
    constexpr PointSet() = default;
    static constexpr PointSet from_mask(std::uint16_t mask)
    {
        PointSet s;
        s.mask_ = mask;
        return s;
    }

    constexpr void insert(int point) { mask_ |= static_cast<std::uint16_t>(1u << (point - 1)); }
    [[nodiscard]] constexpr bool contains(int point) const { return (mask_ >> (point - 1)) & 1u; }
    [[nodiscard]] constexpr int size() const { return std::popcount(mask_); }
    [[nodiscard]] constexpr bool empty() const { return mask_ == 0; }
    [[nodiscard]] constexpr std::uint16_t mask() const { return mask_; }

    [[nodiscard]] constexpr PointSet operator|(PointSet o) const { return from_mask(mask_ | o.mask_); }
    [[nodiscard]] constexpr PointSet operator&(PointSet o) const { return from_mask(mask_ & o.mask_); }
    constexpr PointSet& operator|=(PointSet o)
    {
        mask_ |= o.mask_;
        return *this;
    }
    constexpr bool operator==(const PointSet&) const = default;

    /// Ascending 1-based points.
    [[nodiscard]] std::vector<int> points() const;
    /// "{1,2,3}"
    [[nodiscard]] std::string to_string() const;

private:
    std::uint16_t mask_ = 0;
};

enum class Parity : std::uint8_t { even = 0, odd = 1 };

/**
 * A permutation of {1..n}, n <= 8, held as its one-line image.
 *
 * Products use the right action: i^(fg) = (i^f)^g, so compose(f, g) applies
 * f first. Under this convention (1,2)(1,3) = (1,2,3).
 *
 * Points are 1-based at the API boundary (apply, cycle parsing, formatting)
 * and 0-based in storage.
 */
class Permutation
{
public:
    /// Identity of degree n.
    explicit Permutation(int n);

    /// From a 1-based image array; throws std::invalid_argument unless it is a bijection on {1..n}.
    static Permutation from_images(std::span<const int> image);
    static Permutation from_images(std::initializer_list<int> image);

    /// The transposition swapping points a and b (1-based, a != b).
    static Permutation transposition(int n, int a, int b);

    /// Parses "id", one-line ("2134") or cycle notation ("(1,2)(3,4)"). Cycle
    /// notation needs the degree; one-line notation must have exactly n digits.
    static Permutation parse(std::string_view text, int n);

    [[nodiscard]] int degree() const { return n_; }

    /// i^x for a 1-based point i.
    [[nodiscard]] int apply(int point) const { return image_[point - 1] + 1; }

    /// 0-based image access for hot loops.
    [[nodiscard]] std::uint8_t operator[](int i) const { return image_[i]; }

    [[nodiscard]] bool is_identity() const;

    /// "2134"
    [[nodiscard]] std::string one_line() const;
    /// "(1,2)(3,4)", or "id".
    [[nodiscard]] std::string cycle_notation() const;

    bool operator==(const Permutation& o) const { return n_ == o.n_ && image_ == o.image_; }
    auto operator<=>(const Permutation& o) const
    {
        if (auto c = n_ <=> o.n_; c != 0)
            return c;
        return image_ <=> o.image_;
    }

    /// Swaps the images of positions a and b (0-based). Equals compose(t, *this)
    /// for the transposition t = (a+1, b+1).
    [[nodiscard]] Permutation swapped_positions(int a, int b) const
    {
        Permutation r = *this;
        std::swap(r.image_[a], r.image_[b]);
        return r;
    }

private:
    friend Permutation compose(const Permutation& f, const Permutation& g);
    friend Permutation inverse(const Permutation& f);

    std::array<std::uint8_t, kMaxDegree> image_{};
    std::uint8_t n_ = 0;
};

/// Right-action product: result[i] = g[f[i]]. Throws on degree mismatch.
Permutation compose(const Permutation& f, const Permutation& g);
Permutation inverse(const Permutation& f);
PointSet support(const Permutation& f);
Parity parity(const Permutation& f);

inline Permutation operator*(const Permutation& f, const Permutation& g) { return compose(f, g); }

/// A transposition (a b) with 1 <= a < b <= n.
struct Transposition
{
    int a = 1;
    int b = 2;

    /// Normalizes order; throws if a == b.
    static Transposition make(int a, int b);

    [[nodiscard]] PointSet support() const
    {
        PointSet s;
        s.insert(a);
        s.insert(b);
        return s;
    }
    [[nodiscard]] Permutation as_permutation(int n) const { return Permutation::transposition(n, a, b); }
    [[nodiscard]] std::string to_string() const;

    bool operator==(const Transposition&) const = default;
    auto operator<=>(const Transposition&) const = default;
};

/// If f is a transposition, stores it in *out and returns true.
bool as_transposition(const Permutation& f, Transposition* out);

std::uint64_t factorial(int n);

/// Lehmer-code ranking: rank 0 is the identity, rank n!-1 the reversal, and the
/// order agrees with lexicographic order of one-line images.
std::uint32_t rank(const Permutation& p);
/// Inverse of rank(); throws std::out_of_range if r >= n!.
Permutation unrank(int n, std::uint64_t r);

} // namespace ctn
