#pragma once

#include <gmpxx.h>

#include <array>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace tits {

using Int = mpz_class;

/// Raised when an operation's mathematical precondition fails.
struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Raised on malformed calls (empty input, unsupported option).
struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

using Vec4 = std::array<Int, 4>;
using Mat4 = std::array<Vec4, 4>;  // row-major

struct Mat2 {
    Int a, b, c, d;  // (a b; c d)
    bool operator==(const Mat2&) const = default;
};

/// Rank-2 lattice basis in row Hermite normal form.
struct Lattice2Basis {
    Vec4 b1, b2;
    bool operator==(const Lattice2Basis&) const = default;
};

struct Bezout {
    Int g, lambda, mu;  // lambda*a + mu*b = g > 0
};

std::strong_ordering cmp(const Int& x, const Int& y);
std::strong_ordering cmp(const Vec4& x, const Vec4& y);
struct VecLess {
    bool operator()(const Vec4& x, const Vec4& y) const { return cmp(x, y) < 0; }
};

Vec4 vec(long a, long b, long c, long d);
Mat4 identity4();
Vec4 operator+(const Vec4& x, const Vec4& y);
Vec4 operator-(const Vec4& x, const Vec4& y);
Vec4 operator-(const Vec4& x);
Vec4 operator*(const Int& k, const Vec4& x);
Mat4 operator*(const Mat4& x, const Mat4& y);
Mat2 operator*(const Mat2& x, const Mat2& y);
Mat4 transpose(const Mat4& m);
Mat2 inverse_sl2(const Mat2& m);
Int det2(const Mat2& m);

/// Floor-style residue in [0, n) for n > 0.
Int mod(const Int& x, const Int& n);
long mod_long(const Int& x, long n);
bool fits_long(const Int& x);

std::string to_string(const Vec4& v);
std::string to_string(const Mat2& m);

Int gcd_many(const std::vector<Int>& xs);
Int content(const Vec4& v);
bool is_primitive(const Vec4& v);
Bezout bezout(const Int& a, const Int& b);

/// Smallest (λ, μ) in the ring order with gcd(x1 + λx3 + μx4, x2) = 1.
std::pair<Int, Int> coprime_shift(const Int& x1, const Int& x2, const Int& x3, const Int& x4);

Lattice2Basis hnf_rank2(const Vec4& v, const Vec4& w);
Lattice2Basis saturate_plane(const Vec4& v, const Vec4& w);

/// Smallest-index coprime lift: (a + kn, b') with b' = b, or n when b ≡ 0.
std::pair<Int, Int> coprime_lift(const Int& a, const Int& b, const Int& n);

bool is_prime(long n);
/// Smallest prime l with l² | n, or 0 when n is squarefree.
long square_factor(long n);

/// g ∈ SL(2,ℤ), g ≡ 1 mod n, with (a,b)·g = (a2,b2).
Mat2 sl2_transporter_mod(const Int& a, const Int& b, const Int& a2, const Int& b2, const Int& n);

}  // namespace tits
