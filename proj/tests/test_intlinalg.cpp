#include <doctest.h>

#include "gen.hpp"
#include "tits/intlinalg.hpp"

using namespace tits;

namespace {

Int det3(const Vec4& x, const Vec4& y, const Vec4& z, int i, int j, int k) {
    return x[i] * (y[j] * z[k] - y[k] * z[j]) - x[j] * (y[i] * z[k] - y[k] * z[i]) +
           x[k] * (y[i] * z[j] - y[j] * z[i]);
}

bool in_span(const Vec4& x, const Vec4& u, const Vec4& w) {
    static constexpr int S[4][3] = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
    for (const auto& s : S)
        if (det3(u, w, x, s[0], s[1], s[2]) != 0) return false;
    return true;
}

// x ∈ ℤu + ℤw by Cramer's rule on a nonzero 2×2 minor.
bool in_lattice(const Vec4& x, const Vec4& u, const Vec4& w) {
    if (!in_span(x, u, w)) return false;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            Int d = u[i] * w[j] - u[j] * w[i];
            if (d == 0) continue;
            Int a = x[i] * w[j] - x[j] * w[i], b = u[i] * x[j] - u[j] * x[i];
            if (a % d != 0 || b % d != 0) return false;
            a /= d;
            b /= d;
            return a * u + b * w == x;
        }
    return false;
}

bool same_lattice(const Lattice2Basis& h, const Vec4& v, const Vec4& w) {
    return in_lattice(v, h.b1, h.b2) && in_lattice(w, h.b1, h.b2) && in_lattice(h.b1, v, w) &&
           in_lattice(h.b2, v, w);
}

bool independent(const Vec4& v, const Vec4& w) {
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (v[i] * w[j] - v[j] * w[i] != 0) return true;
    return false;
}

Int plucker_content(const Vec4& v, const Vec4& w) {
    std::vector<Int> m;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) m.push_back(v[i] * w[j] - v[j] * w[i]);
    return gcd_many(m);
}

}  // namespace

TEST_CASE("residues are floor-style") {
    CHECK(mod(Int(-7), Int(5)) == 3);
    CHECK(mod(Int(7), Int(5)) == 2);
    CHECK(mod_long(Int(-10), 10) == 0);
    CHECK(fits_long(Int(1) << 40));
    CHECK_FALSE(fits_long(Int(1) << 80));
}

TEST_CASE("gcd_many and content") {
    CHECK(gcd_many({Int(12), Int(-18), Int(30)}) == 6);
    CHECK(gcd_many({Int(0), Int(0), Int(5)}) == 5);
    CHECK_THROWS_AS(gcd_many({}), UsageError);
    CHECK(content(vec(2, 4, 6, 8)) == 2);
    CHECK(is_primitive(vec(2, 3, 4, 5)));
    CHECK_FALSE(is_primitive(vec(2, 4, 6, 8)));
}

TEST_CASE("bezout identity on random pairs") {
    Rng rng(11);
    for (int i = 0; i < 500; ++i) {
        Int a = rng.range(-1000, 1000), b = rng.range(-1000, 1000);
        if (a == 0 && b == 0) continue;
        Bezout z = bezout(a, b);
        CHECK(z.g > 0);
        CHECK(z.lambda * a + z.mu * b == z.g);
        CHECK(a % z.g == 0);
        CHECK(b % z.g == 0);
    }
}

TEST_CASE("coprime_shift reaches a unit gcd") {
    Rng rng(12);
    for (int i = 0; i < 500; ++i) {
        Int x1 = rng.range(-60, 60), x2 = rng.range(-60, 60), x3 = rng.range(-60, 60), x4 = rng.range(-60, 60);
        if (x2 == 0 || gcd_many({x1, x2, x3, x4}) != 1) continue;
        auto [l, m] = coprime_shift(x1, x2, x3, x4);
        Int y = x1 + l * x3 + m * x4;
        CHECK(gcd_many({y, x2}) == 1);
    }
}

TEST_CASE("hnf_rank2 spans the same lattice and is basis independent") {
    Rng rng(13);
    for (int i = 0; i < 300; ++i) {
        Vec4 v = gen::nonzero(rng, 9), w = gen::nonzero(rng, 9);
        if (!independent(v, w)) continue;
        Lattice2Basis h = hnf_rank2(v, w);
        CHECK(same_lattice(h, v, w));
        Mat2 u = random_sl2(rng, 1);
        Vec4 v2 = u.a * v + u.b * w, w2 = u.c * v + u.d * w;
        CHECK(hnf_rank2(v2, w2) == h);
        CHECK(hnf_rank2(-v, w) == h);
    }
}

TEST_CASE("saturate_plane gives the full integer points of the span") {
    Rng rng(14);
    for (int i = 0; i < 60; ++i) {
        Vec4 v = gen::nonzero(rng, 3), w = gen::nonzero(rng, 3);
        if (!independent(v, w)) continue;
        v = Int(rng.range(1, 3)) * v;
        Lattice2Basis h = saturate_plane(v, w);
        CHECK(in_lattice(v, h.b1, h.b2));
        CHECK(in_lattice(w, h.b1, h.b2));
        CHECK(plucker_content(h.b1, h.b2) == 1);
        // every small integer point in the rational span lies in the lattice
        for (long a = -2; a <= 2; ++a)
            for (long b = -2; b <= 2; ++b)
                for (long c = -2; c <= 2; ++c)
                    for (long d = -2; d <= 2; ++d) {
                        Vec4 x = vec(a, b, c, d);
                        if (in_span(x, v, w)) CHECK(in_lattice(x, h.b1, h.b2));
                    }
    }
}

TEST_CASE("saturate of an already saturated basis is its HNF") {
    Vec4 v = vec(1, 0, 0, 0), w = vec(0, 1, 0, 0);
    CHECK(saturate_plane(v, w) == hnf_rank2(v, w));
    CHECK(saturate_plane(vec(2, 0, 0, 0), vec(0, 3, 0, 0)) == hnf_rank2(v, w));
}

TEST_CASE("coprime_lift is coprime and congruent") {
    for (long n = 1; n <= 30; ++n)
        for (long a = 0; a < n; ++a)
            for (long b = 0; b < n; ++b) {
                if (std::gcd(std::gcd(a, b), n) != 1) continue;
                auto [x, y] = coprime_lift(Int(a), Int(b), Int(n));
                CHECK(gcd_many({x, y}) == 1);
                CHECK(mod_long(x, n) == a);
                CHECK(mod_long(y, n) == b);
            }
    auto [x, y] = coprime_lift(2, 0, 5);
    CHECK(mod_long(x, 5) == 2);
    CHECK(y == 5);
}

TEST_CASE("is_prime and square_factor against trial division") {
    for (long n = 1; n <= 200; ++n) {
        bool p = n >= 2;
        for (long d = 2; d * d <= n; ++d)
            if (n % d == 0) p = false;
        CHECK(is_prime(n) == p);
        long sq = 0;
        for (long l = 2; l * l <= n && !sq; ++l)
            if (is_prime(l) && n % (l * l) == 0) sq = l;
        CHECK(square_factor(n) == sq);
    }
}

TEST_CASE("sl2_transporter_mod moves within a Γ(n) orbit") {
    Rng rng(15);
    for (long n : {1L, 2L, 3L, 5L, 6L, 10L}) {
        for (int i = 0; i < 100; ++i) {
            Int a = rng.range(-40, 40), b = rng.range(-40, 40);
            if (gcd_many({a, b}) != 1) continue;
            Mat2 g0 = random_sl2(rng, n);
            Int a2 = a * g0.a + b * g0.c, b2 = a * g0.b + b * g0.d;
            Mat2 g = sl2_transporter_mod(a, b, a2, b2, n);
            CHECK(det2(g) == 1);
            CHECK(mod_long(g.a - 1, n) == 0);
            CHECK(mod_long(g.b, n) == 0);
            CHECK(mod_long(g.c, n) == 0);
            CHECK(mod_long(g.d - 1, n) == 0);
            CHECK(a * g.a + b * g.c == a2);
            CHECK(a * g.b + b * g.d == b2);
        }
    }
}

TEST_CASE("inverse_sl2 and det2") {
    Mat2 m{2, 3, 1, 2};
    CHECK(det2(m) == 1);
    CHECK(m * inverse_sl2(m) == Mat2{1, 0, 0, 1});
}
