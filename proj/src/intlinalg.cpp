#include "tits/intlinalg.hpp"

#include <algorithm>
#include <sstream>

namespace tits {

std::strong_ordering cmp(const Int& x, const Int& y) {
    int c = ::cmp(x, y);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::strong_ordering cmp(const Vec4& x, const Vec4& y) {
    for (int i = 0; i < 4; ++i) {
        auto c = cmp(x[i], y[i]);
        if (c != 0) return c;
    }
    return std::strong_ordering::equal;
}

Vec4 vec(long a, long b, long c, long d) { return {Int(a), Int(b), Int(c), Int(d)}; }

Mat4 identity4() {
    Mat4 m;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m[i][j] = (i == j) ? 1 : 0;
    return m;
}

Vec4 operator+(const Vec4& x, const Vec4& y) {
    return {x[0] + y[0], x[1] + y[1], x[2] + y[2], x[3] + y[3]};
}
Vec4 operator-(const Vec4& x, const Vec4& y) {
    return {x[0] - y[0], x[1] - y[1], x[2] - y[2], x[3] - y[3]};
}
Vec4 operator-(const Vec4& x) { return {-x[0], -x[1], -x[2], -x[3]}; }
Vec4 operator*(const Int& k, const Vec4& x) { return {k * x[0], k * x[1], k * x[2], k * x[3]}; }

Mat4 operator*(const Mat4& x, const Mat4& y) {
    Mat4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            Int s = 0;
            for (int k = 0; k < 4; ++k)
                if (sgn(x[i][k]) != 0 && sgn(y[k][j]) != 0) s += x[i][k] * y[k][j];
            r[i][j] = s;
        }
    return r;
}

Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c,
            x.c * y.b + x.d * y.d};
}

Mat4 transpose(const Mat4& m) {
    Mat4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r[i][j] = m[j][i];
    return r;
}

Int det2(const Mat2& m) { return m.a * m.d - m.b * m.c; }

Mat2 inverse_sl2(const Mat2& m) {
    if (det2(m) != 1) throw DomainError("inverse_sl2: determinant is not 1");
    return {m.d, -m.b, -m.c, m.a};
}

Int mod(const Int& x, const Int& n) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), n.get_mpz_t());
    return r;
}

long mod_long(const Int& x, long n) {
    return static_cast<long>(mpz_fdiv_ui(x.get_mpz_t(), static_cast<unsigned long>(n)));
}

bool fits_long(const Int& x) { return x.fits_slong_p(); }

std::string to_string(const Vec4& v) {
    std::ostringstream os;
    os << '(' << v[0] << ',' << v[1] << ',' << v[2] << ',' << v[3] << ')';
    return os.str();
}

std::string to_string(const Mat2& m) {
    std::ostringstream os;
    os << "((" << m.a << ',' << m.b << "),(" << m.c << ',' << m.d << "))";
    return os.str();
}

Int gcd_many(const std::vector<Int>& xs) {
    if (xs.empty()) throw UsageError("gcd_many: empty list");
    Int g = 0;
    for (const auto& x : xs) g = gcd(g, x);
    return g;
}

Int content(const Vec4& v) { return gcd_many({v[0], v[1], v[2], v[3]}); }

bool is_primitive(const Vec4& v) {
    Int g = content(v);
    if (g == 0) throw DomainError("is_primitive: zero vector");
    return g == 1;
}

Bezout bezout(const Int& a, const Int& b) {
    if (a == 0 && b == 0) throw DomainError("bezout: (0,0)");
    Bezout r;
    mpz_gcdext(r.g.get_mpz_t(), r.lambda.get_mpz_t(), r.mu.get_mpz_t(), a.get_mpz_t(),
               b.get_mpz_t());
    return r;
}

std::pair<Int, Int> coprime_shift(const Int& x1, const Int& x2, const Int& x3, const Int& x4) {
    if (x2 == 0) throw DomainError("coprime_shift: x2 = 0");
    if (gcd_many({x1, x2, x3, x4}) != 1) throw DomainError("coprime_shift: gcd(x1..x4) != 1");
    for (long k = 0;; ++k) {
        for (long l = -k; l <= k; ++l)
            for (long m = -k; m <= k; ++m) {
                if (std::max(std::labs(l), std::labs(m)) != k) continue;
                if (gcd(Int(x1 + l * x3 + m * x4), x2) == 1) return {Int(l), Int(m)};
            }
    }
}

namespace {

// Replace row r1 by its Euclid partner so that after the loop r2[c] = 0.
void euclid_rows(Vec4& r1, Vec4& r2, int c) {
    while (r2[c] != 0) {
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), r1[c].get_mpz_t(), r2[c].get_mpz_t());
        r1 = r1 - q * r2;
        std::swap(r1, r2);
    }
}

}  // namespace

Lattice2Basis hnf_rank2(const Vec4& v, const Vec4& w) {
    Vec4 r1 = v, r2 = w;
    int c = 0;
    while (c < 4 && r1[c] == 0 && r2[c] == 0) ++c;
    if (c == 4) throw DomainError("hnf_rank2: dependent rows");
    euclid_rows(r1, r2, c);
    if (r1[c] < 0) r1 = -r1;
    int c2 = c + 1;
    while (c2 < 4 && r2[c2] == 0) ++c2;
    if (c2 == 4) throw DomainError("hnf_rank2: dependent rows");
    if (r2[c2] < 0) r2 = -r2;
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), r1[c2].get_mpz_t(), r2[c2].get_mpz_t());
    r1 = r1 - q * r2;
    return {r1, r2};
}

Lattice2Basis saturate_plane(const Vec4& v, const Vec4& w) {
    // Column operations A -> A·E with A = [v; w], keeping A_0 = A·U where U = E^-1 products.
    std::array<Vec4, 2> a{v, w};
    Mat4 u = identity4();
    auto col_sub = [&](int dst, int src, const Int& q) {  // C_dst -= q C_src
        for (auto& row : a) row[dst] -= q * row[src];
        u[src] = u[src] + q * u[dst];
    };
    auto col_swap = [&](int i, int j) {
        for (auto& row : a) std::swap(row[i], row[j]);
        std::swap(u[i], u[j]);
    };
    for (int r = 0; r < 2; ++r) {
        int piv = r;
        for (int j = r + 1; j < 4; ++j) {
            while (a[r][j] != 0) {
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), a[r][piv].get_mpz_t(), a[r][j].get_mpz_t());
                col_sub(piv, j, q);
                col_swap(piv, j);
            }
        }
        if (a[r][piv] == 0) {
            for (int j = r + 1; j < 4; ++j)
                if (a[r][j] != 0) col_swap(piv, j);
            if (a[r][piv] == 0) throw DomainError("saturate_plane: dependent vectors");
        }
    }
    return hnf_rank2(u[0], u[1]);
}

std::pair<Int, Int> coprime_lift(const Int& a0, const Int& b0, const Int& n) {
    if (n < 1) throw DomainError("coprime_lift: modulus < 1");
    if (gcd_many({a0, b0, n}) != 1) throw DomainError("coprime_lift: torsion class");
    if (n == 1) return {Int(1), Int(0)};
    Int a = mod(a0, n), b = mod(b0, n);
    if (gcd(a, b) == 1) return {a, b};
    if (b == 0) b = n;
    while (gcd(a, b) != 1) a += n;
    return {a, b};
}

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

long square_factor(long n) {
    for (long d = 2; d * d <= n; ++d)
        if (n % (d * d) == 0 && is_prime(d)) return d;
    return 0;
}

Mat2 sl2_transporter_mod(const Int& a, const Int& b, const Int& a2, const Int& b2, const Int& n) {
    if (n < 1) throw DomainError("sl2_transporter_mod: modulus < 1");
    if (gcd(a, b) != 1 || gcd(a2, b2) != 1)
        throw DomainError("sl2_transporter_mod: non-primitive pair");
    if (mod(a - a2, n) != 0 || mod(b - b2, n) != 0)
        throw DomainError("sl2_transporter_mod: pairs differ mod n");
    auto complete = [](const Int& x, const Int& y) {
        Bezout z = bezout(x, y);
        return Mat2{x, y, -z.mu, z.lambda};
    };
    Mat2 hx = complete(a, b), hy = complete(a2, b2);
    Mat2 c = hx * inverse_sl2(hy);
    Mat2 lower{1, 0, c.c, 1};
    return inverse_sl2(hx) * lower * hy;
}

}  // namespace tits
