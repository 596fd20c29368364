#include "tits/symplectic.hpp"

#include <sstream>

namespace tits {

void require_squarefree(long t) {
    if (t < 1) throw DomainError("t must be >= 1, got " + std::to_string(t));
    if (long l = square_factor(t); l != 0)
        throw DomainError("t=" + std::to_string(t) + " is not squarefree (divisible by " +
                          std::to_string(l) + "^2=" + std::to_string(l * l) + ")");
}

GroupSpec GroupSpec::circ(long t) {
    require_squarefree(t);
    GroupSpec g;
    g.family = Family::Circ;
    g.t = t;
    return g;
}

GroupSpec GroupSpec::lev(long t) {
    GroupSpec g = circ(t);
    g.family = Family::Lev;
    return g;
}

GroupSpec GroupSpec::lev_n(long t, long n) {
    if (n < 1) throw DomainError("level n must be >= 1");
    GroupSpec g = circ(t);
    g.family = Family::LevN;
    g.n = n;
    return g;
}

GroupSpec GroupSpec::pq(long p, long q) {
    if (!is_prime(p) || p < 3)
        throw DomainError("p must be an odd prime, got " + std::to_string(p));
    if (!is_prime(q)) throw DomainError("q must be prime, got " + std::to_string(q));
    GroupSpec g;
    g.family = Family::PQ;
    g.t = p;
    g.p = p;
    g.q = q;
    return g;
}

std::string GroupSpec::name() const {
    switch (family) {
        case Family::Circ: return "GammaCirc(t=" + std::to_string(t) + ")";
        case Family::Lev: return "GammaLev(t=" + std::to_string(t) + ")";
        case Family::LevN:
            return "GammaLevN(t=" + std::to_string(t) + ",n=" + std::to_string(n) + ")";
        case Family::PQ:
            return "GammaPQ(p=" + std::to_string(p) + ",q=" + std::to_string(q) + ")";
    }
    return "?";
}

Mat4 form_matrix(long t) {
    if (t < 1) throw DomainError("form_matrix: t < 1");
    Mat4 m;
    for (auto& r : m)
        for (auto& x : r) x = 0;
    m[0][2] = 1;
    m[1][3] = t;
    m[2][0] = -1;
    m[3][1] = -t;
    return m;
}

Int pairing(const Vec4& v, const Vec4& w, long t) {
    return v[0] * w[2] - v[2] * w[0] + t * (v[1] * w[3] - v[3] * w[1]);
}

Vec4 act(const Vec4& v, const Mat4& m) {
    Vec4 r;
    for (int j = 0; j < 4; ++j) {
        Int s = 0;
        for (int k = 0; k < 4; ++k) s += v[k] * m[k][j];
        r[j] = s;
    }
    return r;
}

namespace {

bool congruent_identity(const Mat4& m, long n, bool only_rows_2_4) {
    for (int i = 0; i < 4; ++i) {
        if (only_rows_2_4 && (i == 0 || i == 2)) continue;
        for (int j = 0; j < 4; ++j) {
            Int d = m[i][j] - (i == j ? 1 : 0);
            if (mod_long(d, n) != 0) return false;
        }
    }
    return true;
}

}  // namespace

bool is_member(const Mat4& m, const GroupSpec& g) {
    long t = g.form_t();
    Mat4 lam = form_matrix(t);
    if (m * lam * transpose(m) != lam) return false;
    switch (g.family) {
        case Family::Circ: return true;
        case Family::Lev: return congruent_identity(m, t, true);
        case Family::LevN: return congruent_identity(m, g.n, false);
        case Family::PQ: return congruent_identity(m, g.q, false);
    }
    return false;
}

Mat4 gen_M1(const Int& k, long t) {
    Mat4 m = identity4();
    m[0][1] = k;
    m[3][2] = -t * k;
    return m;
}

Mat4 gen_M2(const Int& k, long t) {
    Mat4 m = identity4();
    m[0][3] = k;
    m[1][2] = t * k;
    return m;
}

Mat4 gen_M3(const Int& k, long t) {
    Mat4 m = identity4();
    m[1][0] = -t * k;
    m[2][3] = k;
    return m;
}

Mat4 gen_j1(const Mat2& s) {
    if (det2(s) != 1) throw DomainError("gen_j1: determinant is not 1");
    Mat4 m = identity4();
    m[0][0] = s.a;
    m[0][2] = s.b;
    m[2][0] = s.c;
    m[2][2] = s.d;
    return m;
}

Mat4 gen_j2(const Mat2& s) {
    if (det2(s) != 1) throw DomainError("gen_j2: determinant is not 1");
    Mat4 m = identity4();
    m[1][1] = s.a;
    m[1][3] = s.b;
    m[3][1] = s.c;
    m[3][3] = s.d;
    return m;
}

Mat4 reduce_mat_mod(const Mat4& m, long q) {
    if (q < 2) throw DomainError("reduce_mat_mod: q < 2");
    Mat4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r[i][j] = mod_long(m[i][j], q);
    return r;
}

namespace {

// Minimal nonnegative λ with λp − μq = 1.
std::pair<Int, Int> shear_bezout(long p, long q) {
    if (!is_prime(p) || !is_prime(q)) throw DomainError("lift: p and q must be prime");
    if (p == q) throw UsageError("lift: p = q is unsupported");
    Int lam = 0;
    while (mod(lam * p, Int(q)) != 1) ++lam;
    Int mu = (lam * p - 1) / q;
    return {lam, mu};
}

}  // namespace

Mat4 lift_shear(const Int& s1, const Int& s2, const Int& s3, long p, long q) {
    auto [lam, mu] = shear_bezout(p, q);
    Mat4 m = identity4();
    m[0][2] = s1;
    m[0][3] = lam * s2;
    m[1][2] = s2 * (1 + mu * q);
    m[1][3] = lam * s3;
    return m;
}

Mat4 lift_weyl(long p, long q) {
    auto [lam, mu] = shear_bezout(p, q);
    Int alpha = mod(-mu * lam, Int(q));
    Int beta = (-mu - alpha * p) / q;
    Mat4 m;
    for (auto& r : m)
        for (auto& x : r) x = 0;
    m[0][2] = 1;
    m[1][1] = beta * q;
    m[1][3] = alpha * q + lam;
    m[2][0] = -1;
    m[3][1] = -p;
    m[3][3] = q;
    return m;
}

Token Token::m1(const Int& k, const GroupSpec& tag) {
    Token x;
    x.gen = Gen::M1;
    x.k = k;
    x.t = tag.form_t();
    x.tag = tag;
    return x;
}

Token Token::m2(const Int& k, const GroupSpec& tag) {
    Token x = m1(k, tag);
    x.gen = Gen::M2;
    return x;
}

Token Token::m3(const Int& k, const GroupSpec& tag) {
    Token x = m1(k, tag);
    x.gen = Gen::M3;
    return x;
}

Token Token::j1(const Mat2& s, const GroupSpec& tag) {
    if (det2(s) != 1) throw DomainError("j1 token: determinant is not 1");
    Token x;
    x.gen = Gen::J1;
    x.s = s;
    x.t = tag.form_t();
    x.tag = tag;
    return x;
}

Token Token::j2(const Mat2& s, const GroupSpec& tag) {
    Token x = j1(s, tag);
    x.gen = Gen::J2;
    return x;
}

Token Token::matrix_token(const Mat4& m, const GroupSpec& tag) {
    Token x;
    x.gen = Gen::Raw;
    x.raw = m;
    x.t = tag.form_t();
    x.tag = tag;
    return x;
}

Mat4 Token::matrix() const {
    switch (gen) {
        case Gen::M1: return gen_M1(k, t);
        case Gen::M2: return gen_M2(k, t);
        case Gen::M3: return gen_M3(k, t);
        case Gen::J1: return gen_j1(s);
        case Gen::J2: return gen_j2(s);
        case Gen::Raw: return raw;
    }
    return identity4();
}

Vec4 Token::apply(const Vec4& v) const {
    switch (gen) {
        case Gen::M1: return {v[0], v[1] + k * v[0], v[2] - t * k * v[3], v[3]};
        case Gen::M2: return {v[0], v[1], v[2] + t * k * v[1], v[3] + k * v[0]};
        case Gen::M3: return {v[0] - t * k * v[1], v[1], v[2], v[3] + k * v[2]};
        case Gen::J1: return {v[0] * s.a + v[2] * s.c, v[1], v[0] * s.b + v[2] * s.d, v[3]};
        case Gen::J2: return {v[0], v[1] * s.a + v[3] * s.c, v[2], v[1] * s.b + v[3] * s.d};
        case Gen::Raw: return act(v, raw);
    }
    return v;
}

Token Token::inverse() const {
    Token x = *this;
    switch (gen) {
        case Gen::M1:
        case Gen::M2:
        case Gen::M3: x.k = -k; break;
        case Gen::J1:
        case Gen::J2: x.s = inverse_sl2(s); break;
        case Gen::Raw: {
            // M^-1 = Λ Mᵀ Λ^-1 for symplectic M.
            Mat4 y = form_matrix(t) * transpose(raw);
            for (int i = 0; i < 4; ++i) {
                if (mod_long(y[i][3], t) != 0 || mod_long(y[i][1], t) != 0)
                    throw DomainError("raw token is not symplectic");
                Int c0 = y[i][2], c1 = y[i][3] / t, c2 = -y[i][0], c3 = -y[i][1] / t;
                x.raw[i] = {c0, c1, c2, c3};
            }
            break;
        }
    }
    return x;
}

std::string Token::str() const {
    std::ostringstream os;
    switch (gen) {
        case Gen::M1: os << "M1(" << k << ")"; break;
        case Gen::M2: os << "M2(" << k << ")"; break;
        case Gen::M3: os << "M3(" << k << ")"; break;
        case Gen::J1: os << "j1" << to_string(s); break;
        case Gen::J2: os << "j2" << to_string(s); break;
        case Gen::Raw:
            os << "mat[";
            for (int i = 0; i < 4; ++i) os << (i ? "," : "") << to_string(raw[i]);
            os << "]";
            break;
    }
    return os.str();
}

Mat4 Word::eval() const {
    Mat4 m = identity4();
    for (const auto& x : tokens) m = m * x.matrix();
    return m;
}

Vec4 Word::apply(const Vec4& v) const {
    Vec4 r = v;
    for (const auto& x : tokens) r = x.apply(r);
    return r;
}

Word Word::inverse() const {
    Word w;
    for (auto it = tokens.rbegin(); it != tokens.rend(); ++it) w.tokens.push_back(it->inverse());
    return w;
}

void Word::append(const Word& w) { tokens.insert(tokens.end(), w.tokens.begin(), w.tokens.end()); }

std::string Word::str() const {
    std::string s;
    for (std::size_t i = 0; i < tokens.size(); ++i) s += (i ? " " : "") + tokens[i].str();
    return s.empty() ? "id" : s;
}

long Rng::below(long n) {
    if (n <= 0) throw UsageError("Rng::below: n <= 0");
    const std::uint64_t un = static_cast<std::uint64_t>(n);
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % un;
    std::uint64_t x;
    do x = next();
    while (x >= limit);
    return static_cast<long>(x % un);
}

long Rng::range(long lo, long hi) { return lo + below(hi - lo + 1); }

Mat2 random_sl2(Rng& rng, long n) {
    Mat2 g{1, 0, 0, 1};
    long len = rng.range(1, 3);
    for (long i = 0; i < len; ++i) {
        long a = rng.range(1, 2) * (rng.coin() ? 1 : -1) * n;
        long kind = rng.below(n == 1 ? 3 : 2);
        Mat2 f = kind == 0 ? Mat2{1, a, 0, 1} : (kind == 1 ? Mat2{1, 0, a, 1} : Mat2{0, 1, -1, 0});
        g = g * f;
    }
    return g;
}

Word random_word(const GroupSpec& g, Rng& rng, int max_len) {
    int len = 1;
    while (len < max_len && rng.below(4) != 0) ++len;
    long step = 1, kmax = g.form_t(), j1n = 1, j2n = 1;
    switch (g.family) {
        case Family::Circ: break;
        case Family::Lev: j2n = g.t; break;
        case Family::LevN: step = g.n; j1n = j2n = g.n; break;
        case Family::PQ: step = g.q; j1n = j2n = g.q; break;
    }
    Word w;
    for (int i = 0; i < len; ++i) {
        long kind = rng.below(5);
        Int k = Int(step * rng.range(1, kmax) * (rng.coin() ? 1 : -1));
        switch (kind) {
            case 0: w.tokens.push_back(Token::m1(k, g)); break;
            case 1: w.tokens.push_back(Token::m2(k, g)); break;
            case 2: w.tokens.push_back(Token::m3(k, g)); break;
            case 3: w.tokens.push_back(Token::j1(random_sl2(rng, j1n), g)); break;
            default: w.tokens.push_back(Token::j2(random_sl2(rng, j2n), g)); break;
        }
    }
    return w;
}

std::vector<Token> circ_alphabet(long t) {
    GroupSpec g = GroupSpec::circ(t);
    const Mat2 T{1, 1, 0, 1}, Ti{1, -1, 0, 1}, S{0, 1, -1, 0}, Si{0, -1, 1, 0};
    return {Token::m1(1, g),  Token::m1(-1, g), Token::m2(1, g),  Token::m2(-1, g),
            Token::m3(1, g),  Token::m3(-1, g), Token::j1(T, g),  Token::j1(Ti, g),
            Token::j1(S, g),  Token::j1(Si, g), Token::j2(T, g),  Token::j2(Ti, g),
            Token::j2(S, g),  Token::j2(Si, g)};
}

}  // namespace tits
