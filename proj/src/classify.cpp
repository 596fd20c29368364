#include "tits/classify.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace tits {

namespace {

struct Builder {
    Vec4 u;
    Word w;
    void emit(const Token& x) {
        u = x.apply(u);
        w.tokens.push_back(x);
    }
};

bool is_identity(const Mat2& s) { return s == Mat2{1, 0, 0, 1}; }

// Steps 1a-1b and the mod-r shift: u ends as ±(r, a2, 0, a4) with (a2,a4) the lifted 𝓜(r) rep.
int lev_core(Builder& b, long t, const GroupSpec& tag) {
    const long r = t_divisor(b.u, t);
    const Mat2 S{0, 1, -1, 0};
    if (b.u[0] == 0) {
        if (b.u[2] == 0) {
            if (b.u[1] != 0)
                b.emit(Token::m3(1, tag));
            else
                b.emit(Token::m1(1, tag));
        }
        if (b.u[0] == 0) b.emit(Token::j1(S, tag));
    }
    {
        const Int tr = t / r;
        auto [lam, mu] = coprime_shift(b.u[2] / r, b.u[0] / r, tr * b.u[1], -tr * b.u[3]);
        if (lam != 0) b.emit(Token::m2(lam, tag));
        if (mu != 0) b.emit(Token::m1(mu, tag));
    }
    {
        Bezout z = bezout(b.u[0], b.u[2]);
        if (z.g != r) throw std::logic_error("lev_core: gcd(v1,v3) != r after shift");
        Mat2 g{z.lambda, -b.u[2] / r, z.mu, b.u[0] / r};
        if (!is_identity(g)) b.emit(Token::j1(g, tag));
    }
    ResidueClassM cls = class_M(b.u[1], b.u[3], r);
    auto [a2, a4] = coprime_lift(Int(cls.a), Int(cls.b), Int(r));
    int s = (mod_long(b.u[1] - cls.a, r) == 0 && mod_long(b.u[3] - cls.b, r) == 0) ? 1 : -1;
    if (s < 0) b.emit(Token::j1(Mat2{-1, 0, 0, -1}, tag));
    auto clear_v3 = [&] {
        if (b.u[2] == 0) return;
        b.emit(Token::j1(Mat2{1, -b.u[2] / b.u[0], 0, 1}, tag));
    };
    const Int sr = s * r;
    if (Int k = (s * a2 - b.u[1]) / sr; k != 0) b.emit(Token::m1(k, tag));
    clear_v3();
    if (Int l = (s * a4 - b.u[3]) / sr; l != 0) b.emit(Token::m2(l, tag));
    clear_v3();
    return s;
}

// Residue v̄ ↦ word γ in Γ̃°₁,ₚ with v̄·γ ≡ base mod q, from a BFS over the circ alphabet.
struct ResidueTable {
    std::map<std::array<long, 4>, Word> to_base;
};

std::array<long, 4> residue(const Vec4& v, long q) {
    return {mod_long(v[0], q), mod_long(v[1], q), mod_long(v[2], q), mod_long(v[3], q)};
}

Vec4 as_vec(const std::array<long, 4>& x) { return vec(x[0], x[1], x[2], x[3]); }

const ResidueTable& residue_table(long p, long q, bool longv) {
    static std::mutex mtx;
    static std::map<std::tuple<long, long, bool>, ResidueTable> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto key = std::make_tuple(p, q, longv);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
    ResidueTable tab;
    const auto alpha = circ_alphabet(p);
    std::array<long, 4> base = longv ? std::array<long, 4>{0, 1, 0, 0}
                                     : std::array<long, 4>{1, 0, 0, 0};
    std::vector<std::array<long, 4>> queue{base};
    tab.to_base[base] = Word{};
    for (std::size_t i = 0; i < queue.size(); ++i) {
        const auto x = queue[i];
        for (const auto& g : alpha) {
            auto y = residue(g.apply(as_vec(x)), q);
            if (tab.to_base.count(y)) continue;
            Word w;
            w.tokens.push_back(g.inverse());
            w.append(tab.to_base[x]);
            tab.to_base[y] = std::move(w);
            queue.push_back(y);
        }
    }
    return cache.emplace(key, std::move(tab)).first->second;
}

void pq_short_core(Builder& b, long p, long q, const GroupSpec& tag) {
    const Int pq = Int(p) * q;
    auto [lam, mu] = coprime_shift(b.u[2], b.u[0], pq * b.u[1], -pq * b.u[3]);
    if (lam != 0) b.emit(Token::m2(lam * q, tag));
    if (mu != 0) b.emit(Token::m1(mu * q, tag));
    if (Mat2 g = sl2_transporter_mod(b.u[0], b.u[2], 1, 0, q); !is_identity(g))
        b.emit(Token::j1(g, tag));
    if (b.u[3] != 0) b.emit(Token::m2(-b.u[3], tag));
    if (Mat2 g = sl2_transporter_mod(b.u[0], b.u[2], 1, 0, q); !is_identity(g))
        b.emit(Token::j1(g, tag));
    if (b.u[1] != 0) b.emit(Token::m1(-b.u[1], tag));
}

void pq_long_core(Builder& b, long p, long q, const GroupSpec& tag) {
    auto [lam, mu] = coprime_shift(b.u[3], b.u[1], q * b.u[0], q * b.u[2]);
    if (lam != 0) b.emit(Token::m2(lam * q, tag));
    if (mu != 0) b.emit(Token::m3(mu * q, tag));
    auto clear_v4 = [&] {
        if (Mat2 g = sl2_transporter_mod(b.u[1], b.u[3], 1, 0, q); !is_identity(g))
            b.emit(Token::j2(g, tag));
    };
    clear_v4();
    if (p != q) {
        if (b.u[2] != 0) b.emit(Token::m2(-b.u[2] / p, tag));
        if (b.u[0] != 0) b.emit(Token::m3(b.u[0] / p, tag));
        clear_v4();
        return;
    }
    {
        Int bq = b.u[2] / p;
        Int m = (mod(bq, Int(p)) - bq) / p;
        if (m != 0) b.emit(Token::m2(m * p, tag));
        clear_v4();
    }
    {
        Int aq = b.u[0] / p;
        Int m = (aq - mod(aq, Int(p))) / p;
        if (m != 0) b.emit(Token::m3(m * p, tag));
        clear_v4();
    }
}

// ±-canonicalization key of a PQ vector label from the residue mod label_modulus.
PQLine pq_key(const std::array<long, 4>& x, long p, long q) {
    PQLine k;
    for (int i = 0; i < 4; ++i) k.res[i] = x[i] % q;
    k.is_long = (x[0] % p == 0) && (x[2] % p == 0);
    if (q == p && k.is_long) {
        k.has_refine = true;
        k.refine = {(x[0] / p) % p, (x[2] / p) % p};
    }
    return k;
}

std::array<long, 4> negate_mod(const std::array<long, 4>& x, long m) {
    return {(m - x[0]) % m, (m - x[1]) % m, (m - x[2]) % m, (m - x[3]) % m};
}

std::array<long, 4> residue_of(const Vec4& v, long m) { return residue(v, m); }

}  // namespace

LineReduction reduce_line_circ(const Vec4& v, long t) {
    GroupSpec g = GroupSpec::circ(t);
    Builder b{v, {}};
    int s = lev_core(b, t, g);
    if (s < 0) b.emit(Token::j1(Mat2{-1, 0, 0, -1}, g));
    if (Mat2 m = sl2_transporter_mod(b.u[1], b.u[3], 1, 0, 1); !is_identity(m))
        b.emit(Token::j2(m, g));
    return {b.w, g, b.u, 1, line_label(v, g)};
}

LineReduction reduce_line_lev(const Vec4& v, long t) {
    GroupSpec g = GroupSpec::lev(t);
    Builder b{v, {}};
    int s = lev_core(b, t, g);
    return {b.w, g, s * b.u, s, line_label(v, g)};
}

namespace {

// Vector-level reduction: v·word = canonical, canonical depends only on the vector orbit.
std::pair<Word, Vec4> pq_vector_reduce(const Vec4& v, long p, long q) {
    GroupSpec g = GroupSpec::pq(p, q);
    const bool lv = is_long(v, p);
    const auto& tab = residue_table(p, q, lv);
    auto it = tab.to_base.find(residue(v, q));
    if (it == tab.to_base.end()) throw std::logic_error("pq reduce: residue outside BFS orbit");
    const Word& gamma = it->second;
    Builder b{gamma.apply(v), {}};
    if (lv)
        pq_long_core(b, p, q, g);
    else
        pq_short_core(b, p, q, g);
    Word ginv = gamma.inverse();
    Word w = gamma;
    w.append(b.w);
    w.append(ginv);
    return {w, ginv.apply(b.u)};
}

}  // namespace

LineReduction reduce_line_pq(const Vec4& v, long p, long q) {
    GroupSpec g = GroupSpec::pq(p, q);
    if (!is_primitive(v)) throw DomainError("reduce_line_pq: non-primitive vector");
    const long m = label_modulus(g);
    auto x = residue_of(v, m);
    int s = pq_key(x, p, q) <= pq_key(negate_mod(x, m), p, q) ? 1 : -1;
    auto [w, c] = pq_vector_reduce(s * v, p, q);
    return {w, g, c, s, line_label(v, g)};
}

LineReduction reduce_line(const Vec4& v, const GroupSpec& g) {
    switch (g.family) {
        case Family::Circ: return reduce_line_circ(v, g.t);
        case Family::Lev: return reduce_line_lev(v, g.t);
        case Family::PQ: return reduce_line_pq(v, g.p, g.q);
        case Family::LevN: break;
    }
    throw UsageError("reduce_line: no line classification for " + g.name());
}

long label_modulus(const GroupSpec& g) {
    switch (g.family) {
        case Family::Circ:
        case Family::Lev: return g.t;
        case Family::PQ: return g.p == g.q ? g.p * g.p : g.p * g.q;
        case Family::LevN: break;
    }
    throw UsageError("label_modulus: no line classification for " + g.name());
}

LineLabel line_label_mod(const std::array<long, 4>& x, const GroupSpec& g) {
    switch (g.family) {
        case Family::Circ: return CircLine{std::gcd(std::gcd(x[0], x[2]), g.t)};
        case Family::Lev: {
            long r = std::gcd(std::gcd(x[0], x[2]), g.t);
            return LevLine{r, class_M(x[1], x[3], r)};
        }
        case Family::PQ: {
            long m = label_modulus(g);
            return std::min(pq_key(x, g.p, g.q), pq_key(negate_mod(x, m), g.p, g.q));
        }
        case Family::LevN: break;
    }
    throw UsageError("line_label: no line classification for " + g.name());
}

LineLabel line_label(const Vec4& v, const GroupSpec& g) {
    if (!is_primitive(v)) throw DomainError("line_label: non-primitive vector " + to_string(v));
    return line_label_mod(residue_of(v, label_modulus(g)), g);
}

Vec4 line_representative(const LineLabel& label, const GroupSpec& g) {
    if (const auto* c = std::get_if<CircLine>(&label)) {
        if (g.family != Family::Circ || g.t % c->r != 0) throw DomainError("label/group mismatch");
        return vec(c->r, 1, 0, 0);
    }
    if (const auto* l = std::get_if<LevLine>(&label)) {
        if (g.family != Family::Lev || g.t % l->r != 0) throw DomainError("label/group mismatch");
        auto [a2, a4] = coprime_lift(Int(l->cls.a), Int(l->cls.b), Int(l->r));
        return {Int(l->r), a2, 0, a4};
    }
    const auto& k = std::get<PQLine>(label);
    if (g.family != Family::PQ) throw DomainError("label/group mismatch");
    const long p = g.p, q = g.q;
    const auto& tab = residue_table(p, q, k.is_long);
    auto it = tab.to_base.find(k.res);
    if (it == tab.to_base.end()) throw DomainError("PQ label residue not realized");
    Word ginv = it->second.inverse();
    std::vector<Vec4> bases;
    if (!k.is_long)
        bases.push_back(vec(1, 0, 0, 0));
    else if (p != q)
        bases.push_back(vec(0, 1, 0, 0));
    else
        for (long a = 0; a < p; ++a)
            for (long b = 0; b < p; ++b) bases.push_back(vec(a * p, 1, b * p, 0));
    for (const auto& c0 : bases) {
        Vec4 x = ginv.apply(c0);
        if (pq_key(residue_of(x, label_modulus(g)), p, q) == k)
            return reduce_line_pq(x, p, q).canonical;
    }
    throw DomainError("PQ label not realized by any representative");
}

bool isotropy_check(const Vec4& v, const Vec4& w, long t) { return pairing(v, w, t) == 0; }

std::array<Int, 6> plucker_int(const Vec4& v, const Vec4& w) {
    static constexpr int I[6] = {0, 0, 0, 1, 1, 2}, J[6] = {1, 2, 3, 2, 3, 3};
    std::array<Int, 6> r;
    for (int k = 0; k < 6; ++k) r[k] = v[I[k]] * w[J[k]] - v[J[k]] * w[I[k]];
    return r;
}

Vec4 times_form(const Vec4& v, long t) { return {-v[2], -t * v[3], v[0], t * v[1]}; }

PlaneSplit plane_basis_split(const Lattice2Basis& h, long t) {
    if (!isotropy_check(h.b1, h.b2, t)) throw DomainError("plane_basis_split: plane is not isotropic");
    Int A = 0, B = 0, M = 1;  // CRT accumulators for the long coefficient pair
    for (long l : prime_factors(t)) {
        long c11 = mod_long(h.b1[0], l), c13 = mod_long(h.b1[2], l);
        long c21 = mod_long(h.b2[0], l), c23 = mod_long(h.b2[2], l);
        long det = ((c11 * c23 - c13 * c21) % l + l) % l;
        long ka, kb;
        if (det != 0) throw DomainError("plane_basis_split: coordinates (1,3) have rank 2 mod a prime");
        if (c11 != 0 || c21 != 0) {
            ka = c21;
            kb = (l - c11) % l;
        } else if (c13 != 0 || c23 != 0) {
            ka = c23;
            kb = (l - c13) % l;
        } else {
            throw DomainError("plane_basis_split: plane not saturated");
        }
        long lead = ka != 0 ? ka : kb, inv_lead = 1;
        while (lead * inv_lead % l != 1) ++inv_lead;
        ka = ka * inv_lead % l;
        kb = kb * inv_lead % l;
        // Combine x ≡ A mod M and x ≡ ka mod l (M, l coprime).
        Int inv;
        Int ml = Int(l);
        mpz_invert(inv.get_mpz_t(), Int(mod(M, ml)).get_mpz_t(), ml.get_mpz_t());
        A = A + M * mod((ka - A) * inv, ml);
        B = B + M * mod((kb - B) * inv, ml);
        M *= l;
    }
    auto [a, b] = coprime_lift(A, B, M);
    Bezout z = bezout(a, b);
    PlaneSplit s;
    s.change = Mat2{z.mu, -z.lambda, a, b};
    s.v = z.mu * h.b1 - z.lambda * h.b2;
    s.w = a * h.b1 + b * h.b2;
    if (t_divisor(s.v, t) != 1 || t_divisor(s.w, t) != t)
        throw std::logic_error("plane_basis_split: divisor check failed");
    return s;
}

PlaneLabel plane_label(const Lattice2Basis& h, const GroupSpec& g) {
    const long t = g.form_t();
    if (!isotropy_check(h.b1, h.b2, t)) throw DomainError("plane_label: plane is not isotropic");
    switch (g.family) {
        case Family::Circ: return CircPlane{};
        case Family::Lev: {
            PlaneSplit s = plane_basis_split(h, t);
            return LevPlane{class_O(s.w[1], s.w[3], t)};
        }
        case Family::PQ: {
            const long p = g.p, q = g.q;
            PQPlane x, y;
            if (p != q) {
                auto P = plucker_int(h.b1, h.b2);
                for (int k = 0; k < 6; ++k) {
                    x.plk[k] = mod_long(P[k], q);
                    y.plk[k] = mod_long(-P[k], q);
                }
                return std::min(x, y);
            }
            PlaneSplit s = plane_basis_split(h, p);
            auto P = plucker_int(s.v, s.w);
            Vec4 lw = times_form(s.w, p);
            for (auto& c : lw) c /= p;
            auto Q = plucker_int(times_form(s.v, p), lw);
            x.has_long = y.has_long = true;
            for (int k = 0; k < 6; ++k) {
                x.plk[k] = mod_long(P[k], p);
                y.plk[k] = mod_long(-P[k], p);
                x.long_plk[k] = mod_long(Q[k], p);
                y.long_plk[k] = mod_long(-Q[k], p);
            }
            return std::min(x, y);
        }
        case Family::LevN: break;
    }
    throw UsageError("plane_label: no plane classification for " + g.name());
}

}  // namespace tits
