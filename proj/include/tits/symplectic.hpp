#pragma once

#include "tits/intlinalg.hpp"

#include <random>

namespace tits {

enum class Family { Circ, Lev, LevN, PQ };

/// Group parameters. For PQ the form parameter is p.
struct GroupSpec {
    Family family = Family::Circ;
    long t = 1;
    long n = 1;
    long p = 0;
    long q = 0;

    static GroupSpec circ(long t);
    static GroupSpec lev(long t);
    static GroupSpec lev_n(long t, long n);
    static GroupSpec pq(long p, long q);

    long form_t() const { return family == Family::PQ ? p : t; }
    std::string name() const;
    bool operator==(const GroupSpec&) const = default;
};

/// Throws DomainError naming the square factor when t is not squarefree.
void require_squarefree(long t);

Mat4 form_matrix(long t);
Int pairing(const Vec4& v, const Vec4& w, long t);
Vec4 act(const Vec4& v, const Mat4& m);
bool is_member(const Mat4& m, const GroupSpec& g);

Mat4 gen_M1(const Int& k, long t);
Mat4 gen_M2(const Int& k, long t);
Mat4 gen_M3(const Int& k, long t);
Mat4 gen_j1(const Mat2& s);
Mat4 gen_j2(const Mat2& s);

Mat4 reduce_mat_mod(const Mat4& m, long q);
Mat4 lift_shear(const Int& s1, const Int& s2, const Int& s3, long p, long q);
Mat4 lift_weyl(long p, long q);

enum class Gen { M1, M2, M3, J1, J2, Raw };

/// One generator factor of a word, tagged with the group it lies in.
struct Token {
    Gen gen = Gen::M1;
    Int k;          // M1/M2/M3 parameter
    Mat2 s{1, 0, 0, 1};  // J1/J2 argument
    Mat4 raw{};     // Raw matrix
    long t = 1;     // form parameter for M1/M2/M3
    GroupSpec tag;

    static Token m1(const Int& k, const GroupSpec& tag);
    static Token m2(const Int& k, const GroupSpec& tag);
    static Token m3(const Int& k, const GroupSpec& tag);
    static Token j1(const Mat2& s, const GroupSpec& tag);
    static Token j2(const Mat2& s, const GroupSpec& tag);
    static Token matrix_token(const Mat4& m, const GroupSpec& tag);

    Mat4 matrix() const;
    Vec4 apply(const Vec4& v) const;
    Token inverse() const;
    std::string str() const;
};

struct Word {
    std::vector<Token> tokens;

    Mat4 eval() const;
    Vec4 apply(const Vec4& v) const;
    Word inverse() const;
    void append(const Word& w);
    std::string str() const;
};

/// Portable seeded draws (no implementation-defined distributions).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}
    std::uint64_t next() { return eng_(); }
    long below(long n);                 // uniform in [0, n)
    long range(long lo, long hi);       // uniform in [lo, hi]
    bool coin() { return (next() >> 63) != 0; }
private:
    std::mt19937_64 eng_;
};

/// Random element of SL(2,ℤ) that is ≡ 1 mod n (n = 1 gives all of SL(2,ℤ)'s elementary words).
Mat2 random_sl2(Rng& rng, long n);

/// Random word in the fixed member alphabet of g, length geometric (p = 1/4) capped at max_len.
Word random_word(const GroupSpec& g, Rng& rng, int max_len = 16);

/// Small-parameter alphabet of Γ̃°₁,ₜ used for BFS over residues; closed under inverses.
std::vector<Token> circ_alphabet(long t);

}  // namespace tits
