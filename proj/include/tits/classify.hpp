#pragma once

#include "tits/invariants.hpp"
#include "tits/symplectic.hpp"

#include <variant>

namespace tits {

struct CircLine {
    long r = 1;
    auto operator<=>(const CircLine&) const = default;
};

struct LevLine {
    long r = 1;
    ResidueClassM cls;
    auto operator<=>(const LevLine&) const = default;
};

/// Residue mod q, length, and for q = p long vectors the pair (v1/p, v3/p) mod p; ±-canonical.
struct PQLine {
    std::array<long, 4> res{};
    bool is_long = false;
    bool has_refine = false;
    std::array<long, 2> refine{};
    auto operator<=>(const PQLine&) const = default;
};

using LineLabel = std::variant<CircLine, LevLine, PQLine>;

struct CircPlane {
    auto operator<=>(const CircPlane&) const = default;
};

struct LevPlane {
    ResidueClassO cls;
    auto operator<=>(const LevPlane&) const = default;
};

/// Plücker vector of a ℤ-basis of h_ℤ mod q; for q = p also (vΛ)∧(wΛ/p) of a split basis.
/// Both are taken up to one common sign.
struct PQPlane {
    std::array<long, 6> plk{};
    bool has_long = false;
    std::array<long, 6> long_plk{};
    auto operator<=>(const PQPlane&) const = default;
};

using PlaneLabel = std::variant<CircPlane, LevPlane, PQPlane>;

/// v·word = sign·canonical; every token passes is_member for its tag, the word for `group`.
struct LineReduction {
    Word word;
    GroupSpec group;
    Vec4 canonical;
    int sign = 1;
    LineLabel label;
};

LineReduction reduce_line_circ(const Vec4& v, long t);
LineReduction reduce_line_lev(const Vec4& v, long t);
LineReduction reduce_line_pq(const Vec4& v, long p, long q);
LineReduction reduce_line(const Vec4& v, const GroupSpec& g);

/// Modulus M such that the line label of a primitive vector depends only on v mod M.
long label_modulus(const GroupSpec& g);
/// Label of a primitive vector from its residue x mod label_modulus(g).
LineLabel line_label_mod(const std::array<long, 4>& x, const GroupSpec& g);
LineLabel line_label(const Vec4& v, const GroupSpec& g);

/// Vector with this line label (the canonical representative of its orbit).
Vec4 line_representative(const LineLabel& label, const GroupSpec& g);

struct PlaneSplit {
    Vec4 v, w;      // d_t(v) = 1, d_t(w) = t
    Mat2 change;    // (v; w) = change · (b1; b2), det 1
};

bool isotropy_check(const Vec4& v, const Vec4& w, long t);
PlaneSplit plane_basis_split(const Lattice2Basis& h, long t);
PlaneLabel plane_label(const Lattice2Basis& h, const GroupSpec& g);

std::array<Int, 6> plucker_int(const Vec4& v, const Vec4& w);
/// Row vector v·Λ for the form with parameter t.
Vec4 times_form(const Vec4& v, long t);

}  // namespace tits
