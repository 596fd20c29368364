#pragma once

#include "tits/building.hpp"

#include <map>
#include <set>

namespace tits {

struct Orbit {
    long size = 0;
    std::array<long, 4> rep{};  // smallest element in base-q order
};

/// Orbits of the mod-q image of the group on ℤ_q⁴∖{0}.
struct OrbitReport {
    long p = 0, q = 0;
    long ground = 0;  // q⁴ − 1
    std::vector<Orbit> orbits;  // sorted by size, then rep
    double seconds = 0;
};

/// Generators used for the mod-q image: the fixed alphabet of Γ̃°₁,ₚ plus, for q ≠ p,
/// the Weyl lift and three shear lifts.
std::vector<Mat4> modq_generators(long p, long q);

OrbitReport orbit_bfs_modq(long p, long q);

/// Order of the mod-q image by closure. q = p is unsupported, q ≥ 5 needs force.
long group_closure_modq(long p, long q, bool force = false);

/// Number of ordered bases (r₁..r₄) of ℤ_q⁴ with r_i Λ̄ r_jᵀ = Λ̄_ij, Λ̄ the form at p mod q.
long symplectic_basis_count(long p, long q);

struct LineCheckReport {
    GroupSpec group;
    int bound = 0;
    std::uint64_t seed = 0;
    int words = 0;
    long vectors = 0;
    std::vector<std::string> violations;  // sorted
    std::set<LineLabel> labels;
    long expected_labels = 0;
    bool ok() const { return violations.empty(); }
    bool complete() const { return static_cast<long>(labels.size()) == expected_labels; }
};

/// Every primitive v with entries in [−B, B]: witness replay, label of the canonical form,
/// and label invariance under `words` seeded member words.
LineCheckReport exhaustive_line_check(const GroupSpec& g, int bound = 5, std::uint64_t seed = 1,
                                      int words = 100);

struct PlaneCheckReport {
    GroupSpec group;
    int bound = 0;
    std::uint64_t seed = 0;
    long isotropic_pairs = 0;
    long planes = 0;  // distinct saturated planes
    std::vector<std::string> violations;
    std::set<PlaneLabel> labels;
    long expected_labels = 0;
    long expected_lines_per_plane = 0;
    std::optional<long> expected_planes_per_line;  // uniform only for PQ
    std::set<long> lines_per_plane;  // observed values
    std::set<long> planes_per_line;  // observed values, over realized plane labels
    bool ok() const { return violations.empty(); }
    bool complete() const { return static_cast<long>(labels.size()) == expected_labels; }
};

/// Saturated isotropic planes spanned by pairs of primitive vectors of height ≤ B.
PlaneCheckReport exhaustive_plane_check(const GroupSpec& g, int bound = 4, std::uint64_t seed = 1);

struct CountRow {
    long n = 0;
    long N = 0, M = 0, O = 0, psi_enum = 0;  // enumerated
    Int N_formula, nu, nu_tilde, psi, psi_closed;
};

struct CountReport {
    std::vector<CountRow> rows;
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

/// Enumeration against the counting formulas for n in [lo, hi]; ψ only for squarefree n.
CountReport count_check(long lo, long hi, bool squarefree_only = false);

/// Predicted (a, b, c, d) for the group, b or d empty where the graph is not biregular.
Config predicted_configuration(const GroupSpec& g);
long expected_line_labels(const GroupSpec& g);
long expected_plane_labels(const GroupSpec& g);
long expected_lines_per_plane(const GroupSpec& g);

std::string to_json(const OrbitReport& r);
std::string to_json(const LineCheckReport& r);
std::string to_json(const PlaneCheckReport& r);
std::string to_json(const CountReport& r);
std::string to_text(const OrbitReport& r);
std::string to_text(const LineCheckReport& r);
std::string to_text(const PlaneCheckReport& r);
std::string to_text(const CountReport& r);

}  // namespace tits
