#pragma once

#include "tits/classify.hpp"

#include <optional>
#include <string>

namespace tits {

struct LineVertex {
    LineLabel label;
    Vec4 rep;
};

struct PlaneVertex {
    PlaneLabel label;
    Lattice2Basis rep;
};

struct BuildingGraph {
    GroupSpec group;
    std::vector<LineVertex> lines;
    std::vector<PlaneVertex> planes;
    std::vector<std::pair<std::size_t, std::size_t>> edges;  // (line, plane), sorted
};

struct Config {
    long a = 0, c = 0;
    std::optional<long> b, d;  // uniform degrees when biregular
    bool operator==(const Config&) const = default;
};

BuildingGraph build_circ(long t);
BuildingGraph build_lev(long t);
BuildingGraph build_pq(long p, long q);
BuildingGraph build(const GroupSpec& g);

/// Labels of all lines contained in the plane, by coefficient residues mod label_modulus.
std::vector<LineLabel> lines_in_plane(const Lattice2Basis& h, const GroupSpec& g);

Config configuration(const BuildingGraph& g);
std::vector<long> line_degrees(const BuildingGraph& g);
std::vector<long> plane_degrees(const BuildingGraph& g);

/// Plücker point of a residue plane over ℤ_q, first nonzero coordinate scaled to 1.
using PluckerPoint = std::array<long, 6>;
PluckerPoint plucker(const std::array<long, 4>& v, const std::array<long, 4>& w, long q);
bool plucker_relation(const PluckerPoint& x, long q);
/// Form-derived isotropy at form parameter p: p13 + p·p24 ≡ 0 mod q.
bool plucker_isotropic(const PluckerPoint& x, long p, long q);
/// Linear change of coordinates onto the quadric x0x1 + x2x3 + x4² = 0, normalized.
std::array<long, 5> plucker_to_quadric(const PluckerPoint& x, long p, long q);
std::vector<std::array<long, 5>> isotropic_quadric_points(long q);

enum class TetraKind { Vertex, EdgeMid, FaceMid, Centroid };

struct TetraPoint {
    std::array<long, 4> coords;
    TetraKind kind;
};

struct TetraModel {
    std::vector<TetraPoint> points;                 // the 15 points of ℙ³(ℤ₂)
    std::vector<std::array<std::size_t, 3>> lines;  // isotropic lines as point-index triples
};

TetraModel tetrahedron_model();

std::string line_label_text(const LineLabel& l);
std::string plane_label_text(const PlaneLabel& h);

std::string export_dot(const BuildingGraph& g);
std::string export_json(const BuildingGraph& g);
BuildingGraph read_json(const std::string& text);

bool operator==(const BuildingGraph& x, const BuildingGraph& y);

}  // namespace tits
