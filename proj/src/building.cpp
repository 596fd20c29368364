#include "tits/building.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace tits {

namespace {

using json = nlohmann::json;

std::array<long, 4> residues(const Vec4& v, long m) {
    return {mod_long(v[0], m), mod_long(v[1], m), mod_long(v[2], m), mod_long(v[3], m)};
}

long inv_mod(long a, long q) {
    a = ((a % q) + q) % q;
    for (long x = 1; x < q; ++x)
        if (a * x % q == 1) return x;
    throw DomainError("inv_mod: not invertible");
}

template <std::size_t N>
std::array<long, N> normalize_projective(std::array<long, N> x, long q) {
    for (auto& c : x) c = ((c % q) + q) % q;
    auto it = std::find_if(x.begin(), x.end(), [](long c) { return c != 0; });
    if (it == x.end()) throw DomainError("projective normalization of the zero vector");
    long s = inv_mod(*it, q);
    for (auto& c : x) c = c * s % q;
    return x;
}

void finish(BuildingGraph& gr) {
    std::vector<std::size_t> lo(gr.lines.size()), po(gr.planes.size());
    std::iota(lo.begin(), lo.end(), 0);
    std::iota(po.begin(), po.end(), 0);
    std::sort(lo.begin(), lo.end(),
              [&](auto i, auto j) { return gr.lines[i].label < gr.lines[j].label; });
    std::sort(po.begin(), po.end(),
              [&](auto i, auto j) { return gr.planes[i].label < gr.planes[j].label; });
    std::vector<LineVertex> lines;
    std::vector<PlaneVertex> planes;
    for (auto i : lo) lines.push_back(gr.lines[i]);
    for (auto j : po) planes.push_back(gr.planes[j]);
    gr.lines = std::move(lines);
    gr.planes = std::move(planes);
    std::map<LineLabel, std::size_t> index;
    for (std::size_t i = 0; i < gr.lines.size(); ++i)
        if (!index.emplace(gr.lines[i].label, i).second)
            throw std::logic_error("duplicate line vertex");
    std::set<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t j = 0; j < gr.planes.size(); ++j)
        for (const auto& l : lines_in_plane(gr.planes[j].rep, gr.group)) {
            auto it = index.find(l);
            if (it == index.end())
                throw std::logic_error("plane contains a line outside the vertex set: " +
                                       line_label_text(l));
            edges.emplace(it->second, j);
        }
    gr.edges.assign(edges.begin(), edges.end());
}

}  // namespace

std::vector<LineLabel> lines_in_plane(const Lattice2Basis& h, const GroupSpec& g) {
    const long m = label_modulus(g);
    auto b1 = residues(h.b1, m), b2 = residues(h.b2, m);
    std::set<LineLabel> out;
    for (long a = 0; a < m; ++a)
        for (long b = 0; b < m; ++b) {
            if (std::gcd(std::gcd(a, b), m) != 1) continue;
            std::array<long, 4> x;
            for (int i = 0; i < 4; ++i) x[i] = (a * b1[i] + b * b2[i]) % m;
            out.insert(line_label_mod(x, g));
        }
    return {out.begin(), out.end()};
}

BuildingGraph build_circ(long t) {
    BuildingGraph gr;
    gr.group = GroupSpec::circ(t);
    for (long r : divisors(t)) gr.lines.push_back({CircLine{r}, vec(r, 1, 0, 0)});
    gr.planes.push_back({CircPlane{}, hnf_rank2(vec(1, 0, 0, 0), vec(0, 1, 0, 0))});
    finish(gr);
    return gr;
}

BuildingGraph build_lev(long t) {
    BuildingGraph gr;
    gr.group = GroupSpec::lev(t);
    for (long r : divisors(t))
        for (const auto& cls : enumerate_M(r)) {
            LineLabel l = LevLine{r, cls};
            gr.lines.push_back({l, line_representative(l, gr.group)});
        }
    for (const auto& cls : enumerate_O(t)) {
        auto [w2, w4] = coprime_lift(Int(cls.a), Int(cls.b), Int(t));
        Lattice2Basis h = hnf_rank2(vec(1, 0, 0, 0), {Int(0), w2, Int(0), w4});
        PlaneLabel lab = plane_label(h, gr.group);
        if (lab != PlaneLabel{LevPlane{cls}}) throw std::logic_error("build_lev: plane label mismatch");
        gr.planes.push_back({lab, h});
    }
    finish(gr);
    return gr;
}

BuildingGraph build_pq(long p, long q) {
    BuildingGraph gr;
    gr.group = GroupSpec::pq(p, q);
    const auto alpha = circ_alphabet(p);
    {
        std::map<LineLabel, Vec4> seen;
        std::vector<Vec4> queue;
        for (const Vec4& s : {vec(1, 0, 0, 0), vec(0, 1, 0, 0)}) {
            seen.emplace(line_label(s, gr.group), s);
            queue.push_back(s);
        }
        for (std::size_t i = 0; i < queue.size(); ++i)
            for (const auto& g : alpha) {
                Vec4 y = g.apply(queue[i]);
                if (seen.emplace(line_label(y, gr.group), y).second) queue.push_back(y);
            }
        for (const auto& [lab, v] : seen) gr.lines.push_back({lab, line_representative(lab, gr.group)});
    }
    {
        std::map<PlaneLabel, Lattice2Basis> seen;
        std::vector<Lattice2Basis> queue{hnf_rank2(vec(1, 0, 0, 0), vec(0, 1, 0, 0))};
        seen.emplace(plane_label(queue[0], gr.group), queue[0]);
        for (std::size_t i = 0; i < queue.size(); ++i)
            for (const auto& g : alpha) {
                Lattice2Basis h = hnf_rank2(g.apply(queue[i].b1), g.apply(queue[i].b2));
                if (seen.emplace(plane_label(h, gr.group), h).second) queue.push_back(h);
            }
        for (const auto& [lab, h] : seen) gr.planes.push_back({lab, h});
    }
    finish(gr);
    return gr;
}

BuildingGraph build(const GroupSpec& g) {
    switch (g.family) {
        case Family::Circ: return build_circ(g.t);
        case Family::Lev: return build_lev(g.t);
        case Family::PQ: return build_pq(g.p, g.q);
        case Family::LevN: break;
    }
    throw UsageError("build: no building for " + g.name());
}

std::vector<long> line_degrees(const BuildingGraph& g) {
    std::vector<long> d(g.lines.size(), 0);
    for (auto [l, p] : g.edges) ++d[l];
    return d;
}

std::vector<long> plane_degrees(const BuildingGraph& g) {
    std::vector<long> d(g.planes.size(), 0);
    for (auto [l, p] : g.edges) ++d[p];
    return d;
}

Config configuration(const BuildingGraph& g) {
    Config c;
    c.a = static_cast<long>(g.lines.size());
    c.c = static_cast<long>(g.planes.size());
    auto uniform = [](const std::vector<long>& d) -> std::optional<long> {
        if (d.empty() || std::any_of(d.begin(), d.end(), [&](long x) { return x != d[0]; }))
            return std::nullopt;
        return d[0];
    };
    c.b = uniform(line_degrees(g));
    c.d = uniform(plane_degrees(g));
    const long e = static_cast<long>(g.edges.size());
    if (c.b && c.a * *c.b != e) throw std::logic_error("configuration: a*b != |edges|");
    if (c.d && c.c * *c.d != e) throw std::logic_error("configuration: c*d != |edges|");
    return c;
}

PluckerPoint plucker(const std::array<long, 4>& v, const std::array<long, 4>& w, long q) {
    static constexpr int I[6] = {0, 0, 0, 1, 1, 2}, J[6] = {1, 2, 3, 2, 3, 3};
    PluckerPoint x;
    for (int k = 0; k < 6; ++k) x[k] = v[I[k]] * w[J[k]] - v[J[k]] * w[I[k]];
    try {
        return normalize_projective(x, q);
    } catch (const DomainError&) {
        throw DomainError("plucker: residue vectors have rank < 2");
    }
}

bool plucker_relation(const PluckerPoint& x, long q) {
    return mod_long(x[0] * x[5] - x[1] * x[4] + x[2] * x[3], q) == 0;
}

bool plucker_isotropic(const PluckerPoint& x, long p, long q) { return (x[1] + p * x[4]) % q == 0; }

std::array<long, 5> plucker_to_quadric(const PluckerPoint& x, long p, long q) {
    if (p % q == 0) throw DomainError("plucker_to_quadric: needs q != p");
    const long u = inv_mod(p, q);  // p⁻¹(x₀x₅ + x₂x₃) + x₄² on the isotropic locus
    return normalize_projective(std::array<long, 5>{u * x[0], x[5], u * x[2], x[3], x[4]}, q);
}

std::vector<std::array<long, 5>> isotropic_quadric_points(long q) {
    if (!is_prime(q)) throw DomainError("isotropic_quadric_points: q must be prime");
    std::vector<std::array<long, 5>> out;
    std::array<long, 5> x{};
    long total = 1;
    for (int i = 0; i < 5; ++i) total *= q;
    for (long code = 1; code < total; ++code) {
        long c = code;
        for (int i = 4; i >= 0; --i) {
            x[i] = c % q;
            c /= q;
        }
        auto first = std::find_if(x.begin(), x.end(), [](long v) { return v != 0; });
        if (*first != 1) continue;
        if ((x[0] * x[1] + x[2] * x[3] + x[4] * x[4]) % q == 0) out.push_back(x);
    }
    return out;
}

TetraModel tetrahedron_model() {
    TetraModel m;
    for (int weight = 1; weight <= 4; ++weight)
        for (int code = 15; code >= 1; --code) {
            std::array<long, 4> x{(code >> 3) & 1, (code >> 2) & 1, (code >> 1) & 1, code & 1};
            if (x[0] + x[1] + x[2] + x[3] != weight) continue;
            m.points.push_back({x, static_cast<TetraKind>(weight - 1)});
        }
    auto index_of = [&](const std::array<long, 4>& x) {
        for (std::size_t i = 0; i < m.points.size(); ++i)
            if (m.points[i].coords == x) return i;
        throw std::logic_error("tetrahedron: missing point");
    };
    std::set<std::array<std::size_t, 3>> lines;
    for (std::size_t i = 0; i < m.points.size(); ++i)
        for (std::size_t j = i + 1; j < m.points.size(); ++j) {
            const auto& x = m.points[i].coords;
            const auto& y = m.points[j].coords;
            if ((x[0] * y[2] + x[2] * y[0] + x[1] * y[3] + x[3] * y[1]) % 2 != 0) continue;
            std::array<long, 4> z;
            for (int k = 0; k < 4; ++k) z[k] = (x[k] + y[k]) % 2;
            std::array<std::size_t, 3> tri{i, j, index_of(z)};
            std::sort(tri.begin(), tri.end());
            lines.insert(tri);
        }
    m.lines.assign(lines.begin(), lines.end());
    return m;
}

namespace {

template <std::size_t N>
std::string tuple_text(const std::array<long, N>& x) {
    std::string s = "(";
    for (std::size_t i = 0; i < N; ++i) s += (i ? "," : "") + std::to_string(x[i]);
    return s + ")";
}

}  // namespace

std::string line_label_text(const LineLabel& l) {
    if (const auto* c = std::get_if<CircLine>(&l)) return "ℓ[" + std::to_string(c->r) + "]";
    if (const auto* v = std::get_if<LevLine>(&l))
        return "ℓ[" + std::to_string(v->r) + ";(" + std::to_string(v->cls.a) + "," +
               std::to_string(v->cls.b) + ")]";
    const auto& k = std::get<PQLine>(l);
    std::string s = "ℓ[" + tuple_text(k.res) + (k.is_long ? ";long" : ";short");
    if (k.has_refine) s += ";" + tuple_text(k.refine);
    return s + "]";
}

std::string plane_label_text(const PlaneLabel& h) {
    if (std::holds_alternative<CircPlane>(h)) return "h[]";
    if (const auto* v = std::get_if<LevPlane>(&h))
        return "h[(" + std::to_string(v->cls.a) + "," + std::to_string(v->cls.b) + ")]";
    const auto& k = std::get<PQPlane>(h);
    std::string s = "h[" + tuple_text(k.plk);
    if (k.has_long) s += ";" + tuple_text(k.long_plk);
    return s + "]";
}

std::string export_dot(const BuildingGraph& g) {
    std::ostringstream os;
    os << "graph tits {\n";
    os << "  graph [label=\"" << g.group.name() << "\"];\n";
    for (std::size_t i = 0; i < g.lines.size(); ++i)
        os << "  L" << i << " [shape=circle,label=\"" << line_label_text(g.lines[i].label)
           << "\"];\n";
    for (std::size_t j = 0; j < g.planes.size(); ++j)
        os << "  P" << j << " [shape=box,label=\"" << plane_label_text(g.planes[j].label)
           << "\"];\n";
    for (auto [l, p] : g.edges) os << "  L" << l << " -- P" << p << ";\n";
    os << "}\n";
    return os.str();
}

namespace {

json int_json(const Int& x) {
    if (fits_long(x)) return x.get_si();
    return x.get_str();
}

Int json_int(const json& j) {
    if (j.is_string()) return Int(j.get<std::string>());
    return Int(j.get<long>());
}

json vec_json(const Vec4& v) { return json::array({int_json(v[0]), int_json(v[1]), int_json(v[2]), int_json(v[3])}); }

Vec4 json_vec(const json& j) {
    if (!j.is_array() || j.size() != 4) throw DomainError("json: expected a 4-vector");
    return {json_int(j[0]), json_int(j[1]), json_int(j[2]), json_int(j[3])};
}

json group_json(const GroupSpec& g) {
    switch (g.family) {
        case Family::Circ: return {{"family", "GammaCirc"}, {"t", g.t}};
        case Family::Lev: return {{"family", "GammaLev"}, {"t", g.t}};
        case Family::PQ: return {{"family", "GammaPQ"}, {"p", g.p}, {"q", g.q}};
        case Family::LevN: return {{"family", "GammaLevN"}, {"t", g.t}, {"n", g.n}};
    }
    return {};
}

GroupSpec json_group(const json& j) {
    const std::string f = j.at("family").get<std::string>();
    if (f == "GammaCirc") return GroupSpec::circ(j.at("t").get<long>());
    if (f == "GammaLev") return GroupSpec::lev(j.at("t").get<long>());
    if (f == "GammaPQ") return GroupSpec::pq(j.at("p").get<long>(), j.at("q").get<long>());
    throw DomainError("json: unknown family " + f);
}

json line_label_json(const LineLabel& l) {
    if (const auto* c = std::get_if<CircLine>(&l)) return {{"kind", "circ"}, {"r", c->r}};
    if (const auto* v = std::get_if<LevLine>(&l))
        return {{"kind", "lev"}, {"r", v->r}, {"class", {v->cls.a, v->cls.b}}};
    const auto& k = std::get<PQLine>(l);
    json j = {{"kind", "pq"}, {"res", k.res}, {"length", k.is_long ? "long" : "short"}};
    j["refine"] = k.has_refine ? json(k.refine) : json(nullptr);
    return j;
}

LineLabel json_line_label(const json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "circ") return CircLine{j.at("r").get<long>()};
    if (kind == "lev") {
        long r = j.at("r").get<long>();
        return LevLine{r, ResidueClassM{r, j.at("class")[0].get<long>(), j.at("class")[1].get<long>()}};
    }
    PQLine k;
    k.res = j.at("res").get<std::array<long, 4>>();
    k.is_long = j.at("length").get<std::string>() == "long";
    k.has_refine = !j.at("refine").is_null();
    if (k.has_refine) k.refine = j.at("refine").get<std::array<long, 2>>();
    return k;
}

json plane_label_json(const PlaneLabel& h) {
    if (std::holds_alternative<CircPlane>(h)) return {{"kind", "circ"}};
    if (const auto* v = std::get_if<LevPlane>(&h))
        return {{"kind", "lev"}, {"class", {v->cls.a, v->cls.b}}};
    const auto& k = std::get<PQPlane>(h);
    json j = {{"kind", "pq"}, {"plucker", k.plk}};
    j["long_plucker"] = k.has_long ? json(k.long_plk) : json(nullptr);
    return j;
}

PlaneLabel json_plane_label(const json& j, const GroupSpec& g) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "circ") return CircPlane{};
    if (kind == "lev")
        return LevPlane{ResidueClassO{g.t, j.at("class")[0].get<long>(), j.at("class")[1].get<long>()}};
    PQPlane k;
    k.plk = j.at("plucker").get<std::array<long, 6>>();
    k.has_long = !j.at("long_plucker").is_null();
    if (k.has_long) k.long_plk = j.at("long_plucker").get<std::array<long, 6>>();
    return k;
}

}  // namespace

std::string export_json(const BuildingGraph& g) {
    json j;
    j["group"] = group_json(g.group);
    j["lines"] = json::array();
    for (std::size_t i = 0; i < g.lines.size(); ++i)
        j["lines"].push_back({{"id", i}, {"label", line_label_json(g.lines[i].label)},
                              {"rep", vec_json(g.lines[i].rep)}});
    j["planes"] = json::array();
    for (std::size_t k = 0; k < g.planes.size(); ++k)
        j["planes"].push_back({{"id", k},
                               {"label", plane_label_json(g.planes[k].label)},
                               {"rep", {vec_json(g.planes[k].rep.b1), vec_json(g.planes[k].rep.b2)}}});
    j["edges"] = json::array();
    for (auto [l, p] : g.edges) j["edges"].push_back({l, p});
    Config c = configuration(g);
    j["config"] = {{"a", c.a}, {"c", c.c}};
    j["config"]["b"] = c.b ? json(*c.b) : json(nullptr);
    j["config"]["d"] = c.d ? json(*c.d) : json(nullptr);
    return j.dump(2) + "\n";
}

BuildingGraph read_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw DomainError(std::string("json: ") + e.what());
    }
    BuildingGraph g;
    g.group = json_group(j.at("group"));
    for (const auto& l : j.at("lines"))
        g.lines.push_back({json_line_label(l.at("label")), json_vec(l.at("rep"))});
    for (const auto& p : j.at("planes"))
        g.planes.push_back({json_plane_label(p.at("label"), g.group),
                            Lattice2Basis{json_vec(p.at("rep")[0]), json_vec(p.at("rep")[1])}});
    for (const auto& e : j.at("edges"))
        g.edges.emplace_back(e[0].get<std::size_t>(), e[1].get<std::size_t>());
    return g;
}

bool operator==(const BuildingGraph& x, const BuildingGraph& y) {
    if (!(x.group == y.group) || x.edges != y.edges || x.lines.size() != y.lines.size() ||
        x.planes.size() != y.planes.size())
        return false;
    for (std::size_t i = 0; i < x.lines.size(); ++i)
        if (x.lines[i].label != y.lines[i].label || x.lines[i].rep != y.lines[i].rep) return false;
    for (std::size_t i = 0; i < x.planes.size(); ++i)
        if (x.planes[i].label != y.planes[i].label || !(x.planes[i].rep == y.planes[i].rep))
            return false;
    return true;
}

}  // namespace tits
