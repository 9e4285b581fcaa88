#include "troproots/tropical.hpp"

#include "troproots/snf.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace troproots {

TropicalCurve make_curve(Graph model, std::vector<Rational> lengths)
{
    if (static_cast<int>(lengths.size()) != model.num_edges())
        throw std::invalid_argument("one length per edge required");
    for (const Rational& l : lengths)
        if (l <= 0)
            throw std::invalid_argument("edge lengths must be positive");
    return TropicalCurve{std::move(model), std::move(lengths)};
}

CurvePoint CurvePoint::interior(const TropicalCurve& c, EdgeId e, Rational t)
{
    if (e < 0 || e >= c.model.num_edges())
        throw std::invalid_argument("unknown edge id");
    if (t <= 0 || t >= c.length(e))
        throw std::invalid_argument("interior offset out of range");
    return {true, e, t};
}

long long TropicalDivisor::degree() const
{
    long long deg = 0;
    for (const auto& [p, c] : support)
        deg += c;
    return deg;
}

long long TropicalDivisor::coeff(const CurvePoint& p) const
{
    auto it = support.find(p);
    return it == support.end() ? 0 : it->second;
}

void TropicalDivisor::add(const CurvePoint& p, long long c)
{
    if (c == 0)
        return;
    auto [it, inserted] = support.emplace(p, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            support.erase(it);
    }
}

TropicalDivisor TropicalDivisor::operator+(const TropicalDivisor& other) const
{
    TropicalDivisor out = *this;
    for (const auto& [p, c] : other.support)
        out.add(p, c);
    return out;
}

TropicalDivisor TropicalDivisor::operator-(const TropicalDivisor& other) const
{
    TropicalDivisor out = *this;
    for (const auto& [p, c] : other.support)
        out.add(p, -c);
    return out;
}

TropicalDivisor TropicalDivisor::operator*(long long k) const
{
    TropicalDivisor out;
    if (k != 0)
        for (const auto& [p, c] : support)
            out.support[p] = k * c;
    return out;
}

bool RationalFn::is_constant() const
{
    for (const auto& edge : segments)
        for (const auto& seg : edge)
            if (seg.slope != 0)
                return false;
    return true;
}

CommonModel common_model(const TropicalCurve& c, const std::vector<CurvePoint>& points)
{
    // Offsets per edge, sorted.
    std::vector<std::set<Rational>> cuts(c.model.num_edges());
    for (const CurvePoint& p : points)
        if (p.on_edge)
            cuts[p.id].insert(p.offset);

    CommonModel out;
    std::vector<int> weights = c.model.weights();
    std::vector<std::pair<VertexId, VertexId>> ends;
    out.edges_over.resize(c.model.num_edges());

    for (EdgeId e = 0; e < c.model.num_edges(); ++e) {
        VertexId prev = c.model.src(e);
        Rational prev_off(0);
        for (const Rational& t : cuts[e]) {
            VertexId mid = static_cast<VertexId>(weights.size());
            weights.push_back(0);
            out.point_vertex[CurvePoint{true, e, t}] = mid;
            out.edges_over[e].push_back(static_cast<EdgeId>(ends.size()));
            ends.emplace_back(prev, mid);
            out.lengths.push_back(t - prev_off);
            prev = mid;
            prev_off = t;
        }
        out.edges_over[e].push_back(static_cast<EdgeId>(ends.size()));
        ends.emplace_back(prev, c.model.dst(e));
        out.lengths.push_back(c.length(e) - prev_off);
    }
    for (VertexId v = 0; v < c.model.num_vertices(); ++v)
        out.point_vertex[CurvePoint::vertex(v)] = v;
    out.graph = Graph(std::move(weights), std::move(ends), c.model.legs());
    return out;
}

UnitModel unit_laplacian_model(const TropicalCurve& c, const TropicalDivisor& D)
{
    std::vector<CurvePoint> interior;
    for (const auto& [p, coeff] : D.support)
        if (p.on_edge)
            interior.push_back(p);
    CommonModel cm = common_model(c, interior);

    long long scale = 1;
    for (const Rational& l : cm.lengths)
        scale = std::lcm(scale, l.denominator());

    std::vector<int> parts;
    for (const Rational& l : cm.lengths) {
        Rational n = l * scale;
        parts.push_back(static_cast<int>(n.numerator()));
    }
    Refinement unit = refine(cm.graph, parts);

    UnitModel out;
    out.graph = unit.graph;
    out.scale = scale;
    out.divisor.assign(unit.graph.num_vertices(), 0);
    for (const auto& [p, coeff] : D.support)
        out.divisor[cm.point_vertex.at(p)] += coeff;

    out.edges_over.resize(c.model.num_edges());
    for (EdgeId e = 0; e < c.model.num_edges(); ++e)
        for (EdgeId sub : cm.edges_over[e])
            for (EdgeId u : unit.edges_over[sub])
                out.edges_over[e].push_back(u);
    return out;
}

TropicalDivisor divisor_of_fn(const TropicalCurve& c, const RationalFn& f)
{
    if (static_cast<int>(f.segments.size()) != c.model.num_edges())
        throw std::invalid_argument("function model does not match the curve");
    TropicalDivisor D;
    for (EdgeId e = 0; e < c.model.num_edges(); ++e) {
        const auto& segs = f.segments[e];
        if (segs.empty())
            throw std::invalid_argument("edge without segments");
        Rational total(0);
        for (const auto& s : segs)
            total += s.length;
        if (total != c.length(e))
            throw std::invalid_argument("segment lengths do not sum to the edge length");
        // Incoming-slope convention: source gets -s_first, target +s_last,
        // and each internal breakpoint s_i - s_{i+1}.
        D.add(CurvePoint::vertex(c.model.src(e)), -segs.front().slope);
        D.add(CurvePoint::vertex(c.model.dst(e)), segs.back().slope);
        Rational off(0);
        for (size_t i = 0; i + 1 < segs.size(); ++i) {
            off += segs[i].length;
            long long jump = segs[i].slope - segs[i + 1].slope;
            if (jump != 0)
                D.add(CurvePoint::interior(c, e, off), jump);
        }
    }
    return D;
}

PrincipalityResult is_principal(const TropicalCurve& c, const TropicalDivisor& D)
{
    if (D.degree() != 0)
        return {false, std::nullopt};

    UnitModel um = unit_laplacian_model(c, D);
    const Graph& g = um.graph;

    IntMatrix lap(g.num_vertices(), g.num_vertices());
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        if (g.is_loop(e))
            continue;
        VertexId u = g.src(e), v = g.dst(e);
        lap.at(u, u) += 1;
        lap.at(v, v) += 1;
        lap.at(u, v) -= 1;
        lap.at(v, u) -= 1;
    }
    auto potentials = solve_integer(lap, um.divisor);
    if (!potentials)
        return {false, std::nullopt};

    // Slopes on the curve equal the unit-model potential differences.
    RationalFn fn;
    fn.segments.resize(c.model.num_edges());
    Rational unit_len(1, um.scale);
    for (EdgeId e = 0; e < c.model.num_edges(); ++e) {
        for (EdgeId u : um.edges_over[e]) {
            long long slope = (*potentials)[g.dst(u)] - (*potentials)[g.src(u)];
            auto& segs = fn.segments[e];
            if (!segs.empty() && segs.back().slope == slope)
                segs.back().length += unit_len;
            else
                segs.push_back({unit_len, slope});
        }
    }
    if (divisor_of_fn(c, fn) != D)
        throw std::logic_error("principality witness failed verification");
    return {true, std::move(fn)};
}

PrincipalityResult equivalent(const TropicalCurve& c, const TropicalDivisor& D1,
                              const TropicalDivisor& D2)
{
    return is_principal(c, D1 - D2);
}

TropicalDivisor principal_segment_divisor(const TropicalCurve& c, EdgeId e, long long a, int r)
{
    if (r < 2)
        throw std::invalid_argument("r must be at least 2");
    TropicalDivisor D;
    if (a == 0)
        return D;
    D.add(CurvePoint::vertex(c.model.src(e)), -(r - 1) * a);
    D.add(CurvePoint::interior(c, e, c.length(e) / r), r * a);
    D.add(CurvePoint::vertex(c.model.dst(e)), -a);
    return D;
}

TropicalDivisor ramification_divisor_on_curve(const RamificationSequence& R,
                                              const TropicalCurve& c)
{
    if (R.group() != integers())
        throw std::invalid_argument("curve divisors take integer coefficients");
    GraphDivisor D = ramification_divisor(R, c.model);
    TropicalDivisor out;
    for (VertexId v = 0; v < c.model.num_vertices(); ++v)
        out.add(CurvePoint::vertex(v), D.value(v).free_part()[0]);
    return out;
}

} // namespace troproots
