#include "troproots/flows.hpp"

#include <stdexcept>

namespace troproots {

Flow::Flow(CoefficientGroup group, std::vector<GroupElement> edge_values)
    : group_(std::move(group)), values_(std::move(edge_values))
{
    for (const auto& v : values_)
        if (v.group() != group_)
            throw std::invalid_argument("flow value not in the flow's group");
}

Flow Flow::zero(const CoefficientGroup& group, const Graph& g)
{
    return Flow(group, std::vector<GroupElement>(g.num_edges(), GroupElement::zero(group)));
}

Flow Flow::operator+(const Flow& other) const
{
    std::vector<GroupElement> vals;
    vals.reserve(values_.size());
    for (size_t i = 0; i < values_.size(); ++i)
        vals.push_back(values_[i] + other.values_[i]);
    return Flow(group_, std::move(vals));
}

Flow Flow::operator-(const Flow& other) const
{
    std::vector<GroupElement> vals;
    vals.reserve(values_.size());
    for (size_t i = 0; i < values_.size(); ++i)
        vals.push_back(values_[i] - other.values_[i]);
    return Flow(group_, std::move(vals));
}

std::vector<long long> Flow::encode() const
{
    std::vector<long long> out;
    for (const auto& v : values_) {
        auto e = v.encode();
        out.insert(out.end(), e.begin(), e.end());
    }
    return out;
}

GraphDivisor::GraphDivisor(CoefficientGroup group, std::vector<GroupElement> vertex_values)
    : group_(std::move(group)), values_(std::move(vertex_values))
{
    for (const auto& v : values_)
        if (v.group() != group_)
            throw std::invalid_argument("divisor value not in the divisor's group");
}

GraphDivisor GraphDivisor::zero(const CoefficientGroup& group, const Graph& g)
{
    return GraphDivisor(group, std::vector<GroupElement>(g.num_vertices(), GroupElement::zero(group)));
}

GroupElement GraphDivisor::degree() const
{
    GroupElement deg = GroupElement::zero(group_);
    for (const auto& v : values_)
        deg = deg + v;
    return deg;
}

GraphDivisor GraphDivisor::operator+(const GraphDivisor& other) const
{
    std::vector<GroupElement> vals;
    for (size_t i = 0; i < values_.size(); ++i)
        vals.push_back(values_[i] + other.values_[i]);
    return GraphDivisor(group_, std::move(vals));
}

GraphDivisor GraphDivisor::operator-(const GraphDivisor& other) const
{
    std::vector<GroupElement> vals;
    for (size_t i = 0; i < values_.size(); ++i)
        vals.push_back(values_[i] - other.values_[i]);
    return GraphDivisor(group_, std::move(vals));
}

RamificationSequence RamificationSequence::trivial(const CoefficientGroup& group, int n)
{
    RamificationSequence R;
    R.entries.assign(n, GroupElement::zero(group));
    R.ell = GroupElement::zero(group);
    return R;
}

GroupElement RamificationSequence::degree(int genus) const
{
    GroupElement deg = ell * (2 * genus - 2);
    for (const auto& a : entries)
        deg = deg + a;
    return deg;
}

GraphDivisor div_of_flow(const Graph& g, const Flow& f)
{
    GraphDivisor D = GraphDivisor::zero(f.group(), g);
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        D.set_value(g.dst(e), D.value(g.dst(e)) + f.value(e));
        D.set_value(g.src(e), D.value(g.src(e)) - f.value(e));
    }
    return D;
}

namespace {

// Edge ids of a BFS spanning tree.
std::vector<EdgeId> spanning_tree(const Graph& g)
{
    std::vector<bool> seen(g.num_vertices(), false);
    std::vector<EdgeId> tree;
    std::vector<VertexId> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        for (EdgeId e = 0; e < g.num_edges(); ++e) {
            VertexId other = -1;
            if (g.src(e) == v && !seen[g.dst(e)])
                other = g.dst(e);
            else if (g.dst(e) == v && !seen[g.src(e)])
                other = g.src(e);
            if (other >= 0) {
                seen[other] = true;
                tree.push_back(e);
                stack.push_back(other);
            }
        }
    }
    return tree;
}

// Vertices of the component of the tree minus `cut` containing `root`.
std::vector<bool> tree_component(const Graph& g, const std::vector<EdgeId>& tree, EdgeId cut,
                                 VertexId root)
{
    std::vector<bool> in(g.num_vertices(), false);
    in[root] = true;
    std::vector<VertexId> stack{root};
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        for (EdgeId e : tree) {
            if (e == cut)
                continue;
            VertexId other = -1;
            if (g.src(e) == v)
                other = g.dst(e);
            else if (g.dst(e) == v)
                other = g.src(e);
            if (other >= 0 && !in[other]) {
                in[other] = true;
                stack.push_back(other);
            }
        }
    }
    return in;
}

} // namespace

Flow flow_from_divisor(const Graph& g, const GraphDivisor& D)
{
    if (!D.degree().is_zero())
        throw std::invalid_argument("divisor must have degree zero");
    Flow phi = Flow::zero(D.group(), g);
    auto tree = spanning_tree(g);
    for (EdgeId e : tree) {
        auto comp = tree_component(g, tree, e, g.dst(e));
        GroupElement val = GroupElement::zero(D.group());
        for (VertexId v = 0; v < g.num_vertices(); ++v)
            if (comp[v])
                val = val + D.value(v);
        phi.set_value(e, val);
    }
    if (div_of_flow(g, phi) != D)
        throw std::logic_error("spanning-tree flow construction failed its postcondition");
    return phi;
}

std::vector<std::vector<int>> fundamental_cycles(const Graph& g)
{
    auto tree = spanning_tree(g);
    std::vector<bool> in_tree(g.num_edges(), false);
    for (EdgeId e : tree)
        in_tree[e] = true;

    std::vector<std::vector<int>> cycles;
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        if (in_tree[e])
            continue;
        std::vector<int> cycle(g.num_edges(), 0);
        cycle[e] = 1;
        if (!g.is_loop(e)) {
            // Tree path from dst(e) back to src(e): orient each tree edge so
            // the cycle is closed, using the tree-component split.
            for (EdgeId t : tree) {
                auto comp = tree_component(g, tree, t, g.dst(t));
                bool dst_in = comp[g.dst(e)];
                bool src_in = comp[g.src(e)];
                if (dst_in && !src_in)
                    cycle[t] = -1; // path crosses t toward src(t)
                else if (!dst_in && src_in)
                    cycle[t] = 1;
            }
        }
        cycles.push_back(std::move(cycle));
    }
    return cycles;
}

std::vector<Flow> h1_generators(const Graph& g, const CoefficientGroup& group)
{
    (void)group;
    std::vector<Flow> out;
    for (const auto& cycle : fundamental_cycles(g)) {
        Flow f = Flow::zero(integers(), g);
        for (EdgeId e = 0; e < g.num_edges(); ++e)
            f.set_value(e, GroupElement::integer(cycle[e]));
        out.push_back(std::move(f));
    }
    return out;
}

Flow combine_cycles(const Graph& g, const std::vector<std::vector<int>>& cycles,
                    const std::vector<GroupElement>& coefficients)
{
    if (cycles.size() != coefficients.size())
        throw std::invalid_argument("one coefficient per cycle required");
    const CoefficientGroup& group = coefficients.empty() ? integers() : coefficients[0].group();
    Flow f = Flow::zero(group, g);
    for (size_t i = 0; i < cycles.size(); ++i)
        for (EdgeId e = 0; e < g.num_edges(); ++e)
            if (cycles[i][e] != 0)
                f.set_value(e, f.value(e) + coefficients[i] * cycles[i][e]);
    return f;
}

std::vector<Flow> enumerate_flow_fiber(const Graph& g, const GraphDivisor& D)
{
    if (!D.group().is_finite())
        throw std::invalid_argument("fiber enumeration requires a finite group");
    if (!D.degree().is_zero())
        return {};
    Flow base = flow_from_divisor(g, D);
    auto cycles = fundamental_cycles(g);
    if (cycles.empty())
        return {base};
    auto elements = all_elements(D.group());

    std::vector<Flow> out;
    std::vector<size_t> pick(cycles.size(), 0);
    while (true) {
        std::vector<GroupElement> coeffs;
        for (size_t i = 0; i < cycles.size(); ++i)
            coeffs.push_back(elements[pick[i]]);
        out.push_back(base + combine_cycles(g, cycles, coeffs));
        size_t i = 0;
        for (; i < pick.size(); ++i) {
            if (++pick[i] < elements.size())
                break;
            pick[i] = 0;
        }
        if (i == pick.size())
            break;
    }
    return out;
}

Flow pushforward_flow(const Specialization& s, const Flow& f)
{
    std::vector<GroupElement> vals(s.target.num_edges(), GroupElement::zero(f.group()));
    for (EdgeId e = 0; e < s.source.num_edges(); ++e)
        if (s.edge_map[e] >= 0)
            vals[s.edge_map[e]] = f.value(e);
    return Flow(f.group(), std::move(vals));
}

GraphDivisor pushforward_divisor(const Specialization& s, const GraphDivisor& D)
{
    GraphDivisor out = GraphDivisor::zero(D.group(), s.target);
    for (VertexId v = 0; v < s.source.num_vertices(); ++v)
        out.set_value(s.vertex_map[v], out.value(s.vertex_map[v]) + D.value(v));
    return out;
}

namespace {

// Lift across one contraction: values on surviving edges are given; the
// contracted edge value comes from the divisor balance at its source
// vertex (zero for loops).
Flow lift_one(const ContractionStep& step, const Flow& f_target, const GraphDivisor& D_source)
{
    const Graph& g = step.source;
    std::vector<GroupElement> vals(g.num_edges(), GroupElement::zero(f_target.group()));
    for (EdgeId e = 0; e < g.num_edges(); ++e)
        if (step.edge_map[e] >= 0)
            vals[e] = f_target.value(step.edge_map[e]);
    Flow phi(f_target.group(), std::move(vals));
    EdgeId e0 = step.contracted;
    if (!g.is_loop(e0)) {
        VertexId v = g.src(e0);
        GroupElement sum = GroupElement::zero(phi.group());
        for (EdgeId e = 0; e < g.num_edges(); ++e) {
            if (e == e0)
                continue;
            if (g.dst(e) == v)
                sum = sum + phi.value(e);
            if (g.src(e) == v)
                sum = sum - phi.value(e);
        }
        phi.set_value(e0, -D_source.value(v) + sum);
    }
    return phi;
}

} // namespace

Flow lift_flow(const Specialization& s, const Flow& f_target, const GraphDivisor& D)
{
    // Divisors on each intermediate graph along the chain.
    std::vector<GraphDivisor> divisors{D};
    for (const auto& step : s.steps) {
        GraphDivisor next = GraphDivisor::zero(D.group(), step.target);
        for (VertexId v = 0; v < step.source.num_vertices(); ++v)
            next.set_value(step.vertex_map[v],
                           next.value(step.vertex_map[v]) + divisors.back().value(v));
        divisors.push_back(std::move(next));
    }
    if (div_of_flow(s.target, f_target) != divisors.back())
        throw std::invalid_argument("target flow divisor does not match the pushed-forward divisor");

    Flow phi = f_target;
    for (size_t i = s.steps.size(); i-- > 0;)
        phi = lift_one(s.steps[i], phi, divisors[i]);
    if (div_of_flow(s.source, phi) != D)
        throw std::logic_error("flow lift failed its postcondition");
    return phi;
}

GraphDivisor ramification_divisor(const RamificationSequence& R, const Graph& g)
{
    const CoefficientGroup& group = R.group();
    for (const auto& a : R.entries)
        if (a.group() != group)
            throw std::invalid_argument("ramification entries must share one group");
    GraphDivisor D = GraphDivisor::zero(group, g);
    for (VertexId v = 0; v < g.num_vertices(); ++v)
        D.set_value(v, R.ell * (2 * g.weight(v) + g.valence(v) - 2));
    for (const Leg& leg : g.legs())
        D.set_value(leg.vertex, D.value(leg.vertex) + R.entries.at(leg.label - 1));
    return D;
}

Flow act_on_flow(const GraphAutomorphism& aut, const Flow& f)
{
    GraphAutomorphism inv = aut.inverse();
    std::vector<GroupElement> vals;
    vals.reserve(f.num_edges());
    for (EdgeId e = 0; e < f.num_edges(); ++e)
        vals.push_back(f.value_on(inv.apply(Graph::half(e))));
    return Flow(f.group(), std::move(vals));
}

} // namespace troproots
