#include "jpavnf/exact.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <string>
#include <tuple>
#include <utility>

#include "jpavnf/greedy.hpp"
#include "jpavnf/maxflow.hpp"

namespace jpavnf {

namespace {

using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

// Rates and capacity multiplied by the common denominator so the flow
// network is integral and saturation is an exact equality test.
struct ScaledInstance {
    BigInt unit = 1;
    std::vector<BigInt> demand;  // per flow, zero for zero-rate flows
    BigInt capacity;
    BigInt total_demand = 0;
};

ScaledInstance scale_instance(const ProblemInstance& instance) {
    ScaledInstance s;
    s.unit = denominator(instance.capacity.raw());
    for (const Flow& f : instance.flows) s.unit = lcm(s.unit, denominator(f.rate.raw()));
    s.capacity = numerator(instance.capacity.raw()) * (s.unit / denominator(instance.capacity.raw()));
    for (const Flow& f : instance.flows) {
        BigInt d = numerator(f.rate.raw()) * (s.unit / denominator(f.rate.raw()));
        s.total_demand += d;
        s.demand.push_back(std::move(d));
    }
    return s;
}

void check_placement_shape(const ProblemInstance& instance, const PlacementVector& x) {
    if (static_cast<int>(x.size()) != instance.node_count())
        throw ValidationError("placement vector has " + std::to_string(x.size()) +
                              " entries but the instance has " +
                              std::to_string(instance.node_count()) + " nodes");
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] < 0)
            throw ValidationError("negative instance count at node " + instance.graph.labels[i]);
}

template <class Int>
std::optional<std::vector<std::tuple<int, int, Int>>> saturate(
    const ProblemInstance& instance, const std::vector<Int>& demand, const Int& total,
    const std::vector<Int>& node_cap) {
    const int n = instance.node_count();
    const int m = instance.flow_count();
    detail::MaxFlow<Int> net(m + n + 2);
    const int source = m + n;
    const int sink = m + n + 1;
    std::vector<std::vector<std::pair<int, int>>> ids(m);  // per flow: (node, edge id)
    for (int j = 0; j < m; ++j) {
        if (demand[j] == 0) continue;
        net.add_edge(source, j, demand[j]);
        for (int v : instance.flows[j].path)
            ids[j].emplace_back(v, net.add_edge(j, m + v, demand[j]));
    }
    for (int i = 0; i < n; ++i)
        if (node_cap[i] > 0) net.add_edge(m + i, sink, node_cap[i]);
    if (net.run(source, sink) != total) return std::nullopt;
    std::vector<std::tuple<int, int, Int>> out;
    for (int j = 0; j < m; ++j)
        for (const auto& [v, id] : ids[j])
            if (net.flow_on(id) > 0) out.emplace_back(j, v, net.flow_on(id));
    return out;
}

// Node capacities are clamped to the total demand (never changes the
// saturation answer) so the whole network fits in 64-bit arithmetic whenever
// the total demand does.
std::optional<std::vector<std::tuple<int, int, BigInt>>> saturate_scaled(
    const ProblemInstance& instance, const ScaledInstance& s, const PlacementVector& x) {
    const int n = instance.node_count();
    std::vector<BigInt> caps(n);
    for (int i = 0; i < n; ++i) caps[i] = std::min(BigInt(s.capacity * x[i]), s.total_demand);

    if (s.total_demand < (BigInt(1) << 62)) {
        std::vector<std::int64_t> demand64(instance.flow_count());
        std::vector<std::int64_t> caps64(n);
        for (int j = 0; j < instance.flow_count(); ++j)
            demand64[j] = s.demand[j].convert_to<std::int64_t>();
        for (int i = 0; i < n; ++i) caps64[i] = caps[i].convert_to<std::int64_t>();
        auto found =
            saturate<std::int64_t>(instance, demand64, s.total_demand.convert_to<std::int64_t>(),
                                   caps64);
        if (!found) return std::nullopt;
        std::vector<std::tuple<int, int, BigInt>> out;
        for (const auto& [j, v, amt] : *found) out.emplace_back(j, v, BigInt(amt));
        return out;
    }
    return saturate<BigInt>(instance, s.demand, s.total_demand, caps);
}

Solution solution_from_allocation(const ProblemInstance& instance, const ScaledInstance& s,
                                  const PlacementVector& x,
                                  const std::vector<std::tuple<int, int, BigInt>>& alloc) {
    Solution solution;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] > 0) solution.placements[static_cast<int>(i)] = x[i];
    for (const auto& [j, v, amt] : alloc)
        solution.allocations[{instance.flows[j].id, v}] = Rational(BigRational(amt, s.unit));
    return solution;
}

struct Search {
    const ProblemInstance& instance;
    const ScaledInstance& scaled;
    int n = 0;
    std::vector<int> order{};             // undecided nodes, highest passing demand first
    std::vector<std::int64_t> ub{};       // per node
    std::vector<std::uint32_t> mask{};    // per node: positive flows passing it
    std::vector<std::int64_t> need{};     // per flow subset: ceil(d(S)/R)
    std::vector<std::int64_t> assigned{}; // per subset: instances on decided member nodes
    std::vector<std::int64_t> future{};   // per subset: sum of ub over undecided member nodes
    std::vector<std::int64_t> vals{};     // decided counts along the current path

    std::int64_t root_lb = 0;
    std::int64_t incumbent = 0;
    PlacementVector best_x{};  // empty while the warm start is still the best
    std::optional<std::int64_t> budget{};
    std::int64_t explored = 0;
    bool exhausted = false;
    bool done = false;

    // A completion exists iff every flow subset can still reach its needed
    // instance count (exact for this bipartite structure, so a surviving
    // leaf is feasible by construction; the max-flow check below stays as
    // the authority).
    void dfs(std::size_t t, std::int64_t s) {
        const std::size_t nsub = need.size();
        std::int64_t worst_deficit = 0;
        for (std::size_t S = 1; S < nsub; ++S) {
            if (assigned[S] + future[S] < need[S]) return;
            worst_deficit = std::max(worst_deficit, need[S] - assigned[S]);
        }
        if (s + worst_deficit >= incumbent) return;
        if (t == order.size()) {
            PlacementVector x(n, 0);
            for (std::size_t u = 0; u < order.size(); ++u) x[order[u]] = vals[u];
            if (!saturate_scaled(instance, scaled, x)) return;
            incumbent = s;
            best_x = std::move(x);
            if (incumbent == root_lb) done = true;
            return;
        }
        const int k = order[t];
        // Counts beyond the worst remaining deficit of any subset through k
        // can always be lowered without losing feasibility.
        std::int64_t eff = 0;
        for (std::size_t S = 1; S < nsub; ++S)
            if (S & mask[k]) eff = std::max(eff, need[S] - assigned[S]);
        eff = std::min(eff, ub[k]);
        for (std::int64_t v = eff; v >= 0; --v) {
            if (budget && explored >= *budget) {
                exhausted = true;
                return;
            }
            ++explored;
            vals[t] = v;
            for (std::size_t S = 1; S < nsub; ++S)
                if (S & mask[k]) {
                    assigned[S] += v;
                    future[S] -= ub[k];
                }
            dfs(t + 1, s + v);
            for (std::size_t S = 1; S < nsub; ++S)
                if (S & mask[k]) {
                    assigned[S] -= v;
                    future[S] += ub[k];
                }
            if (exhausted || done) return;
        }
    }
};

}  // namespace

bool allocation_feasible(const ProblemInstance& instance, const PlacementVector& x) {
    check_placement_shape(instance, x);
    ScaledInstance s = scale_instance(instance);
    return saturate_scaled(instance, s, x).has_value();
}

Solution extract_allocation(const ProblemInstance& instance, const PlacementVector& x) {
    check_placement_shape(instance, x);
    ScaledInstance s = scale_instance(instance);
    auto alloc = saturate_scaled(instance, s, x);
    if (!alloc) throw Error("placement vector admits no feasible allocation");
    return solution_from_allocation(instance, s, x, *alloc);
}

ExactResult solve_exact(const ProblemInstance& instance,
                        std::optional<std::int64_t> node_budget) {
    const int n = instance.node_count();
    const int m = instance.flow_count();

    std::vector<int> positive;
    for (int j = 0; j < m; ++j)
        if (!instance.flows[j].rate.is_zero()) positive.push_back(j);
    const int mp = static_cast<int>(positive.size());

    ExactResult result;
    if (mp == 0) return result;
    if (mp > 20)
        throw ValidationError("exact solver handles at most 20 positive-rate flows, got " +
                              std::to_string(mp));

    GreedyResult fng = solve_fng(instance);
    GreedyResult frg = solve_frg(instance);
    const std::int64_t fng_total = total_instances(fng.solution);
    const std::int64_t frg_total = total_instances(frg.solution);

    const ScaledInstance scaled = scale_instance(instance);
    Search search{.instance = instance, .scaled = scaled, .n = n};
    search.incumbent = std::min(fng_total, frg_total);
    search.root_lb = demand_lower_bound(instance);
    search.budget = node_budget;
    Solution warm = fng_total <= frg_total ? std::move(fng.solution) : std::move(frg.solution);

    result.optimum = search.incumbent;
    result.solution = warm;
    if (search.incumbent == search.root_lb) return result;

    search.mask.assign(n, 0);
    std::vector<Rational> passing(n);
    for (int jj = 0; jj < mp; ++jj) {
        const Flow& f = instance.flows[positive[jj]];
        for (int v : f.path) {
            search.mask[v] |= std::uint32_t(1) << jj;
            passing[v] += f.rate;
        }
    }
    search.ub.assign(n, 0);
    for (int i = 0; i < n; ++i)
        if (search.mask[i]) search.ub[i] = ceil_div(passing[i], instance.capacity);
    for (int i = 0; i < n; ++i)
        if (search.mask[i]) search.order.push_back(i);
    std::sort(search.order.begin(), search.order.end(), [&](int a, int b) {
        if (passing[a] != passing[b]) return passing[b] < passing[a];
        return a < b;
    });
    search.vals.assign(search.order.size(), 0);

    const std::size_t nsub = std::size_t(1) << mp;
    search.need.assign(nsub, 0);
    {
        std::vector<Rational> subset_demand(nsub);
        for (std::size_t S = 1; S < nsub; ++S) {
            const int low = std::countr_zero(S);
            subset_demand[S] =
                subset_demand[S & (S - 1)] + instance.flows[positive[low]].rate;
            search.need[S] = ceil_div(subset_demand[S], instance.capacity);
        }
    }
    search.assigned.assign(nsub, 0);
    search.future.assign(nsub, 0);
    for (int k : search.order)
        for (std::size_t S = 1; S < nsub; ++S)
            if (S & search.mask[k]) search.future[S] += search.ub[k];

    search.dfs(0, 0);

    result.nodes_explored = search.explored;
    result.proven_optimal = !search.exhausted;
    result.optimum = search.incumbent;
    if (!search.best_x.empty())
        result.solution = extract_allocation(instance, search.best_x);
    else
        result.solution = std::move(warm);
    return result;
}

ExactCap exact_solver_cap() {
    ExactCap cap;
    const char* env = std::getenv("JPAVNF_EXACT_CAP");
    if (!env || !*env) return cap;
    std::string text(env);
    try {
        std::size_t used = 0;
        cap.max_nodes = std::stoi(text, &used);
        if (used < text.size()) {
            if (text[used] != ',') throw ValidationError("");
            std::size_t used2 = 0;
            cap.max_flows = std::stoi(text.substr(used + 1), &used2);
            if (used + 1 + used2 != text.size()) throw ValidationError("");
        }
    } catch (const std::exception&) {
        throw ValidationError("JPAVNF_EXACT_CAP must be \"N\" or \"N,M\", got \"" + text + "\"");
    }
    if (cap.max_nodes < 1 || cap.max_flows < 1)
        throw ValidationError("JPAVNF_EXACT_CAP values must be positive");
    return cap;
}

}  // namespace jpavnf
