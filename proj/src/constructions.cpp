#include "nssd/constructions.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace nssd {

namespace {

void require_disjoint_nonempty(std::span<const GroupElement> u, std::span<const GroupElement> v) {
    if (u.empty() || v.empty())
        throw std::invalid_argument("construction: U and V must be non-empty");
    std::set<GroupElement> su(u.begin(), u.end());
    for (GroupElement x : v)
        if (su.count(x)) throw std::invalid_argument("construction: U and V overlap");
}

std::vector<GroupElement> joined(std::span<const GroupElement> u, std::span<const GroupElement> v) {
    std::vector<GroupElement> t(u.begin(), u.end());
    t.insert(t.end(), v.begin(), v.end());
    return t;
}

}  // namespace

ConstructionResult pendant_union(const HvGroupCtx& ctx, std::span<const GroupElement> u,
                                 std::span<const GroupElement> v) {
    require_disjoint_nonempty(u, v);
    ConstructionResult res;
    res.graph = commuting_graph(ctx, joined(u, v));
    res.certificate = is_nssd(res.graph);

    Graph gv = commuting_graph(ctx, v);
    bool v_empty = max_degree(gv) == 0;
    res.report.push_back({"v_graph_empty", v_empty,
                          v_empty ? "C(V) has no edges" : "C(V) has an edge"});

    bool sizes = u.size() == v.size();
    res.report.push_back({"equal_sizes", sizes,
                          "|U|=" + std::to_string(u.size()) + " |V|=" + std::to_string(v.size())});

    bool unique_partner = true;
    std::vector<GroupElement> partner;
    for (GroupElement y : v) {
        std::vector<GroupElement> hits;
        for (GroupElement x : u)
            if (commutes(x, y, ctx)) hits.push_back(x);
        if (hits.size() != 1) {
            unique_partner = false;
            res.report.push_back({"unique_partner", false,
                                  format_element(y) + " commutes with " +
                                      std::to_string(hits.size()) + " elements of U"});
            break;
        }
        partner.push_back(hits.front());
    }
    if (unique_partner)
        res.report.push_back({"unique_partner", true, "each v meets exactly one u"});

    bool matching = false;
    if (unique_partner) {
        auto sorted = partner;
        std::sort(sorted.begin(), sorted.end());
        matching = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
    }
    res.report.push_back({"partner_matching", matching,
                          matching ? "pendant assignment is a perfect matching"
                                   : "two pendants share an attachment vertex"});

    res.paper_preconditions_met = v_empty && sizes && unique_partner;
    res.preconditions_met = res.paper_preconditions_met && matching;
    return res;
}

ConstructionResult bridge_join(const HvGroupCtx& ctx, std::span<const GroupElement> u,
                               std::span<const GroupElement> v) {
    require_disjoint_nonempty(u, v);
    ConstructionResult res;
    res.graph = commuting_graph(ctx, joined(u, v));
    res.certificate = is_nssd(res.graph);

    bool u_nssd = is_nssd(commuting_graph(ctx, u)).verdict;
    res.report.push_back({"u_graph_nssd", u_nssd, u_nssd ? "C(U) is NSSD" : "C(U) is not NSSD"});
    bool v_nssd = is_nssd(commuting_graph(ctx, v)).verdict;
    res.report.push_back({"v_graph_nssd", v_nssd, v_nssd ? "C(V) is NSSD" : "C(V) is not NSSD"});

    std::vector<std::pair<GroupElement, GroupElement>> cross;
    for (GroupElement x : u)
        for (GroupElement y : v)
            if (commutes(x, y, ctx)) cross.emplace_back(x, y);
    std::string pairs;
    for (auto& [x, y] : cross) {
        if (!pairs.empty()) pairs += ", ";
        pairs += format_element(x) + " ~ " + format_element(y);
    }
    bool single = cross.size() == 1;
    res.report.push_back({"single_cross_pair", single,
                          std::to_string(cross.size()) + " cross-commuting pair(s)" +
                              (pairs.empty() ? "" : ": " + pairs)});

    res.paper_preconditions_met = u_nssd && v_nssd && single;
    res.preconditions_met = res.paper_preconditions_met;
    return res;
}

PendantNullityResult pendant_nullity(const Graph& g) {
    std::vector<int> alive(g.order());
    for (int v = 0; v < g.order(); ++v) alive[v] = v;

    auto deg_in = [&](int v) {
        int d = 0;
        for (int u : alive)
            if (g.adjacent(v, u)) ++d;
        return d;
    };
    // remove a pendant vertex together with its neighbor while one exists
    for (;;) {
        int pend = -1, nb = -1;
        for (int v : alive)
            if (deg_in(v) == 1) {
                pend = v;
                break;
            }
        if (pend < 0) break;
        for (int u : alive)
            if (g.adjacent(pend, u)) {
                nb = u;
                break;
            }
        std::erase(alive, pend);
        std::erase(alive, nb);
    }

    PendantNullityResult out;
    bool edgeless = true;
    for (std::size_t i = 0; i < alive.size() && edgeless; ++i)
        for (std::size_t j = i + 1; j < alive.size(); ++j)
            if (g.adjacent(alive[i], alive[j])) {
                edgeless = false;
                break;
            }
    if (edgeless) {
        out.nullity = static_cast<int>(alive.size());  // isolated vertices only
        out.fully_reduced = true;
        return out;
    }
    IntMatrix a(static_cast<int>(alive.size()));
    for (std::size_t i = 0; i < alive.size(); ++i)
        for (std::size_t j = 0; j < alive.size(); ++j)
            a.at(static_cast<int>(i), static_cast<int>(j)) = g.adjacency(alive[i], alive[j]);
    out.nullity = nullity(a);
    out.fully_reduced = false;
    return out;
}

Graph join_with_edge(const Graph& g1, int u, const Graph& g2, int v) {
    if (u < 0 || u >= g1.order() || v < 0 || v >= g2.order())
        throw std::out_of_range("join_with_edge: vertex reference out of range");
    const int n1 = g1.order(), n2 = g2.order();
    std::vector<std::vector<int>> adj(n1 + n2, std::vector<int>(n1 + n2, 0));
    for (int i = 0; i < n1; ++i)
        for (int j = 0; j < n1; ++j) adj[i][j] = g1.adjacency(i, j);
    for (int i = 0; i < n2; ++i)
        for (int j = 0; j < n2; ++j) adj[n1 + i][n1 + j] = g2.adjacency(i, j);
    adj[u][n1 + v] = adj[n1 + v][u] = 1;
    std::vector<GroupElement> labels;
    if (g1.has_labels() && g2.has_labels()) {
        labels = g1.labels();
        labels.insert(labels.end(), g2.labels().begin(), g2.labels().end());
    }
    return Graph(adj, std::move(labels));
}

namespace {

// char poly of g - w; a 1-vertex g leaves the empty graph, whose polynomial is 1
IntPolynomial charpoly_minus(const Graph& g, int w) {
    if (g.order() == 1) return IntPolynomial({BigInt(1)});
    return char_poly(delete_vertex(g, w).adjacency_matrix());
}

}  // namespace

bool bridge_charpoly_identity(const Graph& g1, int u, const Graph& g2, int v) {
    Graph bridged = join_with_edge(g1, u, g2, v);
    IntPolynomial lhs = char_poly(bridged.adjacency_matrix());
    IntPolynomial p1 = char_poly(g1.adjacency_matrix());
    IntPolynomial p2 = char_poly(g2.adjacency_matrix());
    IntPolynomial rhs = poly_sub(poly_mul(p1, p2),
                                 poly_mul(charpoly_minus(g1, u), charpoly_minus(g2, v)));
    return lhs == rhs;
}

}  // namespace nssd
