#include "oujordan/basis_dag.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "oujordan/error.hpp"

namespace oujordan {

int height(const MultiIndex& v) {
    return v[1] + 2 * v[2];
}

std::size_t BasisDag::vertex_index(const MultiIndex& v) const {
    const auto it = std::find(vertices.begin(), vertices.end(), v);
    if (it == vertices.end())
        throw Error(ErrorCode::VertexNotFound, "vertex is not in the graph");
    return static_cast<std::size_t>(it - vertices.begin());
}

BasisDag build_dag(int n) {
    if (n < 0) throw Error(ErrorCode::BadIndex, "negative level");
    BasisDag dag;
    dag.n = n;
    dag.vertices = indices_of_degree(3, n);

    std::map<MultiIndex, std::size_t, CanonicalLess> position;
    for (std::size_t p = 0; p < dag.vertices.size(); ++p) position.emplace(dag.vertices[p], p);

    for (std::size_t p = 0; p < dag.vertices.size(); ++p) {
        const MultiIndex& v = dag.vertices[p];
        const int i = v[0], j = v[1], k = v[2];
        if (i > 0)
            dag.edges.push_back({p, position.at(MultiIndex{i - 1, j + 1, k}), -static_cast<long>(i)});
        if (j > 0)
            dag.edges.push_back({p, position.at(MultiIndex{i, j - 1, k + 1}), -static_cast<long>(j)});
    }
    return dag;
}

std::optional<int> distance(const BasisDag& dag, const MultiIndex& from, const MultiIndex& to) {
    const std::size_t src = dag.vertex_index(from);
    const std::size_t dst = dag.vertex_index(to);
    if (src == dst) return 0;

    // Edges only go forward in the vertex order, so one sweep suffices.
    std::vector<char> reachable(dag.vertices.size(), 0);
    reachable[src] = 1;
    for (const DagEdge& e : dag.edges)
        if (reachable[e.from]) reachable[e.to] = 1;
    if (!reachable[dst]) return std::nullopt;
    return height(to) - height(from);
}

bool symmetry_check(const BasisDag& dag) {
    for (const MultiIndex& v : dag.vertices) {
        const MultiIndex mirrored{v[2], v[1], v[0]};
        try {
            dag.vertex_index(mirrored);
        } catch (const Error&) {
            return false;
        }
        if (height(v) + height(mirrored) != 2 * dag.n) return false;
    }
    return true;
}

std::string export_dot(const BasisDag& dag) {
    const auto node_id = [&](const MultiIndex& v) {
        std::ostringstream id;
        if (dag.n <= 9)
            id << v[0] << v[1] << v[2];
        else
            id << v[0] << "_" << v[1] << "_" << v[2];
        return id.str();
    };

    std::ostringstream out;
    out << "digraph basis_dag {\n";
    out << "  rankdir=LR;\n";
    for (int h = 0; h <= 2 * dag.n; ++h) {
        std::vector<const MultiIndex*> rank;
        for (const MultiIndex& v : dag.vertices)
            if (height(v) == h) rank.push_back(&v);
        if (rank.empty()) continue;
        // vertices is decreasing lexicographic, so each rank already is too
        out << "  { rank=same;";
        for (const MultiIndex* v : rank) out << " \"" << node_id(*v) << "\";";
        out << " }\n";
    }
    for (const DagEdge& e : dag.edges)
        out << "  \"" << node_id(dag.vertices[e.from]) << "\" -> \"" << node_id(dag.vertices[e.to])
            << "\" [label=\"" << e.weight << "\"];\n";
    out << "}\n";
    return out.str();
}

std::vector<RemarkDistanceRow> remark_distance_report(int n) {
    if (n < 1) throw Error(ErrorCode::BadIndex, "report needs n >= 1");
    const BasisDag dag = build_dag(n);
    const int half_up = (n + 1) / 2;

    std::vector<RemarkDistanceRow> rows;
    for (int k = 0; k <= n / 2; ++k) {
        RemarkDistanceRow row;
        row.k = k;
        row.q = 2 * n + 1 - 4 * k;
        row.endpoint_reading = 1 + 2 * (n - 2 * k);

        const MultiIndex a{half_up + k, 0, half_up - k};
        const MultiIndex b{half_up - k, 0, half_up + k};
        row.stated_pair_in_graph = a.degree() == n && b.degree() == n;
        if (row.stated_pair_in_graph) {
            const auto d = distance(dag, a, b);
            if (d) row.stated_pair_reading = 1 + *d;
        }
        rows.push_back(row);
    }
    return rows;
}

} // namespace oujordan
