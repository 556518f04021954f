#pragma once

#include <optional>
#include <string>
#include <vector>

#include "oujordan/multi_index.hpp"

namespace oujordan {

// Weighted DAG of the grade-n tensor Hermite basis (d=3) under the
// projected operator: vertex (i,j,k) sends weight -i to (i-1,j+1,k) and
// weight -j to (i,j-1,k+1). Every edge raises height(i,j,k) = j+2k by one.
struct DagEdge {
    std::size_t from;
    std::size_t to;
    long weight;

    bool operator==(const DagEdge&) const = default;
};

struct BasisDag {
    int n;
    std::vector<MultiIndex> vertices; // decreasing lexicographic; a topological order
    std::vector<DagEdge> edges;       // grouped by source, in vertex order

    std::size_t vertex_index(const MultiIndex& v) const; // throws VertexNotFound
};

int height(const MultiIndex& v);

BasisDag build_dag(int n);

// Directed distance. All paths between two vertices have the same length
// (height grading), so this is reachability plus a height difference.
std::optional<int> distance(const BasisDag& dag, const MultiIndex& from, const MultiIndex& to);

// (i,j,k) <-> (k,j,i) is a vertex bijection with heights summing to 2n.
bool symmetry_check(const BasisDag& dag);

// DOT digraph, ranked by height, UTF-8/LF. Node ids are concatenated digits
// for n <= 9 and underscore-separated beyond.
std::string export_dot(const BasisDag& dag);

// Chain lengths q_k = 2n+1-4k against two readings of "1 plus the distance":
// the stated corner pair (ceil(n/2)+k, 0, ceil(n/2)-k) -> mirrored (which for
// odd n is not even a vertex of the grade-n graph), and the heights 2k,
// 2(n-k) the construction actually connects. Both values are recorded.
struct RemarkDistanceRow {
    int k;
    int q;
    bool stated_pair_in_graph;
    std::optional<int> stated_pair_reading; // 1 + distance, when defined
    int endpoint_reading;                   // 1 + (2(n-k) - 2k)
};

std::vector<RemarkDistanceRow> remark_distance_report(int n);

} // namespace oujordan
