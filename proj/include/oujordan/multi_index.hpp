#pragma once

#include <numeric>
#include <vector>

namespace oujordan {

// Index (i1,...,id) of a tensor Hermite basis element H_i1(x1)...H_id(xd).
struct MultiIndex {
    std::vector<int> entries;

    MultiIndex() = default;
    explicit MultiIndex(std::vector<int> e) : entries(std::move(e)) {}
    MultiIndex(std::initializer_list<int> e) : entries(e) {}

    int dim() const { return static_cast<int>(entries.size()); }
    int degree() const { return std::accumulate(entries.begin(), entries.end(), 0); }
    int operator[](int i) const { return entries[static_cast<std::size_t>(i)]; }

    bool operator==(const MultiIndex&) const = default;
};

// Canonical term order: graded, then decreasing lexicographic within a
// grade. Within grade n this is a topological order of the basis DAG, which
// makes the projected operator lower triangular.
struct CanonicalLess {
    bool operator()(const MultiIndex& a, const MultiIndex& b) const {
        const int da = a.degree(), db = b.degree();
        if (da != db) return da < db;
        return a.entries > b.entries; // decreasing lexicographic
    }
};

// All indices of the given total degree, in decreasing lexicographic order.
std::vector<MultiIndex> indices_of_degree(int dim, int degree);

// All indices of total degree <= bound, in canonical order.
std::vector<MultiIndex> indices_up_to_degree(int dim, int bound);

} // namespace oujordan
