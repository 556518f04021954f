#include "oujordan/multi_index.hpp"

namespace oujordan {

namespace {

void enumerate(int dim, int degree, std::vector<int>& prefix, std::vector<MultiIndex>& out) {
    if (dim == 1) {
        prefix.push_back(degree);
        out.emplace_back(prefix);
        prefix.pop_back();
        return;
    }
    for (int head = degree; head >= 0; --head) {
        prefix.push_back(head);
        enumerate(dim - 1, degree - head, prefix, out);
        prefix.pop_back();
    }
}

} // namespace

std::vector<MultiIndex> indices_of_degree(int dim, int degree) {
    std::vector<MultiIndex> out;
    std::vector<int> prefix;
    enumerate(dim, degree, prefix, out);
    return out;
}

std::vector<MultiIndex> indices_up_to_degree(int dim, int bound) {
    std::vector<MultiIndex> out;
    for (int m = 0; m <= bound; ++m) {
        auto grade = indices_of_degree(dim, m);
        out.insert(out.end(), grade.begin(), grade.end());
    }
    return out;
}

} // namespace oujordan
