#include "oujordan/json_io.hpp"

#include "oujordan/error.hpp"

namespace oujordan {

Json poly_to_json(const HermitePoly& p) {
    Json j;
    j["d"] = p.dim();
    j["rho"] = to_string(p.rho());
    Json terms = Json::array();
    for (const auto& [index, value] : p.terms()) {
        Json term;
        term["idx"] = index.entries;
        term["coeff"] = to_string(value);
        terms.push_back(std::move(term));
    }
    j["terms"] = std::move(terms);
    return j;
}

HermitePoly poly_from_json(const Json& j) {
    HermitePoly p(j.at("d").get<int>(), parse_rational(j.at("rho").get<std::string>()));
    for (const Json& term : j.at("terms")) {
        const MultiIndex index(term.at("idx").get<std::vector<int>>());
        p.add_term(index, parse_rational(term.at("coeff").get<std::string>()));
    }
    return p;
}

Json chain2d_to_json(const Chain2D& chain, const OUContext& ctx) {
    Json j;
    j["n"] = chain.n;
    j["c"] = to_string(ctx.c);
    j["sigma2"] = to_string(ctx.sigma2);
    j["rho"] = to_string(ctx.rho);
    j["q"] = chain.n + 1;
    Json elements = Json::array();
    for (const HermitePoly& element : chain.elements) elements.push_back(poly_to_json(element));
    j["elements"] = std::move(elements);
    j["closed_form_verified"] = true; // build_chain_2d asserts it
    return j;
}

Json jordan3d_to_json(const Jordan3DReport& report) {
    Json j;
    j["n"] = report.n;
    j["segre"] = report.segre;
    j["geometric_multiplicity"] = report.geometric;
    j["algebraic_multiplicity"] = report.algebraic;
    Json chains = Json::array();
    for (const JordanChain3D& chain : report.chains) {
        Json c;
        c["k"] = chain.k;
        c["q"] = chain.q;
        c["lead"] = poly_to_json(chain.lead);
        Json elements = Json::array();
        for (const HermitePoly& element : chain.elements) elements.push_back(poly_to_json(element));
        c["elements"] = std::move(elements);
        chains.push_back(std::move(c));
    }
    j["chains"] = std::move(chains);
    Json conjecture = Json::array();
    for (const ConjectureRow& row : report.conjecture) {
        Json r;
        r["k"] = row.k;
        r["holds"] = row.holds;
        r["lambda"] = to_string(row.lambda);
        conjecture.push_back(std::move(r));
    }
    j["conjecture"] = std::move(conjecture);
    return j;
}

Json oracle_to_json(const OUContext& ctx, const OracleReport& report,
                    const TheoryComparison* comparison) {
    Json j;
    j["d"] = ctx.dim;
    j["n"] = ctx.level;
    j["c"] = to_string(ctx.c);
    j["sigma2"] = to_string(ctx.sigma2);
    j["segre"] = report.segre;
    j["geometric_multiplicity"] = report.geometric;
    j["algebraic_multiplicity"] = report.algebraic;
    j["index"] = report.index;
    j["kernel_dims"] = report.kernel_dims;
    if (comparison) {
        Json t;
        t["segre"] = comparison->expected_segre;
        t["geometric_multiplicity"] = comparison->expected_geometric;
        t["algebraic_multiplicity"] = comparison->expected_algebraic;
        t["index"] = comparison->expected_index;
        t["matches"] = true; // compare_with_theory throws otherwise
        j["theory"] = std::move(t);
    } else {
        j["theory"] = nullptr;
    }
    return j;
}

Json conjecture_to_json(int n, const std::vector<ConjectureRow>& rows) {
    Json j;
    j["n"] = n;
    Json out = Json::array();
    for (const ConjectureRow& row : rows) {
        Json r;
        r["k"] = row.k;
        r["holds"] = row.holds;
        r["lambda"] = to_string(row.lambda);
        if (row.ratio)
            r["ratio"] = to_string(*row.ratio);
        else
            r["ratio"] = nullptr;
        Json cp = Json::array();
        for (const Rational& coeff : row.char_poly) cp.push_back(to_string(coeff));
        r["char_poly"] = std::move(cp);
        out.push_back(std::move(r));
    }
    j["rows"] = std::move(out);
    return j;
}

Json dag_to_json(const BasisDag& dag) {
    Json j;
    j["n"] = dag.n;
    Json vertices = Json::array();
    for (const MultiIndex& v : dag.vertices) {
        Json vertex;
        vertex["idx"] = v.entries;
        vertex["height"] = height(v);
        vertices.push_back(std::move(vertex));
    }
    j["vertices"] = std::move(vertices);
    Json edges = Json::array();
    for (const DagEdge& e : dag.edges) {
        Json edge;
        edge["from"] = dag.vertices[e.from].entries;
        edge["to"] = dag.vertices[e.to].entries;
        edge["weight"] = e.weight;
        edges.push_back(std::move(edge));
    }
    j["edges"] = std::move(edges);
    return j;
}

} // namespace oujordan
