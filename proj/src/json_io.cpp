#include "boolattice/json_io.hpp"

#include <sstream>

#include <json.hpp>

namespace boolattice {

using nlohmann::json;

std::string lattice_to_json(const IntervalLattice& l, const BoundReport* bounds) {
    json j;
    j["provenance"] = l.provenance();
    j["bottom"] = l.bottom();
    j["top"] = l.top();
    json elems = json::array();
    for (int i = 0; i < l.size(); ++i) {
        json e;
        e["id"] = i;
        e["order"] = to_decimal(l.element(i).order);
        e["index_in_top"] = to_decimal(l.index_in_top(i));
        e["index_over_bottom"] = to_decimal(l.index_over_bottom(i));
        if (l.element(i).group) {
            json gens = json::array();
            for (const Perm& g : l.element(i).group->generators())
                gens.push_back(g.cycle_string());
            e["generators"] = gens;
        }
        elems.push_back(std::move(e));
    }
    j["elements"] = std::move(elems);
    json leq = json::array();
    for (int i = 0; i < l.size(); ++i)
        for (int k = 0; k < l.size(); ++k)
            if (i != k && l.leq(i, k))
                leq.push_back(json::array({i, k}));
    j["leq"] = std::move(leq);
    json hasse = json::array();
    for (auto [a, b] : l.hasse_edges())
        hasse.push_back(json::array({a, b}));
    j["hasse"] = std::move(hasse);

    auto check = boolean_certificate(l);
    json cert;
    cert["boolean"] = check.boolean;
    if (check.boolean) {
        cert["rank"] = check.cert->rank;
        cert["atoms"] = check.cert->atoms;
        cert["coatoms"] = check.cert->coatoms;
        cert["complement"] = check.cert->complement;
        json ai = json::array();
        for (const BigInt& v : check.cert->atom_indices)
            ai.push_back(to_decimal(v));
        cert["atom_indices"] = std::move(ai);
    } else {
        cert["reason"] = check.reason;
    }
    j["certificate"] = std::move(cert);

    TotientReport t = totients(l);
    json tot;
    tot["phi"] = to_decimal(t.phi);
    tot["phi_hat"] = to_decimal(t.phi_hat);
    tot["chi"] = to_decimal(t.chi);
    json rows = json::array();
    for (const auto& r : t.rows) {
        json row;
        row["element"] = r.element;
        row["mu_bottom"] = to_decimal(r.mu_bottom);
        row["mu_top"] = to_decimal(r.mu_top);
        row["index_in_top"] = to_decimal(r.index_in_top);
        row["index_over_bottom"] = to_decimal(r.index_over_bottom);
        rows.push_back(std::move(row));
    }
    tot["rows"] = std::move(rows);
    j["totients"] = std::move(tot);

    if (bounds) {
        json b;
        b["lattice_id"] = bounds->lattice_id;
        b["rank"] = bounds->rank;
        json ai = json::array();
        for (const BigInt& v : bounds->atom_indices)
            ai.push_back(to_decimal(v));
        b["atom_indices"] = std::move(ai);
        json ci = json::array();
        for (const BigInt& v : bounds->coatom_indices)
            ci.push_back(to_decimal(v));
        b["coatom_indices"] = std::move(ci);
        b["group_complemented"] = bounds->group_complemented;
        b["phi"] = to_decimal(bounds->phi);
        b["phi_hat"] = to_decimal(bounds->phi_hat);
        b["chi"] = to_decimal(bounds->chi);
        {
            std::ostringstream os;
            os << bounds->atom_bound;
            b["atom_bound"] = os.str();
        }
        b["audited"] = bounds->audited;
        b["verdict"] = bounds->verdict;
        j["bounds"] = std::move(b);
    }
    return j.dump(2);
}

IntervalLattice lattice_from_json(const std::string& text) {
    json j = json::parse(text);
    std::vector<BigInt> orders;
    for (const auto& e : j.at("elements"))
        orders.push_back(parse_decimal(e.at("order").get<std::string>()));
    int n = static_cast<int>(orders.size());
    std::vector<std::vector<bool>> leq(static_cast<size_t>(n),
                                       std::vector<bool>(static_cast<size_t>(n), false));
    for (int i = 0; i < n; ++i)
        leq[static_cast<size_t>(i)][static_cast<size_t>(i)] = true;
    for (const auto& p : j.at("leq"))
        leq[p.at(0).get<size_t>()][p.at(1).get<size_t>()] = true;
    return IntervalLattice::from_orders(std::move(orders), std::move(leq),
                                        j.value("provenance", std::string("loaded")));
}

namespace {

json partition_blocks_json(const Partition& p) {
    json blocks = json::array();
    for (const auto& b : p.blocks)
        blocks.push_back(b);
    return blocks;
}

} // namespace

std::string partition_chain_to_json(const PartitionChainSpec& spec) {
    json j;
    j["type"] = "partition-chain";
    j["n"] = spec.n;
    j["ladder"] = spec.ladder;
    j["ambient"] = ambient_name(spec.ambient);
    json parts = json::array();
    for (int i = 1; i <= spec.rank(); ++i)
        parts.push_back(partition_blocks_json(spec.sigma(i)));
    j["partitions"] = std::move(parts);
    return j.dump(2);
}

std::string product_chain_to_json(const ProductChainSpec& spec) {
    json j;
    j["type"] = "product-chain";
    j["a"] = spec.a;
    j["bs"] = spec.bs;
    j["degree"] = spec.n();
    json structures = json::array();
    for (int i = 1; i <= spec.rank(); ++i) {
        json comps = json::array();
        for (const auto& c : spec.component_partitions(i))
            comps.push_back(partition_blocks_json(c));
        structures.push_back(std::move(comps));
    }
    j["structures"] = std::move(structures);
    return j.dump(2);
}

PartitionChainSpec partition_chain_from_json(const std::string& text) {
    json j = json::parse(text);
    if (j.value("type", std::string()) != "partition-chain")
        throw GroupError("chain spec must have type partition-chain");
    Ambient ambient = j.value("ambient", std::string("sym")) == "alt" ? Ambient::Alt : Ambient::Sym;
    return PartitionChainSpec(j.at("n").get<int>(), j.at("ladder").get<std::vector<int>>(), ambient);
}

ProductChainSpec product_chain_from_json(const std::string& text) {
    json j = json::parse(text);
    if (j.value("type", std::string()) != "product-chain")
        throw GroupError("chain spec must have type product-chain");
    return ProductChainSpec(j.at("a").get<long>(), j.at("bs").get<std::vector<int>>());
}

std::string lattice_to_dot(const IntervalLattice& l) {
    std::ostringstream os;
    os << "digraph hasse {\n  rankdir=BT;\n  node [shape=box];\n";
    for (int i = 0; i < l.size(); ++i) {
        std::string shape = i == l.bottom() || i == l.top() ? ",style=bold" : "";
        os << "  n" << i << " [label=\"" << to_decimal(l.element(i).order) << "\"" << shape
           << "];\n";
    }
    for (auto [a, b] : l.hasse_edges())
        os << "  n" << a << " -> n" << b << ";\n";
    os << "}\n";
    return os.str();
}

} // namespace boolattice
