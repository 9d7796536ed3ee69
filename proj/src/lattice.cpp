#include "boolattice/lattice.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace boolattice {

namespace {

inline bool bit(const std::vector<std::uint64_t>& b, int i) {
    return (b[static_cast<size_t>(i) / 64] >> (i % 64)) & 1ull;
}
inline void setbit(std::vector<std::uint64_t>& b, int i) {
    b[static_cast<size_t>(i) / 64] |= 1ull << (i % 64);
}

} // namespace

void IntervalLattice::build_order(const std::vector<std::vector<bool>>& leq) {
    const int n = size();
    words_ = static_cast<size_t>((n + 63) / 64);
    up_.assign(static_cast<size_t>(n), std::vector<std::uint64_t>(words_, 0));
    down_.assign(static_cast<size_t>(n), std::vector<std::uint64_t>(words_, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (leq[static_cast<size_t>(i)][static_cast<size_t>(j)]) {
                setbit(up_[static_cast<size_t>(i)], j);
                setbit(down_[static_cast<size_t>(j)], i);
            }
}

void IntervalLattice::finish() {
    const int n = size();
    for (int i = 0; i < n; ++i) {
        if (!leq(i, i))
            throw GroupError("lattice: order not reflexive");
        for (int j = 0; j < n; ++j)
            if (i != j && leq(i, j) && leq(j, i))
                throw GroupError("lattice: order not antisymmetric");
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (leq(i, j))
                for (size_t w = 0; w < words_; ++w)
                    if (up_[static_cast<size_t>(j)][w] & ~up_[static_cast<size_t>(i)][w])
                        throw GroupError("lattice: order not transitive");
    bottom_ = top_ = -1;
    for (int i = 0; i < n; ++i) {
        bool is_bot = true, is_top = true;
        for (int j = 0; j < n; ++j) {
            is_bot &= leq(i, j);
            is_top &= leq(j, i);
        }
        if (is_bot)
            bottom_ = i;
        if (is_top)
            top_ = i;
    }
    if (bottom_ < 0 || top_ < 0)
        throw GroupError("lattice: missing minimum or maximum");
}

std::vector<int> IntervalLattice::members(const std::vector<std::uint64_t>& bits) const {
    std::vector<int> out;
    for (size_t w = 0; w < words_; ++w) {
        std::uint64_t v = bits[w];
        while (v) {
            int b = __builtin_ctzll(v);
            out.push_back(static_cast<int>(w * 64) + b);
            v &= v - 1;
        }
    }
    return out;
}

IntervalLattice IntervalLattice::from_groups(std::vector<GroupHandle> groups,
                                             const std::string& provenance) {
    IntervalLattice l;
    l.provenance_ = provenance;
    std::vector<int> order_idx(groups.size());
    std::iota(order_idx.begin(), order_idx.end(), 0);
    std::stable_sort(order_idx.begin(), order_idx.end(), [&](int a, int b) {
        return groups[static_cast<size_t>(a)].order() < groups[static_cast<size_t>(b)].order();
    });
    std::vector<GroupHandle> sorted;
    for (int i : order_idx)
        sorted.push_back(groups[static_cast<size_t>(i)]);
    const int n = static_cast<int>(sorted.size());
    std::vector<std::vector<bool>> leq(static_cast<size_t>(n),
                                       std::vector<bool>(static_cast<size_t>(n), false));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const BigInt& oi = sorted[static_cast<size_t>(i)].order();
            const BigInt& oj = sorted[static_cast<size_t>(j)].order();
            if (oi > oj || oj % oi != 0)
                continue;
            leq[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                sorted[static_cast<size_t>(i)].is_subgroup_of(sorted[static_cast<size_t>(j)]);
        }
    for (auto& g : sorted)
        l.elems_.push_back(Element{g.order(), std::move(g)});
    l.build_order(leq);
    l.finish();
    return l;
}

IntervalLattice IntervalLattice::from_orders(std::vector<BigInt> orders,
                                             std::vector<std::vector<bool>> leq,
                                             const std::string& provenance) {
    IntervalLattice l;
    l.provenance_ = provenance;
    for (auto& o : orders)
        l.elems_.push_back(Element{std::move(o), std::nullopt});
    l.build_order(leq);
    l.finish();
    return l;
}

bool IntervalLattice::covers(int i, int j) const {
    if (i == j || !leq(i, j))
        return false;
    // nothing strictly between: up(i) & down(j) = {i, j}
    for (size_t w = 0; w < words_; ++w) {
        std::uint64_t between =
            up_[static_cast<size_t>(i)][w] & down_[static_cast<size_t>(j)][w];
        if (w == static_cast<size_t>(i) / 64)
            between &= ~(1ull << (i % 64));
        if (w == static_cast<size_t>(j) / 64)
            between &= ~(1ull << (j % 64));
        if (between)
            return false;
    }
    return true;
}

std::vector<std::pair<int, int>> IntervalLattice::hasse_edges() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < size(); ++i)
        for (int j : members(up_[static_cast<size_t>(i)]))
            if (covers(i, j))
                out.emplace_back(i, j);
    return out;
}

int IntervalLattice::join_of(int i, int j) const {
    std::vector<std::uint64_t> common(words_);
    for (size_t w = 0; w < words_; ++w)
        common[w] = up_[static_cast<size_t>(i)][w] & up_[static_cast<size_t>(j)][w];
    // the least element of the common up-set, if it dominates all of it
    for (int k : members(common)) {
        bool least = true;
        for (size_t w = 0; w < words_ && least; ++w)
            if (common[w] & ~up_[static_cast<size_t>(k)][w])
                least = false;
        if (least)
            return k;
    }
    throw GroupError("lattice: join missing or not unique");
}

int IntervalLattice::meet_of(int i, int j) const {
    std::vector<std::uint64_t> common(words_);
    for (size_t w = 0; w < words_; ++w)
        common[w] = down_[static_cast<size_t>(i)][w] & down_[static_cast<size_t>(j)][w];
    for (int k : members(common)) {
        bool greatest = true;
        for (size_t w = 0; w < words_ && greatest; ++w)
            if (common[w] & ~down_[static_cast<size_t>(k)][w])
                greatest = false;
        if (greatest)
            return k;
    }
    throw GroupError("lattice: meet missing or not unique");
}

std::vector<int> IntervalLattice::atoms() const {
    std::vector<int> out;
    for (int i = 0; i < size(); ++i)
        if (covers(bottom_, i))
            out.push_back(i);
    return out;
}

std::vector<int> IntervalLattice::coatoms() const {
    std::vector<int> out;
    for (int i = 0; i < size(); ++i)
        if (covers(i, top_))
            out.push_back(i);
    return out;
}

BigInt IntervalLattice::index_in_top(int i) const {
    return exact_div(elems_[static_cast<size_t>(top_)].order, elems_[static_cast<size_t>(i)].order);
}

BigInt IntervalLattice::index_over_bottom(int i) const {
    return exact_div(elems_[static_cast<size_t>(i)].order, elems_[static_cast<size_t>(bottom_)].order);
}

namespace {

// linear extension by order (ids are pre-sorted in from_groups, but
// from_orders may present any order)
std::vector<int> order_sorted_ids(const std::vector<IntervalLattice::Element>& elems) {
    std::vector<int> ids(elems.size());
    std::iota(ids.begin(), ids.end(), 0);
    std::stable_sort(ids.begin(), ids.end(), [&](int a, int b) {
        return elems[static_cast<size_t>(a)].order < elems[static_cast<size_t>(b)].order;
    });
    return ids;
}

} // namespace

std::vector<BigInt> IntervalLattice::moebius_from_bottom() const {
    std::vector<BigInt> mu(static_cast<size_t>(size()));
    for (int z : order_sorted_ids(elems_)) {
        if (z == bottom_) {
            mu[static_cast<size_t>(z)] = 1;
            continue;
        }
        BigInt s = 0;
        for (int w : members(down_[static_cast<size_t>(z)]))
            if (w != z)
                s += mu[static_cast<size_t>(w)];
        mu[static_cast<size_t>(z)] = -s;
    }
    return mu;
}

std::vector<BigInt> IntervalLattice::moebius_to_top() const {
    std::vector<BigInt> mu(static_cast<size_t>(size()));
    auto ids = order_sorted_ids(elems_);
    for (auto it = ids.rbegin(); it != ids.rend(); ++it) {
        int z = *it;
        if (z == top_) {
            mu[static_cast<size_t>(z)] = 1;
            continue;
        }
        BigInt s = 0;
        for (int w : members(up_[static_cast<size_t>(z)]))
            if (w != z)
                s += mu[static_cast<size_t>(w)];
        mu[static_cast<size_t>(z)] = -s;
    }
    return mu;
}

BigInt IntervalLattice::moebius(int x, int y) const {
    if (!leq(x, y))
        throw GroupError("moebius: arguments not comparable");
    std::map<int, BigInt> mu;
    std::vector<int> zs;
    for (int z : order_sorted_ids(elems_))
        if (leq(x, z) && leq(z, y))
            zs.push_back(z);
    for (int z : zs) {
        if (z == x) {
            mu[z] = 1;
            continue;
        }
        BigInt s = 0;
        for (int w : zs)
            if (w != z && leq(x, w) && leq(w, z))
                s += mu[w];
        mu[z] = -s;
    }
    return mu[y];
}

std::set<int> IntervalLattice::maximal_chain_lengths() const {
    std::set<int> out;
    std::function<void(int, int)> dfs = [&](int at, int len) {
        if (at == top_) {
            out.insert(len);
            return;
        }
        for (int j : members(up_[static_cast<size_t>(at)]))
            if (covers(at, j))
                dfs(j, len + 1);
    };
    dfs(bottom_, 1);
    return out;
}

void IntervalLattice::check_lattice() const {
    for (int i = 0; i < size(); ++i)
        for (int j = i; j < size(); ++j) {
            (void)join_of(i, j);
            (void)meet_of(i, j);
        }
}

bool IntervalLattice::is_distributive() const {
    for (int x = 0; x < size(); ++x)
        for (int y = 0; y < size(); ++y)
            for (int z = 0; z < size(); ++z)
                if (meet_of(x, join_of(y, z)) != join_of(meet_of(x, y), meet_of(x, z)))
                    return false;
    return true;
}

IntervalLattice IntervalLattice::sublattice_below(int i) const {
    std::vector<int> keep = members(down_[static_cast<size_t>(i)]);
    IntervalLattice l;
    l.provenance_ = provenance_;
    std::vector<std::vector<bool>> leqm(keep.size(), std::vector<bool>(keep.size(), false));
    for (size_t a = 0; a < keep.size(); ++a) {
        l.elems_.push_back(elems_[static_cast<size_t>(keep[a])]);
        for (size_t b = 0; b < keep.size(); ++b)
            leqm[a][b] = leq(keep[a], keep[b]);
    }
    l.build_order(leqm);
    l.finish();
    return l;
}

BooleanCheck boolean_certificate(const IntervalLattice& l) {
    BooleanCheck out;
    int n = l.size();
    int rank = 0;
    {
        int m = n;
        while (m > 1) {
            if (m % 2 != 0) {
                out.reason = "element count " + std::to_string(n) + " is not a power of 2";
                return out;
            }
            m /= 2;
            ++rank;
        }
    }
    auto atoms = l.atoms();
    if (static_cast<int>(atoms.size()) != rank) {
        out.reason = "expected " + std::to_string(rank) + " atoms, found " +
                     std::to_string(atoms.size());
        return out;
    }
    // joins of atom subsets must hit every element exactly once
    std::vector<int> elem_of_subset(static_cast<size_t>(1) << rank, -1);
    std::vector<int> subset_of_elem(static_cast<size_t>(n), -1);
    for (int mask = 0; mask < (1 << rank); ++mask) {
        int cur = l.bottom();
        for (int i = 0; i < rank; ++i)
            if (mask & (1 << i))
                cur = l.join_of(cur, atoms[static_cast<size_t>(i)]);
        if (subset_of_elem[static_cast<size_t>(cur)] != -1) {
            out.reason = "two atom subsets join to the same element";
            return out;
        }
        elem_of_subset[static_cast<size_t>(mask)] = cur;
        subset_of_elem[static_cast<size_t>(cur)] = mask;
    }
    // order isomorphism: an atom lies below a join exactly when it is in the subset
    for (int mask = 0; mask < (1 << rank); ++mask)
        for (int i = 0; i < rank; ++i) {
            bool below = l.leq(atoms[static_cast<size_t>(i)],
                               elem_of_subset[static_cast<size_t>(mask)]);
            if (below != (((mask >> i) & 1) != 0)) {
                out.reason = "atom-subset decomposition is not an order isomorphism";
                return out;
            }
        }
    BooleanCertificate cert;
    cert.rank = rank;
    cert.atoms = atoms;
    cert.complement.assign(static_cast<size_t>(n), -1);
    int full = (1 << rank) - 1;
    for (int mask = 0; mask <= full; ++mask) {
        int e = elem_of_subset[static_cast<size_t>(mask)];
        int c = elem_of_subset[static_cast<size_t>(full & ~mask)];
        cert.complement[static_cast<size_t>(e)] = c;
        if (l.meet_of(e, c) != l.bottom() || l.join_of(e, c) != l.top()) {
            out.reason = "complementation fails";
            return out;
        }
    }
    for (int i = 0; i < rank; ++i) {
        cert.coatoms.push_back(cert.complement[static_cast<size_t>(atoms[static_cast<size_t>(i)])]);
        cert.atom_indices.push_back(l.index_over_bottom(atoms[static_cast<size_t>(i)]));
    }
    // every maximal chain in a rank-r Boolean lattice passes r+1 elements
    auto lengths = l.maximal_chain_lengths();
    if (lengths.size() != 1 || *lengths.begin() != rank + 1) {
        out.reason = "maximal chain lengths inconsistent with Boolean rank";
        return out;
    }
    out.boolean = true;
    out.cert = std::move(cert);
    return out;
}

IntervalLattice enumerate_interval(const GroupHandle& g, const GroupHandle& h, const Caps& caps) {
    if (g.degree() != h.degree())
        throw DegreeMismatch("enumerate_interval: degree mismatch");
    if (!h.is_subgroup_of(g))
        throw NotASubgroup("enumerate_interval: H must be a subgroup of G");
    auto reps = coset_representatives(g, h, caps.max_index);

    std::vector<GroupHandle> elems;
    std::multimap<BigInt, int> by_order;
    auto find_same = [&](const GroupHandle& k) -> int {
        auto [lo, hi] = by_order.equal_range(k.order());
        for (auto it = lo; it != hi; ++it)
            if (k.is_subgroup_of(elems[static_cast<size_t>(it->second)]))
                return it->second;
        return -1;
    };
    auto add = [&](GroupHandle k) -> int {
        int found = find_same(k);
        if (found >= 0)
            return found;
        int id = static_cast<int>(elems.size());
        by_order.emplace(k.order(), id);
        elems.push_back(std::move(k));
        return id;
    };
    add(h);
    add(g);
    // the join-irreducible generators <H,g> over coset representatives
    std::vector<int> irreducibles;
    std::vector<Perm> hgens = h.generators();
    for (const Perm& rep : reps) {
        if (h.contains(rep))
            continue;
        std::vector<Perm> gens = hgens;
        gens.push_back(rep);
        int id = add(GroupHandle::build(std::move(gens)));
        if (std::find(irreducibles.begin(), irreducibles.end(), id) == irreducibles.end())
            irreducibles.push_back(id);
    }
    // every overgroup is a join of the <H,g>, so closing each element
    // against the irreducibles closes the whole lattice
    for (size_t at = 0; at < elems.size(); ++at)
        for (size_t ii = 0; ii < irreducibles.size(); ++ii) {
            int irr = irreducibles[ii];
            GroupHandle a = elems[at];
            GroupHandle b = elems[static_cast<size_t>(irr)];
            if (b.is_subgroup_of(a) || a.is_subgroup_of(b))
                continue;
            add(join(a, b));
        }
    IntervalLattice l = IntervalLattice::from_groups(std::move(elems), "enumerated");
    l.check_lattice();
    return l;
}

namespace {

std::vector<std::vector<int>> all_subsets(int rank) {
    std::vector<std::vector<int>> subsets;
    for (int mask = 0; mask < (1 << rank); ++mask) {
        std::vector<int> s;
        for (int i = 0; i < rank; ++i)
            if (mask & (1 << i))
                s.push_back(i + 1);
        subsets.push_back(std::move(s));
    }
    return subsets;
}

std::vector<int> set_intersection(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> r;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

std::vector<int> set_union(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> r;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

// Certify the constructed family: containments by sifting, joins by
// generated-group order against the closed form, meets by the closed form
// (and by backtrack intersection at small degree).
template <typename Builder, typename OrderFn>
IntervalLattice certify_family(int degree, int rank, Builder build, OrderFn closed_order,
                               const Caps& caps) {
    auto subsets = all_subsets(rank);
    std::vector<GroupHandle> groups;
    for (const auto& I : subsets)
        groups.push_back(build(I));
    for (size_t i = 0; i < subsets.size(); ++i) {
        if (groups[i].order() != closed_order(subsets[i]))
            throw GroupError("constructed subgroup order does not match its closed form");
        for (size_t j = 0; j < subsets.size(); ++j) {
            bool should = std::includes(subsets[i].begin(), subsets[i].end(), subsets[j].begin(),
                                        subsets[j].end());
            if (should && !groups[i].is_subgroup_of(groups[j]))
                throw GroupError("constructed family violates reverse-inclusion containment");
        }
    }
    for (size_t i = 0; i < subsets.size(); ++i)
        for (size_t j = i + 1; j < subsets.size(); ++j) {
            // comparable pairs join/meet to one of the two; containment was
            // already certified above
            if (std::includes(subsets[i].begin(), subsets[i].end(), subsets[j].begin(),
                              subsets[j].end()) ||
                std::includes(subsets[j].begin(), subsets[j].end(), subsets[i].begin(),
                              subsets[i].end()))
                continue;
            auto meet_idx = set_union(subsets[i], subsets[j]);
            auto join_idx = set_intersection(subsets[i], subsets[j]);
            BigInt join_order = closed_order(join_idx);
            // join certificate: the generated group reaches exactly the closed form
            GroupHandle jn = degree <= 64 ? join(groups[i], groups[j])
                                          : join_with_order(groups[i], groups[j], join_order);
            if (jn.order() != join_order)
                throw GroupError("constructed join does not match its closed form");
            if (degree <= caps.max_degree_backtrack) {
                GroupHandle mt = intersect(groups[i], groups[j], caps.max_degree_backtrack);
                if (mt.order() != closed_order(meet_idx))
                    throw GroupError("backtrack meet does not match its closed form");
            }
        }
    return IntervalLattice::from_groups(std::move(groups), "constructed");
}

} // namespace

IntervalLattice constructed_partition_interval(const PartitionChainSpec& spec, bool with_alt,
                                               const Caps& caps) {
    if (with_alt && spec.ambient != Ambient::Sym)
        throw GroupError("the alternating coatom extension applies to Sym ambient only");
    int rank = spec.rank();
    if (!with_alt) {
        return certify_family(
            spec.n, rank, [&](const std::vector<int>& I) { return partition_chain_subgroup(spec, I); },
            [&](const std::vector<int>& I) { return partition_chain_order(spec, I); }, caps);
    }
    // Alt(n) as an extra coatom: index subsets over {1..rank+1} with rank+1
    // meaning "intersect with Alt".
    auto sym_like = [&](std::vector<int> I) {
        bool alt = false;
        auto it = std::find(I.begin(), I.end(), rank + 1);
        if (it != I.end()) {
            alt = true;
            I.erase(it);
        }
        return std::make_pair(alt, I);
    };
    auto build = [&](const std::vector<int>& I) {
        auto [alt, rest] = sym_like(I);
        GroupHandle m = partition_chain_subgroup(spec, rest);
        return alt ? even_part(m) : m;
    };
    auto orderfn = [&](const std::vector<int>& I) {
        auto [alt, rest] = sym_like(I);
        BigInt o = partition_chain_order(spec, rest);
        return alt ? o / 2 : o;
    };
    return certify_family(spec.n, rank + 1, build, orderfn, caps);
}

IntervalLattice constructed_product_interval(const ProductChainSpec& spec, const Caps& caps) {
    return certify_family(
        static_cast<int>(spec.n()), spec.rank(),
        [&](const std::vector<int>& I) { return product_chain_subgroup(spec, I); },
        [&](const std::vector<int>& I) { return product_chain_order(spec, I); }, caps);
}

bool is_maximal_subgroup(const GroupHandle& g, const GroupHandle& m, const Caps& caps) {
    if (m.same_group_as(g))
        throw GroupError("is_maximal_subgroup: M must be proper");
    return enumerate_interval(g, m, caps).size() == 2;
}

} // namespace boolattice
