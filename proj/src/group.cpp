#include "boolattice/group.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <unordered_set>

namespace boolattice {
namespace detail {

constexpr int kExplicitDegree = 64; // explicit transversal cache below this
constexpr int kMaxTreeDepth = 48;   // Schreier-tree depth cap (vector mode)

struct Level {
    int beta = -1;
    std::vector<Perm> gens; // generators introduced at this level

    std::vector<int> orbit;  // BFS discovery order
    std::vector<int> pos;    // point -> orbit index, -1 outside
    std::vector<Perm> labels, label_invs;
    std::vector<int> parent, via, depth;

    // explicit transversal cache, small degrees only
    bool explicit_mode = false;
    std::vector<Perm> u, uinv; // by point; degree()>0 iff present
};

struct StabChain {
    int degree = 0;
    std::vector<Perm> input_gens;
    std::vector<Level> levels;
    BigInt order = 1;
    bool complete = false;

    void init_level(Level& lv, int beta) const {
        lv.beta = beta;
        lv.orbit.assign(1, beta);
        lv.pos.assign(static_cast<size_t>(degree), -1);
        lv.pos[static_cast<size_t>(beta)] = 0;
        lv.parent.assign(static_cast<size_t>(degree), -1);
        lv.via.assign(static_cast<size_t>(degree), -1);
        lv.depth.assign(static_cast<size_t>(degree), 0);
        lv.explicit_mode = degree <= kExplicitDegree;
        if (lv.explicit_mode) {
            lv.u.assign(static_cast<size_t>(degree), Perm());
            lv.uinv.assign(static_cast<size_t>(degree), Perm());
            lv.u[static_cast<size_t>(beta)] = Perm(degree);
            lv.uinv[static_cast<size_t>(beta)] = Perm(degree);
        }
    }

    // Transversal element mapping beta -> x (materialized on demand in vector mode).
    Perm transversal(int li, int x) const {
        const Level& lv = levels[static_cast<size_t>(li)];
        if (lv.explicit_mode)
            return lv.u[static_cast<size_t>(x)];
        Perm r(degree);
        std::vector<int> path;
        for (int p = x; p != lv.beta; p = lv.parent[static_cast<size_t>(p)])
            path.push_back(p);
        for (auto it = path.rbegin(); it != path.rend(); ++it)
            r = r.then(lv.labels[static_cast<size_t>(lv.via[static_cast<size_t>(*it)])]);
        return r;
    }

    // g := g.then(u_x^{-1}) for the level's transversal at x.
    Perm strip_step(int li, int x, Perm g) const {
        const Level& lv = levels[static_cast<size_t>(li)];
        if (lv.explicit_mode)
            return g.then(lv.uinv[static_cast<size_t>(x)]);
        for (int p = x; p != lv.beta; p = lv.parent[static_cast<size_t>(p)])
            g = g.then(lv.label_invs[static_cast<size_t>(lv.via[static_cast<size_t>(p)])]);
        return g;
    }

    // Sift: returns (residue, first level where it failed) or (residue, #levels).
    std::pair<Perm, int> sift(Perm g) const {
        for (size_t i = 0; i < levels.size(); ++i) {
            const Level& lv = levels[i];
            int x = g[lv.beta];
            if (x == lv.beta)
                continue;
            if (lv.pos[static_cast<size_t>(x)] < 0)
                return {std::move(g), static_cast<int>(i)};
            g = strip_step(static_cast<int>(i), x, std::move(g));
        }
        return {std::move(g), static_cast<int>(levels.size())};
    }

    bool member(const Perm& p) const {
        auto [res, li] = sift(p);
        (void)li;
        return res.is_identity();
    }

    void extend_orbit_from(int li, size_t frontier_start) {
        Level& lv = levels[static_cast<size_t>(li)];
        size_t head = frontier_start;
        while (head < lv.orbit.size()) {
            int x = lv.orbit[head++];
            for (size_t k = 0; k < lv.labels.size(); ++k) {
                int y = lv.labels[k][x];
                if (lv.pos[static_cast<size_t>(y)] >= 0)
                    continue;
                int d = lv.depth[static_cast<size_t>(x)] + 1;
                if (!lv.explicit_mode && d > kMaxTreeDepth) {
                    // materialize a shortcut label so trees stay shallow
                    Perm ux = transversal(li, x).then(lv.labels[k]);
                    lv.labels.push_back(ux);
                    lv.label_invs.push_back(ux.inverse());
                    lv.parent[static_cast<size_t>(y)] = lv.beta;
                    lv.via[static_cast<size_t>(y)] = static_cast<int>(lv.labels.size() - 1);
                    lv.depth[static_cast<size_t>(y)] = 1;
                } else {
                    lv.parent[static_cast<size_t>(y)] = x;
                    lv.via[static_cast<size_t>(y)] = static_cast<int>(k);
                    lv.depth[static_cast<size_t>(y)] = d;
                    if (lv.explicit_mode) {
                        lv.u[static_cast<size_t>(y)] = lv.u[static_cast<size_t>(x)].then(lv.labels[k]);
                        lv.uinv[static_cast<size_t>(y)] = lv.u[static_cast<size_t>(y)].inverse();
                    }
                }
                lv.pos[static_cast<size_t>(y)] = static_cast<int>(lv.orbit.size());
                lv.orbit.push_back(y);
            }
        }
    }

    void level_add_label(int li, const Perm& g) {
        Level& lv = levels[static_cast<size_t>(li)];
        lv.labels.push_back(g);
        lv.label_invs.push_back(g.inverse());
        // apply the new label to the existing orbit, then BFS any growth
        size_t old_size = lv.orbit.size();
        size_t k = lv.labels.size() - 1;
        for (size_t idx = 0; idx < old_size; ++idx) {
            int x = lv.orbit[idx];
            int y = lv.labels[k][x];
            if (lv.pos[static_cast<size_t>(y)] >= 0)
                continue;
            lv.parent[static_cast<size_t>(y)] = x;
            lv.via[static_cast<size_t>(y)] = static_cast<int>(k);
            lv.depth[static_cast<size_t>(y)] = lv.depth[static_cast<size_t>(x)] + 1;
            if (lv.explicit_mode) {
                lv.u[static_cast<size_t>(y)] = lv.u[static_cast<size_t>(x)].then(lv.labels[k]);
                lv.uinv[static_cast<size_t>(y)] = lv.u[static_cast<size_t>(y)].inverse();
            }
            lv.pos[static_cast<size_t>(y)] = static_cast<int>(lv.orbit.size());
            lv.orbit.push_back(y);
        }
        extend_orbit_from(li, old_size);
    }

    // Add a strong generator at level li (it must fix base[0..li-1]).
    void add_generator(int li, const Perm& g) {
        assert(li < static_cast<int>(levels.size()));
        levels[static_cast<size_t>(li)].gens.push_back(g);
        for (int i = li; i >= 0; --i)
            level_add_label(i, g);
    }

    void append_level(int beta) {
        Level lv;
        init_level(lv, beta);
        levels.push_back(std::move(lv));
    }

    // Level at which a residue lives: the first level whose base point it
    // moves; creates a new level when it fixes every current base point.
    int residue_level(const Perm& g, int from) {
        for (size_t i = static_cast<size_t>(from); i < levels.size(); ++i)
            if (g[levels[i].beta] != levels[i].beta)
                return static_cast<int>(i);
        append_level(g.first_moved());
        return static_cast<int>(levels.size() - 1);
    }

    void insert_element(const Perm& g) {
        auto [res, li] = sift(g);
        if (res.is_identity())
            return;
        add_generator(residue_level(res, li), res);
    }

    void recompute_order() {
        order = 1;
        for (const Level& lv : levels)
            order *= static_cast<long>(lv.orbit.size());
    }

    // Verify level li's Schreier generators; on the first failure add the
    // residue and return the level it was added at. Returns -1 when clean.
    int verify_level(int li) {
        Level& lv = levels[static_cast<size_t>(li)];
        for (size_t idx = 0; idx < lv.orbit.size(); ++idx) {
            int x = lv.orbit[idx];
            Perm ux = transversal(li, x);
            for (size_t k = 0; k < lv.labels.size(); ++k) {
                int y = lv.labels[k][x];
                Perm s = strip_step(li, y, ux.then(lv.labels[k]));
                if (s.is_identity())
                    continue;
                auto [res, at] = [&] {
                    Perm g = std::move(s);
                    for (size_t i = static_cast<size_t>(li) + 1; i < levels.size(); ++i) {
                        const Level& l2 = levels[i];
                        int z = g[l2.beta];
                        if (z == l2.beta)
                            continue;
                        if (l2.pos[static_cast<size_t>(z)] < 0)
                            return std::make_pair(std::move(g), static_cast<int>(i));
                        g = strip_step(static_cast<int>(i), z, std::move(g));
                    }
                    return std::make_pair(std::move(g), static_cast<int>(levels.size()));
                }();
                if (res.is_identity())
                    continue;
                int at2 = residue_level(res, std::max(at, li + 1));
                add_generator(at2, res);
                return at2;
            }
        }
        return -1;
    }

    void deterministic_close() {
        int i = static_cast<int>(levels.size()) - 1;
        while (i >= 0) {
            int added_at = verify_level(i);
            if (added_at < 0)
                --i;
            else
                i = std::min(added_at, static_cast<int>(levels.size()) - 1);
        }
        recompute_order();
        complete = true;
    }
};

} // namespace detail

using detail::StabChain;

namespace {

std::vector<Perm> sanitize_gens(std::vector<Perm> gens, bool allow_identity_only) {
    if (gens.empty())
        throw GroupError("empty generator list");
    int n = gens.front().degree();
    std::vector<Perm> out;
    for (const Perm& g : gens) {
        if (g.degree() != n)
            throw DegreeMismatch("generators of mixed degree");
        if (g.is_identity())
            continue;
        if (std::find(out.begin(), out.end(), g) == out.end())
            out.push_back(g);
    }
    if (out.empty() && !allow_identity_only)
        throw GroupError("no non-identity generators");
    return out;
}

std::shared_ptr<StabChain> new_chain(int degree, std::vector<Perm> gens) {
    auto c = std::make_shared<StabChain>();
    c->degree = degree;
    c->input_gens = std::move(gens);
    return c;
}

} // namespace

GroupHandle GroupHandle::build(std::vector<Perm> generators) {
    return build(std::move(generators), {});
}

GroupHandle GroupHandle::build(std::vector<Perm> generators, const std::vector<int>& base_hint) {
    if (generators.empty())
        throw GroupError("empty generator list");
    int n = generators.front().degree();
    auto gens = sanitize_gens(std::move(generators), true);
    auto c = new_chain(n, gens);
    for (int b : base_hint) {
        if (b < 0 || b >= n)
            throw GroupError("base hint point out of range");
        c->append_level(b);
    }
    for (const Perm& g : c->input_gens)
        c->insert_element(g);
    c->deterministic_close();
    GroupHandle h;
    h.chain_ = std::move(c);
    return h;
}

GroupHandle GroupHandle::build_with_order(std::vector<Perm> generators, const BigInt& order_bound) {
    if (generators.empty())
        throw GroupError("empty generator list");
    int n = generators.front().degree();
    auto gens = sanitize_gens(std::move(generators), true);
    auto c = new_chain(n, gens);
    for (const Perm& g : c->input_gens)
        c->insert_element(g);
    c->recompute_order();
    if (c->order > order_bound)
        throw GroupError("claimed order bound exceeded");
    if (c->order < order_bound && !c->input_gens.empty()) {
        // randomized completion; exact because the orbit-size product is a
        // lower bound that can only meet a true upper bound at equality
        std::mt19937 rng(0x5eedbea7u);
        std::vector<Perm> acc = c->input_gens;
        while (acc.size() < 8)
            acc.push_back(acc[acc.size() % c->input_gens.size()]);
        auto stir = [&] {
            size_t i = rng() % acc.size();
            size_t j = rng() % acc.size();
            if (i == j)
                j = (j + 1) % acc.size();
            acc[i] = acc[i].then(acc[j]);
            return acc[i];
        };
        for (int burn = 0; burn < 64; ++burn)
            stir();
        long max_iters = 2000 + 80L * n;
        for (long it = 0; it < max_iters && c->order < order_bound; ++it) {
            c->insert_element(stir());
            c->recompute_order();
            if (c->order > order_bound)
                throw GroupError("claimed order bound exceeded");
        }
    }
    if (c->order != order_bound)
        throw CertificationError("randomized chain did not reach the certified order");
    c->complete = true;
    GroupHandle h;
    h.chain_ = std::move(c);
    return h;
}

GroupHandle GroupHandle::symmetric(int n) {
    if (n < 1)
        throw GroupError("degree must be positive");
    if (n == 1)
        return trivial(1);
    std::vector<Perm> gens;
    {
        std::vector<int> t(static_cast<size_t>(n));
        std::iota(t.begin(), t.end(), 0);
        std::swap(t[0], t[1]);
        gens.emplace_back(std::move(t));
    }
    if (n > 2) {
        std::vector<int> cyc(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i)
            cyc[static_cast<size_t>(i)] = (i + 1) % n;
        gens.emplace_back(std::move(cyc));
    }
    if (n <= detail::kExplicitDegree)
        return build(std::move(gens));
    return build_with_order(std::move(gens), big_factorial(n));
}

GroupHandle GroupHandle::alternating(int n) {
    if (n < 3)
        return trivial(std::max(n, 1));
    std::vector<Perm> gens;
    {
        std::vector<int> t(static_cast<size_t>(n));
        std::iota(t.begin(), t.end(), 0);
        t[0] = 1;
        t[1] = 2;
        t[2] = 0;
        gens.emplace_back(std::move(t));
    }
    if (n > 3) {
        std::vector<int> c(static_cast<size_t>(n));
        std::iota(c.begin(), c.end(), 0);
        if (n % 2 == 1) {
            for (int i = 0; i < n; ++i)
                c[static_cast<size_t>(i)] = (i + 1) % n;
        } else {
            for (int i = 1; i < n; ++i)
                c[static_cast<size_t>(i)] = i == n - 1 ? 1 : i + 1;
        }
        gens.emplace_back(std::move(c));
    }
    if (n <= detail::kExplicitDegree)
        return build(std::move(gens));
    return build_with_order(std::move(gens), big_factorial(n) / 2);
}

GroupHandle GroupHandle::trivial(int n) {
    auto c = new_chain(n, {});
    c->complete = true;
    GroupHandle h;
    h.chain_ = std::move(c);
    return h;
}

int GroupHandle::degree() const { return chain_->degree; }
const BigInt& GroupHandle::order() const { return chain_->order; }
const std::vector<Perm>& GroupHandle::generators() const { return chain_->input_gens; }

bool GroupHandle::contains(const Perm& p) const {
    if (p.degree() != degree())
        throw DegreeMismatch("contains: degree mismatch");
    return chain_->member(p);
}

bool GroupHandle::is_subgroup_of(const GroupHandle& super) const {
    if (degree() != super.degree())
        throw DegreeMismatch("is_subgroup_of: degree mismatch");
    for (const Perm& g : generators())
        if (!super.contains(g))
            return false;
    return true;
}

bool GroupHandle::same_group_as(const GroupHandle& other) const {
    return order() == other.order() && other.is_subgroup_of(*this);
}

std::vector<std::vector<int>> GroupHandle::orbits() const {
    int n = degree();
    std::vector<int> uf(static_cast<size_t>(n));
    std::iota(uf.begin(), uf.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (uf[static_cast<size_t>(x)] != x)
            x = uf[static_cast<size_t>(x)] = uf[static_cast<size_t>(uf[static_cast<size_t>(x)])];
        return x;
    };
    for (const Perm& g : generators())
        for (int i = 0; i < n; ++i) {
            int a = find(i);
            int b = find(g[i]);
            if (a != b)
                uf[static_cast<size_t>(a)] = b;
        }
    std::map<int, std::vector<int>> groups;
    for (int i = 0; i < n; ++i)
        groups[find(i)].push_back(i);
    std::vector<std::vector<int>> out;
    for (auto& [root, pts] : groups)
        out.push_back(std::move(pts));
    return out;
}

bool GroupHandle::is_transitive() const {
    return orbits().size() == 1;
}

GroupHandle GroupHandle::point_stabilizer(int pt) const {
    if (pt < 0 || pt >= degree())
        throw GroupError("point out of range");
    GroupHandle rebased = build(generators(), {pt});
    std::vector<Perm> sg;
    const auto& lv = rebased.chain_->levels;
    for (size_t i = 1; i < lv.size(); ++i)
        for (const Perm& g : lv[i].gens)
            sg.push_back(g);
    if (sg.empty())
        return trivial(degree());
    return build(std::move(sg));
}

std::vector<int> GroupHandle::fixed_points() const {
    std::vector<int> out;
    for (int i = 0; i < degree(); ++i) {
        bool fixed = true;
        for (const Perm& g : generators())
            if (g[i] != i) {
                fixed = false;
                break;
            }
        if (fixed)
            out.push_back(i);
    }
    return out;
}

bool GroupHandle::all_generators_even() const {
    for (const Perm& g : generators())
        if (g.sign() < 0)
            return false;
    return true;
}

GroupHandle even_part(const GroupHandle& g) {
    const Perm* odd = nullptr;
    for (const Perm& p : g.generators())
        if (p.sign() < 0) {
            odd = &p;
            break;
        }
    if (!odd)
        return g;
    const Perm& t = *odd;
    Perm tinv = t.inverse();
    std::vector<Perm> kgens;
    for (const Perm& p : g.generators()) {
        if (p.sign() > 0) {
            kgens.push_back(p);
            kgens.push_back(tinv.then(p).then(t)); // t-conjugate, also even
        } else {
            kgens.push_back(p.then(tinv));
            kgens.push_back(t.then(p));
        }
    }
    BigInt target = g.order() / 2;
    if (g.degree() <= detail::kExplicitDegree) {
        GroupHandle k = GroupHandle::build(kgens);
        if (k.order() != target)
            throw GroupError("even part construction produced wrong order");
        return k;
    }
    return GroupHandle::build_with_order(std::move(kgens), target);
}

GroupHandle join(const GroupHandle& a, const GroupHandle& b) {
    if (a.degree() != b.degree())
        throw DegreeMismatch("join: degree mismatch");
    std::vector<Perm> gens = a.generators();
    gens.insert(gens.end(), b.generators().begin(), b.generators().end());
    if (gens.empty())
        return GroupHandle::trivial(a.degree());
    return GroupHandle::build(std::move(gens));
}

GroupHandle join_with_order(const GroupHandle& a, const GroupHandle& b, const BigInt& order_bound) {
    if (a.degree() != b.degree())
        throw DegreeMismatch("join: degree mismatch");
    std::vector<Perm> gens = a.generators();
    gens.insert(gens.end(), b.generators().begin(), b.generators().end());
    return GroupHandle::build_with_order(std::move(gens), order_bound);
}

namespace {

// Lexicographically least element of the coset H*g, computed greedily down
// a full-base (0,1,...,n-1) chain of H.
Perm canonical_coset_rep(const StabChain& hfb, Perm g) {
    for (size_t i = 0; i < hfb.levels.size(); ++i) {
        const detail::Level& lv = hfb.levels[i];
        if (lv.orbit.size() == 1)
            continue;
        int best = -1, bestimg = hfb.degree + 1;
        for (int p : lv.orbit) {
            if (g[p] < bestimg) {
                bestimg = g[p];
                best = p;
            }
        }
        g = hfb.transversal(static_cast<int>(i), best).then(g);
    }
    return g;
}

} // namespace

std::vector<Perm> coset_representatives(const GroupHandle& g, const GroupHandle& h, long cap) {
    if (g.degree() != h.degree())
        throw DegreeMismatch("coset_representatives: degree mismatch");
    if (!h.is_subgroup_of(g))
        throw NotASubgroup("coset_representatives: H is not a subgroup of G");
    BigInt index = exact_div(g.order(), h.order());
    if (index > cap)
        throw IndexCapExceeded("coset index " + to_decimal(index) + " exceeds cap " + std::to_string(cap));

    std::vector<int> full_base(static_cast<size_t>(g.degree()));
    std::iota(full_base.begin(), full_base.end(), 0);
    std::vector<Perm> hgens = h.generators();
    if (hgens.empty())
        hgens.push_back(Perm(h.degree()));
    GroupHandle hfb = GroupHandle::build(hgens, full_base);

    std::vector<Perm> reps;
    std::unordered_set<Perm, Perm::Hash> seen;
    std::deque<Perm> queue;
    Perm start = canonical_coset_rep(hfb.chain(), Perm(g.degree()));
    reps.push_back(start);
    seen.insert(start);
    queue.push_back(start);
    while (!queue.empty()) {
        Perm r = std::move(queue.front());
        queue.pop_front();
        for (const Perm& s : g.generators()) {
            Perm c = canonical_coset_rep(hfb.chain(), r.then(s));
            if (seen.insert(c).second) {
                reps.push_back(c);
                queue.push_back(c);
            }
        }
    }
    if (BigInt(static_cast<long>(reps.size())) != index)
        throw GroupError("coset enumeration internal error: found " + std::to_string(reps.size()) +
                         " cosets, expected " + to_decimal(index));
    return reps;
}

namespace {

struct BacktrackCtx {
    const StabChain* S; // iterate elements of S
    const StabChain* L; // constrain membership in L
    int n;
    std::vector<Perm> found_gens;
    GroupHandle acc;

    BacktrackCtx(int n_) : n(n_), acc(GroupHandle::trivial(n_)) {}

    void emit(const Perm& e) {
        if (e.is_identity() || acc.contains(e))
            return;
        found_gens.push_back(e);
        acc = GroupHandle::build(found_gens);
    }

    void dfs(size_t level, const Perm& outer, const Perm& tinv_l) {
        if (level == S->levels.size()) {
            emit(outer);
            return;
        }
        const detail::Level& lv = S->levels[level];
        int i = lv.beta; // full base: beta == level index
        for (int x : lv.orbit) {
            Perm new_outer = S->transversal(static_cast<int>(level), x).then(outer);
            int c = new_outer[i];
            int t = tinv_l[c];
            const detail::Level& ll = L->levels[level];
            if (ll.pos[static_cast<size_t>(t)] < 0)
                continue;
            Perm new_tinv = tinv_l.then(L->transversal(static_cast<int>(level), t).inverse());
            dfs(level + 1, new_outer, new_tinv);
        }
    }
};

} // namespace

GroupHandle intersect(const GroupHandle& a, const GroupHandle& b, int degree_cap) {
    if (a.degree() != b.degree())
        throw DegreeMismatch("intersect: degree mismatch");
    if (a.degree() > degree_cap)
        throw DegreeCapExceeded("intersect: degree " + std::to_string(a.degree()) +
                                " exceeds backtrack cap " + std::to_string(degree_cap));
    if (a.is_subgroup_of(b))
        return a;
    if (b.is_subgroup_of(a))
        return b;
    const GroupHandle& s = a.order() <= b.order() ? a : b;
    const GroupHandle& l = a.order() <= b.order() ? b : a;

    int n = a.degree();
    std::vector<int> full_base(static_cast<size_t>(n));
    std::iota(full_base.begin(), full_base.end(), 0);
    auto gens_or_id = [&](const GroupHandle& g) {
        std::vector<Perm> gs = g.generators();
        if (gs.empty())
            gs.push_back(Perm(n));
        return gs;
    };
    GroupHandle sfb = GroupHandle::build(gens_or_id(s), full_base);
    GroupHandle lfb = GroupHandle::build(gens_or_id(l), full_base);

    BacktrackCtx ctx(n);
    ctx.S = &sfb.chain();
    ctx.L = &lfb.chain();
    ctx.dfs(0, Perm(n), Perm(n));
    return ctx.acc;
}

GroupHandle normal_closure(const GroupHandle& g, const std::vector<Perm>& seed) {
    GroupHandle w = GroupHandle::build(seed);
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<Perm> wg = w.generators();
        for (const Perm& x : wg) {
            for (const Perm& c : g.generators()) {
                Perm y = x.conjugated_by(c);
                if (!w.contains(y)) {
                    wg.push_back(y);
                    w = GroupHandle::build(wg);
                    changed = true;
                }
            }
        }
    }
    return w;
}

void for_each_element(const GroupHandle& g, long max_order, const std::function<void(const Perm&)>& fn) {
    if (g.order() > max_order)
        throw GroupError("for_each_element: group too large (order " + to_decimal(g.order()) + ")");
    const StabChain& c = g.chain();
    std::function<void(size_t, const Perm&)> rec = [&](size_t level, const Perm& outer) {
        if (level == c.levels.size()) {
            fn(outer);
            return;
        }
        for (int x : c.levels[level].orbit)
            rec(level + 1, c.transversal(static_cast<int>(level), x).then(outer));
    };
    rec(0, Perm(g.degree()));
}

std::vector<int> minimal_block(const GroupHandle& g, int a, int b) {
    int n = g.degree();
    std::vector<int> uf(static_cast<size_t>(n));
    std::iota(uf.begin(), uf.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (uf[static_cast<size_t>(x)] != x)
            x = uf[static_cast<size_t>(x)] = uf[static_cast<size_t>(uf[static_cast<size_t>(x)])];
        return x;
    };
    std::deque<std::pair<int, int>> queue;
    auto unite = [&](int x, int y) {
        int rx = find(x), ry = find(y);
        if (rx != ry) {
            uf[static_cast<size_t>(rx)] = ry;
            queue.emplace_back(x, y);
        }
    };
    unite(a, b);
    while (!queue.empty()) {
        auto [x, y] = queue.front();
        queue.pop_front();
        for (const Perm& s : g.generators())
            unite(s[x], s[y]);
    }
    std::vector<int> block;
    int ra = find(a);
    for (int i = 0; i < n; ++i)
        if (find(i) == ra)
            block.push_back(i);
    return block;
}

namespace {

std::vector<std::vector<int>> partition_from_uf(int n, std::vector<int> cls) {
    std::map<int, std::vector<int>> m;
    for (int i = 0; i < n; ++i)
        m[cls[static_cast<size_t>(i)]].push_back(i);
    std::vector<std::vector<int>> blocks;
    for (auto& [k, v] : m)
        blocks.push_back(std::move(v));
    std::sort(blocks.begin(), blocks.end(),
              [](const auto& x, const auto& y) { return x.front() < y.front(); });
    return blocks;
}

std::vector<std::vector<int>> block_system_from_block(const GroupHandle& g, const std::vector<int>& block) {
    // orbit of the block; assumes it is a genuine block
    std::set<std::vector<int>> seen;
    std::deque<std::vector<int>> queue;
    std::vector<int> b0 = block;
    std::sort(b0.begin(), b0.end());
    seen.insert(b0);
    queue.push_back(b0);
    while (!queue.empty()) {
        auto cur = queue.front();
        queue.pop_front();
        for (const Perm& s : g.generators()) {
            std::vector<int> img;
            img.reserve(cur.size());
            for (int x : cur)
                img.push_back(s[x]);
            std::sort(img.begin(), img.end());
            if (seen.insert(img).second)
                queue.push_back(img);
        }
    }
    std::vector<std::vector<int>> blocks(seen.begin(), seen.end());
    std::sort(blocks.begin(), blocks.end(),
              [](const auto& x, const auto& y) { return x.front() < y.front(); });
    return blocks;
}

std::vector<std::vector<int>> join_partitions(int n, const std::vector<std::vector<int>>& p,
                                              const std::vector<std::vector<int>>& q) {
    std::vector<int> uf(static_cast<size_t>(n));
    std::iota(uf.begin(), uf.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (uf[static_cast<size_t>(x)] != x)
            x = uf[static_cast<size_t>(x)] = uf[static_cast<size_t>(uf[static_cast<size_t>(x)])];
        return x;
    };
    auto merge_blocks = [&](const std::vector<std::vector<int>>& part) {
        for (const auto& blk : part)
            for (size_t i = 1; i < blk.size(); ++i) {
                int rx = find(blk[0]), ry = find(blk[i]);
                if (rx != ry)
                    uf[static_cast<size_t>(rx)] = ry;
            }
    };
    merge_blocks(p);
    merge_blocks(q);
    std::vector<int> cls(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        cls[static_cast<size_t>(i)] = find(i);
    return partition_from_uf(n, cls);
}

} // namespace

std::vector<std::vector<std::vector<int>>> all_block_systems(const GroupHandle& g) {
    if (!g.is_transitive())
        throw GroupError("all_block_systems: group must be transitive");
    int n = g.degree();
    std::set<std::vector<std::vector<int>>> systems;
    for (int d = 1; d < n; ++d) {
        std::vector<int> blk = minimal_block(g, 0, d);
        if (static_cast<int>(blk.size()) == n || blk.size() == 1)
            continue;
        systems.insert(block_system_from_block(g, blk));
    }
    // close under partition join (coarsenings correspond to subgroup joins)
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<std::vector<std::vector<int>>> cur(systems.begin(), systems.end());
        for (size_t i = 0; i < cur.size() && !changed; ++i)
            for (size_t j = i + 1; j < cur.size() && !changed; ++j) {
                auto joined = join_partitions(n, cur[i], cur[j]);
                if (joined.size() > 1 && static_cast<int>(joined.size()) < n &&
                    systems.insert(joined).second)
                    changed = true;
            }
    }
    return {systems.begin(), systems.end()};
}

bool is_block(const GroupHandle& g, const std::vector<int>& block) {
    std::vector<int> b0 = block;
    std::sort(b0.begin(), b0.end());
    std::set<std::vector<int>> seen;
    std::deque<std::vector<int>> queue;
    seen.insert(b0);
    queue.push_back(b0);
    while (!queue.empty()) {
        auto cur = queue.front();
        queue.pop_front();
        for (const Perm& s : g.generators()) {
            std::vector<int> img;
            img.reserve(cur.size());
            for (int x : cur)
                img.push_back(s[x]);
            std::sort(img.begin(), img.end());
            if (!seen.count(img)) {
                seen.insert(img);
                queue.push_back(img);
            }
        }
    }
    std::vector<char> covered(static_cast<size_t>(g.degree()), 0);
    for (const auto& blk : seen) {
        for (int x : blk) {
            if (covered[static_cast<size_t>(x)])
                return false; // two distinct images overlap
            covered[static_cast<size_t>(x)] = 1;
        }
    }
    return true;
}

} // namespace boolattice
