#include "boolattice/structures.hpp"

#include "boolattice/registry.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <set>

namespace boolattice {

std::string ambient_name(Ambient a) { return a == Ambient::Sym ? "sym" : "alt"; }

GroupHandle ambient_group(Ambient a, int n) {
    return a == Ambient::Sym ? GroupHandle::symmetric(n) : GroupHandle::alternating(n);
}

Partition::Partition(int n_, std::vector<std::vector<int>> blocks_) : n(n_), blocks(std::move(blocks_)) {
    std::vector<char> seen(static_cast<size_t>(n), 0);
    for (auto& b : blocks) {
        if (b.empty())
            throw GroupError("partition with empty block");
        std::sort(b.begin(), b.end());
        for (int x : b) {
            if (x < 0 || x >= n || seen[static_cast<size_t>(x)])
                throw GroupError("blocks do not partition the domain");
            seen[static_cast<size_t>(x)] = 1;
        }
    }
    for (char c : seen)
        if (!c)
            throw GroupError("blocks do not cover the domain");
    std::sort(blocks.begin(), blocks.end(),
              [](const auto& x, const auto& y) { return x.front() < y.front(); });
}

bool Partition::is_regular() const {
    for (const auto& b : blocks)
        if (b.size() != blocks.front().size())
            return false;
    return true;
}

int Partition::block_size() const {
    if (!is_regular())
        throw GroupError("partition is not regular");
    return static_cast<int>(blocks.front().size());
}

bool Partition::is_trivial() const {
    return blocks.size() == 1 || static_cast<int>(blocks.size()) == n;
}

int Partition::block_of(int point) const {
    for (size_t i = 0; i < blocks.size(); ++i)
        if (std::binary_search(blocks[i].begin(), blocks[i].end(), point))
            return static_cast<int>(i);
    throw GroupError("point outside partition domain");
}

bool refines(const Partition& s1, const Partition& s2) {
    if (s1.n != s2.n)
        throw DegreeMismatch("partitions on different domains");
    std::vector<int> owner(static_cast<size_t>(s2.n));
    for (size_t i = 0; i < s2.blocks.size(); ++i)
        for (int x : s2.blocks[i])
            owner[static_cast<size_t>(x)] = static_cast<int>(i);
    for (const auto& blk : s1.blocks) {
        size_t covered = 0;
        std::set<int> ids;
        for (int x : blk)
            ids.insert(owner[static_cast<size_t>(x)]);
        for (int id : ids)
            covered += s2.blocks[static_cast<size_t>(id)].size();
        if (covered != blk.size())
            return false;
    }
    return true;
}

RegularPartition::RegularPartition(int n_, std::vector<std::vector<int>> blocks_)
    : Partition(n_, std::move(blocks_)) {
    if (!is_regular())
        throw GroupError("not a regular partition");
}

RegularPartition RegularPartition::canonical(int a, int b) {
    if (a < 1 || b < 1)
        throw GroupError("bad partition shape");
    std::vector<std::vector<int>> blocks(static_cast<size_t>(b));
    for (int t = 0; t < b; ++t)
        for (int i = 0; i < a; ++i)
            blocks[static_cast<size_t>(t)].push_back(t * a + i);
    return RegularPartition(a * b, std::move(blocks));
}

bool stabilizes(const Perm& g, const Partition& p) {
    std::vector<int> owner(static_cast<size_t>(p.n));
    for (size_t i = 0; i < p.blocks.size(); ++i)
        for (int x : p.blocks[i])
            owner[static_cast<size_t>(x)] = static_cast<int>(i);
    for (const auto& blk : p.blocks) {
        int target = owner[static_cast<size_t>(g[blk.front()])];
        if (p.blocks[static_cast<size_t>(target)].size() != blk.size())
            return false;
        for (int x : blk)
            if (owner[static_cast<size_t>(g[x])] != target)
                return false;
    }
    return true;
}

namespace {

Perm cycle_perm(int n, const std::vector<int>& cyc) {
    std::vector<int> img(static_cast<size_t>(n));
    std::iota(img.begin(), img.end(), 0);
    for (size_t i = 0; i < cyc.size(); ++i)
        img[static_cast<size_t>(cyc[i])] = cyc[(i + 1) % cyc.size()];
    return Perm(std::move(img));
}

void append_sym_gens_on(std::vector<Perm>& gens, int n, const std::vector<int>& pts) {
    if (pts.size() < 2)
        return;
    gens.push_back(cycle_perm(n, {pts[0], pts[1]}));
    if (pts.size() > 2)
        gens.push_back(cycle_perm(n, pts));
}

GroupHandle finish_stabilizer(std::vector<Perm> gens, int n, Ambient ambient, const BigInt& sym_order) {
    if (gens.empty())
        gens.push_back(Perm(n));
    GroupHandle sym_stab = n <= 64 ? GroupHandle::build(std::move(gens))
                                   : GroupHandle::build_with_order(std::move(gens), sym_order);
    if (sym_stab.order() != sym_order)
        throw GroupError("stabilizer order check failed: got " + to_decimal(sym_stab.order()) +
                         ", expected " + to_decimal(sym_order));
    return ambient == Ambient::Sym ? sym_stab : even_part(sym_stab);
}

} // namespace

BigInt partition_stabilizer_sym_order(int a, int b) {
    return big_factorial(b) * big_pow(big_factorial(a), b);
}

GroupHandle partition_stabilizer(const RegularPartition& p, Ambient ambient) {
    const int n = p.n;
    const int a = p.a();
    const int b = p.b();
    std::vector<Perm> gens;
    append_sym_gens_on(gens, n, p.blocks.front());
    if (b >= 2) {
        // aligned swap of the first two blocks, aligned cycle of all blocks
        std::vector<int> img(static_cast<size_t>(n));
        std::iota(img.begin(), img.end(), 0);
        for (int i = 0; i < a; ++i) {
            img[static_cast<size_t>(p.blocks[0][static_cast<size_t>(i)])] = p.blocks[1][static_cast<size_t>(i)];
            img[static_cast<size_t>(p.blocks[1][static_cast<size_t>(i)])] = p.blocks[0][static_cast<size_t>(i)];
        }
        gens.emplace_back(std::move(img));
        if (b > 2) {
            std::vector<int> img2(static_cast<size_t>(n));
            for (int t = 0; t < b; ++t)
                for (int i = 0; i < a; ++i)
                    img2[static_cast<size_t>(p.blocks[static_cast<size_t>(t)][static_cast<size_t>(i)])] =
                        p.blocks[static_cast<size_t>((t + 1) % b)][static_cast<size_t>(i)];
            gens.emplace_back(std::move(img2));
        }
    }
    for (const Perm& g : gens)
        if (!stabilizes(g, p))
            throw GroupError("partition stabilizer generator sanity check failed");
    return finish_stabilizer(std::move(gens), n, ambient, partition_stabilizer_sym_order(a, b));
}

GroupHandle subset_stabilizer(const std::vector<int>& gamma, int n, Ambient ambient) {
    if (gamma.empty() || static_cast<int>(gamma.size()) >= n)
        throw GroupError("subset must be a proper nonempty part of the domain");
    std::vector<char> in(static_cast<size_t>(n), 0);
    for (int x : gamma) {
        if (x < 0 || x >= n)
            throw GroupError("subset point out of range");
        in[static_cast<size_t>(x)] = 1;
    }
    std::vector<int> gsorted = gamma, rest;
    std::sort(gsorted.begin(), gsorted.end());
    for (int i = 0; i < n; ++i)
        if (!in[static_cast<size_t>(i)])
            rest.push_back(i);
    std::vector<Perm> gens;
    append_sym_gens_on(gens, n, gsorted);
    append_sym_gens_on(gens, n, rest);
    BigInt sym_order = big_factorial(static_cast<long>(gsorted.size())) *
                       big_factorial(static_cast<long>(rest.size()));
    return finish_stabilizer(std::move(gens), n, ambient, sym_order);
}

ProductStructure::ProductStructure(int m_, int k_, std::vector<RegularPartition> comps)
    : m(m_), k(k_), components(std::move(comps)) {
    if (m < 5 || k < 2)
        throw GroupError("product structure needs m >= 5 and k >= 2");
    if (static_cast<int>(components.size()) != k)
        throw GroupError("component count mismatch");
    long npts = 1;
    for (int i = 0; i < k; ++i)
        npts *= m;
    for (const auto& c : components) {
        if (c.n != npts || c.b() != m)
            throw GroupError("component partitions must have m blocks of size m^(k-1)");
    }
    // chamber injectivity
    std::set<std::vector<int>> chambers;
    for (int x = 0; x < static_cast<int>(npts); ++x) {
        std::vector<int> ch;
        ch.reserve(static_cast<size_t>(k));
        for (const auto& c : components)
            ch.push_back(c.block_of(x));
        if (!chambers.insert(ch).second)
            throw GroupError("chamber map is not injective");
    }
}

bool ProductStructure::operator==(const ProductStructure& o) const {
    if (m != o.m || k != o.k)
        return false;
    std::set<std::vector<std::vector<int>>> a, b;
    for (const auto& c : components)
        a.insert(c.blocks);
    for (const auto& c : o.components)
        b.insert(c.blocks);
    return a == b;
}

ProductStructure ProductStructure::canonical(int m, int k) {
    long n = 1;
    for (int i = 0; i < k; ++i)
        n *= m;
    std::vector<RegularPartition> comps;
    long stride = 1;
    for (int i = 0; i < k; ++i) {
        std::vector<std::vector<int>> blocks(static_cast<size_t>(m));
        for (long x = 0; x < n; ++x)
            blocks[static_cast<size_t>((x / stride) % m)].push_back(static_cast<int>(x));
        comps.emplace_back(static_cast<int>(n), std::move(blocks));
        stride *= m;
    }
    return ProductStructure(m, k, std::move(comps));
}

bool stabilizes(const Perm& g, const ProductStructure& f) {
    std::set<std::vector<std::vector<int>>> comps;
    for (const auto& c : f.components)
        comps.insert(c.blocks);
    for (const auto& c : f.components) {
        std::vector<std::vector<int>> img;
        for (const auto& blk : c.blocks) {
            std::vector<int> ib;
            ib.reserve(blk.size());
            for (int x : blk)
                ib.push_back(g[x]);
            std::sort(ib.begin(), ib.end());
            img.push_back(std::move(ib));
        }
        std::sort(img.begin(), img.end(),
                  [](const auto& x, const auto& y) { return x.front() < y.front(); });
        if (!comps.count(img))
            return false;
    }
    return true;
}

BigInt product_stabilizer_sym_order(int m, int k) {
    return big_factorial(k) * big_pow(big_factorial(m), k);
}

namespace {

// Point <-> chamber tables for a product structure.
struct ChamberTables {
    int n, m, k;
    std::vector<std::vector<int>> chamber_of; // point -> k block ids
    std::map<std::vector<int>, int> point_of;

    explicit ChamberTables(const ProductStructure& f) {
        n = f.n();
        m = f.m;
        k = f.k;
        chamber_of.assign(static_cast<size_t>(n), {});
        std::vector<std::vector<int>> owner(static_cast<size_t>(f.k));
        for (int i = 0; i < k; ++i) {
            owner[static_cast<size_t>(i)].assign(static_cast<size_t>(n), 0);
            for (size_t bidx = 0; bidx < f.components[static_cast<size_t>(i)].blocks.size(); ++bidx)
                for (int x : f.components[static_cast<size_t>(i)].blocks[bidx])
                    owner[static_cast<size_t>(i)][static_cast<size_t>(x)] = static_cast<int>(bidx);
        }
        for (int x = 0; x < n; ++x) {
            std::vector<int> ch(static_cast<size_t>(k));
            for (int i = 0; i < k; ++i)
                ch[static_cast<size_t>(i)] = owner[static_cast<size_t>(i)][static_cast<size_t>(x)];
            point_of[ch] = x;
            chamber_of[static_cast<size_t>(x)] = std::move(ch);
        }
    }

    Perm from_chamber_map(const std::function<std::vector<int>(const std::vector<int>&)>& fn) const {
        std::vector<int> img(static_cast<size_t>(n));
        for (int x = 0; x < n; ++x)
            img[static_cast<size_t>(x)] = point_of.at(fn(chamber_of[static_cast<size_t>(x)]));
        return Perm(std::move(img));
    }
};

} // namespace

GroupHandle product_stabilizer(const ProductStructure& f, Ambient ambient) {
    ChamberTables tab(f);
    std::vector<Perm> gens;
    // Sym(m) on coordinate 0
    gens.push_back(tab.from_chamber_map([&](const std::vector<int>& ch) {
        auto c = ch;
        if (c[0] == 0)
            c[0] = 1;
        else if (c[0] == 1)
            c[0] = 0;
        return c;
    }));
    gens.push_back(tab.from_chamber_map([&](const std::vector<int>& ch) {
        auto c = ch;
        c[0] = (c[0] + 1) % f.m;
        return c;
    }));
    // coordinate permutations
    gens.push_back(tab.from_chamber_map([&](const std::vector<int>& ch) {
        auto c = ch;
        std::swap(c[0], c[1]);
        return c;
    }));
    if (f.k > 2)
        gens.push_back(tab.from_chamber_map([&](const std::vector<int>& ch) {
            std::vector<int> c(ch.size());
            for (size_t i = 0; i < ch.size(); ++i)
                c[(i + 1) % ch.size()] = ch[i];
            return c;
        }));
    for (const Perm& g : gens)
        if (!stabilizes(g, f))
            throw GroupError("product stabilizer generator sanity check failed");
    return finish_stabilizer(std::move(gens), tab.n, ambient, product_stabilizer_sym_order(f.m, f.k));
}

GroupHandle product_stabilizer_kernel(const ProductStructure& f) {
    ChamberTables tab(f);
    std::vector<Perm> gens;
    for (int i = 0; i < f.k; ++i) {
        gens.push_back(tab.from_chamber_map([&](const std::vector<int>& ch) {
            auto c = ch;
            if (c[static_cast<size_t>(i)] == 0)
                c[static_cast<size_t>(i)] = 1;
            else if (c[static_cast<size_t>(i)] == 1)
                c[static_cast<size_t>(i)] = 0;
            return c;
        }));
        gens.push_back(tab.from_chamber_map([&](const std::vector<int>& ch) {
            auto c = ch;
            c[static_cast<size_t>(i)] = (c[static_cast<size_t>(i)] + 1) % f.m;
            return c;
        }));
    }
    for (const Perm& g : gens)
        for (const auto& comp : f.components)
            if (!stabilizes(g, comp))
                throw GroupError("kernel generator sanity check failed");
    BigInt order = big_pow(big_factorial(f.m), f.k);
    return tab.n <= 64 ? GroupHandle::build(std::move(gens))
                       : GroupHandle::build_with_order(std::move(gens), order);
}

bool product_order_leq(const ProductStructure& f, const ProductStructure& f2) {
    if (f.n() != f2.n())
        throw DegreeMismatch("product structures on different domains");
    if (f2.k % f.k != 0)
        return false;
    int s = f2.k / f.k;
    // comp[i][j]: component i of f refines component j of f2, i.e. every
    // block of f2's component is a union of blocks of f's component
    std::vector<std::vector<char>> comp(static_cast<size_t>(f.k),
                                        std::vector<char>(static_cast<size_t>(f2.k), 0));
    for (int i = 0; i < f.k; ++i)
        for (int j = 0; j < f2.k; ++j)
            comp[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                refines(f2.components[static_cast<size_t>(j)], f.components[static_cast<size_t>(i)]);
    // assign each j to an i, s per i
    std::vector<int> quota(static_cast<size_t>(f.k), s);
    std::function<bool(int)> rec = [&](int j) {
        if (j == f2.k)
            return true;
        for (int i = 0; i < f.k; ++i) {
            if (!quota[static_cast<size_t>(i)] || !comp[static_cast<size_t>(i)][static_cast<size_t>(j)])
                continue;
            --quota[static_cast<size_t>(i)];
            if (rec(j + 1))
                return true;
            ++quota[static_cast<size_t>(i)];
        }
        return false;
    };
    return rec(0);
}

PartitionChainSpec::PartitionChainSpec(int n_, std::vector<int> ladder_, Ambient ambient_)
    : n(n_), ladder(std::move(ladder_)), ambient(ambient_) {
    if (ladder.empty())
        throw GroupError("partition chain needs at least one ladder entry");
    int prev = n;
    for (int nj : ladder) {
        if (nj < 2 || prev % nj != 0 || prev / nj < 2)
            throw GroupError("ladder must decrease with quotients >= 2 and divisibility");
        prev = nj;
    }
}

RegularPartition PartitionChainSpec::sigma(int j) const {
    if (j < 1 || j > rank())
        throw GroupError("chain index out of range");
    int nj = ladder[static_cast<size_t>(j - 1)];
    return RegularPartition::canonical(n / nj, nj);
}

ProductChainSpec::ProductChainSpec(long a_, std::vector<int> bs_) : a(a_), bs(std::move(bs_)) {
    if (a < 2)
        throw GroupError("product chain needs a >= 2");
    if (bs.empty())
        throw GroupError("product chain needs at least one branching entry");
    for (int b : bs)
        if (b < 2)
            throw GroupError("branching entries must be >= 2");
    paper_scale = (a % 2 == 1) && a >= 5;
    if (n() > 10000000L)
        throw UnsupportedParameters("product chain degree too large");
}

long ProductChainSpec::b() const {
    long r = 1;
    for (int x : bs)
        r *= x;
    return r;
}

long ProductChainSpec::n() const {
    long r = 1;
    for (long i = 0; i < b(); ++i) {
        r *= a;
        if (r > 10000000L)
            throw UnsupportedParameters("product chain degree too large");
    }
    return r;
}

long ProductChainSpec::digit_run(int j) const {
    long r = 1;
    for (int i = 0; i < j - 1; ++i)
        r *= bs[static_cast<size_t>(i)];
    return r;
}

namespace {

// Partition of points by the value of the digit block [q*e, (q+1)*e) in base a.
std::vector<Partition> digit_block_partitions(long a, long bb, long e, long n) {
    long M = 1;
    for (long i = 0; i < e; ++i)
        M *= a;
    long kk = bb / e;
    std::vector<Partition> out;
    long stride = 1;
    for (long q = 0; q < kk; ++q) {
        std::map<long, std::vector<int>> blocks;
        for (long x = 0; x < n; ++x)
            blocks[(x / stride) % M].push_back(static_cast<int>(x));
        std::vector<std::vector<int>> blks;
        for (auto& [v, pts] : blocks)
            blks.push_back(std::move(pts));
        out.emplace_back(static_cast<int>(n), std::move(blks));
        stride *= M;
    }
    return out;
}

bool stabilizes_family(const Perm& g, const std::vector<Partition>& family) {
    std::set<std::vector<std::vector<int>>> set;
    for (const auto& p : family)
        set.insert(p.blocks);
    for (const auto& p : family) {
        std::vector<std::vector<int>> img;
        for (const auto& blk : p.blocks) {
            std::vector<int> ib;
            ib.reserve(blk.size());
            for (int x : blk)
                ib.push_back(g[x]);
            std::sort(ib.begin(), ib.end());
            img.push_back(std::move(ib));
        }
        std::sort(img.begin(), img.end(),
                  [](const auto& x, const auto& y) { return x.front() < y.front(); });
        if (!set.count(img))
            return false;
    }
    return true;
}

std::vector<int> validate_chain_indices(const std::vector<int>& I, int rank) {
    std::vector<int> r = I;
    std::sort(r.begin(), r.end());
    r.erase(std::unique(r.begin(), r.end()), r.end());
    for (int i : r)
        if (i < 1 || i > rank)
            throw GroupError("chain index out of range");
    return r;
}

// Imprimitive iterated-wreath generators on the consecutive-block layout:
// sizes[0] innermost points per block, then sizes[1] blocks per superblock...
std::vector<Perm> imprimitive_tower_gens(int n, const std::vector<long>& sizes) {
    std::vector<Perm> gens;
    long cum = 1;
    for (size_t t = 0; t < sizes.size(); ++t) {
        long unit = cum;        // size of the objects permuted at this level
        long count = sizes[t];  // how many of them in the first enclosing block
        // swap of the first two units
        {
            std::vector<int> img(static_cast<size_t>(n));
            std::iota(img.begin(), img.end(), 0);
            for (long x = 0; x < unit; ++x) {
                img[static_cast<size_t>(x)] = static_cast<int>(x + unit);
                img[static_cast<size_t>(x + unit)] = static_cast<int>(x);
            }
            gens.emplace_back(std::move(img));
        }
        if (count > 2) {
            std::vector<int> img(static_cast<size_t>(n));
            std::iota(img.begin(), img.end(), 0);
            for (long x = 0; x < count * unit; ++x) {
                long q = x / unit;
                long rpos = x % unit;
                long q2 = (q + 1) % count;
                img[static_cast<size_t>(x)] = static_cast<int>(q2 * unit + rpos);
            }
            gens.emplace_back(std::move(img));
        }
        cum *= count;
    }
    return gens;
}

BigInt tower_order(long n, const std::vector<long>& sizes) {
    BigInt o = 1;
    long cum = 1;
    for (long s : sizes) {
        cum *= s;
        o *= big_pow(big_factorial(s), n / cum);
    }
    return o;
}

GroupHandle build_tower(std::vector<Perm> gens, int n, const BigInt& sym_order, Ambient ambient) {
    GroupHandle sym = n <= 64 ? GroupHandle::build(std::move(gens))
                              : GroupHandle::build_with_order(std::move(gens), sym_order);
    if (sym.order() != sym_order)
        throw GroupError("chain subgroup order check failed");
    return ambient == Ambient::Sym ? sym : even_part(sym);
}

} // namespace

BigInt partition_chain_order(const PartitionChainSpec& spec, const std::vector<int>& I) {
    auto idx = validate_chain_indices(I, spec.rank());
    if (idx.empty()) {
        BigInt full = big_factorial(spec.n);
        return spec.ambient == Ambient::Sym ? full : full / 2;
    }
    std::vector<long> sizes;
    long prev = spec.n;
    for (int i : idx) {
        sizes.push_back(prev / spec.ladder[static_cast<size_t>(i - 1)]);
        prev = spec.ladder[static_cast<size_t>(i - 1)];
    }
    sizes.push_back(prev);
    BigInt sym = tower_order(spec.n, sizes);
    // the tower always contains a transposition (innermost blocks have >= 2 points)
    return spec.ambient == Ambient::Sym ? sym : sym / 2;
}

GroupHandle partition_chain_subgroup(const PartitionChainSpec& spec, const std::vector<int>& I) {
    auto idx = validate_chain_indices(I, spec.rank());
    if (idx.empty())
        return ambient_group(spec.ambient, spec.n);
    std::vector<long> sizes;
    long prev = spec.n;
    for (int i : idx) {
        sizes.push_back(prev / spec.ladder[static_cast<size_t>(i - 1)]);
        prev = spec.ladder[static_cast<size_t>(i - 1)];
    }
    sizes.push_back(prev);
    auto gens = imprimitive_tower_gens(spec.n, sizes);
    for (const Perm& g : gens)
        for (int i : idx)
            if (!stabilizes(g, spec.sigma(i)))
                throw GroupError("partition chain generator fails to stabilize its chain");
    BigInt sym = tower_order(spec.n, sizes);
    return build_tower(std::move(gens), spec.n, sym, spec.ambient);
}

BigInt partition_atom_index(const PartitionChainSpec& spec, int j) {
    if (j < 1 || j > spec.rank())
        throw GroupError("atom index out of range");
    auto nj = [&](int t) -> long {
        if (t == 0)
            return spec.n;
        if (t == spec.rank() + 1)
            return 1;
        return spec.ladder[static_cast<size_t>(t - 1)];
    };
    long hi = nj(j - 1) / nj(j + 1);
    long mid = nj(j - 1) / nj(j);
    long lo = nj(j) / nj(j + 1);
    BigInt inner = exact_div(big_factorial(hi), big_pow(big_factorial(mid), lo) * big_factorial(lo));
    return big_pow(inner, nj(j + 1));
}

std::vector<Partition> ProductChainSpec::component_partitions(int j) const {
    if (j < 1 || j > rank())
        throw GroupError("chain index out of range");
    return digit_block_partitions(a, b(), digit_run(j), n());
}

ProductStructure ProductChainSpec::structure(int j) const {
    if (j < 1 || j > rank())
        throw GroupError("chain index out of range");
    long e = digit_run(j);
    long M = 1;
    for (long i = 0; i < e; ++i)
        M *= a;
    auto parts = digit_block_partitions(a, b(), e, n());
    std::vector<RegularPartition> comps;
    for (auto& p : parts)
        comps.emplace_back(p.n, p.blocks);
    return ProductStructure(static_cast<int>(M), static_cast<int>(b() / e), std::move(comps));
}

namespace {

// Generators of the product-action tower with bottom factor the full
// symmetric (or a supplied) group on the combined digit block of size M,
// and an imprimitive Sym tower on the k = n-as-M-adic digit positions.
std::vector<Perm> product_tower_gens(long n, long M, long kk, const std::vector<long>& super_sizes,
                                     const std::vector<Perm>& bottom_gens) {
    std::vector<Perm> gens;
    // bottom factor acting on the least significant M-adic digit
    for (const Perm& s : bottom_gens) {
        std::vector<int> img(static_cast<size_t>(n));
        for (long x = 0; x < n; ++x) {
            long v = x % M;
            img[static_cast<size_t>(x)] = static_cast<int>(x - v + s[static_cast<int>(v)]);
        }
        gens.emplace_back(std::move(img));
    }
    // digit-position permutations from the imprimitive tower on kk positions
    auto pos_perms = imprimitive_tower_gens(static_cast<int>(kk), super_sizes);
    std::vector<long> mpow(static_cast<size_t>(kk + 1), 1);
    for (long q = 0; q < kk; ++q)
        mpow[static_cast<size_t>(q + 1)] = mpow[static_cast<size_t>(q)] * M;
    for (const Perm& pi : pos_perms) {
        Perm ipi = pi.inverse();
        std::vector<int> img(static_cast<size_t>(n));
        for (long x = 0; x < n; ++x) {
            long y = 0;
            for (long q = 0; q < kk; ++q) {
                long v = (x / mpow[static_cast<size_t>(ipi[static_cast<int>(q)])]) % M;
                y += v * mpow[static_cast<size_t>(q)];
            }
            img[static_cast<size_t>(x)] = static_cast<int>(y);
        }
        gens.emplace_back(std::move(img));
    }
    return gens;
}

struct TowerShape {
    long e = 1, M = 1, kk = 1;
    std::vector<long> super_sizes;
};

TowerShape tower_shape(const ProductChainSpec& spec, const std::vector<int>& idx) {
    TowerShape t;
    t.e = spec.digit_run(idx.front());
    t.M = 1;
    for (long i = 0; i < t.e; ++i)
        t.M *= spec.a;
    t.kk = spec.b() / t.e;
    for (size_t s = 0; s < idx.size(); ++s) {
        int from = idx[s];
        int to = s + 1 < idx.size() ? idx[s + 1] : spec.rank() + 1;
        long m = 1;
        for (int i = from; i < to; ++i)
            m *= spec.bs[static_cast<size_t>(i - 1)];
        t.super_sizes.push_back(m);
    }
    return t;
}

} // namespace

BigInt product_chain_order(const ProductChainSpec& spec, const std::vector<int>& I) {
    auto idx = validate_chain_indices(I, spec.rank());
    if (idx.empty())
        return big_factorial(spec.n());
    TowerShape t = tower_shape(spec, idx);
    BigInt o = big_pow(big_factorial(t.M), t.kk);
    return o * tower_order(t.kk, t.super_sizes);
}

GroupHandle product_chain_subgroup(const ProductChainSpec& spec, const std::vector<int>& I) {
    auto idx = validate_chain_indices(I, spec.rank());
    long n = spec.n();
    if (idx.empty())
        return GroupHandle::symmetric(static_cast<int>(n));
    TowerShape t = tower_shape(spec, idx);
    std::vector<Perm> bottom;
    {
        std::vector<int> img(static_cast<size_t>(t.M));
        std::iota(img.begin(), img.end(), 0);
        std::swap(img[0], img[1]);
        bottom.emplace_back(std::move(img));
        if (t.M > 2) {
            std::vector<int> img2(static_cast<size_t>(t.M));
            for (long v = 0; v < t.M; ++v)
                img2[static_cast<size_t>(v)] = static_cast<int>((v + 1) % t.M);
            bottom.emplace_back(std::move(img2));
        }
    }
    auto gens = product_tower_gens(n, t.M, t.kk, t.super_sizes, bottom);
    for (int j : idx) {
        auto fam = digit_block_partitions(spec.a, spec.b(), spec.digit_run(j), n);
        for (const Perm& g : gens)
            if (!stabilizes_family(g, fam))
                throw GroupError("product chain generator fails to stabilize its chain");
    }
    BigInt order = product_chain_order(spec, idx);
    return build_tower(std::move(gens), static_cast<int>(n), order, Ambient::Sym);
}

BigInt product_atom_index(const ProductChainSpec& spec, int j) {
    if (j < 1 || j > spec.rank())
        throw GroupError("atom index out of range");
    long tail = 1;
    for (int i = j; i < spec.rank(); ++i)
        tail *= spec.bs[static_cast<size_t>(i)];
    if (j == 1) {
        long b1 = spec.bs[0];
        long ab1 = 1;
        for (long i = 0; i < b1; ++i)
            ab1 *= spec.a;
        BigInt inner =
            exact_div(big_factorial(ab1), big_pow(big_factorial(spec.a), b1) * big_factorial(b1));
        return big_pow(inner, tail);
    }
    long bj1 = spec.bs[static_cast<size_t>(j - 2)];
    long bj = spec.bs[static_cast<size_t>(j - 1)];
    BigInt inner =
        exact_div(big_factorial(bj1 * bj), big_pow(big_factorial(bj1), bj) * big_factorial(bj));
    return big_pow(inner, tail);
}

BigInt agl_chain_order(const ProductChainSpec& spec, long p, int dprime, const std::vector<int>& I) {
    auto idx = validate_chain_indices(I, spec.rank());
    long d = dprime * spec.b();
    if (idx.empty())
        return agl_order(static_cast<int>(d), p);
    TowerShape t = tower_shape(spec, idx);
    BigInt o = big_pow(agl_order(static_cast<int>(dprime * t.e), p), t.kk);
    return o * tower_order(t.kk, t.super_sizes);
}

GroupHandle agl_chain_subgroup(const ProductChainSpec& spec, long p, int dprime,
                               const std::vector<int>& I) {
    BigInt apow = big_pow(p, dprime);
    if (apow != spec.a)
        throw UnsupportedParameters("agl chain needs a = p^d'");
    long n = spec.n();
    if (n > 81)
        throw UnsupportedParameters("agl chain supported at desk scale only (degree <= 81)");
    auto idx = validate_chain_indices(I, spec.rank());
    long d = dprime * spec.b();
    if (idx.empty())
        return build_agl(static_cast<int>(d), p);
    TowerShape t = tower_shape(spec, idx);
    GroupHandle bottom_agl = build_agl(static_cast<int>(dprime * t.e), p);
    auto gens = product_tower_gens(n, t.M, t.kk, t.super_sizes, bottom_agl.generators());
    GroupHandle full_agl = build_agl(static_cast<int>(d), p);
    for (const Perm& g : gens)
        if (!full_agl.contains(g))
            throw GroupError("agl chain generator escapes AGL_d(p)");
    for (int j : idx) {
        auto fam = digit_block_partitions(spec.a, spec.b(), spec.digit_run(j), n);
        for (const Perm& g : gens)
            if (!stabilizes_family(g, fam))
                throw GroupError("agl chain generator fails to stabilize its chain");
    }
    BigInt order = agl_chain_order(spec, p, dprime, idx);
    GroupHandle h = GroupHandle::build(gens);
    if (h.order() != order)
        throw GroupError("agl chain order check failed: got " + to_decimal(h.order()) +
                         ", expected " + to_decimal(order));
    return h;
}

} // namespace boolattice
