#pragma once

// Test-only oracle: literal subgroup enumeration by multiplication table.
// Kept independent of the stabilizer-chain code paths it is used to check.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "boolattice/group.hpp"

namespace brute {

using boolattice::GroupHandle;
using boolattice::Perm;

struct GroupTable {
    std::vector<Perm> elements;            // index -> element
    std::map<Perm, int> index_of;
    std::vector<std::vector<int>> mul;     // mul[i][j] = index of elements[i].then(elements[j])
    std::vector<int> order_of_element;
    int identity = 0;

    explicit GroupTable(const GroupHandle& g) {
        for_each_element(g, 800, [&](const Perm& e) { elements.push_back(e); });
        std::sort(elements.begin(), elements.end());
        for (size_t i = 0; i < elements.size(); ++i)
            index_of[elements[i]] = static_cast<int>(i);
        size_t n = elements.size();
        mul.assign(n, std::vector<int>(n, 0));
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                mul[i][j] = index_of.at(elements[i].then(elements[j]));
        identity = index_of.at(Perm(g.degree()));
        order_of_element.assign(n, 1);
        for (size_t i = 0; i < n; ++i) {
            int x = static_cast<int>(i), ord = 1;
            while (x != identity) {
                x = mul[static_cast<size_t>(x)][i];
                ++ord;
            }
            order_of_element[i] = ord;
        }
    }

    int size() const { return static_cast<int>(elements.size()); }
};

using Bitset = std::vector<std::uint64_t>;

inline Bitset make_bitset(int n) { return Bitset(static_cast<size_t>((n + 63) / 64), 0); }
inline void bit_set(Bitset& b, int i) { b[static_cast<size_t>(i) / 64] |= 1ull << (i % 64); }
inline bool bit_get(const Bitset& b, int i) {
    return (b[static_cast<size_t>(i) / 64] >> (i % 64)) & 1ull;
}
inline bool bit_subset(const Bitset& a, const Bitset& b) {
    for (size_t w = 0; w < a.size(); ++w)
        if (a[w] & ~b[w])
            return false;
    return true;
}
inline int bit_count(const Bitset& b) {
    int c = 0;
    for (auto w : b)
        c += __builtin_popcountll(w);
    return c;
}

/// Subgroup generated by the given element ids, as a bitset: breadth-first
/// right multiplication by the generators (a subsemigroup of a finite group
/// is a subgroup).
inline Bitset generate(const GroupTable& t, const std::vector<int>& gen_ids) {
    Bitset in = make_bitset(t.size());
    std::vector<int> queue;
    bit_set(in, t.identity);
    queue.push_back(t.identity);
    size_t head = 0;
    while (head < queue.size()) {
        int x = queue[head++];
        for (int g : gen_ids) {
            int y = t.mul[static_cast<size_t>(x)][static_cast<size_t>(g)];
            if (!bit_get(in, y)) {
                bit_set(in, y);
                queue.push_back(y);
            }
        }
    }
    return in;
}

/// A small generating set for the subgroup given as an element bitset.
inline std::vector<int> small_gens(const GroupTable& t, const Bitset& members) {
    std::vector<int> gens;
    Bitset have = make_bitset(t.size());
    bit_set(have, t.identity);
    for (int x = 0; x < t.size(); ++x) {
        if (!bit_get(members, x) || bit_get(have, x))
            continue;
        gens.push_back(x);
        have = generate(t, gens);
    }
    return gens;
}

struct SubgroupList {
    std::vector<Bitset> members;          // sorted, deterministic
    std::vector<std::vector<int>> gens;   // small generating sets, aligned
};

/// All subgroups, as element bitsets. Every subgroup arises from a maximal
/// subgroup by adjoining one element of prime-power order, so extending by
/// representatives of the cyclic subgroups of prime-power order reaches
/// everything.
inline SubgroupList all_subgroups(const GroupTable& t) {
    // one representative per cyclic subgroup of prime-power order
    std::vector<int> reps;
    {
        std::set<Bitset> seen_cyclic;
        for (int i = 0; i < t.size(); ++i) {
            if (i == t.identity)
                continue;
            int o = t.order_of_element[static_cast<size_t>(i)];
            // keep prime-power orders only
            int p = 2;
            while (o % p != 0)
                ++p;
            int mm = o;
            while (mm % p == 0)
                mm /= p;
            if (mm != 1)
                continue;
            if (seen_cyclic.insert(generate(t, {i})).second)
                reps.push_back(i);
        }
    }
    std::map<Bitset, std::vector<int>> found;
    std::vector<Bitset> work;
    Bitset triv = generate(t, {});
    found[triv] = {};
    work.push_back(triv);
    while (!work.empty()) {
        Bitset cur = work.back();
        work.pop_back();
        std::vector<int> cur_gens = found.at(cur);
        for (int g : reps) {
            if (bit_get(cur, g))
                continue;
            std::vector<int> ext_gens = cur_gens;
            ext_gens.push_back(g);
            Bitset ext = generate(t, ext_gens);
            if (!found.count(ext)) {
                found[ext] = small_gens(t, ext);
                work.push_back(ext);
            }
        }
    }
    SubgroupList out;
    for (auto& [bits, gens] : found) {
        out.members.push_back(bits);
        out.gens.push_back(gens);
    }
    return out;
}

inline Bitset bitset_of_handle(const GroupTable& t, const GroupHandle& h) {
    Bitset b = make_bitset(t.size());
    for_each_element(h, 800, [&](const Perm& e) { bit_set(b, t.index_of.at(e)); });
    return b;
}

inline GroupHandle handle_of(const GroupTable& t, const std::vector<int>& gen_ids, int degree) {
    std::vector<Perm> gens;
    for (int i : gen_ids)
        gens.push_back(t.elements[static_cast<size_t>(i)]);
    if (gens.empty())
        gens.push_back(Perm(degree));
    return GroupHandle::build(gens);
}

} // namespace brute
