#include "boolattice/registry.hpp"

#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

namespace boolattice {

namespace {

using nlohmann::json;

struct ShippedData {
    const char* name;
    const char* text;
};

// Shipped permutation generators. Each set is order-checked at load.
const ShippedData kShipped[] = {
    {"m12", R"json({
      "name": "m12", "degree": 12, "order": "95040",
      "note": "Mathieu group M12, transitive on 12 points",
      "generators": ["(1 4)(3 10)(5 11)(6 12)", "(1 8 9)(2 3 4)(5 12 11)(6 10 7)"]
    })json"},
    {"m11", R"json({
      "name": "m11", "degree": 11, "order": "7920",
      "note": "Mathieu group M11 on 11 points",
      "generators": ["(1 2 3 4 5 6 7 8 9 10 11)", "(3 7 11 8)(4 10 5 6)"]
    })json"},
    {"psl27", R"json({
      "name": "psl27", "degree": 7, "order": "168",
      "note": "PSL(3,2) = PSL(2,7) on the 7 points of the Fano plane",
      "generators": ["(1 2 3 4 5 6 7)", "(1 2)(3 6)"]
    })json"},
    {"psl27_deg8", R"json({
      "name": "psl27_deg8", "degree": 8, "order": "168",
      "note": "PSL(2,7) on the 8 points of the projective line over GF(7); point 8 is infinity; generators are x -> x+1 and x -> -1/x",
      "generators": ["[1,2,3,4,5,6,0,7]", "[7,6,3,2,5,4,1,0]"]
    })json"},
    {"psl2_11", R"json({
      "name": "psl2_11", "degree": 12, "order": "660",
      "note": "PSL(2,11) on the 12 points of the projective line over GF(11); point 12 is infinity",
      "generators": ["[1,2,3,4,5,6,7,8,9,10,0,11]", "[11,10,5,7,8,2,9,3,4,6,1,0]"]
    })json"},
};

GroupHandle group_from_json(const json& j) {
    if (!j.contains("degree") || !j.contains("generators"))
        throw GroupError("group spec needs 'degree' and 'generators'");
    int degree = j.at("degree").get<int>();
    std::vector<Perm> gens;
    for (const auto& g : j.at("generators"))
        gens.push_back(Perm::parse(g.get<std::string>(), degree));
    GroupHandle h = GroupHandle::build(std::move(gens));
    if (j.contains("order")) {
        BigInt expect = parse_decimal(j.at("order").get<std::string>());
        if (h.order() != expect)
            throw GroupError("group '" + j.value("name", std::string("?")) +
                             "' failed its order self-check: computed " + to_decimal(h.order()) +
                             ", shipped " + to_decimal(expect));
    }
    return h;
}

std::string data_dir_file(const std::string& name) {
    const char* dir = std::getenv("BOOLATTICE_DATA_DIR");
    if (!dir || !*dir)
        return {};
    std::string fname = name;
    for (char& c : fname)
        if (c == ':')
            c = '_';
    return std::string(dir) + "/" + fname + ".json";
}

bool split2(const std::string& s, const std::string& prefix, long& a) {
    if (s.rfind(prefix, 0) != 0)
        return false;
    a = std::stol(s.substr(prefix.size()));
    return true;
}

} // namespace

BigInt agl_order(int d, long p) {
    BigInt o = big_pow(p, d);
    BigInt pd = big_pow(p, d);
    for (int i = 0; i < d; ++i)
        o *= pd - big_pow(p, i);
    return o;
}

GroupHandle build_agl(int d, long p) {
    if (d < 1 || p < 2)
        throw GroupError("agl: need d >= 1 and prime p >= 2");
    BigInt npts = big_pow(p, d);
    if (npts > 100000)
        throw GroupError("agl: degree too large");
    int n = static_cast<int>(npts.convert_to<long>());
    auto digit = [&](int x, int k) {
        for (int i = 0; i < k; ++i)
            x /= static_cast<int>(p);
        return x % static_cast<int>(p);
    };
    auto with_digit = [&](int x, int k, int v) {
        int pk = 1;
        for (int i = 0; i < k; ++i)
            pk *= static_cast<int>(p);
        return x + (v - digit(x, k)) * pk;
    };
    std::vector<Perm> gens;
    {
        // translation by e0
        std::vector<int> img(static_cast<size_t>(n));
        for (int x = 0; x < n; ++x)
            img[static_cast<size_t>(x)] = with_digit(x, 0, (digit(x, 0) + 1) % static_cast<int>(p));
        gens.emplace_back(std::move(img));
    }
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            if (i == j)
                continue;
            // transvection x_i += x_j
            std::vector<int> img(static_cast<size_t>(n));
            for (int x = 0; x < n; ++x)
                img[static_cast<size_t>(x)] =
                    with_digit(x, i, (digit(x, i) + digit(x, j)) % static_cast<int>(p));
            gens.emplace_back(std::move(img));
        }
    if (p > 2) {
        // primitive scalar on coordinate 0
        long g0 = 0;
        for (long cand = 2; cand < p; ++cand) {
            long v = cand % p;
            int ordv = 1;
            while (v != 1) {
                v = (v * cand) % p;
                ++ordv;
            }
            if (ordv == p - 1) {
                g0 = cand;
                break;
            }
        }
        if (g0 == 0)
            throw GroupError("agl: p is not prime");
        std::vector<int> img(static_cast<size_t>(n));
        for (int x = 0; x < n; ++x)
            img[static_cast<size_t>(x)] =
                with_digit(x, 0, static_cast<int>((digit(x, 0) * g0) % p));
        gens.emplace_back(std::move(img));
    }
    GroupHandle h = n <= 64 ? GroupHandle::build(std::move(gens))
                            : GroupHandle::build_with_order(std::move(gens), agl_order(d, p));
    if (h.order() != agl_order(d, p))
        throw GroupError("agl: order self-check failed (is p prime?)");
    return h;
}

GroupHandle group_from_json_text(const std::string& json_text) {
    return group_from_json(json::parse(json_text));
}

GroupHandle group_from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw GroupError("cannot open group spec file " + path);
    json j;
    in >> j;
    return group_from_json(j);
}

GroupHandle registry_group(const std::string& name) {
    long a = 0;
    if (split2(name, "sym:", a))
        return GroupHandle::symmetric(static_cast<int>(a));
    if (split2(name, "alt:", a))
        return GroupHandle::alternating(static_cast<int>(a));
    if (split2(name, "trivial:", a))
        return GroupHandle::trivial(static_cast<int>(a));
    if (name.rfind("agl:", 0) == 0) {
        auto rest = name.substr(4);
        auto colon = rest.find(':');
        if (colon == std::string::npos)
            throw GroupError("agl spec must be agl:d:p");
        return build_agl(std::stoi(rest.substr(0, colon)), std::stol(rest.substr(colon + 1)));
    }
    std::string override_path = data_dir_file(name);
    if (!override_path.empty()) {
        std::ifstream probe(override_path);
        if (probe)
            return group_from_json_file(override_path);
    }
    for (const auto& d : kShipped)
        if (name == d.name)
            return group_from_json_text(d.text);
    throw GroupError("unknown group name '" + name + "'");
}

std::vector<std::string> registry_names() {
    std::vector<std::string> out = {"sym:<n>", "alt:<n>", "trivial:<n>", "agl:<d>:<p>"};
    for (const auto& d : kShipped)
        out.push_back(d.name);
    return out;
}

} // namespace boolattice
