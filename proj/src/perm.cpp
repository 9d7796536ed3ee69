#include "boolattice/perm.hpp"

#include <algorithm>
#include <sstream>

#include "boolattice/bigint.hpp"

namespace boolattice {

BigInt exact_div(const BigInt& a, const BigInt& b) {
    if (b == 0)
        throw std::invalid_argument("exact_div: division by zero");
    BigInt q = a / b;
    if (q * b != a)
        throw std::invalid_argument("exact_div: not divisible");
    return q;
}

BigInt parse_decimal(const std::string& s) {
    return BigInt(s);
}

Perm::Perm(int degree) : img_(static_cast<size_t>(degree)) {
    if (degree < 0)
        throw PermError("negative degree");
    for (int i = 0; i < degree; ++i)
        img_[static_cast<size_t>(i)] = i;
}

Perm::Perm(std::vector<int> images) : img_(std::move(images)) {
    const int n = degree();
    std::vector<char> seen(static_cast<size_t>(n), 0);
    for (int v : img_) {
        if (v < 0 || v >= n || seen[static_cast<size_t>(v)])
            throw PermError("image array is not a bijection of {0,...,n-1}");
        seen[static_cast<size_t>(v)] = 1;
    }
}

bool Perm::is_identity() const {
    for (int i = 0; i < degree(); ++i)
        if (img_[static_cast<size_t>(i)] != i)
            return false;
    return true;
}

Perm Perm::then(const Perm& next) const {
    if (degree() != next.degree())
        throw PermError("degree mismatch in composition");
    std::vector<int> r(img_.size());
    for (size_t i = 0; i < img_.size(); ++i)
        r[i] = next.img_[static_cast<size_t>(img_[i])];
    Perm p;
    p.img_ = std::move(r);
    return p;
}

Perm Perm::inverse() const {
    std::vector<int> r(img_.size());
    for (size_t i = 0; i < img_.size(); ++i)
        r[static_cast<size_t>(img_[i])] = static_cast<int>(i);
    Perm p;
    p.img_ = std::move(r);
    return p;
}

Perm Perm::conjugated_by(const Perm& t) const {
    return t.inverse().then(*this).then(t);
}

int Perm::sign() const {
    const int n = degree();
    std::vector<char> seen(static_cast<size_t>(n), 0);
    int sgn = 1;
    for (int i = 0; i < n; ++i) {
        if (seen[static_cast<size_t>(i)])
            continue;
        int len = 0;
        for (int j = i; !seen[static_cast<size_t>(j)]; j = img_[static_cast<size_t>(j)]) {
            seen[static_cast<size_t>(j)] = 1;
            ++len;
        }
        if (len % 2 == 0)
            sgn = -sgn;
    }
    return sgn;
}

int Perm::first_moved() const {
    for (int i = 0; i < degree(); ++i)
        if (img_[static_cast<size_t>(i)] != i)
            return i;
    return -1;
}

std::string Perm::cycle_string() const {
    const int n = degree();
    std::vector<char> seen(static_cast<size_t>(n), 0);
    std::ostringstream out;
    bool any = false;
    for (int i = 0; i < n; ++i) {
        if (seen[static_cast<size_t>(i)] || img_[static_cast<size_t>(i)] == i) {
            seen[static_cast<size_t>(i)] = 1;
            continue;
        }
        any = true;
        out << '(';
        int j = i;
        bool first = true;
        while (!seen[static_cast<size_t>(j)]) {
            seen[static_cast<size_t>(j)] = 1;
            if (!first)
                out << ' ';
            out << (j + 1);
            first = false;
            j = img_[static_cast<size_t>(j)];
        }
        out << ')';
    }
    if (!any)
        return "()";
    return out.str();
}

std::string Perm::image_string() const {
    std::ostringstream out;
    out << '[';
    for (int i = 0; i < degree(); ++i) {
        if (i)
            out << ',';
        out << img_[static_cast<size_t>(i)];
    }
    out << ']';
    return out.str();
}

namespace {

Perm parse_image_list(const std::string& text, int degree) {
    std::vector<int> images;
    size_t i = 1; // past '['
    while (i < text.size() && text[i] != ']') {
        while (i < text.size() && (text[i] == ',' || std::isspace(static_cast<unsigned char>(text[i]))))
            ++i;
        if (i >= text.size() || text[i] == ']')
            break;
        size_t end = i;
        while (end < text.size() && (std::isdigit(static_cast<unsigned char>(text[end])) || text[end] == '-'))
            ++end;
        if (end == i)
            throw PermError("bad image list: " + text);
        images.push_back(std::stoi(text.substr(i, end - i)));
        i = end;
    }
    if (static_cast<int>(images.size()) != degree)
        throw PermError("image list length does not match degree");
    return Perm(std::move(images));
}

Perm parse_cycles(const std::string& text, int degree) {
    std::vector<int> images(static_cast<size_t>(degree));
    for (int i = 0; i < degree; ++i)
        images[static_cast<size_t>(i)] = i;
    size_t i = 0;
    bool saw_cycle = false;
    while (i < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
            continue;
        }
        if (text[i] != '(')
            throw PermError("bad cycle notation: " + text);
        ++i;
        std::vector<int> cyc;
        while (i < text.size() && text[i] != ')') {
            while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ','))
                ++i;
            if (i >= text.size() || text[i] == ')')
                break;
            size_t end = i;
            while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end])))
                ++end;
            if (end == i)
                throw PermError("bad cycle notation: " + text);
            int pt = std::stoi(text.substr(i, end - i)) - 1; // 1-indexed input
            if (pt < 0 || pt >= degree)
                throw PermError("cycle point out of range in " + text);
            cyc.push_back(pt);
            i = end;
        }
        if (i >= text.size())
            throw PermError("unterminated cycle in " + text);
        ++i; // past ')'
        saw_cycle = true;
        for (size_t k = 0; k < cyc.size(); ++k) {
            int from = cyc[k];
            int to = cyc[(k + 1) % cyc.size()];
            if (images[static_cast<size_t>(from)] != from)
                throw PermError("point repeated across cycles in " + text);
            images[static_cast<size_t>(from)] = to;
        }
    }
    if (!saw_cycle)
        throw PermError("empty permutation text");
    return Perm(std::move(images));
}

} // namespace

Perm Perm::parse(const std::string& text, int degree) {
    size_t i = 0;
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
        ++i;
    if (i >= text.size())
        throw PermError("empty permutation text");
    if (text[i] == '[')
        return parse_image_list(text.substr(i), degree);
    if (text.compare(i, 2, "()") == 0)
        return Perm(degree);
    return parse_cycles(text.substr(i), degree);
}

size_t Perm::Hash::operator()(const Perm& p) const {
    size_t h = 0x9e3779b97f4a7c15ull;
    for (int v : p.images()) {
        h ^= static_cast<size_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
}

int pair_index(int n, int i, int j) {
    if (i > j)
        std::swap(i, j);
    // pairs (0,1),(0,2),...,(0,n-1),(1,2),...
    return i * n - i * (i + 1) / 2 + (j - i - 1);
}

Perm induced_pair_action(const Perm& p) {
    const int n = p.degree();
    if (n < 2)
        throw PermError("pair action needs degree >= 2");
    const int m = n * (n - 1) / 2;
    std::vector<int> images(static_cast<size_t>(m));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            images[static_cast<size_t>(pair_index(n, i, j))] = pair_index(n, p[i], p[j]);
    return Perm(std::move(images));
}

} // namespace boolattice
