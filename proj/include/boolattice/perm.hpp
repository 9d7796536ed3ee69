#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace boolattice {

struct PermError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A permutation of {0,...,n-1} stored as an image array.
///
/// Composition convention, used everywhere in this project: a.then(b)
/// applies a first, then b, i.e. (a.then(b))(x) = b(a(x)).
class Perm {
public:
    Perm() = default;
    explicit Perm(int degree);                 // identity
    explicit Perm(std::vector<int> images);    // validates bijectivity

    int degree() const { return static_cast<int>(img_.size()); }
    int operator[](int x) const { return img_[static_cast<size_t>(x)]; }
    std::span<const int> images() const { return img_; }

    bool is_identity() const;
    Perm then(const Perm& next) const;
    Perm inverse() const;
    Perm conjugated_by(const Perm& t) const;   // t^-1 * this * t (in "then" order)

    /// +1 for even permutations, -1 for odd, from the cycle type.
    int sign() const;

    /// Smallest moved point, or -1 for the identity.
    int first_moved() const;

    bool operator==(const Perm& o) const { return img_ == o.img_; }
    auto operator<=>(const Perm& o) const { return img_ <=> o.img_; }

    /// Cycle notation, 1-indexed, e.g. "(1 2)(3 4 5)"; "()" for the identity.
    std::string cycle_string() const;
    /// Image-list notation, 0-indexed, e.g. "[1,0,2]".
    std::string image_string() const;

    /// Parses either notation. Cycle notation is 1-indexed, image lists
    /// 0-indexed; the degree argument fixes the domain size.
    static Perm parse(const std::string& text, int degree);

    struct Hash {
        size_t operator()(const Perm& p) const;
    };

private:
    std::vector<int> img_;
};

inline Perm compose(const Perm& a, const Perm& b) { return a.then(b); }

/// Index of the unordered pair {i,j}, i<j, in lexicographic order of
/// sorted pairs over {0,...,n-1}.
int pair_index(int n, int i, int j);

/// The permutation induced on the C(n,2) unordered pairs.
Perm induced_pair_action(const Perm& p);

} // namespace boolattice
