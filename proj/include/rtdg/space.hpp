#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "rtdg/bigint.hpp"
#include "rtdg/errors.hpp"

namespace rtdg {

inline constexpr std::size_t kDefaultMaxPoints = 100000;

enum class SpaceKind { zq, sn, product };

/// Description of a finite space carrying the RT metric: words over Z_q,
/// permutations of {1..n} in one-line form, or tuples from a direct product
/// of alphabets of sizes q_1..q_n. Positions are 1-based in all definitions
/// and textual interfaces; coordinate storage is 0-indexed.
class SpaceSpec {
public:
    /// Placeholder spec (Z_0^0); every factory replaces it before use.
    SpaceSpec() : SpaceSpec(SpaceKind::zq, 0, 0, {}) {}

    static SpaceSpec zq(int q, int n);
    static SpaceSpec sn(int n);
    static SpaceSpec product(std::vector<int> sizes);

    /// Parses the textual form: "zq:q=3,n=4", "sn:n=5", "product:sizes=2,3,2".
    static SpaceSpec parse(const std::string& text);

    SpaceKind kind() const { return kind_; }
    int q() const;
    int n() const { return n_; }
    const std::vector<int>& sizes() const;

    /// q^n, n! or the product of the sizes; always equals the enumeration count.
    BigInt cardinality() const;

    /// Smallest realizable distance: 1 for words and tuples, 2 for permutations
    /// (two distinct permutations always differ in at least two positions).
    /// dist(space) = {min_distance(), ..., n}, empty when n < min_distance().
    int min_distance() const { return kind_ == SpaceKind::sn ? 2 : 1; }

    /// Canonical textual form, re-parseable by parse().
    std::string to_string() const;

    /// Short display name: "Z_3^4", "S_5", "X(2,3,2)".
    std::string display_name() const;

    bool operator==(const SpaceSpec&) const = default;

private:
    SpaceSpec(SpaceKind kind, int q, int n, std::vector<int> sizes)
        : kind_(kind), q_(q), n_(n), sizes_(std::move(sizes)) {}

    SpaceKind kind_;
    int q_ = 0;
    int n_ = 0;
    std::vector<int> sizes_; // product only
};

/// A point of one of the three space families. Words and product tuples use
/// values 0..q_i-1 per coordinate; permutations are stored in one-line form
/// with values 1..n.
class Point {
public:
    Point(SpaceSpec space, std::vector<int> coords);

    const SpaceSpec& space() const { return space_; }
    const std::vector<int>& coords() const { return coords_; }
    int size() const { return static_cast<int>(coords_.size()); }

    /// Value at 1-based position.
    int at(int position) const { return coords_[static_cast<std::size_t>(position - 1)]; }

    bool operator==(const Point&) const = default;

    std::string to_string() const; // comma-joined coordinates

private:
    SpaceSpec space_;
    std::vector<int> coords_;
};

/// Strictly increasing list of distances d_1 < ... < d_k. Empty sets are the
/// explicit edgeless-graph request.
class DistanceSet {
public:
    DistanceSet() = default;
    explicit DistanceSet(std::vector<int> values);

    /// Parses "1,3" (comma-separated, strictly increasing). "" is the empty set.
    static DistanceSet parse(const std::string& text);

    const std::vector<int>& values() const { return values_; }
    bool empty() const { return values_.empty(); }
    std::size_t size() const { return values_.size(); }
    int max() const { return values_.back(); } // requires nonempty
    bool contains(int d) const;

    /// Throws InvalidDistanceError when a value lies outside dist(space).
    void require_valid_for(const SpaceSpec& space) const;

    std::string to_string() const;

    bool operator==(const DistanceSet&) const = default;

private:
    std::vector<int> values_;
};

/// RT weight of a word: largest 1-based position of a nonzero coordinate,
/// 0 for the zero word.
int rt_weight_zq(const Point& x);

/// RT distance on Z_q^n: weight of the componentwise difference mod q.
/// Equals max{i : x_i != y_i}, 0 when x = y.
int rt_distance_zq(const Point& x, const Point& y);

/// RT distance on a direct product space: largest position of disagreement.
int rt_distance_product(const Point& x, const Point& y, const SpaceSpec& spec);

/// Composition (a ∘ b)(i) = a(b(i)) in one-line form.
Point perm_compose(const Point& a, const Point& b);
Point perm_invert(const Point& a);
Point perm_identity(int n);

/// RT weight of a permutation: largest non-fixed point, 0 for the identity.
int rt_weight_perm(const Point& a);

/// RT distance on S_n: weight of a^{-1} ∘ b. Equals max{i : a(i) != b(i)}.
int rt_distance_perm(const Point& a, const Point& b);

/// Dispatch on the space family of the points.
int rt_distance(const Point& x, const Point& y);

/// All points of the space, each exactly once, in canonical order: words and
/// tuples counted mixed-radix with position 1 least significant, permutations
/// in lexicographic one-line order. The index of a point in this order is its
/// vertex id everywhere in the library.
std::vector<Point> enumerate_space(const SpaceSpec& spec,
                                   std::size_t max_points = kDefaultMaxPoints);

/// Rank of a point in the enumeration order, without materializing the space.
std::size_t point_index(const Point& p);

} // namespace rtdg
