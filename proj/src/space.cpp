#include "rtdg/space.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace rtdg {

namespace {

int parse_int_field(const std::string& text, std::size_t& pos) {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw ParseError("expected integer in '" + text + "'", start);
    return std::stoi(text.substr(start, pos - start));
}

void expect(const std::string& text, std::size_t& pos, const std::string& token) {
    if (text.compare(pos, token.size(), token) != 0)
        throw ParseError("expected '" + token + "' in '" + text + "'", pos);
    pos += token.size();
}

} // namespace

SpaceSpec SpaceSpec::zq(int q, int n) {
    if (q < 2) throw InvalidPointError("zq space requires q >= 2, got q=" + std::to_string(q));
    if (n < 1) throw InvalidPointError("zq space requires n >= 1, got n=" + std::to_string(n));
    return SpaceSpec(SpaceKind::zq, q, n, {});
}

SpaceSpec SpaceSpec::sn(int n) {
    if (n < 1) throw InvalidPointError("sn space requires n >= 1, got n=" + std::to_string(n));
    return SpaceSpec(SpaceKind::sn, 0, n, {});
}

SpaceSpec SpaceSpec::product(std::vector<int> sizes) {
    if (sizes.empty()) throw InvalidPointError("product space requires a nonempty sizes list");
    for (int s : sizes)
        if (s < 2)
            throw InvalidPointError("product space requires every size >= 2, got " +
                                    std::to_string(s));
    int n = static_cast<int>(sizes.size());
    return SpaceSpec(SpaceKind::product, 0, n, std::move(sizes));
}

SpaceSpec SpaceSpec::parse(const std::string& text) {
    std::size_t pos = 0;
    if (text.rfind("zq:", 0) == 0) {
        pos = 3;
        expect(text, pos, "q=");
        int q = parse_int_field(text, pos);
        expect(text, pos, ",n=");
        int n = parse_int_field(text, pos);
        if (pos != text.size()) throw ParseError("trailing input in '" + text + "'", pos);
        return zq(q, n);
    }
    if (text.rfind("sn:", 0) == 0) {
        pos = 3;
        expect(text, pos, "n=");
        int n = parse_int_field(text, pos);
        if (pos != text.size()) throw ParseError("trailing input in '" + text + "'", pos);
        return sn(n);
    }
    if (text.rfind("product:", 0) == 0) {
        pos = 8;
        expect(text, pos, "sizes=");
        std::vector<int> sizes;
        sizes.push_back(parse_int_field(text, pos));
        while (pos < text.size() && text[pos] == ',') {
            ++pos;
            sizes.push_back(parse_int_field(text, pos));
        }
        if (pos != text.size()) throw ParseError("trailing input in '" + text + "'", pos);
        return product(std::move(sizes));
    }
    throw ParseError("unknown space '" + text + "' (expected zq:..., sn:... or product:...)");
}

int SpaceSpec::q() const {
    if (kind_ != SpaceKind::zq) throw SpaceMismatchError("q is defined for zq spaces only");
    return q_;
}

const std::vector<int>& SpaceSpec::sizes() const {
    if (kind_ != SpaceKind::product)
        throw SpaceMismatchError("sizes are defined for product spaces only");
    return sizes_;
}

BigInt SpaceSpec::cardinality() const {
    switch (kind_) {
    case SpaceKind::zq:
        return int_pow(q_, static_cast<unsigned>(n_));
    case SpaceKind::sn:
        return factorial(static_cast<unsigned>(n_));
    case SpaceKind::product: {
        BigInt c = 1;
        for (int s : sizes_) c *= s;
        return c;
    }
    }
    return 0;
}

std::string SpaceSpec::to_string() const {
    std::ostringstream os;
    switch (kind_) {
    case SpaceKind::zq:
        os << "zq:q=" << q_ << ",n=" << n_;
        break;
    case SpaceKind::sn:
        os << "sn:n=" << n_;
        break;
    case SpaceKind::product:
        os << "product:sizes=";
        for (std::size_t i = 0; i < sizes_.size(); ++i) {
            if (i) os << ',';
            os << sizes_[i];
        }
        break;
    }
    return os.str();
}

std::string SpaceSpec::display_name() const {
    std::ostringstream os;
    switch (kind_) {
    case SpaceKind::zq:
        os << "Z_" << q_ << "^" << n_;
        break;
    case SpaceKind::sn:
        os << "S_" << n_;
        break;
    case SpaceKind::product:
        os << "X(";
        for (std::size_t i = 0; i < sizes_.size(); ++i) {
            if (i) os << ',';
            os << sizes_[i];
        }
        os << ")";
        break;
    }
    return os.str();
}

Point::Point(SpaceSpec space, std::vector<int> coords)
    : space_(std::move(space)), coords_(std::move(coords)) {
    if (static_cast<int>(coords_.size()) != space_.n())
        throw InvalidPointError("point has " + std::to_string(coords_.size()) +
                                " coordinates, space " + space_.display_name() + " needs " +
                                std::to_string(space_.n()));
    switch (space_.kind()) {
    case SpaceKind::zq:
        for (int v : coords_)
            if (v < 0 || v >= space_.q())
                throw InvalidPointError("coordinate " + std::to_string(v) +
                                        " outside alphabet of " + space_.display_name());
        break;
    case SpaceKind::product:
        for (std::size_t i = 0; i < coords_.size(); ++i)
            if (coords_[i] < 0 || coords_[i] >= space_.sizes()[i])
                throw InvalidPointError("coordinate " + std::to_string(coords_[i]) +
                                        " at position " + std::to_string(i + 1) +
                                        " outside alphabet of " + space_.display_name());
        break;
    case SpaceKind::sn: {
        std::vector<bool> seen(coords_.size(), false);
        for (int v : coords_) {
            if (v < 1 || v > space_.n() || seen[static_cast<std::size_t>(v - 1)])
                throw InvalidPointError("one-line form is not a permutation of 1.." +
                                        std::to_string(space_.n()));
            seen[static_cast<std::size_t>(v - 1)] = true;
        }
        break;
    }
    }
}

std::string Point::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i) os << ',';
        os << coords_[i];
    }
    return os.str();
}

DistanceSet::DistanceSet(std::vector<int> values) : values_(std::move(values)) {
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (values_[i] < 1)
            throw InvalidDistanceError("distances must be positive, got " +
                                       std::to_string(values_[i]));
        if (i > 0 && values_[i] <= values_[i - 1])
            throw InvalidDistanceError("distances must be strictly increasing");
    }
}

DistanceSet DistanceSet::parse(const std::string& text) {
    std::vector<int> values;
    std::size_t pos = 0;
    while (pos < text.size()) {
        values.push_back(parse_int_field(text, pos));
        if (pos < text.size()) {
            if (text[pos] != ',') throw ParseError("expected ',' in distance list", pos);
            ++pos;
            if (pos == text.size()) throw ParseError("trailing ',' in distance list", pos);
        }
    }
    return DistanceSet(std::move(values));
}

bool DistanceSet::contains(int d) const {
    return std::binary_search(values_.begin(), values_.end(), d);
}

void DistanceSet::require_valid_for(const SpaceSpec& space) const {
    for (int d : values_)
        if (d < space.min_distance() || d > space.n())
            throw InvalidDistanceError(std::to_string(d) + " not in dist(" +
                                       space.display_name() + ")");
}

std::string DistanceSet::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (i) os << ',';
        os << values_[i];
    }
    return os.str();
}

namespace {

void require_kind(const Point& p, SpaceKind kind, const char* op) {
    if (p.space().kind() != kind)
        throw SpaceMismatchError(std::string(op) + " applied to a point of " +
                                 p.space().display_name());
}

void require_same_space(const Point& x, const Point& y) {
    if (!(x.space() == y.space()))
        throw SpaceMismatchError("points from " + x.space().display_name() + " and " +
                                 y.space().display_name() + " cannot be combined");
}

} // namespace

int rt_weight_zq(const Point& x) {
    require_kind(x, SpaceKind::zq, "rt_weight_zq");
    const auto& c = x.coords();
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i)
        if (c[static_cast<std::size_t>(i)] != 0) return i + 1;
    return 0;
}

int rt_distance_zq(const Point& x, const Point& y) {
    require_kind(x, SpaceKind::zq, "rt_distance_zq");
    require_same_space(x, y);
    const int q = x.space().q();
    std::vector<int> diff(x.coords().size());
    for (std::size_t i = 0; i < diff.size(); ++i) {
        int d = (x.coords()[i] - y.coords()[i]) % q;
        diff[i] = d < 0 ? d + q : d;
    }
    return rt_weight_zq(Point(x.space(), std::move(diff)));
}

int rt_distance_product(const Point& x, const Point& y, const SpaceSpec& spec) {
    if (spec.kind() != SpaceKind::product)
        throw SpaceMismatchError("rt_distance_product requires a product space");
    if (!(x.space() == spec) || !(y.space() == spec))
        throw SpaceMismatchError("point does not belong to " + spec.display_name());
    for (int i = spec.n() - 1; i >= 0; --i)
        if (x.coords()[static_cast<std::size_t>(i)] != y.coords()[static_cast<std::size_t>(i)])
            return i + 1;
    return 0;
}

Point perm_compose(const Point& a, const Point& b) {
    require_kind(a, SpaceKind::sn, "perm_compose");
    require_same_space(a, b);
    std::vector<int> out(a.coords().size());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = a.coords()[static_cast<std::size_t>(b.coords()[i] - 1)];
    return Point(a.space(), std::move(out));
}

Point perm_invert(const Point& a) {
    require_kind(a, SpaceKind::sn, "perm_invert");
    std::vector<int> out(a.coords().size());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[static_cast<std::size_t>(a.coords()[i] - 1)] = static_cast<int>(i) + 1;
    return Point(a.space(), std::move(out));
}

Point perm_identity(int n) {
    std::vector<int> out(static_cast<std::size_t>(n));
    std::iota(out.begin(), out.end(), 1);
    return Point(SpaceSpec::sn(n), std::move(out));
}

int rt_weight_perm(const Point& a) {
    require_kind(a, SpaceKind::sn, "rt_weight_perm");
    const auto& c = a.coords();
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i)
        if (c[static_cast<std::size_t>(i)] != i + 1) return i + 1;
    return 0;
}

int rt_distance_perm(const Point& a, const Point& b) {
    require_kind(a, SpaceKind::sn, "rt_distance_perm");
    require_same_space(a, b);
    return rt_weight_perm(perm_compose(perm_invert(a), b));
}

int rt_distance(const Point& x, const Point& y) {
    switch (x.space().kind()) {
    case SpaceKind::zq:
        return rt_distance_zq(x, y);
    case SpaceKind::sn:
        return rt_distance_perm(x, y);
    case SpaceKind::product:
        return rt_distance_product(x, y, x.space());
    }
    return 0;
}

std::vector<Point> enumerate_space(const SpaceSpec& spec, std::size_t max_points) {
    BigInt card = spec.cardinality();
    if (card > max_points)
        throw SizeLimitError("enumeration of " + spec.display_name() + " needs " +
                             card.str() + " points, limit is " + std::to_string(max_points));
    std::size_t count = card.convert_to<std::size_t>();
    std::vector<Point> points;
    points.reserve(count);

    switch (spec.kind()) {
    case SpaceKind::zq:
    case SpaceKind::product: {
        // Mixed-radix counter, position 1 least significant.
        auto radix = [&](int i) {
            return spec.kind() == SpaceKind::zq ? spec.q()
                                                : spec.sizes()[static_cast<std::size_t>(i)];
        };
        std::vector<int> coords(static_cast<std::size_t>(spec.n()), 0);
        for (std::size_t idx = 0; idx < count; ++idx) {
            points.emplace_back(spec, coords);
            for (int i = 0; i < spec.n(); ++i) {
                if (++coords[static_cast<std::size_t>(i)] < radix(i)) break;
                coords[static_cast<std::size_t>(i)] = 0;
            }
        }
        break;
    }
    case SpaceKind::sn: {
        std::vector<int> coords(static_cast<std::size_t>(spec.n()));
        std::iota(coords.begin(), coords.end(), 1);
        do {
            points.emplace_back(spec, coords);
        } while (std::next_permutation(coords.begin(), coords.end()));
        break;
    }
    }
    return points;
}

std::size_t point_index(const Point& p) {
    const auto& spec = p.space();
    const auto& c = p.coords();
    switch (spec.kind()) {
    case SpaceKind::zq:
    case SpaceKind::product: {
        std::size_t rank = 0;
        std::size_t place = 1;
        for (int i = 0; i < spec.n(); ++i) {
            int radix = spec.kind() == SpaceKind::zq ? spec.q()
                                                     : spec.sizes()[static_cast<std::size_t>(i)];
            rank += static_cast<std::size_t>(c[static_cast<std::size_t>(i)]) * place;
            place *= static_cast<std::size_t>(radix);
        }
        return rank;
    }
    case SpaceKind::sn: {
        // Lexicographic rank via the Lehmer code.
        std::size_t rank = 0;
        std::size_t n = c.size();
        std::size_t fact = 1;
        for (std::size_t i = 2; i <= n; ++i) fact *= i;
        for (std::size_t i = 0; i < n; ++i) {
            fact /= (n - i);
            int smaller = 0;
            for (std::size_t j = i + 1; j < n; ++j)
                if (c[j] < c[i]) ++smaller;
            rank += static_cast<std::size_t>(smaller) * fact;
        }
        return rank;
    }
    }
    return 0;
}

} // namespace rtdg
