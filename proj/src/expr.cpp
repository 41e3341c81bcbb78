#include "rtdg/expr.hpp"

#include <cctype>
#include <utility>

#include "rtdg/errors.hpp"

namespace rtdg {

namespace {

void require_positive(const BigInt& value, const char* what) {
    if (value < 1) {
        throw Error(std::string(what) + " must be at least 1, got " + value.str());
    }
}

} // namespace

GraphExpr GraphExpr::complete_multipartite(BigInt parts, BigInt part_size) {
    require_positive(parts, "part count");
    require_positive(part_size, "part size");
    return GraphExpr(Kind::complete_multipartite, std::move(parts), std::move(part_size), nullptr);
}

GraphExpr GraphExpr::copies(BigInt count, GraphExpr child) {
    require_positive(count, "copy count");
    return GraphExpr(Kind::copies, std::move(count), 0,
                     std::make_shared<const GraphExpr>(std::move(child)));
}

GraphExpr GraphExpr::join_power(GraphExpr child, BigInt power) {
    require_positive(power, "join power");
    return GraphExpr(Kind::join_power, std::move(power), 0,
                     std::make_shared<const GraphExpr>(std::move(child)));
}

bool GraphExpr::operator==(const GraphExpr& other) const {
    if (kind_ != other.kind_ || a_ != other.a_ || b_ != other.b_) return false;
    if (!child_ && !other.child_) return true;
    return child_ && other.child_ && *child_ == *other.child_;
}

GraphExpr normalize(const GraphExpr& expr) {
    switch (expr.kind()) {
    case GraphExpr::Kind::complete_multipartite:
        return expr;
    case GraphExpr::Kind::copies: {
        GraphExpr child = normalize(expr.child());
        if (expr.count() == 1) return child;
        return GraphExpr::copies(expr.count(), std::move(child));
    }
    case GraphExpr::Kind::join_power: {
        GraphExpr child = normalize(expr.child());
        if (expr.power() == 1) return child;
        return GraphExpr::join_power(std::move(child), expr.power());
    }
    }
    throw Error("unreachable expression kind");
}

namespace {

GraphExpr edgeless(BigInt points) {
    return normalize(GraphExpr::copies(std::move(points), GraphExpr::complete_multipartite(1, 1)));
}

} // namespace

GraphExpr expr_theorem_zq(int q, int n, const DistanceSet& distances) {
    SpaceSpec spec = SpaceSpec::zq(q, n);
    distances.require_valid_for(spec);
    if (distances.empty()) return edgeless(spec.cardinality());

    const auto& d = distances.values();
    const BigInt base = q;
    // Innermost layer: complete q-partite with parts of size q^{d_1 - 1},
    // covering the q^{d_1} words supported on the first d_1 positions.
    GraphExpr e = GraphExpr::complete_multipartite(base, int_pow(base, static_cast<unsigned>(d[0] - 1)));
    for (std::size_t i = 1; i < d.size(); ++i) {
        // Positions strictly between d_{i-1} and d_i multiply the copy count;
        // position d_i itself splits the q classes that get joined.
        BigInt gap = int_pow(base, static_cast<unsigned>(d[i] - d[i - 1] - 1));
        e = GraphExpr::join_power(GraphExpr::copies(std::move(gap), std::move(e)), base);
    }
    BigInt outer = int_pow(base, static_cast<unsigned>(n - d.back()));
    return normalize(GraphExpr::copies(std::move(outer), std::move(e)));
}

GraphExpr expr_theorem_product(const std::vector<int>& sizes, const DistanceSet& distances) {
    SpaceSpec spec = SpaceSpec::product(sizes);
    distances.require_valid_for(spec);
    if (distances.empty()) return edgeless(spec.cardinality());

    // Product of alphabet sizes over 1-based positions [from, to]; 1 when empty.
    auto size_product = [&sizes](int from, int to) {
        BigInt p = 1;
        for (int i = from; i <= to; ++i) p *= sizes[static_cast<std::size_t>(i - 1)];
        return p;
    };

    const auto& d = distances.values();
    GraphExpr e = GraphExpr::complete_multipartite(sizes[static_cast<std::size_t>(d[0] - 1)],
                                                   size_product(1, d[0] - 1));
    for (std::size_t i = 1; i < d.size(); ++i) {
        BigInt gap = size_product(d[i - 1] + 1, d[i] - 1);
        e = GraphExpr::join_power(GraphExpr::copies(std::move(gap), std::move(e)),
                                  sizes[static_cast<std::size_t>(d[i] - 1)]);
    }
    BigInt outer = size_product(d.back() + 1, static_cast<int>(sizes.size()));
    return normalize(GraphExpr::copies(std::move(outer), std::move(e)));
}

GraphExpr expr_theorem_sn(int n, const DistanceSet& distances) {
    SpaceSpec spec = SpaceSpec::sn(n);
    distances.require_valid_for(spec);
    if (distances.empty()) return edgeless(spec.cardinality());

    const auto& d = distances.values();
    // Innermost layer: permutations of {1..d_1} split into d_1 classes by
    // their last symbol, each class of size (d_1 - 1)!.
    GraphExpr e = GraphExpr::complete_multipartite(d[0], factorial(static_cast<unsigned>(d[0] - 1)));
    for (std::size_t i = 1; i < d.size(); ++i) {
        BigInt gap = factorial(static_cast<unsigned>(d[i] - 1)) / factorial(static_cast<unsigned>(d[i - 1]));
        e = GraphExpr::join_power(GraphExpr::copies(std::move(gap), std::move(e)), d[i]);
    }
    BigInt outer = factorial(static_cast<unsigned>(n)) / factorial(static_cast<unsigned>(d.back()));
    return normalize(GraphExpr::copies(std::move(outer), std::move(e)));
}

GraphExpr expr_for_space(const SpaceSpec& spec, const DistanceSet& distances) {
    switch (spec.kind()) {
    case SpaceKind::zq: return expr_theorem_zq(spec.q(), spec.n(), distances);
    case SpaceKind::sn: return expr_theorem_sn(spec.n(), distances);
    case SpaceKind::product: return expr_theorem_product(spec.sizes(), distances);
    }
    throw Error("unreachable space kind");
}

BigInt expr_vertex_count(const GraphExpr& expr) {
    switch (expr.kind()) {
    case GraphExpr::Kind::complete_multipartite:
        return expr.parts() * expr.part_size();
    case GraphExpr::Kind::copies:
        return expr.count() * expr_vertex_count(expr.child());
    case GraphExpr::Kind::join_power:
        return expr.power() * expr_vertex_count(expr.child());
    }
    throw Error("unreachable expression kind");
}

BigInt expr_edge_count(const GraphExpr& expr) {
    switch (expr.kind()) {
    case GraphExpr::Kind::complete_multipartite: {
        const BigInt& r = expr.parts();
        const BigInt& m = expr.part_size();
        return r * (r - 1) / 2 * m * m;
    }
    case GraphExpr::Kind::copies:
        return expr.count() * expr_edge_count(expr.child());
    case GraphExpr::Kind::join_power: {
        const BigInt& p = expr.power();
        BigInt v = expr_vertex_count(expr.child());
        return p * expr_edge_count(expr.child()) + p * (p - 1) / 2 * v * v;
    }
    }
    throw Error("unreachable expression kind");
}

BigInt expr_degree(const GraphExpr& expr) {
    switch (expr.kind()) {
    case GraphExpr::Kind::complete_multipartite:
        return (expr.parts() - 1) * expr.part_size();
    case GraphExpr::Kind::copies:
        return expr_degree(expr.child());
    case GraphExpr::Kind::join_power:
        return expr_degree(expr.child()) + (expr.power() - 1) * expr_vertex_count(expr.child());
    }
    throw Error("unreachable expression kind");
}

BigInt expr_component_count(const GraphExpr& expr) {
    switch (expr.kind()) {
    case GraphExpr::Kind::complete_multipartite:
        return expr.parts() == 1 ? expr.part_size() : BigInt(1);
    case GraphExpr::Kind::copies:
        return expr.count() * expr_component_count(expr.child());
    case GraphExpr::Kind::join_power:
        // Joining two or more nonempty blocks always connects everything.
        return expr.power() == 1 ? expr_component_count(expr.child()) : BigInt(1);
    }
    throw Error("unreachable expression kind");
}

BigInt expr_chromatic(const GraphExpr& expr) {
    switch (expr.kind()) {
    case GraphExpr::Kind::complete_multipartite:
        return expr.parts();
    case GraphExpr::Kind::copies:
        return expr_chromatic(expr.child());
    case GraphExpr::Kind::join_power:
        // Color classes of a join never span distinct blocks.
        return expr.power() * expr_chromatic(expr.child());
    }
    throw Error("unreachable expression kind");
}

std::string expr_to_string(const GraphExpr& expr) {
    switch (expr.kind()) {
    case GraphExpr::Kind::complete_multipartite:
        return "K_" + expr.parts().str() + "(" + expr.part_size().str() + ")";
    case GraphExpr::Kind::copies:
        return expr.count().str() + "*" + expr_to_string(expr.child());
    case GraphExpr::Kind::join_power:
        return "[" + expr_to_string(expr.child()) + "]^" + expr.power().str();
    }
    throw Error("unreachable expression kind");
}

namespace {

class ExprParser {
public:
    explicit ExprParser(const std::string& text) : text_(text) {}

    GraphExpr parse() {
        GraphExpr e = parse_expr();
        skip_ws();
        if (pos_ != text_.size()) {
            throw ParseError("unexpected trailing input", pos_);
        }
        return e;
    }

private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    void expect(char c, const char* what) {
        if (peek() != c) {
            throw ParseError(std::string("expected '") + c + "' (" + what + ")", pos_);
        }
        ++pos_;
    }

    BigInt parse_int(const char* what) {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) {
            throw ParseError(std::string("expected integer (") + what + ")", pos_);
        }
        return BigInt(text_.substr(start, pos_ - start));
    }

    GraphExpr parse_expr() {
        skip_ws();
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            BigInt count = parse_int("copy count");
            skip_ws();
            expect('*', "copies");
            return GraphExpr::copies(std::move(count), parse_expr());
        }
        if (c == '[') {
            ++pos_;
            GraphExpr child = parse_expr();
            skip_ws();
            expect(']', "join power");
            skip_ws();
            expect('^', "join power");
            BigInt power = parse_int("join power");
            return GraphExpr::join_power(std::move(child), std::move(power));
        }
        if (c == 'K') {
            ++pos_;
            expect('_', "complete multipartite");
            BigInt parts = parse_int("part count");
            skip_ws();
            expect('(', "complete multipartite");
            BigInt part_size = parse_int("part size");
            skip_ws();
            expect(')', "complete multipartite");
            return GraphExpr::complete_multipartite(std::move(parts), std::move(part_size));
        }
        throw ParseError("expected expression", pos_);
    }

    const std::string& text_;
    std::size_t pos_ = 0;
};

void emit_edges(const GraphExpr& expr, std::size_t base,
                std::vector<std::pair<int, int>>& edges) {
    switch (expr.kind()) {
    case GraphExpr::Kind::complete_multipartite: {
        auto r = expr.parts().convert_to<std::size_t>();
        auto m = expr.part_size().convert_to<std::size_t>();
        for (std::size_t p1 = 0; p1 < r; ++p1) {
            for (std::size_t p2 = p1 + 1; p2 < r; ++p2) {
                for (std::size_t a = 0; a < m; ++a) {
                    for (std::size_t b = 0; b < m; ++b) {
                        edges.emplace_back(static_cast<int>(base + p1 * m + a),
                                           static_cast<int>(base + p2 * m + b));
                    }
                }
            }
        }
        return;
    }
    case GraphExpr::Kind::copies: {
        auto c = expr.count().convert_to<std::size_t>();
        auto v = expr_vertex_count(expr.child()).convert_to<std::size_t>();
        for (std::size_t i = 0; i < c; ++i) emit_edges(expr.child(), base + i * v, edges);
        return;
    }
    case GraphExpr::Kind::join_power: {
        auto p = expr.power().convert_to<std::size_t>();
        auto v = expr_vertex_count(expr.child()).convert_to<std::size_t>();
        for (std::size_t i = 0; i < p; ++i) emit_edges(expr.child(), base + i * v, edges);
        for (std::size_t i = 0; i < p; ++i) {
            for (std::size_t j = i + 1; j < p; ++j) {
                for (std::size_t a = 0; a < v; ++a) {
                    for (std::size_t b = 0; b < v; ++b) {
                        edges.emplace_back(static_cast<int>(base + i * v + a),
                                           static_cast<int>(base + j * v + b));
                    }
                }
            }
        }
        return;
    }
    }
    throw Error("unreachable expression kind");
}

} // namespace

GraphExpr expr_parse(const std::string& text) {
    return ExprParser(text).parse();
}

Graph expr_evaluate(const GraphExpr& expr, std::size_t max_points) {
    BigInt vertices = expr_vertex_count(expr);
    if (vertices > max_points) {
        throw SizeLimitError("expression has " + vertices.str() + " vertices, limit is " +
                             std::to_string(max_points));
    }
    constexpr std::size_t kMaxEdges = 100000000;
    BigInt edge_count = expr_edge_count(expr);
    if (edge_count > kMaxEdges) {
        throw SizeLimitError("expression has " + edge_count.str() + " edges, limit is " +
                             std::to_string(kMaxEdges));
    }
    std::vector<std::pair<int, int>> edges;
    edges.reserve(edge_count.convert_to<std::size_t>());
    emit_edges(expr, 0, edges);
    return Graph(vertices.convert_to<int>(), std::move(edges));
}

} // namespace rtdg
