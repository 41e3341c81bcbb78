#pragma once

#include <memory>
#include <string>

#include "rtdg/bigint.hpp"
#include "rtdg/graph.hpp"
#include "rtdg/space.hpp"

namespace rtdg {

/// Symbolic graph expression over three node kinds:
///   CompleteMultipartite(r, m) — complete r-partite graph, all parts size m
///   Copies(c, E)               — disjoint union of c copies of E
///   JoinPower(E, m)            — m-fold join of E with itself
/// All multiplicities are at least 1 and may be arbitrarily large; counting
/// never leaves exact integer arithmetic.
///
/// Textual grammar (whitespace insignificant, "*" binds looser than "^"):
///   Expr := INT "*" Expr | "[" Expr "]^" INT | "K_" INT "(" INT ")"
class GraphExpr {
public:
    enum class Kind { complete_multipartite, copies, join_power };

    static GraphExpr complete_multipartite(BigInt parts, BigInt part_size);
    static GraphExpr copies(BigInt count, GraphExpr child);
    static GraphExpr join_power(GraphExpr child, BigInt power);

    Kind kind() const { return kind_; }
    const BigInt& parts() const { return a_; }      // complete_multipartite
    const BigInt& part_size() const { return b_; }  // complete_multipartite
    const BigInt& count() const { return a_; }      // copies
    const BigInt& power() const { return a_; }      // join_power
    const GraphExpr& child() const { return *child_; }

    bool operator==(const GraphExpr& other) const;

private:
    GraphExpr(Kind kind, BigInt a, BigInt b, std::shared_ptr<const GraphExpr> child)
        : kind_(kind), a_(std::move(a)), b_(std::move(b)), child_(std::move(child)) {}

    Kind kind_;
    BigInt a_;
    BigInt b_;
    std::shared_ptr<const GraphExpr> child_;
};

/// Elides unit Copies and JoinPower nodes, bottom-up; idempotent.
GraphExpr normalize(const GraphExpr& expr);

/// Closed-form decomposition of G(Z_q^n, D). An empty D gives the edgeless
/// expression Copies(q^n, K_1(1)).
GraphExpr expr_theorem_zq(int q, int n, const DistanceSet& distances);

/// Closed-form decomposition of the distance graph on a direct product of
/// alphabets of the given sizes.
GraphExpr expr_theorem_product(const std::vector<int>& sizes, const DistanceSet& distances);

/// Closed-form decomposition of G(S_n, D); D must avoid 1.
GraphExpr expr_theorem_sn(int n, const DistanceSet& distances);

/// The matching builder for the space family.
GraphExpr expr_for_space(const SpaceSpec& spec, const DistanceSet& distances);

BigInt expr_vertex_count(const GraphExpr& expr);
BigInt expr_edge_count(const GraphExpr& expr);
/// Every expression in this algebra is regular, so the degree is well defined.
BigInt expr_degree(const GraphExpr& expr);
BigInt expr_component_count(const GraphExpr& expr);
BigInt expr_chromatic(const GraphExpr& expr);

std::string expr_to_string(const GraphExpr& expr);

/// Inverse of expr_to_string up to normalization:
/// expr_parse(expr_to_string(E)) == normalize(E).
GraphExpr expr_parse(const std::string& text);

/// Concrete graph with deterministic block numbering: children laid out
/// consecutively, parts of a multipartite atom laid out consecutively.
Graph expr_evaluate(const GraphExpr& expr, std::size_t max_points = kDefaultMaxPoints);

} // namespace rtdg
