#pragma once

#include "gop/diffop.hpp"

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gop {

/// Malformed operator text; position is a 0-based character offset.
class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& what, std::size_t pos)
        : std::invalid_argument(what + " at position " + std::to_string(pos)), position(pos) {}
    std::size_t position;
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    enum class Kind { Num, Z, D, Neg, Add, Sub, Mul, Div, Pow };
    Kind kind;
    std::size_t pos = 0;
    Int value;          ///< Num
    long exponent = 0;  ///< Pow
    ExprPtr lhs, rhs;   ///< Neg and Pow use lhs only
};

/// Grammar: sum of products of signed powers of integers, z, D and
/// parenthesized subexpressions. Juxtaposition is rejected.
ExprPtr parse_operator(std::string_view src);

/// Minimal-parenthesis rendering; parsing it gives back the same tree.
std::string print_expr(const ExprPtr& e);

/// Products compose ((M*N) f = M(N f)); division needs D-free operands.
DiffOp evaluate(const ExprPtr& e);

DiffOp parse_diffop(std::string_view src);

bool same_tree(const ExprPtr& a, const ExprPtr& b);

} // namespace gop
