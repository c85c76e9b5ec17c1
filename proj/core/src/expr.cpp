#include "gop/expr.hpp"

#include <cctype>

namespace gop {

namespace {

using Kind = Expr::Kind;

ExprPtr node(Kind k, std::size_t pos, ExprPtr l = nullptr, ExprPtr r = nullptr)
{
    auto e = std::make_shared<Expr>();
    e->kind = k;
    e->pos = pos;
    e->lhs = std::move(l);
    e->rhs = std::move(r);
    return e;
}

class Parser {
public:
    explicit Parser(std::string_view s) : s_(s) {}

    ExprPtr parse()
    {
        ExprPtr e = sum();
        skip();
        if (p_ < s_.size())
            throw ParseError(std::string("unexpected '") + s_[p_] + "'", p_);
        return e;
    }

private:
    void skip()
    {
        while (p_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[p_])))
            ++p_;
    }

    bool accept(char c)
    {
        skip();
        if (p_ < s_.size() && s_[p_] == c) {
            ++p_;
            return true;
        }
        return false;
    }

    ExprPtr sum()
    {
        ExprPtr e = product();
        for (;;) {
            skip();
            const std::size_t at = p_;
            if (accept('+'))
                e = node(Kind::Add, at, e, product());
            else if (accept('-'))
                e = node(Kind::Sub, at, e, product());
            else
                return e;
        }
    }

    ExprPtr product()
    {
        ExprPtr e = unary();
        for (;;) {
            skip();
            const std::size_t at = p_;
            if (accept('*'))
                e = node(Kind::Mul, at, e, unary());
            else if (accept('/'))
                e = node(Kind::Div, at, e, unary());
            else {
                if (p_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[p_])) || s_[p_] == '('))
                    throw ParseError("juxtaposition is not allowed; write '*'", p_);
                return e;
            }
        }
    }

    ExprPtr unary()
    {
        skip();
        const std::size_t at = p_;
        if (accept('-'))
            return node(Kind::Neg, at, unary());
        return power();
    }

    ExprPtr power()
    {
        ExprPtr base = primary();
        skip();
        const std::size_t at = p_;
        if (!accept('^'))
            return base;
        skip();
        bool negative = accept('-');
        skip();
        const std::size_t digits = p_;
        while (p_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p_])))
            ++p_;
        if (digits == p_)
            throw ParseError("expected an integer exponent", p_);
        if (p_ - digits > 9)
            throw ParseError("exponent too large", digits);
        auto e = std::make_shared<Expr>();
        e->kind = Kind::Pow;
        e->pos = at;
        e->lhs = std::move(base);
        e->exponent = std::stol(std::string(s_.substr(digits, p_ - digits))) * (negative ? -1 : 1);
        return e;
    }

    ExprPtr primary()
    {
        skip();
        const std::size_t at = p_;
        if (p_ >= s_.size())
            throw ParseError("unexpected end of input", p_);
        const char c = s_[p_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (p_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p_])))
                ++p_;
            auto e = std::make_shared<Expr>();
            e->kind = Kind::Num;
            e->pos = at;
            e->value = Int(std::string(s_.substr(at, p_ - at)));
            return e;
        }
        if (c == 'z') {
            ++p_;
            return node(Kind::Z, at);
        }
        if (c == 'D') {
            ++p_;
            return node(Kind::D, at);
        }
        if (c == '(') {
            ++p_;
            ExprPtr e = sum();
            if (!accept(')'))
                throw ParseError("expected ')'", p_);
            return e;
        }
        throw ParseError(std::string("unexpected '") + c + "'", at);
    }

    std::string_view s_;
    std::size_t p_ = 0;
};

int precedence(const ExprPtr& e)
{
    switch (e->kind) {
    case Kind::Add:
    case Kind::Sub: return 1;
    case Kind::Mul:
    case Kind::Div: return 2;
    case Kind::Neg: return 3;
    case Kind::Pow: return 4;
    default: return 5;
    }
}

std::string wrap(const ExprPtr& e, int min_prec)
{
    std::string s = print_expr(e);
    return precedence(e) < min_prec ? "(" + s + ")" : s;
}

} // namespace

ExprPtr parse_operator(std::string_view src)
{
    return Parser(src).parse();
}

std::string print_expr(const ExprPtr& e)
{
    switch (e->kind) {
    case Kind::Num: return e->value.get_str();
    case Kind::Z: return "z";
    case Kind::D: return "D";
    case Kind::Neg: return "-" + wrap(e->lhs, 4);
    case Kind::Add: return wrap(e->lhs, 1) + " + " + wrap(e->rhs, 2);
    case Kind::Sub: return wrap(e->lhs, 1) + " - " + wrap(e->rhs, 2);
    case Kind::Mul: return wrap(e->lhs, 2) + "*" + wrap(e->rhs, 3);
    case Kind::Div: return wrap(e->lhs, 2) + "/" + wrap(e->rhs, 3);
    case Kind::Pow: return wrap(e->lhs, 5) + "^" + std::to_string(e->exponent);
    }
    return "";
}

bool same_tree(const ExprPtr& a, const ExprPtr& b)
{
    if (!a || !b)
        return a == b;
    return a->kind == b->kind && a->value == b->value && a->exponent == b->exponent && same_tree(a->lhs, b->lhs) &&
           same_tree(a->rhs, b->rhs);
}

DiffOp evaluate(const ExprPtr& e)
{
    switch (e->kind) {
    case Kind::Num: return DiffOp(RatFunc(Rat(e->value)));
    case Kind::Z: return DiffOp(RatFunc::z());
    case Kind::D: return DiffOp::D();
    case Kind::Neg: return -evaluate(e->lhs);
    case Kind::Add: return evaluate(e->lhs) + evaluate(e->rhs);
    case Kind::Sub: return evaluate(e->lhs) - evaluate(e->rhs);
    case Kind::Mul: return op_mul(evaluate(e->lhs), evaluate(e->rhs));
    case Kind::Div: {
        DiffOp a = evaluate(e->lhs), b = evaluate(e->rhs);
        if (a.order() > 0 || b.order() > 0)
            throw ParseError("operator D in a quotient", e->pos);
        if (b.is_zero())
            throw ParseError("division by zero", e->pos);
        return DiffOp(a.coeff(0) / b.coeff(0));
    }
    case Kind::Pow: {
        DiffOp base = evaluate(e->lhs);
        if (base.order() <= 0) {
            if (base.is_zero() && e->exponent < 0)
                throw ParseError("negative power of zero", e->pos);
            return DiffOp(base.coeff(0).pow(static_cast<int>(e->exponent)));
        }
        if (e->exponent < 0)
            throw ParseError("negative power of an operator", e->pos);
        DiffOp out(RatFunc(1));
        for (long i = 0; i < e->exponent; ++i)
            out = op_mul(out, base);
        return out;
    }
    }
    return DiffOp();
}

DiffOp parse_diffop(std::string_view src)
{
    return evaluate(parse_operator(src));
}

} // namespace gop
