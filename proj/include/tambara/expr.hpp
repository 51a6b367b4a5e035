#pragma once

// Element expressions.
//
//   expr    := term (('+'|'-') term)*
//   term    := factor ('*' factor)*
//   factor  := atom ['^' uint]
//   atom    := int | 'X[' uint ',' uint ']' | 'F[' uint ',' uint ']'
//            | mapcall | '(' expr ')' | '-' atom
//   mapcall := ('res'|'ind'|'jnd') '(' uint ',' expr ')'     -- uint is the target level
//
// Integer literals carry no level of their own: they take the level of the
// expression they are combined with.  A level-free argument of ind/jnd is
// read at level 0, a level-free argument of res at the target level, and a
// level-free top-level expression at level 0.

#include <cctype>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tambara/errors.hpp"
#include "tambara/ring.hpp"

namespace tambara {

struct ExprNode {
    enum class Kind { Int, X, F, Add, Sub, Mul, Neg, Pow, Res, Ind, Jnd };

    Kind kind;
    Int value;              // Int
    unsigned k = 0, i = 0;  // X/F indices; k is the target level for maps
    unsigned long exp = 0;  // Pow
    std::vector<std::shared_ptr<const ExprNode>> kids;
    std::size_t begin = 0, end = 0;
};

struct ExprAST {
    GroupParams params;
    std::string source;
    std::shared_ptr<const ExprNode> root;
};

namespace expr_detail {

class Parser {
public:
    Parser(const std::string& src) : s_(src) {}

    std::shared_ptr<const ExprNode> parse()
    {
        auto e = expr();
        skip();
        if (pos_ != s_.size())
            throw SyntaxError(std::string("unexpected '") + s_[pos_] + "'", pos_);
        return e;
    }

private:
    using Node = std::shared_ptr<const ExprNode>;

    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }

    bool peek(char c)
    {
        skip();
        return pos_ < s_.size() && s_[pos_] == c;
    }

    void expect(char c)
    {
        skip();
        if (pos_ >= s_.size())
            throw SyntaxError(std::string("expected '") + c + "' but input ended", pos_);
        if (s_[pos_] != c)
            throw SyntaxError(std::string("expected '") + c + "', found '" + s_[pos_] + "'",
                              pos_);
        ++pos_;
    }

    std::string digits()
    {
        skip();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
        if (start == pos_)
            throw SyntaxError("expected an unsigned integer", start);
        return s_.substr(start, pos_ - start);
    }

    unsigned long small_uint()
    {
        const std::size_t at = pos_;
        std::string d = digits();
        if (d.size() > 9)
            throw SyntaxError("integer too large here", at);
        return std::stoul(d);
    }

    static Node make(ExprNode n) { return std::make_shared<const ExprNode>(std::move(n)); }

    Node binary(ExprNode::Kind k, Node l, Node r)
    {
        ExprNode n{k, {}, 0, 0, 0, {l, r}, l->begin, r->end};
        return make(std::move(n));
    }

    Node expr()
    {
        Node lhs = term();
        while (true) {
            if (peek('+')) {
                ++pos_;
                lhs = binary(ExprNode::Kind::Add, lhs, term());
            } else if (peek('-')) {
                ++pos_;
                lhs = binary(ExprNode::Kind::Sub, lhs, term());
            } else {
                return lhs;
            }
        }
    }

    Node term()
    {
        Node lhs = factor();
        while (peek('*')) {
            ++pos_;
            lhs = binary(ExprNode::Kind::Mul, lhs, factor());
        }
        return lhs;
    }

    Node factor()
    {
        Node base = atom();
        if (peek('^')) {
            ++pos_;
            ExprNode n{ExprNode::Kind::Pow, {}, 0, 0, small_uint(), {base}, base->begin, pos_};
            return make(std::move(n));
        }
        return base;
    }

    Node atom()
    {
        skip();
        const std::size_t start = pos_;
        if (pos_ >= s_.size())
            throw SyntaxError("unexpected end of input", pos_);
        const char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            ExprNode n{ExprNode::Kind::Int, Int(digits()), 0, 0, 0, {}, start, pos_};
            return make(std::move(n));
        }
        if (c == '-') {
            ++pos_;
            Node inner = atom();
            ExprNode n{ExprNode::Kind::Neg, {}, 0, 0, 0, {inner}, start, inner->end};
            return make(std::move(n));
        }
        if (c == '(') {
            ++pos_;
            Node inner = expr();
            expect(')');
            return inner;
        }
        if (c == 'X' || c == 'F') {
            ++pos_;
            expect('[');
            const unsigned k = static_cast<unsigned>(small_uint());
            expect(',');
            const unsigned i = static_cast<unsigned>(small_uint());
            expect(']');
            ExprNode n{c == 'X' ? ExprNode::Kind::X : ExprNode::Kind::F, {}, k, i, 0, {}, start,
                       pos_};
            return make(std::move(n));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t e = pos_;
            while (e < s_.size() && std::isalpha(static_cast<unsigned char>(s_[e])))
                ++e;
            const std::string name = s_.substr(pos_, e - pos_);
            ExprNode::Kind kind;
            if (name == "res")
                kind = ExprNode::Kind::Res;
            else if (name == "ind")
                kind = ExprNode::Kind::Ind;
            else if (name == "jnd")
                kind = ExprNode::Kind::Jnd;
            else
                throw SyntaxError("unknown name '" + name + "'", pos_);
            pos_ = e;
            expect('(');
            const unsigned target = static_cast<unsigned>(small_uint());
            expect(',');
            Node arg = expr();
            expect(')');
            ExprNode n{kind, {}, target, 0, 0, {arg}, start, pos_};
            return make(std::move(n));
        }
        throw SyntaxError(std::string("unexpected '") + c + "'", pos_);
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

class Evaluator {
public:
    Evaluator(const ExprAST& ast) : ast_(ast) {}

    Element run() { return eval(*ast_.root, std::nullopt); }

private:
    using Kind = ExprNode::Kind;

    std::string text(const ExprNode& n) const
    {
        return ast_.source.substr(n.begin, n.end - n.begin);
    }

    [[noreturn]] void level_error(const ExprNode& n, const std::string& why) const
    {
        throw LevelError(why + " in '" + text(n) + "'");
    }

    std::optional<unsigned> infer(const ExprNode& n) const
    {
        switch (n.kind) {
        case Kind::Int: return std::nullopt;
        case Kind::X:
        case Kind::F: return n.k;
        case Kind::Res:
        case Kind::Ind:
        case Kind::Jnd: return n.k;
        case Kind::Neg:
        case Kind::Pow: return infer(*n.kids[0]);
        case Kind::Add:
        case Kind::Sub:
        case Kind::Mul: {
            auto a = infer(*n.kids[0]), b = infer(*n.kids[1]);
            if (a && b && *a != *b)
                level_error(n, "operands at levels " + std::to_string(*a) + " and " +
                                   std::to_string(*b));
            return a ? a : b;
        }
        }
        return std::nullopt;
    }

    Element eval(const ExprNode& n, std::optional<unsigned> want) const
    {
        const auto& P = ast_.params;
        auto own = infer(n);
        if (own && want && *own != *want)
            level_error(n, "expression at level " + std::to_string(*own) +
                               " used where level " + std::to_string(*want) + " is required");
        const unsigned level = own ? *own : (want ? *want : 0u);
        if (level > P.r)
            level_error(n, "level " + std::to_string(level) + " exceeds rank " +
                               std::to_string(P.r));
        switch (n.kind) {
        case Kind::Int: return Element::constant(P, level, n.value);
        case Kind::X:
        case Kind::F:
            if (n.i > n.k)
                level_error(n, "index i exceeds level k");
            return n.kind == Kind::X ? Element::basis(P, n.k, n.i) : Element::f_basis(P, n.k, n.i);
        case Kind::Neg: return neg(eval(*n.kids[0], level));
        case Kind::Pow: return power(eval(*n.kids[0], level), n.exp);
        case Kind::Add: return add(eval(*n.kids[0], level), eval(*n.kids[1], level));
        case Kind::Sub: return sub(eval(*n.kids[0], level), eval(*n.kids[1], level));
        case Kind::Mul: return mul(eval(*n.kids[0], level), eval(*n.kids[1], level));
        case Kind::Res:
        case Kind::Ind:
        case Kind::Jnd: {
            const ExprNode& arg = *n.kids[0];
            auto arg_level = infer(arg);
            if (!arg_level)
                arg_level = n.kind == Kind::Res ? n.k : 0u;
            if (n.kind == Kind::Res && *arg_level < n.k)
                level_error(n, "res target above the level of its argument");
            if (n.kind != Kind::Res && *arg_level > n.k)
                level_error(n, "transfer target below the level of its argument");
            Element a = eval(arg, *arg_level);
            if (n.kind == Kind::Res)
                return res(a, n.k);
            if (n.kind == Kind::Ind)
                return ind(a, n.k);
            return jnd(a, n.k);
        }
        }
        throw InternalError("unhandled expression node");
    }

    const ExprAST& ast_;
};

} // namespace expr_detail

inline ExprAST parse_expr(const std::string& src, const GroupParams& params)
{
    ExprAST ast{params, src, nullptr};
    ast.root = expr_detail::Parser(ast.source).parse();
    return ast;
}

inline Element eval_expr(const ExprAST& ast)
{
    return expr_detail::Evaluator(ast).run();
}

inline Element eval_expr(const std::string& src, const GroupParams& params)
{
    return eval_expr(parse_expr(src, params));
}

} // namespace tambara
