// Recursive-descent parser for field elements and 2x2 matrices.
//
// Grammar:
//   expr   := term (('+'|'-') term)* ;
//   term   := factor (('*'|'/') factor)* ;
//   factor := '-' factor | base ('^' int)? ;
//   base   := int | 'q' | 't' | '(' expr ')' ;
//   matrix := '[' row ',' row ']' ;  row := '[' expr ',' expr ']' ;
//   int    := ['-'] digit+ ;
//
// Implicit multiplication is not supported; "qt" is a syntax error.
#pragma once

#include <cctype>
#include <memory>
#include <string>
#include <vector>

#include "tietze/diff_ops.hpp"
#include "tietze/errors.hpp"
#include "tietze/field.hpp"
#include "tietze/mat2.hpp"

namespace tietze {

struct ExprAst {
    enum class Kind { integer, sym_q, sym_t, add, sub, mul, div, neg, pow };

    Kind kind = Kind::integer;
    BigInt int_value;                              // integer
    long exponent = 0;                             // pow
    std::vector<std::unique_ptr<ExprAst>> children; // add/sub/mul/div: 2, neg/pow: 1

    static std::unique_ptr<ExprAst> make(Kind k) {
        auto n = std::make_unique<ExprAst>();
        n->kind = k;
        return n;
    }
};

inline FieldElem eval_ast(const ExprAst& n) {
    switch (n.kind) {
        case ExprAst::Kind::integer: return fe(qrat(BigRat(n.int_value)));
        case ExprAst::Kind::sym_q: return fe_q();
        case ExprAst::Kind::sym_t: return fe_t();
        case ExprAst::Kind::add: return eval_ast(*n.children[0]) + eval_ast(*n.children[1]);
        case ExprAst::Kind::sub: return eval_ast(*n.children[0]) - eval_ast(*n.children[1]);
        case ExprAst::Kind::mul: return eval_ast(*n.children[0]) * eval_ast(*n.children[1]);
        case ExprAst::Kind::div: {
            FieldElem d = eval_ast(*n.children[1]);
            if (d.is_zero()) throw eval_error("division by zero in expression");
            return eval_ast(*n.children[0]) / d;
        }
        case ExprAst::Kind::neg: return -eval_ast(*n.children[0]);
        case ExprAst::Kind::pow: {
            FieldElem b = eval_ast(*n.children[0]);
            if (b.is_zero() && n.exponent < 0) throw eval_error("zero raised to a negative power");
            return b.pow(n.exponent);
        }
    }
    throw internal_error("bad ast node");
}

namespace detail {

class ElemParser {
  public:
    explicit ElemParser(const std::string& src) : src_(src) {}

    std::unique_ptr<ExprAst> parse_expr_all() {
        auto e = parse_expr();
        skip_ws();
        if (pos_ != src_.size()) throw syntax_error(pos_, "unexpected trailing input");
        return e;
    }

    Mat2 parse_matrix_all() {
        skip_ws();
        expect('[', "expected '['");
        auto r1 = parse_row();
        expect(',', "expected ','");
        auto r2 = parse_row();
        skip_ws();
        if (peek() == ',') throw shape_error("matrix must be 2x2");
        expect(']', "expected ']'");
        skip_ws();
        if (pos_ != src_.size()) throw syntax_error(pos_, "unexpected trailing input");
        return {r1.first, r1.second, r2.first, r2.second};
    }

  private:
    std::pair<FieldElem, FieldElem> parse_row() {
        skip_ws();
        expect('[', "expected '['");
        FieldElem e1 = eval_ast(*parse_expr());
        expect(',', "expected ','");
        FieldElem e2 = eval_ast(*parse_expr());
        skip_ws();
        if (peek() == ',') throw shape_error("matrix rows must have 2 entries");
        expect(']', "expected ']'");
        return {e1, e2};
    }

    std::unique_ptr<ExprAst> parse_expr() {
        auto lhs = parse_term();
        for (;;) {
            skip_ws();
            if (peek() == '+' || peek() == '-') {
                char op = take();
                auto node = ExprAst::make(op == '+' ? ExprAst::Kind::add : ExprAst::Kind::sub);
                node->children.push_back(std::move(lhs));
                node->children.push_back(parse_term());
                lhs = std::move(node);
            } else {
                return lhs;
            }
        }
    }

    std::unique_ptr<ExprAst> parse_term() {
        auto lhs = parse_factor();
        for (;;) {
            skip_ws();
            if (peek() == '*' || peek() == '/') {
                char op = take();
                auto node = ExprAst::make(op == '*' ? ExprAst::Kind::mul : ExprAst::Kind::div);
                node->children.push_back(std::move(lhs));
                node->children.push_back(parse_factor());
                lhs = std::move(node);
            } else {
                return lhs;
            }
        }
    }

    std::unique_ptr<ExprAst> parse_factor() {
        skip_ws();
        if (peek() == '-') {
            take();
            auto node = ExprAst::make(ExprAst::Kind::neg);
            node->children.push_back(parse_factor());
            return node;
        }
        auto base = parse_base();
        skip_ws();
        if (peek() == '^') {
            take();
            size_t at = pos_;
            long e = parse_int_exponent(at);
            auto node = ExprAst::make(ExprAst::Kind::pow);
            node->exponent = e;
            node->children.push_back(std::move(base));
            return node;
        }
        return base;
    }

    std::unique_ptr<ExprAst> parse_base() {
        skip_ws();
        char c = peek();
        if (c == 'q' || c == 't') {
            take();
            if (std::isalnum(static_cast<unsigned char>(peek())))
                throw syntax_error(pos_, "implicit multiplication is not supported");
            return ExprAst::make(c == 'q' ? ExprAst::Kind::sym_q : ExprAst::Kind::sym_t);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            auto node = ExprAst::make(ExprAst::Kind::integer);
            node->int_value = BigInt(take_digits(), 10);
            if (std::isalpha(static_cast<unsigned char>(peek())))
                throw syntax_error(pos_, "implicit multiplication is not supported");
            return node;
        }
        if (c == '(') {
            take();
            auto e = parse_expr();
            expect(')', "expected ')'");
            return e;
        }
        throw syntax_error(pos_, "expected integer, 'q', 't' or '('");
    }

    long parse_int_exponent(size_t at) {
        skip_ws();
        bool neg = false;
        if (peek() == '-') {
            take();
            neg = true;
        }
        if (!std::isdigit(static_cast<unsigned char>(peek()))) throw non_integer_exponent(at);
        std::string digits = take_digits();
        if (digits.size() > 6) throw syntax_error(at, "exponent out of range");
        long v = std::stol(digits);
        return neg ? -v : v;
    }

    std::string take_digits() {
        std::string s;
        while (std::isdigit(static_cast<unsigned char>(peek()))) s.push_back(take());
        return s;
    }

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }
    char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }
    char take() { return src_[pos_++]; }
    void expect(char c, const std::string& msg) {
        skip_ws();
        if (peek() != c) throw syntax_error(pos_, msg);
        take();
    }

    const std::string& src_;
    size_t pos_ = 0;
};

} // namespace detail

inline std::unique_ptr<ExprAst> parse_ast(const std::string& src) {
    return detail::ElemParser(src).parse_expr_all();
}

inline FieldElem parse_elem(const std::string& src) { return eval_ast(*parse_ast(src)); }

inline Mat2 parse_matrix(const std::string& src) { return detail::ElemParser(src).parse_matrix_all(); }

// Operator spec strings: "shift:<elem in Q(q)>", "qdilation", "mahler:<p>".
inline DiffOp parse_op_spec(const std::string& spec) {
    if (spec == "qdilation") return DiffOp::q_dilation();
    if (spec.rfind("shift:", 0) == 0) {
        FieldElem c = parse_elem(spec.substr(6));
        if (!(c.is_polynomial() && c.num().is_constant()))
            throw error("shift constant must lie in Q(q): " + spec);
        return DiffOp::shift(c.num().coeff(0));
    }
    if (spec.rfind("mahler:", 0) == 0) {
        const std::string arg = spec.substr(7);
        if (arg.empty() || arg.find_first_not_of("0123456789") != std::string::npos)
            throw error("Mahler exponent must be a positive integer: " + spec);
        return DiffOp::mahler(std::stol(arg));
    }
    throw error("unknown operator spec '" + spec + "' (expected shift:<c>, qdilation or mahler:<p>)");
}

} // namespace tietze
