#include "qheis/expr.hpp"

#include <cctype>
#include <sstream>

namespace qheis {

namespace {

struct Token {
  enum class Kind { gen_a, gen_b, gen_t, q_sym, integer, plus, minus, star, caret, slash, lparen, rparen, end };
  Kind kind;
  size_t pos = 0;
  std::string text;
};

class Lexer {
public:
  explicit Lexer(std::string_view src) : src_(src) { advance(); }
  const Token& peek() const { return tok_; }
  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

private:
  void advance() {
    while (i_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[i_]))) ++i_;
    tok_.pos = i_;
    if (i_ >= src_.size()) {
      tok_.kind = Token::Kind::end;
      tok_.text.clear();
      return;
    }
    const char c = src_[i_];
    auto single = [&](Token::Kind k) {
      tok_.kind = k;
      tok_.text = std::string(1, c);
      ++i_;
    };
    switch (c) {
      case 'A': single(Token::Kind::gen_a); return;
      case 'B': single(Token::Kind::gen_b); return;
      case 'T': single(Token::Kind::gen_t); return;
      case 'q': single(Token::Kind::q_sym); return;
      case '+': single(Token::Kind::plus); return;
      case '-': single(Token::Kind::minus); return;
      case '*': single(Token::Kind::star); return;
      case '^': single(Token::Kind::caret); return;
      case '/': single(Token::Kind::slash); return;
      case '(': single(Token::Kind::lparen); return;
      case ')': single(Token::Kind::rparen); return;
      default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t j = i_;
      while (j < src_.size() && std::isdigit(static_cast<unsigned char>(src_[j]))) ++j;
      tok_.kind = Token::Kind::integer;
      tok_.text = std::string(src_.substr(i_, j - i_));
      i_ = j;
      return;
    }
    fail(Errc::syntax_error,
         "unexpected character '" + std::string(1, c) + "' at position " + std::to_string(i_));
  }

  std::string_view src_;
  size_t i_ = 0;
  Token tok_;
};

class Parser {
public:
  explicit Parser(std::string_view src) : lex_(src) {}

  ExprPtr run() {
    ExprPtr e = expr();
    const Token& t = lex_.peek();
    if (t.kind != Token::Kind::end)
      fail(Errc::syntax_error, "unexpected trailing input at position " + std::to_string(t.pos));
    return e;
  }

private:
  static ExprPtr node(ExprNode::Kind k) {
    auto n = std::make_unique<ExprNode>();
    n->kind = k;
    return n;
  }

  ExprPtr expr() {
    ExprPtr left = term();
    while (true) {
      const Token& t = lex_.peek();
      if (t.kind != Token::Kind::plus && t.kind != Token::Kind::minus) return left;
      const bool add = t.kind == Token::Kind::plus;
      lex_.take();
      ExprPtr n = node(add ? ExprNode::Kind::add : ExprNode::Kind::sub);
      n->lhs = std::move(left);
      n->rhs = term();
      left = std::move(n);
    }
  }

  ExprPtr term() {
    ExprPtr left = factor();
    while (lex_.peek().kind == Token::Kind::star) {
      lex_.take();
      ExprPtr n = node(ExprNode::Kind::mul);
      n->lhs = std::move(left);
      n->rhs = factor();
      left = std::move(n);
    }
    return left;
  }

  ExprPtr factor() {
    ExprPtr b = base();
    if (lex_.peek().kind != Token::Kind::caret) return b;
    lex_.take();
    const Token t = lex_.peek();
    if (t.kind != Token::Kind::integer)
      fail(Errc::non_integer_exponent,
           "exponent must be a nonnegative integer literal (position " + std::to_string(t.pos) + ")");
    lex_.take();
    ExprPtr n = node(ExprNode::Kind::pow);
    n->exponent = std::stoi(t.text);
    n->lhs = std::move(b);
    return n;
  }

  ExprPtr base() {
    const Token t = lex_.take();
    switch (t.kind) {
      case Token::Kind::gen_a: return node(ExprNode::Kind::gen_a);
      case Token::Kind::gen_b: return node(ExprNode::Kind::gen_b);
      case Token::Kind::gen_t: return node(ExprNode::Kind::gen_t);
      case Token::Kind::q_sym: return node(ExprNode::Kind::q_sym);
      case Token::Kind::integer: {
        ExprPtr n = node(ExprNode::Kind::rational);
        std::string text = t.text;
        if (lex_.peek().kind == Token::Kind::slash) {
          lex_.take();
          const Token d = lex_.peek();
          if (d.kind != Token::Kind::integer)
            fail(Errc::syntax_error, "expected a denominator at position " + std::to_string(d.pos));
          lex_.take();
          text += "/" + d.text;
        }
        n->lit = rat_parse(text);
        return n;
      }
      case Token::Kind::lparen: {
        ExprPtr inner = expr();
        const Token r = lex_.peek();
        if (r.kind != Token::Kind::rparen)
          fail(Errc::syntax_error, "expected ')' at position " + std::to_string(r.pos));
        lex_.take();
        ExprPtr n = node(ExprNode::Kind::paren);
        n->lhs = std::move(inner);
        return n;
      }
      case Token::Kind::minus: {
        ExprPtr n = node(ExprNode::Kind::neg);
        n->lhs = base();
        return n;
      }
      default:
        fail(Errc::syntax_error, "unexpected token '" + t.text + "' at position " + std::to_string(t.pos));
    }
  }

  Lexer lex_;
};

} // namespace

ExprPtr parse_expr(std::string_view src) { return Parser(src).run(); }

namespace {
void print_rec(const ExprNode& n, std::ostringstream& os) {
  switch (n.kind) {
    case ExprNode::Kind::gen_a: os << "A"; return;
    case ExprNode::Kind::gen_b: os << "B"; return;
    case ExprNode::Kind::gen_t: os << "T"; return;
    case ExprNode::Kind::q_sym: os << "q"; return;
    case ExprNode::Kind::rational: os << rat_str(n.lit); return;
    case ExprNode::Kind::add:
    case ExprNode::Kind::sub:
      print_rec(*n.lhs, os);
      os << (n.kind == ExprNode::Kind::add ? " + " : " - ");
      // keep right-hand sums grouped so reprinting preserves the value
      if (n.rhs->kind == ExprNode::Kind::add || n.rhs->kind == ExprNode::Kind::sub) {
        os << "(";
        print_rec(*n.rhs, os);
        os << ")";
      } else {
        print_rec(*n.rhs, os);
      }
      return;
    case ExprNode::Kind::mul: {
      auto wrap = [&os](const ExprNode& c) {
        if (c.kind == ExprNode::Kind::add || c.kind == ExprNode::Kind::sub) {
          os << "(";
          print_rec(c, os);
          os << ")";
        } else {
          print_rec(c, os);
        }
      };
      wrap(*n.lhs);
      os << "*";
      wrap(*n.rhs);
      return;
    }
    case ExprNode::Kind::pow:
      if (n.lhs->kind == ExprNode::Kind::gen_a || n.lhs->kind == ExprNode::Kind::gen_b ||
          n.lhs->kind == ExprNode::Kind::gen_t || n.lhs->kind == ExprNode::Kind::q_sym ||
          n.lhs->kind == ExprNode::Kind::paren) {
        print_rec(*n.lhs, os);
      } else {
        os << "(";
        print_rec(*n.lhs, os);
        os << ")";
      }
      os << "^" << n.exponent;
      return;
    case ExprNode::Kind::neg:
      os << "-";
      // '-' binds tighter than '^' in the grammar, so a power must keep its
      // own parentheses under a negation
      if (n.lhs->kind == ExprNode::Kind::add || n.lhs->kind == ExprNode::Kind::sub ||
          n.lhs->kind == ExprNode::Kind::mul || n.lhs->kind == ExprNode::Kind::pow) {
        os << "(";
        print_rec(*n.lhs, os);
        os << ")";
      } else {
        print_rec(*n.lhs, os);
      }
      return;
    case ExprNode::Kind::paren:
      os << "(";
      print_rec(*n.lhs, os);
      os << ")";
      return;
  }
}
} // namespace

std::string print_expr(const ExprNode& ast) {
  std::ostringstream os;
  print_rec(ast, os);
  return os.str();
}

AlgebraElement eval_expr(const ExprNode& ast, const QParam& q) {
  validate_q(q);
  switch (ast.kind) {
    case ExprNode::Kind::gen_a: return AlgebraElement::gen_a(q);
    case ExprNode::Kind::gen_b: return AlgebraElement::gen_b(q);
    case ExprNode::Kind::gen_t:
      fail(Errc::bad_argument, "'T' is only valid in polynomial arguments");
    case ExprNode::Kind::q_sym: return AlgebraElement::constant(q, Scalar::q_value(q));
    case ExprNode::Kind::rational:
      return AlgebraElement::constant(q, Scalar::from_rational(q.mode, ast.lit));
    case ExprNode::Kind::add: return eval_expr(*ast.lhs, q) + eval_expr(*ast.rhs, q);
    case ExprNode::Kind::sub: return eval_expr(*ast.lhs, q) - eval_expr(*ast.rhs, q);
    case ExprNode::Kind::mul: return multiply(eval_expr(*ast.lhs, q), eval_expr(*ast.rhs, q));
    case ExprNode::Kind::pow: return eval_expr(*ast.lhs, q).pow(ast.exponent);
    case ExprNode::Kind::neg: return -eval_expr(*ast.lhs, q);
    case ExprNode::Kind::paren: return eval_expr(*ast.lhs, q);
  }
  fail(Errc::bad_argument, "corrupt expression node");
}

UniPoly eval_poly_expr(const ExprNode& ast, const QParam& q) {
  validate_q(q);
  switch (ast.kind) {
    case ExprNode::Kind::gen_a:
    case ExprNode::Kind::gen_b:
      fail(Errc::bad_argument, "'A'/'B' are not valid in polynomial arguments");
    case ExprNode::Kind::gen_t: return UniPoly::monomial(1, Scalar::one(q.mode));
    case ExprNode::Kind::q_sym: return UniPoly::constant(Scalar::q_value(q));
    case ExprNode::Kind::rational:
      return UniPoly::constant(Scalar::from_rational(q.mode, ast.lit));
    case ExprNode::Kind::add: return eval_poly_expr(*ast.lhs, q) + eval_poly_expr(*ast.rhs, q);
    case ExprNode::Kind::sub: return eval_poly_expr(*ast.lhs, q) - eval_poly_expr(*ast.rhs, q);
    case ExprNode::Kind::mul: return eval_poly_expr(*ast.lhs, q) * eval_poly_expr(*ast.rhs, q);
    case ExprNode::Kind::pow: return eval_poly_expr(*ast.lhs, q).pow(ast.exponent);
    case ExprNode::Kind::neg: return -eval_poly_expr(*ast.lhs, q);
    case ExprNode::Kind::paren: return eval_poly_expr(*ast.lhs, q);
  }
  fail(Errc::bad_argument, "corrupt expression node");
}

} // namespace qheis
