#include "eulerfan/cli/const_expr.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>

namespace eulerfan::cli {

namespace {

constexpr std::string_view kUnicodeMinus = "\xE2\x88\x92";

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ExprPtr parse() {
    skip_space();
    if (pos_ == text_.size()) throw ParseError("empty expression", pos_);
    ExprPtr e = expr();
    skip_space();
    if (pos_ != text_.size()) {
      if (text_[pos_] == ')') throw ParseError("unbalanced ')'", pos_);
      throw ParseError("unexpected token", pos_);
    }
    return e;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;

  void skip_space() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' ||
                                   text_[pos_] == '\n' || text_[pos_] == '\r')) {
      ++pos_;
    }
  }

  bool accept_minus() {
    if (pos_ < text_.size() && text_[pos_] == '-') {
      ++pos_;
      return true;
    }
    if (text_.substr(pos_).starts_with(kUnicodeMinus)) {
      pos_ += kUnicodeMinus.size();
      return true;
    }
    return false;
  }

  bool accept(char c) {
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  static ExprPtr make(auto node) { return std::make_shared<const ConstExpr>(ConstExpr{node}); }

  ExprPtr expr() {
    ExprPtr lhs = term();
    for (;;) {
      skip_space();
      char op = 0;
      if (accept('+')) {
        op = '+';
      } else if (accept_minus()) {
        op = '-';
      } else {
        return lhs;
      }
      lhs = make(Binary{op, lhs, term()});
    }
  }

  ExprPtr term() {
    ExprPtr lhs = factor();
    for (;;) {
      skip_space();
      char op = 0;
      if (accept('*')) {
        op = '*';
      } else if (accept('/')) {
        op = '/';
      } else {
        return lhs;
      }
      lhs = make(Binary{op, lhs, factor()});
    }
  }

  void expect_close(std::size_t open_at) {
    skip_space();
    if (pos_ == text_.size()) throw ParseError("missing ')' for '(' at " + std::to_string(open_at), pos_);
    if (!accept(')')) throw ParseError("expected ')'", pos_);
  }

  ExprPtr factor() {
    skip_space();
    if (pos_ == text_.size()) throw ParseError("unexpected end of input", pos_);
    if (accept_minus()) return make(Negate{factor()});
    const std::size_t start = pos_;
    if (accept('(')) {
      ExprPtr inner = expr();
      expect_close(start);
      return inner;
    }
    if (text_.substr(pos_).starts_with("sqrt")) {
      pos_ += 4;
      skip_space();
      const std::size_t open = pos_;
      if (!accept('(')) throw ParseError("expected '(' after sqrt", pos_);
      ExprPtr inner = expr();
      expect_close(open);
      return make(Sqrt{inner});
    }
    return number();
  }

  ExprPtr number() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) ||
                                   text_[pos_] == '.')) {
      ++pos_;
    }
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E') && pos_ > start) {
      std::size_t p = pos_ + 1;
      if (p < text_.size() && (text_[p] == '+' || text_[p] == '-')) ++p;
      if (p < text_.size() && std::isdigit(static_cast<unsigned char>(text_[p]))) {
        pos_ = p;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      }
    }
    if (pos_ == start) {
      if (text_[pos_] == ')') throw ParseError("unbalanced ')'", pos_);
      throw ParseError("unknown token", pos_);
    }
    const std::string_view spelled = text_.substr(start, pos_ - start);
    double value = 0.0;
    const auto [end, ec] = std::from_chars(spelled.data(), spelled.data() + spelled.size(), value);
    if (ec != std::errc{} || end != spelled.data() + spelled.size()) {
      throw ParseError("malformed number", start);
    }
    return make(Number{value, std::string(spelled)});
  }
};

int precedence(const ConstExpr& e) {
  if (const auto* b = std::get_if<Binary>(&e.node)) return (b->op == '+' || b->op == '-') ? 1 : 2;
  if (std::holds_alternative<Negate>(e.node)) return 3;
  return 4;
}

std::string wrap(const ConstExpr& e, bool parens) {
  return parens ? "(" + print(e) + ")" : print(e);
}

}  // namespace

ExprPtr parse_const_expr(std::string_view text) { return Parser(text).parse(); }

double evaluate(const ConstExpr& expr) {
  return std::visit(
      [](const auto& n) -> double {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Number>) {
          return n.value;
        } else if constexpr (std::is_same_v<T, Negate>) {
          return -evaluate(*n.operand);
        } else if constexpr (std::is_same_v<T, Sqrt>) {
          return std::sqrt(evaluate(*n.operand));
        } else {
          const double a = evaluate(*n.lhs);
          const double b = evaluate(*n.rhs);
          switch (n.op) {
            case '+':
              return a + b;
            case '-':
              return a - b;
            case '*':
              return a * b;
            default:
              return a / b;
          }
        }
      },
      expr.node);
}

std::string print(const ConstExpr& expr) {
  return std::visit(
      [](const auto& n) -> std::string {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Number>) {
          return n.text;
        } else if constexpr (std::is_same_v<T, Negate>) {
          return "-" + wrap(*n.operand, precedence(*n.operand) < 3);
        } else if constexpr (std::is_same_v<T, Sqrt>) {
          return "sqrt(" + print(*n.operand) + ")";
        } else {
          const int p = (n.op == '+' || n.op == '-') ? 1 : 2;
          // left-associative: the right operand needs parens at equal precedence
          const bool left_parens = precedence(*n.lhs) < p;
          const bool right_parens = precedence(*n.rhs) <= p;
          return wrap(*n.lhs, left_parens) + (p == 1 ? " " : "") + n.op + (p == 1 ? " " : "") +
                 wrap(*n.rhs, right_parens);
        }
      },
      expr.node);
}

double eval_const_expr(std::string_view text) { return evaluate(*parse_const_expr(text)); }

}  // namespace eulerfan::cli
