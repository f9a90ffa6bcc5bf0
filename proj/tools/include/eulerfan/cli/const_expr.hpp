#pragma once

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

namespace eulerfan::cli {

/// Syntax error in a constant expression; `offset` is a byte offset into
/// the input.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string message, std::size_t offset)
      : std::runtime_error(message + " at offset " + std::to_string(offset)),
        offset_(offset),
        message_(std::move(message)) {}

  [[nodiscard]] std::size_t offset() const noexcept { return offset_; }
  [[nodiscard]] const std::string& message() const noexcept { return message_; }

 private:
  std::size_t offset_;
  std::string message_;
};

struct ConstExpr;
using ExprPtr = std::shared_ptr<const ConstExpr>;

struct Number {
  double value;
  std::string text;  // spelling as written, reused when printing
};
struct Negate {
  ExprPtr operand;
};
struct Sqrt {
  ExprPtr operand;
};
struct Binary {
  char op;  // + - * /
  ExprPtr lhs;
  ExprPtr rhs;
};

/// expr   := term (('+' | '-') term)*
/// term   := factor (('*' | '/') factor)*
/// factor := number | 'sqrt' '(' expr ')' | '(' expr ')' | '-' factor
/// U+2212 is accepted as a minus sign.
struct ConstExpr {
  std::variant<Number, Negate, Sqrt, Binary> node;
};

[[nodiscard]] ExprPtr parse_const_expr(std::string_view text);

[[nodiscard]] double evaluate(const ConstExpr& expr);

/// Canonical spelling with the fewest parentheses that preserve the tree.
[[nodiscard]] std::string print(const ConstExpr& expr);

/// Parses and evaluates in one step.
[[nodiscard]] double eval_const_expr(std::string_view text);

}  // namespace eulerfan::cli
