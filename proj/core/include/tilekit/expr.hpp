#pragma once

#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace tilekit {

// Boolean expression tree. Precedence, tightest first: NOT, AND, XOR, OR.
struct Expr {
  enum class Op { Var, Const, Not, And, Xor, Or };

  Op op = Op::Const;
  std::string name;  // Var
  bool value = false;  // Const
  std::vector<Expr> args;

  static Expr variable(std::string name);
  static Expr constant(bool value);
  static Expr negate(Expr operand);
  static Expr binary(Op op, Expr lhs, Expr rhs);

  bool operator==(const Expr&) const = default;
};

using Env = std::map<std::string, bool, std::less<>>;

bool eval_expr(const Expr& expr, const Env& env);

// Canonical rendering with minimal parentheses; equal trees render equally.
std::string to_string(const Expr& expr);

// Names referenced by the expression, in first-use order without repeats.
std::vector<std::string> variables(const Expr& expr);

bool is_keyword(std::string_view word);

// Parses a comma-separated list of expressions. `line` and `column_offset`
// only affect error positions.
std::vector<Expr> parse_expr_list(std::string_view text, int line = 1, int column_offset = 0);

Expr parse_expr(std::string_view text);

}  // namespace tilekit
