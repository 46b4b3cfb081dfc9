#include "tilekit/expr.hpp"

#include <algorithm>
#include <cctype>

#include "tilekit/error.hpp"

namespace tilekit {

Expr Expr::variable(std::string name) {
  Expr e;
  e.op = Op::Var;
  e.name = std::move(name);
  return e;
}

Expr Expr::constant(bool value) {
  Expr e;
  e.op = Op::Const;
  e.value = value;
  return e;
}

Expr Expr::negate(Expr operand) {
  Expr e;
  e.op = Op::Not;
  e.args.push_back(std::move(operand));
  return e;
}

Expr Expr::binary(Op op, Expr lhs, Expr rhs) {
  Expr e;
  e.op = op;
  e.args.push_back(std::move(lhs));
  e.args.push_back(std::move(rhs));
  return e;
}

bool eval_expr(const Expr& expr, const Env& env) {
  switch (expr.op) {
    case Expr::Op::Var: {
      auto it = env.find(expr.name);
      if (it == env.end()) {
        throw Error(Errc::UnboundVariable, "no value bound for '" + expr.name + "'");
      }
      return it->second;
    }
    case Expr::Op::Const: return expr.value;
    case Expr::Op::Not: return !eval_expr(expr.args[0], env);
    case Expr::Op::And: return eval_expr(expr.args[0], env) && eval_expr(expr.args[1], env);
    case Expr::Op::Xor: return eval_expr(expr.args[0], env) != eval_expr(expr.args[1], env);
    case Expr::Op::Or: return eval_expr(expr.args[0], env) || eval_expr(expr.args[1], env);
  }
  return false;
}

namespace {

int precedence(Expr::Op op) {
  switch (op) {
    case Expr::Op::Or: return 1;
    case Expr::Op::Xor: return 2;
    case Expr::Op::And: return 3;
    case Expr::Op::Not: return 4;
    default: return 5;
  }
}

std::string_view op_name(Expr::Op op) {
  switch (op) {
    case Expr::Op::Not: return "NOT";
    case Expr::Op::And: return "AND";
    case Expr::Op::Xor: return "XOR";
    case Expr::Op::Or: return "OR";
    default: return "";
  }
}

void render(const Expr& e, std::string& out) {
  auto child = [&out](const Expr& c, bool wrap) {
    if (wrap) out += '(';
    render(c, out);
    if (wrap) out += ')';
  };
  switch (e.op) {
    case Expr::Op::Var: out += e.name; return;
    case Expr::Op::Const: out += e.value ? '1' : '0'; return;
    case Expr::Op::Not:
      out += "NOT ";
      child(e.args[0], precedence(e.args[0].op) < precedence(Expr::Op::Not));
      return;
    default: {
      const int p = precedence(e.op);
      // Left-associative: the right operand needs parentheses at equal precedence.
      child(e.args[0], precedence(e.args[0].op) < p);
      out += ' ';
      out += op_name(e.op);
      out += ' ';
      child(e.args[1], precedence(e.args[1].op) <= p);
    }
  }
}

void collect(const Expr& e, std::vector<std::string>& out) {
  if (e.op == Expr::Op::Var) {
    if (std::find(out.begin(), out.end(), e.name) == out.end()) out.push_back(e.name);
    return;
  }
  for (const Expr& a : e.args) collect(a, out);
}

enum class Tok { Ident, Zero, One, Not, And, Xor, Or, LParen, RParen, Comma, End };

struct Token {
  Tok kind;
  std::string text;
  int column;
};

std::string upper(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

class Parser {
 public:
  Parser(std::string_view text, int line, int column_offset)
      : text_(text), line_(line), column_offset_(column_offset) {
    tokenize();
  }

  std::vector<Expr> list() {
    std::vector<Expr> out;
    out.push_back(entry());
    while (peek().kind == Tok::Comma) {
      ++pos_;
      out.push_back(entry());
    }
    if (peek().kind != Tok::End) fail(peek(), "unexpected '" + peek().text + "'");
    return out;
  }

 private:
  Expr entry() {
    if (peek().kind == Tok::Comma || peek().kind == Tok::End) fail(peek(), "empty entry");
    return disjunction();
  }

  Expr disjunction() {
    Expr lhs = exclusive();
    while (peek().kind == Tok::Or) {
      ++pos_;
      lhs = Expr::binary(Expr::Op::Or, std::move(lhs), exclusive());
    }
    return lhs;
  }

  Expr exclusive() {
    Expr lhs = conjunction();
    while (peek().kind == Tok::Xor) {
      ++pos_;
      lhs = Expr::binary(Expr::Op::Xor, std::move(lhs), conjunction());
    }
    return lhs;
  }

  Expr conjunction() {
    Expr lhs = unary();
    while (peek().kind == Tok::And) {
      ++pos_;
      lhs = Expr::binary(Expr::Op::And, std::move(lhs), unary());
    }
    return lhs;
  }

  Expr unary() {
    if (peek().kind == Tok::Not) {
      ++pos_;
      return Expr::negate(unary());
    }
    return primary();
  }

  Expr primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Ident: ++pos_; return Expr::variable(t.text);
      case Tok::Zero: ++pos_; return Expr::constant(false);
      case Tok::One: ++pos_; return Expr::constant(true);
      case Tok::LParen: {
        ++pos_;
        Expr inner = disjunction();
        if (peek().kind != Tok::RParen) fail(peek(), "expected ')'");
        ++pos_;
        return inner;
      }
      case Tok::End: fail(t, "unexpected end of expression");
      default: fail(t, "unexpected '" + t.text + "'");
    }
  }

  const Token& peek() const { return tokens_[pos_]; }

  [[noreturn]] void fail(const Token& t, const std::string& what) const {
    throw Error(Errc::SyntaxError, "line " + std::to_string(line_) + ", column " +
                                       std::to_string(t.column) + ": " + what);
  }

  void tokenize() {
    std::size_t i = 0;
    auto column = [this](std::size_t at) { return column_offset_ + static_cast<int>(at) + 1; };
    while (i < text_.size()) {
      const char c = text_[i];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++i;
        continue;
      }
      const int col = column(i);
      if (c == '(' || c == ')' || c == ',') {
        tokens_.push_back({c == '(' ? Tok::LParen : c == ')' ? Tok::RParen : Tok::Comma,
                           std::string(1, c), col});
        ++i;
        continue;
      }
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
        std::size_t j = i;
        while (j < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[j])) || text_[j] == '_')) {
          ++j;
        }
        const std::string word(text_.substr(i, j - i));
        const std::string kw = upper(word);
        if (word == "0") {
          tokens_.push_back({Tok::Zero, word, col});
        } else if (word == "1") {
          tokens_.push_back({Tok::One, word, col});
        } else if (kw == "NOT") {
          tokens_.push_back({Tok::Not, word, col});
        } else if (kw == "AND") {
          tokens_.push_back({Tok::And, word, col});
        } else if (kw == "XOR") {
          tokens_.push_back({Tok::Xor, word, col});
        } else if (kw == "OR") {
          tokens_.push_back({Tok::Or, word, col});
        } else {
          const bool ok = std::islower(static_cast<unsigned char>(word[0])) &&
                          std::all_of(word.begin(), word.end(), [](char ch) {
                            return std::islower(static_cast<unsigned char>(ch)) ||
                                   std::isdigit(static_cast<unsigned char>(ch)) || ch == '_';
                          });
          if (!ok) {
            fail({Tok::Ident, word, col},
                 "'" + word + "' is not an identifier ([a-z][a-z0-9_]*)");
          }
          tokens_.push_back({Tok::Ident, word, col});
        }
        i = j;
        continue;
      }
      fail({Tok::End, std::string(1, c), col}, std::string("unexpected character '") + c + "'");
    }
    tokens_.push_back({Tok::End, "end of line", column(text_.size())});
  }

  std::string_view text_;
  int line_;
  int column_offset_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string to_string(const Expr& expr) {
  std::string out;
  render(expr, out);
  return out;
}

std::vector<std::string> variables(const Expr& expr) {
  std::vector<std::string> out;
  collect(expr, out);
  return out;
}

bool is_keyword(std::string_view word) {
  const std::string kw = upper(word);
  return kw == "NOT" || kw == "AND" || kw == "XOR" || kw == "OR";
}

std::vector<Expr> parse_expr_list(std::string_view text, int line, int column_offset) {
  return Parser(text, line, column_offset).list();
}

Expr parse_expr(std::string_view text) {
  auto list = parse_expr_list(text);
  if (list.size() != 1) {
    throw Error(Errc::SyntaxError, "expected a single expression");
  }
  return std::move(list.front());
}

}  // namespace tilekit
