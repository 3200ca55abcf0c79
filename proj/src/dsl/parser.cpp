#include <cctype>
#include <charconv>
#include <unordered_map>

#include "tetra/dsl/ast.hpp"

namespace tetra::dsl {

namespace {

enum class Tok { kIdent, kInt, kPunct, kEnd };

struct Token {
  Tok kind;
  std::string text;
  SourceSpan span;
};

std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::kEnd: return "end of input";
    case Tok::kInt: return "integer " + t.text;
    default: return "'" + t.text + "'";
  }
}

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  SourceSpan pos;
  std::size_t k = 0;
  auto advance = [&] {
    if (src[k] == '\n') {
      ++pos.line;
      pos.col = 1;
    } else {
      ++pos.col;
    }
    ++k;
  };
  while (k < src.size()) {
    const char c = src[k];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance();
    } else if (c == '#') {
      while (k < src.size() && src[k] != '\n') advance();
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      Token t{Tok::kIdent, {}, pos};
      while (k < src.size() && (std::isalnum(static_cast<unsigned char>(src[k])) || src[k] == '_')) {
        t.text += src[k];
        advance();
      }
      out.push_back(std::move(t));
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      Token t{Tok::kInt, {}, pos};
      while (k < src.size() && std::isdigit(static_cast<unsigned char>(src[k]))) {
        t.text += src[k];
        advance();
      }
      out.push_back(std::move(t));
    } else if (std::string_view("+-*(),;:=[]").find(c) != std::string_view::npos) {
      out.push_back({Tok::kPunct, std::string(1, c), pos});
      advance();
    } else {
      throw DslError(ErrorCode::kSyntaxError, pos, "a token", "'" + std::string(1, c) + "'");
    }
  }
  out.push_back({Tok::kEnd, {}, pos});
  return out;
}

const std::unordered_map<std::string_view, std::pair<NodeKind, int>>& calls() {
  static const std::unordered_map<std::string_view, std::pair<NodeKind, int>> table = {
      {"comp", {NodeKind::kComp, 2}},   {"cup", {NodeKind::kCup, 2}},     {"bul", {NodeKind::kBul, 2}},
      {"bracket", {NodeKind::kBracket, 2}}, {"delta", {NodeKind::kDelta, 1}}, {"tri", {NodeKind::kTri, 3}},
      {"tetra", {NodeKind::kTetra, 4}},
  };
  return table;
}

bool reserved(std::string_view word) {
  return word == "let" || word == "deg" || word == "I" || word == "mu" || calls().count(word) > 0;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  Script script() {
    Script s;
    while (peek().kind == Tok::kIdent && peek().text == "let") s.declarations.push_back(declaration());
    s.body = expr();
    if (peek().kind != Tok::kEnd) fail("'+', '-' or end of input");
    return s;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

  [[noreturn]] void fail(const std::string& expected) const {
    throw DslError(ErrorCode::kSyntaxError, peek().span, expected, describe(peek()));
  }

  bool at_punct(char c) const { return peek().kind == Tok::kPunct && peek().text[0] == c; }

  void expect_punct(char c) {
    if (!at_punct(c)) fail(std::string("'") + c + "'");
    next();
  }

  void expect_word(std::string_view w) {
    if (peek().kind != Tok::kIdent || peek().text != w) fail("'" + std::string(w) + "'");
    next();
  }

  long long integer() {
    if (peek().kind != Tok::kInt) fail("an integer");
    long long v = 0;
    const auto& text = peek().text;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc()) fail("an integer that fits in 64 bits");
    next();
    return v;
  }

  long long signed_integer() {
    if (at_punct('-')) {
      next();
      return -integer();
    }
    return integer();
  }

  Declaration declaration() {
    Declaration d;
    d.span = peek().span;
    expect_word("let");
    if (peek().kind != Tok::kIdent || (reserved(peek().text) && peek().text != "mu")) fail("a symbol name");
    d.name = next().text;
    expect_punct(':');
    expect_word("deg");
    d.degree = static_cast<int>(integer());
    if (at_punct('=')) {
      next();
      std::vector<long long> values;
      if (at_punct('[')) {
        next();
        values.push_back(signed_integer());
        while (at_punct(',')) {
          next();
          values.push_back(signed_integer());
        }
        expect_punct(']');
      } else {
        values.push_back(signed_integer());
      }
      d.literal = std::move(values);
    }
    expect_punct(';');
    return d;
  }

  ExprPtr node(NodeKind kind, SourceSpan span) {
    auto e = std::make_unique<Expr>();
    e->kind = kind;
    e->span = span;
    return e;
  }

  ExprPtr expr() {
    ExprPtr lhs = term();
    while (at_punct('+') || at_punct('-')) {
      const auto span = peek().span;
      auto e = node(next().text == "+" ? NodeKind::kSum : NodeKind::kDifference, span);
      e->args.push_back(std::move(lhs));
      e->args.push_back(term());
      lhs = std::move(e);
    }
    return lhs;
  }

  ExprPtr term() {
    if (peek().kind == Tok::kInt) {
      const auto span = peek().span;
      auto e = node(NodeKind::kScale, span);
      e->scalar = integer();
      expect_punct('*');
      e->args.push_back(atom());
      return e;
    }
    return atom();
  }

  ExprPtr atom() {
    const Token& t = peek();
    if (at_punct('(')) {
      next();
      ExprPtr inner = expr();
      expect_punct(')');
      return inner;
    }
    if (t.kind != Tok::kIdent) fail("a symbol, I, mu, a call or '('");
    const auto span = t.span;
    if (t.text == "I") {
      next();
      return node(NodeKind::kUnit, span);
    }
    if (t.text == "mu") {
      next();
      return node(NodeKind::kMu, span);
    }
    if (auto it = calls().find(t.text); it != calls().end()) {
      next();
      auto e = node(it->second.first, span);
      expect_punct('(');
      for (int k = 0; k < it->second.second; ++k) {
        if (k > 0) expect_punct(',');
        e->args.push_back(expr());
      }
      if (e->kind == NodeKind::kComp) {
        expect_punct(',');
        e->index = static_cast<int>(integer());
      }
      expect_punct(')');
      return e;
    }
    if (reserved(t.text)) fail("a symbol, I, mu, a call or '('");
    auto e = node(NodeKind::kSymbol, span);
    e->name = next().text;
    return e;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

Script parse(std::string_view text) { return Parser(lex(text)).script(); }

}  // namespace tetra::dsl
