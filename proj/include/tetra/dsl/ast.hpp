#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tetra/error.hpp"

namespace tetra::dsl {

struct SourceSpan {
  int line = 1;
  int col = 1;
};

/// Parse and check errors with a source position.
class DslError : public Error {
 public:
  DslError(ErrorCode code, SourceSpan span, std::string expected, std::string found);

  SourceSpan span() const noexcept { return span_; }
  const std::string& expected() const noexcept { return expected_; }
  const std::string& found() const noexcept { return found_; }

 private:
  SourceSpan span_;
  std::string expected_;
  std::string found_;
};

enum class NodeKind {
  kSymbol,
  kUnit,
  kMu,
  kScale,
  kSum,
  kDifference,
  kComp,
  kCup,
  kBul,
  kBracket,
  kDelta,
  kTri,
  kTetra,
};

struct Expr {
  NodeKind kind;
  SourceSpan span;
  std::string name;       // kSymbol
  long long scalar = 0;   // kScale
  int index = 0;          // kComp
  std::vector<std::unique_ptr<Expr>> args;
  std::optional<int> degree;  // set by typecheck

  std::unique_ptr<Expr> clone() const;
  /// Structural equality; ignores spans and annotations.
  bool same_shape(const Expr& other) const;
};

using ExprPtr = std::unique_ptr<Expr>;

struct Declaration {
  std::string name;
  int degree = 0;
  /// Table entries; a bare INT literal is a one-entry list.
  std::optional<std::vector<long long>> literal;
  SourceSpan span;

  bool operator==(const Declaration& o) const {
    return name == o.name && degree == o.degree && literal == o.literal;
  }
};

struct Script {
  std::vector<Declaration> declarations;
  ExprPtr body;

  Script() = default;
  Script(Script&&) = default;
  Script& operator=(Script&&) = default;
  Script(const Script& other);
  Script& operator=(const Script& other);

  const Declaration* find(std::string_view name) const;
  /// Same declarations and body shape.
  bool same_shape(const Script& other) const;
};

/// SyntaxError carrying line, column and what was expected.
Script parse(std::string_view text);

/// Prints a script that parses back to the same shape.
std::string print(const Script& script);
std::string print(const Expr& expr);

/// Annotates every node with its degree. Throws DslError with kDegreeError,
/// kIndexError or kUnboundSymbol.
void typecheck(Script& script);
Script typecheck(const Script& script);

}  // namespace tetra::dsl
