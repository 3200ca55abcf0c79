#include <doctest.h>

#include <string>

#include "helpers.hpp"
#include "tetra/dsl/ast.hpp"
#include "tetra/dsl/eval.hpp"

using namespace tetra;
using namespace tetra::dsl;

namespace {

DslError syntax_error(std::string_view text) {
  try {
    (void)parse(text);
  } catch (const DslError& e) {
    return e;
  }
  FAIL("parsed: " << text);
  return DslError(ErrorCode::kSyntaxError, {}, "", "");
}

ErrorCode check_error(std::string_view text) {
  auto s = parse(text);
  try {
    typecheck(s);
  } catch (const DslError& e) {
    return e.code();
  }
  return ErrorCode::kParseError;
}

int body_degree(std::string_view text) {
  auto s = parse(text);
  typecheck(s);
  return *s.body->degree;
}

}  // namespace

TEST_CASE("parse") {
  const auto s = parse("let f: deg 1; let g: deg 1; cup(f,g)");
  CHECK(s.declarations.size() == 2);
  CHECK(s.body->kind == NodeKind::kCup);
  CHECK(parse("let h: deg 3; tetra(h,h,h,h)").body->args.size() == 4);
  const auto lit = parse("let f: deg 2 = [1, -2, 3, 4, 5, 6, 7, 8]; # comment\nmu");
  REQUIRE(lit.declarations.front().literal.has_value());
  CHECK(lit.declarations.front().literal->at(1) == -2);
  CHECK(parse("let a: deg 1 = 5; 3 * a - (a + I)").body->kind == NodeKind::kDifference);
}

TEST_CASE("syntax errors carry positions") {
  const auto e = syntax_error("comp(f,g,)");
  CHECK(e.code() == ErrorCode::kSyntaxError);
  CHECK(e.span().line == 1);
  CHECK(e.span().col == 10);
  const auto e2 = syntax_error("let f: deg 1;\n  cup(f f)");
  CHECK(e2.span().line == 2);
  CHECK(e2.span().col == 9);
  CHECK(syntax_error("tri(f, f)").code() == ErrorCode::kSyntaxError);
  CHECK(syntax_error("let f deg 1; f").code() == ErrorCode::kSyntaxError);
  CHECK(syntax_error("cup(f,g) extra").code() == ErrorCode::kSyntaxError);
}

TEST_CASE("print round trip") {
  const char* scripts[] = {
      "let f: deg 1; let g: deg 1; cup(f,g)",
      "let f: deg 2 = [1,2]; let g: deg 1; f - (g + g) + 2 * comp(f, g, 1)",
      "let h: deg 3; let b: deg 1; tetra(h, b, b, b) - 3 * (tri(h, b, b) - cup(b, b))",
      "let f: deg 1; 2 * (f - f) + bracket(delta(f), bul(I, mu))",
  };
  for (const char* text : scripts) {
    const auto first = parse(text);
    const auto printed = print(first);
    const auto second = parse(printed);
    INFO(printed);
    CHECK(second.same_shape(first));
    CHECK(print(second) == printed);
  }
}

TEST_CASE("typecheck") {
  CHECK(body_degree("let f: deg 2; let g: deg 1; comp(f,g,1)") == 2);
  CHECK(check_error("let f: deg 2; let g: deg 1; comp(f,g,2)") == ErrorCode::kIndexError);
  CHECK(body_degree("let f: deg 1; let g: deg 1; cup(f,g) + delta(f)") == 2);
  CHECK(body_degree("let f: deg 2; let g: deg 3; bul(f, g)") == 4);
  CHECK(body_degree("let h: deg 3; let f: deg 1; tri(h, f, f)") == 3);
  CHECK(body_degree("let h: deg 3; tetra(h,h,h,h)") == 9);
  CHECK(body_degree("I") == 1);
  CHECK(body_degree("mu") == 2);
  CHECK(check_error("let f: deg 1; let g: deg 2; f + g") == ErrorCode::kDegreeError);
  CHECK(check_error("cup(f, f)") == ErrorCode::kUnboundSymbol);
  CHECK(check_error("let f: deg 1; let f: deg 2; f") == ErrorCode::kSyntaxError);
}

TEST_CASE("typecheck degrees agree with evaluated degrees") {
  const char* scripts[] = {
      "let f: deg 2; let g: deg 1; comp(f,g,1)",
      "let f: deg 1; let g: deg 1; cup(f,g) + delta(f)",
      "let h: deg 3; let f: deg 1; let g: deg 2; tri(h, f, g) - bul(bul(h, f), g) + bul(h, bul(f, g))",
      "let h: deg 3; let f: deg 1; tetra(h, f, f, f)",
      "let f: deg 2; bracket(f, mu) + delta(f)",
  };
  for (const char* text : scripts) {
    for (auto backend : {BackendKind::kEndo, BackendKind::kFree}) {
      auto s = parse(text);
      typecheck(s);
      EvalConfig cfg;
      cfg.backend = backend;
      cfg.dim = 2;
      cfg.seed = 5;
      CHECK(evaluate(s, cfg).degree() == *s.body->degree);
    }
  }
}

TEST_CASE("eval examples") {
  EvalConfig cfg;
  cfg.prime = 97;
  cfg.dim = 1;
  const auto cup = eval_script(parse("let mu: deg 2 = 1; let f: deg 1 = 2; let g: deg 1 = 3; cup(f,g)"), cfg);
  CHECK(cup["degree"] == 2);
  CHECK(cup["backend"] == "endo");
  CHECK(cup["payload"] == nlohmann::ordered_json::array({91}));

  const auto delta = evaluate(parse("let mu: deg 2 = 2; let f: deg 2 = 7; delta(f)"), cfg);
  CHECK(delta.degree() == 3);
  CHECK(delta.is_zero());

  cfg.backend = BackendKind::kFree;
  const auto free = eval_script(parse("let h: deg 2; let f: deg 1; comp(h, f, 0)"), cfg);
  CHECK(free["degree"] == 2);
  CHECK(free["payload"].dump().find("(h (f _) _)") != std::string::npos);
  CHECK_ERROR_CODE(evaluate(parse("let f: deg 1 = 3; f"), cfg), ErrorCode::kBackendMismatch);

  cfg.backend = BackendKind::kEndo;
  cfg.dim = 2;
  CHECK_ERROR_CODE(evaluate(parse("let f: deg 2 = [1, 2]; f"), cfg), ErrorCode::kShapeMismatch);
}

TEST_CASE("eval bindings and determinism") {
  EvalConfig cfg;
  cfg.dim = 2;
  cfg.seed = 11;
  const auto s = parse("let f: deg 2; let g: deg 1; bracket(f, g)");
  CHECK(eval_script(s, cfg).dump() == eval_script(s, cfg).dump());
  Bindings b;
  b.emplace("f", GradedElement(endo::MultilinearMap::zero(CoefficientRing::prime_field(97), 2, 2)));
  CHECK(evaluate(s, cfg, b).is_zero());
  cfg.random_unbound = false;
  CHECK_ERROR_CODE(evaluate(s, cfg, b), ErrorCode::kUnboundSymbol);
}
