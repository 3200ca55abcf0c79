#include <algorithm>

#include "tetra/dsl/ast.hpp"

namespace tetra::dsl {

namespace {

std::string where(SourceSpan span) { return "line " + std::to_string(span.line) + ", col " + std::to_string(span.col); }

const char* call_name(NodeKind kind) {
  switch (kind) {
    case NodeKind::kComp: return "comp";
    case NodeKind::kCup: return "cup";
    case NodeKind::kBul: return "bul";
    case NodeKind::kBracket: return "bracket";
    case NodeKind::kDelta: return "delta";
    case NodeKind::kTri: return "tri";
    case NodeKind::kTetra: return "tetra";
    default: return nullptr;
  }
}

bool is_sum(const Expr& e) { return e.kind == NodeKind::kSum || e.kind == NodeKind::kDifference; }

}  // namespace

DslError::DslError(ErrorCode code, SourceSpan span, std::string expected, std::string found)
    : Error(code, where(span) + ": expected " + expected + (found.empty() ? "" : ", found " + found)),
      span_(span),
      expected_(std::move(expected)),
      found_(std::move(found)) {}

std::unique_ptr<Expr> Expr::clone() const {
  auto copy = std::make_unique<Expr>();
  copy->kind = kind;
  copy->span = span;
  copy->name = name;
  copy->scalar = scalar;
  copy->index = index;
  copy->degree = degree;
  for (const auto& a : args) copy->args.push_back(a->clone());
  return copy;
}

bool Expr::same_shape(const Expr& o) const {
  if (kind != o.kind || name != o.name || scalar != o.scalar || index != o.index || args.size() != o.args.size()) {
    return false;
  }
  for (std::size_t k = 0; k < args.size(); ++k) {
    if (!args[k]->same_shape(*o.args[k])) return false;
  }
  return true;
}

Script::Script(const Script& other)
    : declarations(other.declarations), body(other.body ? other.body->clone() : nullptr) {}

Script& Script::operator=(const Script& other) {
  if (this != &other) {
    declarations = other.declarations;
    body = other.body ? other.body->clone() : nullptr;
  }
  return *this;
}

const Declaration* Script::find(std::string_view name) const {
  auto it = std::find_if(declarations.begin(), declarations.end(), [&](const Declaration& d) { return d.name == name; });
  return it == declarations.end() ? nullptr : &*it;
}

bool Script::same_shape(const Script& other) const {
  return declarations == other.declarations && body && other.body && body->same_shape(*other.body);
}

std::string print(const Expr& e) {
  switch (e.kind) {
    case NodeKind::kSymbol: return e.name;
    case NodeKind::kUnit: return "I";
    case NodeKind::kMu: return "mu";
    case NodeKind::kScale: {
      const auto& x = *e.args[0];
      return std::to_string(e.scalar) + "*" + (is_sum(x) || x.kind == NodeKind::kScale ? "(" + print(x) + ")" : print(x));
    }
    case NodeKind::kSum:
    case NodeKind::kDifference: {
      const auto& r = *e.args[1];
      const std::string rhs = is_sum(r) ? "(" + print(r) + ")" : print(r);
      return print(*e.args[0]) + (e.kind == NodeKind::kSum ? " + " : " - ") + rhs;
    }
    default: break;
  }
  std::string out = std::string(call_name(e.kind)) + "(";
  for (std::size_t k = 0; k < e.args.size(); ++k) {
    if (k > 0) out += ", ";
    out += print(*e.args[k]);
  }
  if (e.kind == NodeKind::kComp) out += ", " + std::to_string(e.index);
  return out + ")";
}

std::string print(const Script& s) {
  std::string out;
  for (const auto& d : s.declarations) {
    out += "let " + d.name + ": deg " + std::to_string(d.degree);
    if (d.literal) {
      out += " = ";
      if (d.literal->size() == 1) {
        out += std::to_string(d.literal->front());
      } else {
        out += "[";
        for (std::size_t k = 0; k < d.literal->size(); ++k) {
          if (k > 0) out += ", ";
          out += std::to_string((*d.literal)[k]);
        }
        out += "]";
      }
    }
    out += ";\n";
  }
  if (s.body) out += print(*s.body);
  return out;
}

namespace {

int check(Expr& e, const Script& s) {
  auto deg = [&](std::size_t k) { return check(*e.args[k], s); };
  auto need_positive = [&](int d, const Expr& at, const char* what) {
    if (d < 1) {
      throw DslError(ErrorCode::kDegreeError, at.span, std::string(what) + " argument of degree >= 1",
                     "degree " + std::to_string(d));
    }
  };
  int result = 0;
  switch (e.kind) {
    case NodeKind::kSymbol: {
      const auto* decl = s.find(e.name);
      if (decl == nullptr) throw DslError(ErrorCode::kUnboundSymbol, e.span, "a declared symbol", "'" + e.name + "'");
      result = decl->degree;
      break;
    }
    case NodeKind::kUnit: result = 1; break;
    case NodeKind::kMu: result = 2; break;
    case NodeKind::kScale: result = deg(0); break;
    case NodeKind::kSum:
    case NodeKind::kDifference: {
      const int l = deg(0), r = deg(1);
      if (l != r) {
        throw DslError(ErrorCode::kDegreeError, e.args[1]->span, "degree " + std::to_string(l),
                       "degree " + std::to_string(r));
      }
      result = l;
      break;
    }
    case NodeKind::kComp: {
      const int f = deg(0), g = deg(1);
      if (e.index < 0 || e.index > f - 1) {
        throw DslError(ErrorCode::kIndexError, e.span,
                       "composition index in [0, " + std::to_string(f - 1) + "]", std::to_string(e.index));
      }
      result = f + g - 1;
      break;
    }
    case NodeKind::kCup: result = deg(0) + deg(1); break;
    case NodeKind::kBul: {
      const int f = deg(0), g = deg(1);
      need_positive(f, *e.args[0], "left bul");
      result = f + g - 1;
      break;
    }
    case NodeKind::kBracket: {
      const int f = deg(0), g = deg(1);
      need_positive(f, *e.args[0], "bracket");
      need_positive(g, *e.args[1], "bracket");
      result = f + g - 1;
      break;
    }
    case NodeKind::kDelta: {
      const int f = deg(0);
      need_positive(f, *e.args[0], "delta");
      result = f + 1;
      break;
    }
    case NodeKind::kTri: {
      const int h = deg(0), f = deg(1), g = deg(2);
      need_positive(h, *e.args[0], "tri");
      result = h + f + g - 2;
      break;
    }
    case NodeKind::kTetra: {
      const int h = deg(0), f = deg(1), g = deg(2), b = deg(3);
      need_positive(h, *e.args[0], "tetra");
      result = h + f + g + b - 3;
      break;
    }
  }
  if (result < 0) throw DslError(ErrorCode::kDegreeError, e.span, "a result of degree >= 0", std::to_string(result));
  e.degree = result;
  return result;
}

}  // namespace

void typecheck(Script& s) {
  for (std::size_t k = 0; k < s.declarations.size(); ++k) {
    const auto& d = s.declarations[k];
    if (d.degree < 0) throw DslError(ErrorCode::kDegreeError, d.span, "degree >= 0", std::to_string(d.degree));
    if (d.name == "mu" && d.degree != 2) {
      throw DslError(ErrorCode::kDegreeError, d.span, "mu of degree 2", "degree " + std::to_string(d.degree));
    }
    for (std::size_t m = 0; m < k; ++m) {
      if (s.declarations[m].name == d.name) {
        throw DslError(ErrorCode::kSyntaxError, d.span, "a fresh name", "duplicate '" + d.name + "'");
      }
    }
  }
  if (!s.body) throw DslError(ErrorCode::kSyntaxError, {}, "an expression", "nothing");
  check(*s.body, s);
}

Script typecheck(const Script& script) {
  Script copy = script;
  typecheck(copy);
  return copy;
}

}  // namespace tetra::dsl
