#include "tetra/free/tree.hpp"

#include <algorithm>
#include <cctype>

#include "tetra/error.hpp"

namespace tetra::free {

namespace {

bool is_identifier(std::string_view name) {
  if (name.empty() || name == "_") return false;
  if (!(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_')) return false;
  return std::all_of(name.begin(), name.end(),
                     [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

class SexprReader {
 public:
  SexprReader(const Signature& sig, std::string_view text) : sig_(sig), text_(text) {}

  std::vector<std::int32_t> read_all() {
    std::vector<std::int32_t> code;
    read(code);
    skip_space();
    if (pos_ != text_.size()) fail("trailing input");
    return code;
  }

 private:
  void read(std::vector<std::int32_t>& code) {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end");
    if (text_[pos_] == '_') {
      ++pos_;
      code.push_back(PlanarTree::kLeaf);
      return;
    }
    if (text_[pos_] != '(') fail("expected '(' or '_'");
    ++pos_;
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) && text_[pos_] != '(' &&
           text_[pos_] != ')') {
      ++pos_;
    }
    const int id = sig_.id_of(text_.substr(start, pos_ - start));
    code.push_back(id);
    for (int child = 0; child < sig_.degree(id); ++child) read(code);
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != ')') fail("expected ')' after " + std::to_string(sig_.degree(id)) + " children");
    ++pos_;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorCode::kParseError, "tree '" + std::string(text_) + "' at " + std::to_string(pos_) + ": " + why);
  }

  const Signature& sig_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Signature::Signature(std::vector<GeneratorSpec> generators) : generators_(std::move(generators)) {
  std::sort(generators_.begin(), generators_.end(),
            [](const GeneratorSpec& a, const GeneratorSpec& b) { return a.name < b.name; });
  for (std::size_t k = 0; k < generators_.size(); ++k) {
    const auto& g = generators_[k];
    if (!is_identifier(g.name)) throw Error(ErrorCode::kInvalidSignature, "bad generator name '" + g.name + "'");
    if (g.degree < 1) {
      throw Error(ErrorCode::kInvalidSignature, "generator '" + g.name + "' needs degree >= 1");
    }
    if (k > 0 && generators_[k - 1].name == g.name) {
      throw Error(ErrorCode::kInvalidSignature, "duplicate generator '" + g.name + "'");
    }
  }
}

std::optional<int> Signature::find(std::string_view name) const {
  auto it = std::lower_bound(generators_.begin(), generators_.end(), name,
                             [](const GeneratorSpec& g, std::string_view n) { return g.name < n; });
  if (it == generators_.end() || it->name != name) return std::nullopt;
  return static_cast<int>(it - generators_.begin());
}

int Signature::id_of(std::string_view name) const {
  if (auto id = find(name)) return *id;
  throw Error(ErrorCode::kUnknownGenerator, "'" + std::string(name) + "'");
}

SignaturePtr make_signature(std::vector<GeneratorSpec> generators) {
  return std::make_shared<const Signature>(std::move(generators));
}

PlanarTree PlanarTree::leaf() { return PlanarTree({kLeaf}, 1); }

PlanarTree PlanarTree::corolla(const Signature& sig, int generator) {
  std::vector<std::int32_t> code{generator};
  code.insert(code.end(), static_cast<std::size_t>(sig.degree(generator)), kLeaf);
  return PlanarTree(std::move(code), sig.degree(generator));
}

PlanarTree PlanarTree::from_code(const Signature& sig, std::vector<std::int32_t> code) {
  // Open slots still to be filled; a complete tree closes exactly at the end.
  long long open = 1;
  int leaves = 0;
  for (std::size_t k = 0; k < code.size(); ++k) {
    if (open == 0) throw Error(ErrorCode::kParseError, "tree code has trailing symbols");
    --open;
    if (code[k] == kLeaf) {
      ++leaves;
    } else {
      if (code[k] < 0 || static_cast<std::size_t>(code[k]) >= sig.size()) {
        throw Error(ErrorCode::kUnknownGenerator, "id " + std::to_string(code[k]));
      }
      open += sig.degree(code[k]);
    }
  }
  if (open != 0 || code.empty()) throw Error(ErrorCode::kParseError, "incomplete tree code");
  return PlanarTree(std::move(code), leaves);
}

PlanarTree PlanarTree::parse(const Signature& sig, std::string_view text) {
  return from_code(sig, SexprReader(sig, text).read_all());
}

std::string PlanarTree::to_sexpr(const Signature& sig) const {
  std::string out;
  // Pending child counts of the open vertices.
  std::vector<int> pending;
  for (auto symbol : code_) {
    if (!pending.empty()) {
      out += ' ';
      --pending.back();
    }
    if (symbol == kLeaf) {
      out += '_';
    } else {
      out += '(';
      out += sig.name(symbol);
      pending.push_back(sig.degree(symbol));
    }
    while (!pending.empty() && pending.back() == 0) {
      out += ')';
      pending.pop_back();
    }
  }
  return out;
}

Grafting graft(const Signature& sig, const PlanarTree& x, const PlanarTree& y, int leaf) {
  const auto code = x.code();
  std::size_t position = code.size();
  int seen = 0;
  for (std::size_t k = 0; k < code.size(); ++k) {
    if (code[k] == PlanarTree::kLeaf && seen++ == leaf) {
      position = k;
      break;
    }
  }
  if (position == code.size()) {
    throw Error(ErrorCode::kIndexOutOfScope, "leaf " + std::to_string(leaf) + " of a degree-" +
                                                 std::to_string(x.degree()) + " tree");
  }
  long long trailing = 0;  // total shifted degree of x's vertices after the leaf
  for (std::size_t k = position + 1; k < code.size(); ++k) {
    if (code[k] != PlanarTree::kLeaf) trailing += sig.degree(code[k]) - 1;
  }
  std::vector<std::int32_t> grafted;
  grafted.reserve(code.size() + y.code().size() - 1);
  grafted.insert(grafted.end(), code.begin(), code.begin() + static_cast<std::ptrdiff_t>(position));
  grafted.insert(grafted.end(), y.code().begin(), y.code().end());
  grafted.insert(grafted.end(), code.begin() + static_cast<std::ptrdiff_t>(position) + 1, code.end());
  const long long y_shift = y.degree() - 1;
  return {PlanarTree::from_code(sig, std::move(grafted)), y_shift * trailing};
}

}  // namespace tetra::free
