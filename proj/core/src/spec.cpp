#include "invgrp/spec.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "invgrp/families.hpp"
#include "invgrp/ingest.hpp"

namespace invgrp {

namespace {

bool is_power_of_two(std::size_t n) { return n && (n & (n - 1)) == 0; }

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  GroupSpec parse() {
    GroupSpec g = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return g;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at position " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(std::string_view tok) {
    skip_ws();
    if (s_.substr(pos_, tok.size()) == tok) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }

  void expect(std::string_view tok) {
    if (!accept(tok)) fail("expected '" + std::string(tok) + "'");
  }

  std::size_t number() {
    skip_ws();
    std::size_t start = pos_;
    std::size_t v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + std::size_t(s_[pos_] - '0');
      if (v > 1'000'000'000) fail("number too large");
      ++pos_;
    }
    if (pos_ == start) fail("expected a number");
    return v;
  }

  GroupSpec expr() {
    GroupSpec first = power();
    std::vector<GroupSpec> factors{first};
    while (accept("x")) factors.push_back(power());
    if (factors.size() == 1) return first;
    GroupSpec g;
    g.kind = GroupSpec::Kind::Product;
    g.args = std::move(factors);
    return g;
  }

  GroupSpec power() {
    GroupSpec base = atom();
    if (accept("^")) {
      GroupSpec g;
      g.kind = GroupSpec::Kind::Power;
      g.a = number();
      if (g.a == 0) fail("power exponent must be positive");
      g.args.push_back(std::move(base));
      return g;
    }
    return base;
  }

  GroupSpec simple(GroupSpec::Kind kind, std::size_t a) {
    GroupSpec g;
    g.kind = kind;
    g.a = a;
    return g;
  }

  GroupSpec atom() {
    using K = GroupSpec::Kind;
    skip_ws();
    if (accept("(")) {
      GroupSpec g = expr();
      expect(")");
      return g;
    }
    if (accept("file:")) {
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < s_.size() && !std::isspace(static_cast<unsigned char>(s_[pos_])) && s_[pos_] != ',' &&
             s_[pos_] != ')')
        ++pos_;
      if (pos_ == start) fail("empty file path");
      GroupSpec g;
      g.kind = K::File;
      g.text = std::string(s_.substr(start, pos_ - start));
      return g;
    }
    if (accept("wr2(")) {
      GroupSpec g;
      g.kind = K::Wreath2;
      g.args.push_back(expr());
      expect(")");
      return g;
    }
    if (accept("sd(")) {
      GroupSpec g;
      g.kind = K::Semidirect;
      g.args.push_back(expr());
      expect(",");
      g.args.push_back(expr());
      expect(",");
      skip_ws();
      std::size_t start = pos_;
      int depth = 0;
      while (pos_ < s_.size()) {
        char c = s_[pos_];
        if (c == '[' || c == '(') ++depth;
        if (c == ']' || c == ')') {
          if (depth == 0) break;
          --depth;
        }
        ++pos_;
      }
      std::string action(s_.substr(start, pos_ - start));
      while (!action.empty() && std::isspace(static_cast<unsigned char>(action.back()))) action.pop_back();
      if (action.empty()) fail("missing action");
      if (action.front() == '[') parse_action(action);
      g.text = action;
      expect(")");
      return g;
    }
    if (accept("SL23")) return simple(K::SL23, 0);
    if (accept("Dih")) return simple(K::Dihedral, number());
    if (accept("Dic")) return simple(K::Dicyclic, number());
    if (accept("He")) return simple(K::Heisenberg, number());
    if (accept("Q")) {
      std::size_t n = number();
      if (n < 8 || !is_power_of_two(n)) fail("Q<n> needs a power of two n >= 8");
      return simple(K::Dicyclic, n / 4);
    }
    if (accept("C")) return simple(K::Cyclic, number());
    if (accept("U")) return simple(K::Units, number());
    if (accept("S")) return simple(K::Symmetric, number());
    if (accept("A")) return simple(K::Alternating, number());
    if (accept("E")) {
      GroupSpec g = simple(K::ElementaryAbelian, number());
      expect("^");
      g.b = number();
      return g;
    }
    fail("unknown group constructor");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

std::string wrap_if_compound(const GroupSpec& g) {
  auto s = g.to_string();
  if (g.kind == GroupSpec::Kind::Product || g.kind == GroupSpec::Kind::Power) return "(" + s + ")";
  return s;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

std::vector<std::pair<ElementId, std::vector<ElementId>>> parse_action(std::string_view text) {
  std::string body(text);
  if (!body.empty() && body.front() == '[') {
    if (body.back() != ']') throw ParseError("unterminated inline action");
    body = body.substr(1, body.size() - 2);
  }
  std::vector<std::pair<ElementId, std::vector<ElementId>>> out;
  std::string clean;
  for (std::istringstream lines(body); lines.good();) {
    std::string line;
    std::getline(lines, line);
    if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
    clean += line + ";";
  }
  std::istringstream entries(clean);
  std::string entry;
  while (std::getline(entries, entry, ';')) {
    if (entry.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto colon = entry.find(':');
    if (colon == std::string::npos) throw ParseError("action entry without ':' in '" + entry + "'");
    std::istringstream head(entry.substr(0, colon));
    long k = -1;
    if (!(head >> k) || k < 0 || k > 0xffff) throw ParseError("bad action element in '" + entry + "'");
    std::istringstream imgs(entry.substr(colon + 1));
    std::vector<ElementId> perm;
    long v;
    while (imgs >> v) {
      if (v < 0 || v > 0xffff) throw ParseError("bad action image");
      perm.push_back(ElementId(v));
    }
    if (!imgs.eof()) throw ParseError("bad action images in '" + entry + "'");
    out.emplace_back(ElementId(k), std::move(perm));
  }
  if (out.empty()) throw ParseError("empty action");
  return out;
}

std::string format_action(const std::vector<std::pair<ElementId, std::vector<ElementId>>>& gens) {
  std::string s = "[";
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) s += "; ";
    s += std::to_string(gens[i].first) + ":";
    for (auto v : gens[i].second) s += " " + std::to_string(v);
  }
  return s + "]";
}

std::string GroupSpec::to_string() const {
  using K = Kind;
  switch (kind) {
    case K::Cyclic: return "C" + std::to_string(a);
    case K::Units: return "U" + std::to_string(a);
    case K::ElementaryAbelian: return "E" + std::to_string(a) + "^" + std::to_string(b);
    case K::Dihedral: return "Dih" + std::to_string(a);
    case K::Dicyclic:
      if (a >= 2 && is_power_of_two(a)) return "Q" + std::to_string(4 * a);
      return "Dic" + std::to_string(a);
    case K::Symmetric: return "S" + std::to_string(a);
    case K::Alternating: return "A" + std::to_string(a);
    case K::Heisenberg: return "He" + std::to_string(a);
    case K::SL23: return "SL23";
    case K::Product: {
      std::string s;
      for (std::size_t i = 0; i < args.size(); ++i) {
        if (i) s += " x ";
        s += wrap_if_compound(args[i]);
      }
      return s;
    }
    case K::Power: return wrap_if_compound(args[0]) + "^" + std::to_string(a);
    case K::Wreath2: return "wr2(" + args[0].to_string() + ")";
    case K::Semidirect: {
      std::string act = text;
      if (!act.empty() && act.front() == '[') act = format_action(parse_action(act));
      return "sd(" + args[0].to_string() + ", " + args[1].to_string() + ", " + act + ")";
    }
    case K::File: return "file:" + text;
  }
  return {};
}

GroupSpec parse_spec(std::string_view text) { return Parser(text).parse(); }

FiniteGroup build(const GroupSpec& spec, const Caps& caps) {
  using K = GroupSpec::Kind;
  FiniteGroup g;
  switch (spec.kind) {
    case K::Cyclic: g = cyclic(spec.a, caps); break;
    case K::Units: g = units(spec.a, caps); break;
    case K::ElementaryAbelian: g = elementary_abelian(spec.a, spec.b, caps); break;
    case K::Dihedral: g = dihedral(spec.a, caps); break;
    case K::Dicyclic: g = dicyclic(spec.a, caps); break;
    case K::Symmetric: g = symmetric(spec.a, caps); break;
    case K::Alternating: g = alternating(spec.a, caps); break;
    case K::Heisenberg: g = heisenberg(spec.a, caps); break;
    case K::SL23: g = sl23(); break;
    case K::Product: {
      g = build(spec.args[0], caps);
      for (std::size_t i = 1; i < spec.args.size(); ++i) g = direct_product(g, build(spec.args[i], caps), caps);
      break;
    }
    case K::Power: {
      FiniteGroup base = build(spec.args[0], caps);
      g = base;
      for (std::size_t i = 1; i < spec.a; ++i) g = direct_product(g, base, caps);
      break;
    }
    case K::Wreath2: g = wreath_with_c2(build(spec.args[0], caps), caps); break;
    case K::Semidirect: {
      FiniteGroup n = build(spec.args[0], caps);
      FiniteGroup k = build(spec.args[1], caps);
      std::string text = spec.text;
      if (text.empty() || text.front() != '[') text = read_file(text);
      auto gens = parse_action(text);
      g = semidirect_product(n, k, extend_action(n, k, gens), caps);
      break;
    }
    case K::File: g = ingest(spec.text, caps).group; break;
  }
  return g.relabeled(spec.to_string());
}

FiniteGroup build(std::string_view text, const Caps& caps) { return build(parse_spec(text), caps); }

}  // namespace invgrp
