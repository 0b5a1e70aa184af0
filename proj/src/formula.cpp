// Copyright 2026 The tdl Authors
// SPDX-License-Identifier: Apache-2.0

#include "tdl/formula.hpp"

#include <cctype>
#include <deque>
#include <functional>
#include <map>
#include <mutex>
#include <tuple>

namespace tdl {

struct Formula::Node {
  Op op;
  std::string name;
  const Node* l;
  const Node* r;
  std::size_t id;
  int depth;
};

namespace {

struct Interner {
  std::mutex mu;
  std::deque<Formula::Node> nodes;
  std::map<std::tuple<Op, std::string, const Formula::Node*, const Formula::Node*>,
           const Formula::Node*>
      index;
};

Interner& interner() {
  static Interner in;
  return in;
}

}  // namespace

std::string_view calculus_name(Calculus c) {
  switch (c) {
    case Calculus::lt: return "lt";
    case Calculus::ltc: return "ltc";
    case Calculus::lti: return "lti";
    case Calculus::ltdm: return "ltdm";
  }
  return "lt";
}

Calculus parse_calculus(std::string_view name) {
  for (Calculus c : {Calculus::lt, Calculus::ltc, Calculus::lti, Calculus::ltdm})
    if (calculus_name(c) == name) return c;
  throw InputError("unknown system '" + std::string(name) + "' (expected lt, ltc, lti or ltdm)");
}

bool is_unary(Op op) {
  return op == Op::neg || op == Op::tilde || op == Op::G || op == Op::H || op == Op::F ||
         op == Op::P;
}
bool is_binary(Op op) { return op == Op::conj || op == Op::disj || op == Op::imp; }

namespace {

const Formula::Node* intern(Op op, std::string name, const Formula::Node* l,
                            const Formula::Node* r) {
  Interner& in = interner();
  std::lock_guard<std::mutex> lock(in.mu);
  auto key = std::make_tuple(op, name, l, r);
  auto it = in.index.find(key);
  if (it != in.index.end()) return it->second;
  int depth = 0;
  if (l) depth = std::max(depth, l->depth + 1);
  if (r) depth = std::max(depth, r->depth + 1);
  in.nodes.push_back(Formula::Node{op, std::move(name), l, r, in.nodes.size(), depth});
  const Formula::Node* n = &in.nodes.back();
  in.index.emplace(std::move(key), n);
  return n;
}

}  // namespace

Formula Formula::var(std::string_view name) { return Formula(intern(Op::var, std::string(name), nullptr, nullptr)); }
Formula Formula::top() { return Formula(intern(Op::top, "", nullptr, nullptr)); }
Formula Formula::bot() { return Formula(intern(Op::bot, "", nullptr, nullptr)); }
Formula Formula::conj(Formula a, Formula b) { return binary(Op::conj, a, b); }
Formula Formula::disj(Formula a, Formula b) { return binary(Op::disj, a, b); }
Formula Formula::imp(Formula a, Formula b) { return binary(Op::imp, a, b); }
Formula Formula::neg(Formula a) { return unary(Op::neg, a); }
Formula Formula::tilde(Formula a) { return unary(Op::tilde, a); }

Formula Formula::unary(Op op, Formula a) {
  if (!is_unary(op) || !a.valid()) throw InputError("malformed unary formula");
  return Formula(intern(op, "", a.node_, nullptr));
}

Formula Formula::binary(Op op, Formula a, Formula b) {
  if (!is_binary(op) || !a.valid() || !b.valid()) throw InputError("malformed binary formula");
  return Formula(intern(op, "", a.node_, b.node_));
}

Op Formula::op() const { return node_->op; }
const std::string& Formula::name() const { return node_->name; }
Formula Formula::left() const { return Formula(node_->l); }
Formula Formula::right() const { return Formula(node_->r); }
std::size_t Formula::id() const { return node_->id; }
int Formula::depth() const { return node_->depth; }

std::strong_ordering Formula::operator<=>(const Formula& o) const {
  if (node_ == o.node_) return std::strong_ordering::equal;
  if (!node_) return std::strong_ordering::less;
  if (!o.node_) return std::strong_ordering::greater;
  if (auto c = node_->op <=> o.node_->op; c != 0) return c;
  if (auto c = node_->name <=> o.node_->name; c != 0) return c;
  if (auto c = left() <=> o.left(); c != 0) return c;
  return right() <=> o.right();
}

Formula make_F(Calculus c, Formula a) {
  if (c == Calculus::ltdm) return Formula::tilde(Formula::unary(Op::G, Formula::tilde(a)));
  return Formula::unary(Op::F, a);
}

Formula make_P(Calculus c, Formula a) {
  if (c == Calculus::ltdm) return Formula::tilde(Formula::unary(Op::H, Formula::tilde(a)));
  return Formula::unary(Op::P, a);
}

namespace {

Formula match_dual(Calculus c, Formula f, Op plain, Op box) {
  if (!f.valid()) return {};
  if (c != Calculus::ltdm) return f.op() == plain ? f.left() : Formula();
  if (f.op() != Op::tilde) return {};
  Formula inner = f.left();
  if (inner.op() != box || inner.left().op() != Op::tilde) return {};
  return inner.left().left();
}

}  // namespace

Formula match_F(Calculus c, Formula f) { return match_dual(c, f, Op::F, Op::G); }
Formula match_P(Calculus c, Formula f) { return match_dual(c, f, Op::P, Op::H); }
Formula match_G(Formula f) { return f.valid() && f.op() == Op::G ? f.left() : Formula(); }
Formula match_H(Formula f) { return f.valid() && f.op() == Op::H ? f.left() : Formula(); }

std::set<std::string> variables(Formula f) {
  std::set<std::string> out;
  std::function<void(Formula)> walk = [&](Formula g) {
    if (g.op() == Op::var) out.insert(g.name());
    if (g.left().valid()) walk(g.left());
    if (g.right().valid()) walk(g.right());
  };
  walk(f);
  return out;
}

std::set<std::string> variables(const Sequent& s) {
  std::set<std::string> out;
  for (const FormulaSet* side : {&s.left, &s.right})
    for (Formula f : *side) out.merge(variables(f));
  return out;
}

void check_language(Formula f, Calculus c) {
  switch (f.op()) {
    case Op::imp:
      if (c == Calculus::lt || c == Calculus::ltdm)
        throw SyntaxError("'->' is not in the language of " + std::string(calculus_name(c)), 0);
      break;
    case Op::neg:
      if (c == Calculus::lt || c == Calculus::ltdm)
        throw SyntaxError("negation is not in the language of " + std::string(calculus_name(c)), 0);
      break;
    case Op::tilde:
      if (c != Calculus::ltdm)
        throw SyntaxError("the De Morgan '~' belongs to ltdm only", 0);
      break;
    case Op::F:
    case Op::P:
      if (c == Calculus::ltdm) throw SyntaxError("ltdm formulas spell F and P through '~'", 0);
      break;
    default:
      break;
  }
  if (f.left().valid()) check_language(f.left(), c);
  if (f.right().valid()) check_language(f.right(), c);
}

namespace {

enum class Tok { ident, kw_top, kw_bot, modal, tilde, amp, bar, arrow, lparen, rparen, comma, turnstile, end };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char ch = s[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (ch >= 'a' && ch <= 'z') {
      while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
      std::string word(s.substr(start, i - start));
      Tok kind = word == "top" ? Tok::kw_top : word == "bot" ? Tok::kw_bot : Tok::ident;
      out.push_back({kind, std::move(word), start});
      continue;
    }
    if (ch == 'G' || ch == 'H' || ch == 'F' || ch == 'P') {
      out.push_back({Tok::modal, std::string(1, ch), start});
      ++i;
      continue;
    }
    if (s.substr(i, 2) == "->") {
      out.push_back({Tok::arrow, "->", start});
      i += 2;
      continue;
    }
    if (s.substr(i, 2) == "=>") {
      out.push_back({Tok::turnstile, "=>", start});
      i += 2;
      continue;
    }
    Tok kind;
    switch (ch) {
      case '~': kind = Tok::tilde; break;
      case '&': kind = Tok::amp; break;
      case '|': kind = Tok::bar; break;
      case '(': kind = Tok::lparen; break;
      case ')': kind = Tok::rparen; break;
      case ',': kind = Tok::comma; break;
      default: throw SyntaxError(std::string("unexpected character '") + ch + "'", start);
    }
    out.push_back({kind, std::string(1, ch), start});
    ++i;
  }
  out.push_back({Tok::end, "", s.size()});
  return out;
}

class Parser {
 public:
  Parser(std::string_view text, Calculus c) : toks_(tokenize(text)), calc_(c) {}

  Formula formula() { return impl(); }

  Sequent sequent() {
    Sequent s;
    s.left = flist(Tok::turnstile);
    expect(Tok::turnstile, "'=>'");
    s.right = flist(Tok::end);
    return s;
  }

  void finish() {
    if (peek().kind != Tok::end) throw SyntaxError("unexpected '" + peek().text + "'", peek().pos);
  }

 private:
  const Token& peek() const { return toks_[i_]; }
  Token take() { return toks_[i_++]; }
  void expect(Tok k, const char* what) {
    if (peek().kind != k) throw SyntaxError(std::string("expected ") + what, peek().pos);
    ++i_;
  }

  FormulaSet flist(Tok stop) {
    FormulaSet out;
    if (peek().kind == stop) return out;
    out.insert(formula());
    while (peek().kind == Tok::comma) {
      take();
      out.insert(formula());
    }
    return out;
  }

  Formula impl() {
    Formula lhs = disj();
    if (peek().kind == Tok::arrow) {
      const Token t = take();
      if (calc_ == Calculus::lt || calc_ == Calculus::ltdm)
        throw SyntaxError("'->' is not in the language of " + std::string(calculus_name(calc_)), t.pos);
      return Formula::imp(lhs, impl());
    }
    return lhs;
  }

  Formula disj() {
    Formula f = conj();
    while (peek().kind == Tok::bar) {
      take();
      f = Formula::disj(f, conj());
    }
    return f;
  }

  Formula conj() {
    Formula f = unary();
    while (peek().kind == Tok::amp) {
      take();
      f = Formula::conj(f, unary());
    }
    return f;
  }

  Formula unary() {
    const Token& t = peek();
    if (t.kind == Tok::tilde) {
      take();
      if (calc_ == Calculus::lt) throw SyntaxError("'~' is not in the language of lt", t.pos);
      Formula body = unary();
      return calc_ == Calculus::ltdm ? Formula::tilde(body) : Formula::neg(body);
    }
    if (t.kind == Tok::modal) {
      const char m = take().text[0];
      Formula body = unary();
      switch (m) {
        case 'G': return Formula::unary(Op::G, body);
        case 'H': return Formula::unary(Op::H, body);
        case 'F': return make_F(calc_, body);
        default: return make_P(calc_, body);
      }
    }
    return atom();
  }

  Formula atom() {
    const Token t = take();
    switch (t.kind) {
      case Tok::kw_top: return Formula::top();
      case Tok::kw_bot: return Formula::bot();
      case Tok::ident: return Formula::var(t.text);
      case Tok::lparen: {
        Formula f = formula();
        expect(Tok::rparen, "')'");
        return f;
      }
      case Tok::end: throw SyntaxError("unexpected end of input", t.pos);
      default: throw SyntaxError("unexpected '" + t.text + "'", t.pos);
    }
  }

  std::vector<Token> toks_;
  std::size_t i_ = 0;
  Calculus calc_;
};

int precedence(Op op) {
  switch (op) {
    case Op::imp: return 1;
    case Op::disj: return 2;
    case Op::conj: return 3;
    default: return 4;
  }
}

const char* symbol(Op op) {
  switch (op) {
    case Op::conj: return " & ";
    case Op::disj: return " | ";
    case Op::imp: return " -> ";
    case Op::neg:
    case Op::tilde: return "~";
    case Op::G: return "G ";
    case Op::H: return "H ";
    case Op::F: return "F ";
    case Op::P: return "P ";
    default: return "";
  }
}

void render_into(Formula f, std::string& out) {
  auto child = [&](Formula c, bool paren) {
    if (paren) out += '(';
    render_into(c, out);
    if (paren) out += ')';
  };
  switch (f.op()) {
    case Op::var: out += f.name(); return;
    case Op::top: out += "top"; return;
    case Op::bot: out += "bot"; return;
    default: break;
  }
  if (is_unary(f.op())) {
    out += symbol(f.op());
    child(f.left(), is_binary(f.left().op()));
    return;
  }
  const int p = precedence(f.op());
  // & and | associate to the left, -> to the right.
  const bool right_assoc = f.op() == Op::imp;
  child(f.left(), precedence(f.left().op()) < p || (right_assoc && precedence(f.left().op()) == p));
  out += symbol(f.op());
  child(f.right(), precedence(f.right().op()) < p || (!right_assoc && precedence(f.right().op()) == p));
}

}  // namespace

Formula parse_formula(std::string_view text, Calculus c) {
  Parser p(text, c);
  Formula f = p.formula();
  p.finish();
  return f;
}

Sequent parse_sequent(std::string_view text, Calculus c) {
  Parser p(text, c);
  Sequent s = p.sequent();
  p.finish();
  return s;
}

std::string render(Formula f) {
  std::string out;
  render_into(f, out);
  return out;
}

std::string render(const Sequent& s) {
  std::string out;
  auto side = [&](const FormulaSet& fs) {
    bool first = true;
    for (Formula f : fs) {
      if (!first) out += ", ";
      first = false;
      out += render(f);
    }
  };
  side(s.left);
  out += s.left.empty() ? "=>" : " =>";
  if (!s.right.empty()) out += ' ';
  side(s.right);
  return out;
}

}  // namespace tdl
