// Copyright (c) the lta contributors.
// SPDX-License-Identifier: Apache-2.0

#include "lta/parser.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace lta {

namespace {

enum class Tk {
  Id,
  Num,
  Ival,
  Arrow,
  Lt,
  Le,
  Gt,
  Ge,
  Assign,
  Ne,
  AndAnd,
  Plus,
  Minus,
  Star,
  LParen,
  RParen,
  LBrace,
  RBrace,
  Comma,
  Semi,
  Colon,
  Newline,
  End,
};

struct Tok {
  Tk kind = Tk::End;
  std::string text;
  Interval ival = Interval::bottom();
  Int num = 0;
  int line = 1;
  int col = 1;
};

const char* tok_name(Tk k) {
  switch (k) {
    case Tk::Id: return "identifier";
    case Tk::Num: return "integer";
    case Tk::Ival: return "interval";
    case Tk::Arrow: return "'->'";
    case Tk::Lt: return "'<'";
    case Tk::Le: return "'<='";
    case Tk::Gt: return "'>'";
    case Tk::Ge: return "'>='";
    case Tk::Assign: return "'='";
    case Tk::Ne: return "'!='";
    case Tk::AndAnd: return "'&&'";
    case Tk::Plus: return "'+'";
    case Tk::Minus: return "'-'";
    case Tk::Star: return "'*'";
    case Tk::LParen: return "'('";
    case Tk::RParen: return "')'";
    case Tk::LBrace: return "'{'";
    case Tk::RBrace: return "'}'";
    case Tk::Comma: return "','";
    case Tk::Semi: return "';'";
    case Tk::Colon: return "':'";
    case Tk::Newline: return "end of line";
    case Tk::End: return "end of file";
  }
  return "?";
}

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }

bool ident_tail(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '!' ||
         c == '\'' || c == '.';
}

class Lexer {
 public:
  Lexer(const std::string& text, std::string filename)
      : src_(text), file_(std::move(filename)) {}

  std::vector<Tok> run() {
    std::vector<Tok> out;
    while (true) {
      skip_blank();
      Tok t = next();
      out.push_back(t);
      if (t.kind == Tk::End) break;
    }
    return out;
  }

 private:
  const std::string& src_;
  std::string file_;
  size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;

  [[noreturn]] void fail(const std::string& msg, int line, int col) {
    throw ParseError(file_ + ":" + std::to_string(line) + ":" +
                         std::to_string(col) + ": syntax error: " + msg,
                     line, col);
  }

  char peek(size_t ahead = 0) const {
    return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
  }

  char take() {
    char c = src_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  void skip_blank() {
    while (pos_ < src_.size()) {
      char c = peek();
      if (c == ' ' || c == '\t' || c == '\r') {
        take();
      } else if (c == '#') {
        while (pos_ < src_.size() && peek() != '\n') take();
      } else {
        break;
      }
    }
  }

  Tok make(Tk k, std::string text, int line, int col) {
    Tok t;
    t.kind = k;
    t.text = std::move(text);
    t.line = line;
    t.col = col;
    return t;
  }

  Tok next() {
    int line = line_;
    int col = col_;
    if (pos_ >= src_.size()) return make(Tk::End, "", line, col);
    char c = peek();
    if (c == '\n') {
      take();
      return make(Tk::Newline, "\n", line, col);
    }
    if (c == '[' || c == ']') return lex_interval();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string digits;
      while (std::isdigit(static_cast<unsigned char>(peek()))) digits += take();
      Tok t = make(Tk::Num, digits, line, col);
      t.num = Int(digits);
      return t;
    }
    if (ident_start(c)) return lex_ident();
    take();
    switch (c) {
      case '(': return make(Tk::LParen, "(", line, col);
      case ')': return make(Tk::RParen, ")", line, col);
      case '{': return make(Tk::LBrace, "{", line, col);
      case '}': return make(Tk::RBrace, "}", line, col);
      case ',': return make(Tk::Comma, ",", line, col);
      case ';': return make(Tk::Semi, ";", line, col);
      case ':': return make(Tk::Colon, ":", line, col);
      case '+': return make(Tk::Plus, "+", line, col);
      case '*': return make(Tk::Star, "*", line, col);
      case '-':
        if (peek() == '>') {
          take();
          return make(Tk::Arrow, "->", line, col);
        }
        return make(Tk::Minus, "-", line, col);
      case '<':
        if (peek() == '=') {
          take();
          return make(Tk::Le, "<=", line, col);
        }
        return make(Tk::Lt, "<", line, col);
      case '>':
        if (peek() == '=') {
          take();
          return make(Tk::Ge, ">=", line, col);
        }
        return make(Tk::Gt, ">", line, col);
      case '=':
        return make(Tk::Assign, "=", line, col);
      case '!':
        if (peek() == '=') {
          take();
          return make(Tk::Ne, "!=", line, col);
        }
        fail("stray '!'", line, col);
      case '&':
        if (peek() == '&') {
          take();
          return make(Tk::AndAnd, "&&", line, col);
        }
        fail("stray '&'", line, col);
      default:
        fail(std::string("unexpected character '") + c + "'", line, col);
    }
  }

  // State names carry balanced [..] and {..} groups (q[1,1], q{q1,q2}, q!3).
  Tok lex_ident() {
    int line = line_;
    int col = col_;
    std::string s;
    s += take();
    while (pos_ < src_.size()) {
      char c = peek();
      if (ident_tail(c)) {
        s += take();
      } else if (c == '[' || c == '{') {
        int depth = 0;
        do {
          char g = take();
          s += g;
          if (g == '[' || g == '{') ++depth;
          if (g == ']' || g == '}') --depth;
          if (pos_ >= src_.size() && depth > 0)
            fail("unterminated bracket group in name", line, col);
        } while (depth > 0);
      } else {
        break;
      }
    }
    return make(Tk::Id, s, line, col);
  }

  // One bound: optional sign, then digits or "inf".
  Bound lex_bound(bool& finite, int line, int col) {
    bool neg = false;
    if (peek() == '-') {
      take();
      neg = true;
    } else if (peek() == '+') {
      take();
    }
    if (ident_start(peek())) {
      std::string w;
      while (ident_tail(peek())) w += take();
      if (w != "inf") fail("expected integer or 'inf' in interval", line, col);
      finite = false;
      return neg ? Bound::neg_inf() : Bound::pos_inf();
    }
    if (!std::isdigit(static_cast<unsigned char>(peek())))
      fail("expected integer or 'inf' in interval", line, col);
    std::string digits;
    while (std::isdigit(static_cast<unsigned char>(peek()))) digits += take();
    finite = true;
    Int v(digits);
    if (neg) v = -v;
    return Bound::of(v);
  }

  // Open finite bounds normalize to the closed form: ]0 becomes [1, 3[ becomes 2].
  Tok lex_interval() {
    int line = line_;
    int col = col_;
    char open = take();
    bool lo_fin = false;
    Bound lo = lex_bound(lo_fin, line, col);
    if (peek() != ',') fail("expected ',' in interval", line_, col_);
    take();
    bool hi_fin = false;
    Bound hi = lex_bound(hi_fin, line, col);
    char close = peek();
    if (close != ']' && close != '[')
      fail("expected closing bracket in interval", line_, col_);
    take();
    if (open == ']' && lo_fin) lo = Bound::of(lo.value() + 1);
    if (close == '[' && hi_fin) hi = Bound::of(hi.value() - 1);
    if (lo.kind() == BoundKind::NegInf && open == '[')
      fail("'-inf' bound must be open", line, col);
    if (hi.kind() == BoundKind::PosInf && close == ']')
      fail("'+inf' bound must be open", line, col);
    Tok t = make(Tk::Ival, "", line, col);
    t.ival = Interval::of(lo, hi);
    if (t.ival.is_bottom()) fail("invalid partition or interval: empty interval literal", line, col);
    t.text = t.ival.to_string();
    return t;
  }
};

struct DeclSite {
  int line;
  int col;
};

class Parser {
 public:
  Parser(const std::string& text, std::string filename)
      : file_(std::move(filename)), toks_(Lexer(text, file_).run()) {}

  SpecFile run() {
    SpecFile out;
    skip_newlines();
    if (at(Tk::End))
      fail(cur(), "missing lattice declaration");
    expect_keyword("lattice", "expected 'lattice' declaration first");
    std::string name = dashed_name();
    if (name != "interval-int")
      fail(prev(), "unknown lattice '" + name + "' (only interval-int is supported)");
    end_stmt();
    while (!at(Tk::End)) {
      skip_newlines();
      if (at(Tk::End)) break;
      Tok t = cur();
      if (t.kind != Tk::Id) fail(t, "expected a declaration");
      if (t.text == "symbols") {
        advance();
        symbol_block(out, false);
      } else if (t.text == "builtins") {
        advance();
        symbol_block(out, true);
      } else if (t.text == "partition") {
        advance();
        partition_line(out);
      } else if (t.text == "automaton") {
        advance();
        automaton_block_decl(out);
      } else if (t.text == "trs") {
        advance();
        trs_block(out);
      } else if (t.text == "equations") {
        advance();
        equations_block(out);
      } else if (t.text == "config") {
        advance();
        config_block(out);
      } else if (t.text == "lattice") {
        fail(t, "duplicate lattice declaration");
      } else {
        fail(t, "unknown declaration '" + t.text + "'");
      }
    }
    return out;
  }

 private:
  std::string file_;
  std::vector<Tok> toks_;
  size_t i_ = 0;

  const Tok& cur() const { return toks_[i_]; }
  const Tok& prev() const { return toks_[i_ == 0 ? 0 : i_ - 1]; }
  bool at(Tk k) const { return cur().kind == k; }
  void advance() {
    if (i_ + 1 < toks_.size()) ++i_;
  }

  [[noreturn]] void fail(const Tok& t, const std::string& msg) {
    throw ParseError(file_ + ":" + std::to_string(t.line) + ":" +
                         std::to_string(t.col) + ": " + msg,
                     t.line, t.col);
  }

  Tok expect(Tk k, const std::string& what) {
    if (!at(k)) fail(cur(), "expected " + what + ", got " + tok_name(cur().kind));
    Tok t = cur();
    advance();
    return t;
  }

  void expect_keyword(const std::string& kw, const std::string& msg) {
    if (!at(Tk::Id) || cur().text != kw) fail(cur(), msg);
    advance();
  }

  void skip_newlines() {
    while (at(Tk::Newline) || at(Tk::Semi)) advance();
  }

  void end_stmt() {
    if (at(Tk::Semi)) advance();
    if (at(Tk::Newline) || at(Tk::End) || at(Tk::RBrace)) {
      skip_newlines();
      return;
    }
    fail(cur(), std::string("expected end of line, got ") + tok_name(cur().kind));
  }

  // Joins Id (Minus Id)* into one dashed word: interval-int, widen-after.
  std::string dashed_name() {
    Tok t = expect(Tk::Id, "a name");
    std::string s = t.text;
    while (at(Tk::Minus)) {
      advance();
      s += "-" + expect(Tk::Id, "a name after '-'").text;
    }
    return s;
  }

  bool op_head(Tk k) const { return k == Tk::Plus || k == Tk::Minus || k == Tk::Star; }

  void symbol_block(SpecFile& out, bool builtin) {
    expect(Tk::LBrace, "'{'");
    skip_newlines();
    while (!at(Tk::RBrace)) {
      Tok head = cur();
      std::string name;
      if (head.kind == Tk::Id) {
        name = head.text;
        advance();
      } else if (builtin && op_head(head.kind)) {
        name = head.text;
        advance();
      } else {
        fail(head, "expected a symbol name");
      }
      expect(Tk::Colon, "':' after symbol name");
      Tok ar = expect(Tk::Num, "an arity");
      size_t arity = static_cast<size_t>(ar.num);
      auto& table = builtin ? out.syms.builtins : out.syms.passive;
      if (out.syms.knows(name))
        fail(head, "duplicate symbol '" + name + "'");
      if (builtin) {
        if (!is_builtin_op(name))
          fail(head, "unknown builtin '" + name + "' (expected +, -, *, lub, glb)");
        if (arity != 2) fail(ar, "builtin '" + name + "' must have arity 2");
      }
      table[name] = arity;
      skip_newlines();
    }
    expect(Tk::RBrace, "'}'");
    end_stmt();
  }

  void partition_line(SpecFile& out) {
    if (out.partition)
      fail(prev(), "duplicate partition declaration");
    Tok at_tok = cur();
    std::vector<Interval> blocks;
    while (at(Tk::Ival)) {
      blocks.push_back(cur().ival);
      advance();
    }
    if (blocks.empty()) fail(cur(), "expected at least one interval block");
    try {
      out.partition = Partition(blocks);
    } catch (const std::exception& e) {
      fail(at_tok, std::string("invalid partition: ") + e.what());
    }
    end_stmt();
  }

  void automaton_block_decl(SpecFile& out) {
    Tok name_tok = expect(Tk::Id, "an automaton name");
    if (out.find_automaton(name_tok.text))
      fail(name_tok, "duplicate automaton '" + name_tok.text + "'");
    Lta a;
    a.name = name_tok.text;
    a.syms = out.syms;
    std::map<State, DeclSite> declared;
    expect(Tk::LBrace, "'{'");
    skip_newlines();
    while (!at(Tk::RBrace)) {
      Tok t = cur();
      if (t.kind == Tk::Id && t.text == "states") {
        advance();
        while (at(Tk::Id)) {
          Tok st = cur();
          advance();
          auto it = declared.find(st.text);
          if (it != declared.end())
            fail(st, "duplicate state '" + st.text + "' (already declared at line " +
                         std::to_string(it->second.line) + ", column " +
                         std::to_string(it->second.col) + ")");
          declared[st.text] = {st.line, st.col};
          a.add_state(st.text);
        }
        end_stmt();
      } else if (t.kind == Tk::Id && t.text == "final") {
        advance();
        while (at(Tk::Id)) {
          a.add_final(cur().text);
          advance();
        }
        end_stmt();
      } else {
        transition_line(out, a);
      }
      skip_newlines();
    }
    expect(Tk::RBrace, "'}'");
    end_stmt();
    try {
      a.validate();
    } catch (const EngineError& e) {
      fail(name_tok, std::string("invalid automaton '") + a.name + "': " + e.what());
    }
    out.automata.emplace_back(a.name, std::move(a));
  }

  void transition_line(SpecFile& out, Lta& a) {
    Tok t = cur();
    if (t.kind == Tk::Ival) {
      advance();
      expect(Tk::Arrow, "'->'");
      Tok q = expect(Tk::Id, "a target state");
      a.add_lambda(t.ival, q.text);
      end_stmt();
      return;
    }
    std::string head;
    if (t.kind == Tk::Id) {
      head = t.text;
      advance();
    } else if (op_head(t.kind)) {
      head = t.text;
      advance();
    } else {
      fail(t, "expected a transition");
    }
    std::vector<State> args;
    bool had_parens = false;
    if (at(Tk::LParen)) {
      had_parens = true;
      advance();
      if (!at(Tk::RParen)) {
        args.push_back(expect(Tk::Id, "a state argument").text);
        while (at(Tk::Comma)) {
          advance();
          args.push_back(expect(Tk::Id, "a state argument").text);
        }
      }
      expect(Tk::RParen, "')'");
    }
    expect(Tk::Arrow, "'->'");
    Tok q = expect(Tk::Id, "a target state");
    if (!had_parens && !out.syms.knows(head)) {
      // bare name that is not a symbol: epsilon q -> q'
      a.add_epsilon(head, q.text);
      end_stmt();
      return;
    }
    if (!out.syms.knows(head))
      fail(t, "unknown symbol '" + head + "'");
    size_t want = static_cast<size_t>(*out.syms.arity_of(head));
    if (args.size() != want)
      fail(t, "arity mismatch: '" + head + "' takes " + std::to_string(want) +
                  " arguments, got " + std::to_string(args.size()));
    a.add_ground(head, args, q.text);
    end_stmt();
  }

  // ---- terms, rules, predicates -------------------------------------------

  enum class IdPolicy { VarOk, GroundOnly };

  Term parse_primary(const SymbolTable& syms, IdPolicy pol) {
    Tok t = cur();
    if (t.kind == Tk::Num) {
      advance();
      return Term::intconst(t.num);
    }
    if (t.kind == Tk::Minus) {
      advance();
      Tok n = expect(Tk::Num, "an integer after unary '-'");
      return Term::intconst(-n.num);
    }
    if (t.kind == Tk::Ival) {
      advance();
      return Term::abs(t.ival);
    }
    if (t.kind == Tk::LParen) {
      advance();
      Term inner = parse_sum(syms, pol);
      expect(Tk::RParen, "')'");
      return inner;
    }
    if (t.kind == Tk::Id) {
      advance();
      std::string name = t.text;
      if (at(Tk::LParen)) {
        advance();
        std::vector<Term> kids;
        if (!at(Tk::RParen)) {
          kids.push_back(parse_sum(syms, pol));
          while (at(Tk::Comma)) {
            advance();
            kids.push_back(parse_sum(syms, pol));
          }
        }
        expect(Tk::RParen, "')'");
        if (!syms.knows(name)) fail(t, "unknown symbol '" + name + "'");
        size_t want = static_cast<size_t>(*syms.arity_of(name));
        if (kids.size() != want)
          fail(t, "arity mismatch: '" + name + "' takes " + std::to_string(want) +
                      " arguments, got " + std::to_string(kids.size()));
        if (syms.builtins.count(name)) return Term::op(name, kids);
        return Term::app(name, kids);
      }
      if (syms.knows(name)) {
        int want = *syms.arity_of(name);
        if (want != 0)
          fail(t, "arity mismatch: '" + name + "' takes " + std::to_string(want) +
                      " arguments, got 0");
        return Term::app(name, {});
      }
      if (pol == IdPolicy::GroundOnly) fail(t, "unknown symbol '" + name + "'");
      return Term::var(name);
    }
    fail(t, std::string("expected a term, got ") + tok_name(t.kind));
  }

  Term parse_product(const SymbolTable& syms, IdPolicy pol) {
    Term lhs = parse_primary(syms, pol);
    while (at(Tk::Star)) {
      advance();
      Term rhs = parse_primary(syms, pol);
      lhs = Term::op("*", {lhs, rhs});
    }
    return lhs;
  }

  Term parse_sum(const SymbolTable& syms, IdPolicy pol) {
    Term lhs = parse_product(syms, pol);
    while (at(Tk::Plus) || at(Tk::Minus)) {
      bool plus = at(Tk::Plus);
      advance();
      Term rhs = parse_product(syms, pol);
      lhs = Term::op(plus ? "+" : "-", {lhs, rhs});
    }
    return lhs;
  }

  std::optional<Relation> rel_at() const {
    switch (cur().kind) {
      case Tk::Lt: return Relation::Lt;
      case Tk::Le: return Relation::Le;
      case Tk::Gt: return Relation::Gt;
      case Tk::Ge: return Relation::Ge;
      case Tk::Assign: return Relation::Eq;
      case Tk::Ne: return Relation::Ne;
      default: return std::nullopt;
    }
  }

  std::vector<Predicate> parse_conditions(const SymbolTable& syms) {
    std::vector<Predicate> conds;
    while (true) {
      Term lhs = parse_sum(syms, IdPolicy::VarOk);
      auto rel = rel_at();
      if (!rel) fail(cur(), "expected a relation in condition");
      advance();
      Term rhs = parse_sum(syms, IdPolicy::VarOk);
      conds.push_back(Predicate{*rel, lhs, rhs});
      if (at(Tk::AndAnd)) {
        advance();
        continue;
      }
      break;
    }
    return conds;
  }

  void trs_block(SpecFile& out) {
    Tok name_tok = expect(Tk::Id, "a TRS name");
    if (out.find_trs(name_tok.text))
      fail(name_tok, "duplicate trs '" + name_tok.text + "'");
    Trs r;
    r.name = name_tok.text;
    expect(Tk::LBrace, "'{'");
    skip_newlines();
    while (!at(Tk::RBrace)) {
      Tok at_tok = cur();
      RewriteRule rule;
      rule.lhs = parse_sum(out.syms, IdPolicy::VarOk);
      expect(Tk::Arrow, "'->' in rule");
      rule.rhs = parse_sum(out.syms, IdPolicy::VarOk);
      if (at(Tk::Le)) {
        advance();
        rule.conditions = parse_conditions(out.syms);
      }
      try {
        rule.validate();
      } catch (const std::exception& e) {
        fail(at_tok, std::string("invalid rule: ") + e.what());
      }
      r.rules.push_back(std::move(rule));
      end_stmt();
      skip_newlines();
    }
    expect(Tk::RBrace, "'}'");
    end_stmt();
    out.trss.push_back(std::move(r));
  }

  void equations_block(SpecFile& out) {
    Tok name_tok = expect(Tk::Id, "an equation set name");
    if (out.find_equations(name_tok.text))
      fail(name_tok, "duplicate equations '" + name_tok.text + "'");
    EquationSet es;
    es.name = name_tok.text;
    expect(Tk::LBrace, "'{'");
    skip_newlines();
    while (!at(Tk::RBrace)) {
      Tok at_tok = cur();
      Equation eq;
      eq.u = parse_sum(out.syms, IdPolicy::VarOk);
      expect(Tk::Assign, "'=' in equation");
      eq.v = parse_sum(out.syms, IdPolicy::VarOk);
      if (at(Tk::Le)) {
        advance();
        eq.conditions = parse_conditions(out.syms);
      }
      try {
        eq.validate();
      } catch (const std::exception& e) {
        fail(at_tok, std::string("invalid equation: ") + e.what());
      }
      es.equations.push_back(std::move(eq));
      end_stmt();
      skip_newlines();
    }
    expect(Tk::RBrace, "'}'");
    end_stmt();
    out.eqsets.push_back(std::move(es));
  }

  void config_block(SpecFile& out) {
    expect(Tk::LBrace, "'{'");
    skip_newlines();
    while (!at(Tk::RBrace)) {
      Tok key_tok = cur();
      std::string key = dashed_name();
      if (key == "widen-after") {
        Tok n = expect(Tk::Num, "an integer");
        out.config.widen_after = static_cast<size_t>(n.num);
      } else if (key == "max-steps") {
        Tok n = expect(Tk::Num, "an integer");
        out.config.max_steps = static_cast<size_t>(n.num);
      } else if (key == "strict-int") {
        Tok v = expect(Tk::Id, "'on' or 'off'");
        if (v.text == "on" || v.text == "true")
          out.config.strict_int = true;
        else if (v.text == "off" || v.text == "false")
          out.config.strict_int = false;
        else
          fail(v, "expected 'on' or 'off'");
      } else if (key == "automaton") {
        out.pick_automaton = expect(Tk::Id, "an automaton name").text;
      } else if (key == "trs") {
        out.pick_trs = expect(Tk::Id, "a TRS name").text;
      } else if (key == "equations") {
        out.pick_equations = expect(Tk::Id, "an equation set name").text;
      } else {
        fail(key_tok, "unknown config key '" + key + "'");
      }
      end_stmt();
      skip_newlines();
    }
    expect(Tk::RBrace, "'}'");
    end_stmt();
  }

 public:
  Term standalone_term(const SymbolTable& syms) {
    skip_newlines();
    Term t = parse_sum(syms, IdPolicy::GroundOnly);
    skip_newlines();
    if (!at(Tk::End)) fail(cur(), "trailing input after term");
    return t;
  }
};

}  // namespace

const Lta* SpecFile::find_automaton(const std::string& name) const {
  for (const auto& [n, a] : automata)
    if (n == name) return &a;
  return nullptr;
}

const Trs* SpecFile::find_trs(const std::string& name) const {
  for (const auto& r : trss)
    if (r.name == name) return &r;
  return nullptr;
}

const EquationSet* SpecFile::find_equations(const std::string& name) const {
  for (const auto& e : eqsets)
    if (e.name == name) return &e;
  return nullptr;
}

SpecFile parse_spec_text(const std::string& text, const std::string& filename) {
  return Parser(text, filename).run();
}

SpecFile parse_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw EngineError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_spec_text(buf.str(), path);
}

Term parse_term(const std::string& text, const SymbolTable& syms) {
  Parser p(text, "<term>");
  return p.standalone_term(syms);
}

}  // namespace lta
