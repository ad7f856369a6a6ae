#include "lpterm/parser.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

namespace lpterm {

namespace {

const std::set<std::string> kBuiltins = {
    "!",  ";",  "->", "=",  "\\=", "==", "\\==", "is",  "<",      ">",
    "=<", ">=", "=:=", "=\\=", "=..", "call", "assert", "asserta",
    "assertz", "retract", "findall", "bagof", "setof", "not"};

struct Token {
  enum Kind { Atom, Var, Int, Punct, End } kind;
  std::string text;
  int line, col;
};

class Lexer {
 public:
  explicit Lexer(const std::string& src) : src_(src) {}

  Token next() {
    skip_ws_and_comments();
    int line = line_, col = col_;
    if (pos_ >= src_.size()) return {Token::End, "", line, col};
    char c = src_[pos_];
    if (c == '\'') {
      advance();
      std::string name;
      while (pos_ < src_.size() && src_[pos_] != '\'') {
        name += src_[pos_];
        advance();
      }
      if (pos_ >= src_.size()) throw SyntaxError("unterminated quoted atom", line, col);
      advance();
      return {Token::Atom, name, line, col};
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string n;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        n += src_[pos_];
        advance();
      }
      return {Token::Int, n, line, col};
    }
    if (std::islower(static_cast<unsigned char>(c))) {
      return {Token::Atom, read_word(), line, col};
    }
    if (std::isupper(static_cast<unsigned char>(c)) || c == '_') {
      return {Token::Var, read_word(), line, col};
    }
    // multi-char punctuation first
    for (const char* p : {":-", "\\+", "->", "=..", "\\==", "\\=", "=<", ">=", "=:=", "=\\="}) {
      std::string s(p);
      if (src_.compare(pos_, s.size(), s) == 0) {
        for (size_t i = 0; i < s.size(); ++i) advance();
        return {Token::Punct, s, line, col};
      }
    }
    advance();
    return {Token::Punct, std::string(1, c), line, col};
  }

  Token peek() {
    size_t p = pos_;
    int l = line_, c = col_;
    Token t = next();
    pos_ = p;
    line_ = l;
    col_ = c;
    return t;
  }

 private:
  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_ws_and_comments() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else if (c == '%') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else if (c == '/' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '*') {
        while (pos_ + 1 < src_.size() && !(src_[pos_] == '*' && src_[pos_ + 1] == '/')) advance();
        if (pos_ + 1 < src_.size()) {
          advance();
          advance();
        }
      } else {
        break;
      }
    }
  }

  std::string read_word() {
    std::string w;
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') break;
      w += c;
      advance();
    }
    return w;
  }

  const std::string& src_;
  size_t pos_ = 0;
  int line_ = 1, col_ = 1;
};

class ProgramParser {
 public:
  ProgramParser(const std::string& text, std::shared_ptr<SymbolTable> table)
      : lex_(text) {
    prog_.table = table ? std::move(table) : std::make_shared<SymbolTable>();
  }

  Program run() {
    for (;;) {
      Token t = lex_.peek();
      if (t.kind == Token::End) break;
      parse_clause();
    }
    finish_signature();
    return std::move(prog_);
  }

 private:
  void parse_clause() {
    clause_vars_.clear();
    Token t = lex_.peek();
    Atom head = parse_atom(true);
    Clause c;
    c.head = head;
    Token sep = lex_.next();
    if (sep.kind == Token::Punct && sep.text == ":-") {
      for (;;) {
        c.body.push_back(parse_atom(false));
        Token d = lex_.next();
        if (d.kind == Token::Punct && d.text == ",") continue;
        if (d.kind == Token::Punct && d.text == ".") break;
        throw SyntaxError("expected ',' or '.' after body atom", d.line, d.col);
      }
    } else if (!(sep.kind == Token::Punct && sep.text == ".")) {
      throw SyntaxError("expected ':-' or '.' after clause head", sep.line, sep.col);
    }
    (void)t;
    prog_.clauses.push_back(std::move(c));
  }

  Atom parse_atom(bool /*is_head*/) {
    Token t = lex_.next();
    if (t.kind == Token::Punct) {
      if (t.text == "\\+") throw UnsupportedFeature("negation (\\+) is not supported", t.line, t.col);
      if (t.text == "!") throw UnsupportedFeature("cut (!) is not supported", t.line, t.col);
      if (kBuiltins.count(t.text))
        throw UnsupportedFeature("built-in '" + t.text + "' is not supported", t.line, t.col);
    }
    if (t.kind == Token::Var) {
      // "X = f(X)", "X is E", ...: an infix built-in, not a definite atom.
      Token nxt = lex_.peek();
      if (kBuiltins.count(nxt.text))
        throw UnsupportedFeature("built-in '" + nxt.text + "' is not supported", nxt.line,
                                 nxt.col);
      throw SyntaxError("expected predicate name", t.line, t.col);
    }
    if (t.kind != Token::Atom)
      throw SyntaxError("expected predicate name", t.line, t.col);
    if (kBuiltins.count(t.text))
      throw UnsupportedFeature("built-in '" + t.text + "' is not supported", t.line, t.col);
    std::vector<Term> args;
    Token after = lex_.peek();
    if (after.kind == Token::Punct && after.text == "(") {
      lex_.next();
      for (;;) {
        args.push_back(parse_term());
        Token d = lex_.next();
        if (d.kind == Token::Punct && d.text == ",") continue;
        if (d.kind == Token::Punct && d.text == ")") break;
        throw SyntaxError("expected ',' or ')'", d.line, d.col);
      }
    }
    // Infix built-ins in body position, e.g. "X = Y".
    Token nxt = lex_.peek();
    if (nxt.kind == Token::Punct && kBuiltins.count(nxt.text))
      throw UnsupportedFeature("built-in '" + nxt.text + "' is not supported", nxt.line, nxt.col);
    Atom a;
    a.pred = intern_pred(t.text, static_cast<int>(args.size()), t.line, t.col);
    a.args = std::move(args);
    return a;
  }

  Term parse_term() {
    Token t = lex_.next();
    if (t.kind == Token::Var) {
      if (t.text == "_") return Term::var(fresh_var("_"));
      auto it = clause_vars_.find(t.text);
      if (it != clause_vars_.end()) return Term::var(it->second);
      int v = fresh_var(t.text);
      clause_vars_.emplace(t.text, v);
      return Term::var(v);
    }
    if (t.kind == Token::Int) {
      return Term::app(intern_fun(t.text, 0, t.line, t.col));
    }
    if (t.kind == Token::Atom) {
      if (kBuiltins.count(t.text))
        throw UnsupportedFeature("built-in '" + t.text + "' is not supported", t.line, t.col);
      Token after = lex_.peek();
      std::vector<Term> args;
      if (after.kind == Token::Punct && after.text == "(") {
        lex_.next();
        for (;;) {
          args.push_back(parse_term());
          Token d = lex_.next();
          if (d.kind == Token::Punct && d.text == ",") continue;
          if (d.kind == Token::Punct && d.text == ")") break;
          throw SyntaxError("expected ',' or ')'", d.line, d.col);
        }
      }
      return Term::app(intern_fun(t.text, static_cast<int>(args.size()), t.line, t.col),
                       std::move(args));
    }
    if (t.kind == Token::Punct && t.text == "[") return parse_list(t);
    if (t.kind == Token::Punct && (t.text == "!" || t.text == "\\+"))
      throw UnsupportedFeature("'" + t.text + "' is not supported", t.line, t.col);
    throw SyntaxError("expected term", t.line, t.col);
  }

  Term parse_list(const Token& open) {
    Token t = lex_.peek();
    if (t.kind == Token::Punct && t.text == "]") {
      lex_.next();
      return Term::app(intern_fun("[]", 0, open.line, open.col));
    }
    std::vector<Term> items;
    Term tail;
    bool has_tail = false;
    for (;;) {
      items.push_back(parse_term());
      Token d = lex_.next();
      if (d.kind == Token::Punct && d.text == ",") continue;
      if (d.kind == Token::Punct && d.text == "|") {
        tail = parse_term();
        has_tail = true;
        Token close = lex_.next();
        if (!(close.kind == Token::Punct && close.text == "]"))
          throw SyntaxError("expected ']'", close.line, close.col);
        break;
      }
      if (d.kind == Token::Punct && d.text == "]") break;
      throw SyntaxError("expected ',', '|' or ']'", d.line, d.col);
    }
    Term list = has_tail ? tail : Term::app(intern_fun("[]", 0, open.line, open.col));
    SymbolId cons = intern_fun(".", 2, open.line, open.col);
    for (auto it = items.rbegin(); it != items.rend(); ++it)
      list = Term::app(cons, {*it, list});
    return list;
  }

  int fresh_var(const std::string& name) {
    int v = prog_.next_var++;
    prog_.var_names.names[v] = name == "_" ? "_" + std::to_string(v) : name;
    return v;
  }

  SymbolId intern_fun(const std::string& name, int arity, int line, int col) {
    return intern(name, arity, SymbolKind::Function, prog_.functions, line, col);
  }

  SymbolId intern_pred(const std::string& name, int arity, int line, int col) {
    return intern(name, arity, SymbolKind::Predicate, prog_.predicates, line, col);
  }

  SymbolId intern(const std::string& name, int arity, SymbolKind kind,
                  std::vector<SymbolId>& bucket, int line, int col) {
    auto seen = arities_.find({name, static_cast<int>(kind)});
    if (seen != arities_.end() && seen->second != arity)
      throw SyntaxError("inconsistent arity for '" + name + "'", line, col);
    arities_[{name, static_cast<int>(kind)}] = arity;
    SymbolId id = prog_.table->intern(name, arity, kind);
    if (std::find(bucket.begin(), bucket.end(), id) == bucket.end()) bucket.push_back(id);
    return id;
  }

  void finish_signature() {
    bool has_constant = false;
    for (SymbolId f : prog_.functions)
      if ((*prog_.table)[f].arity == 0) has_constant = true;
    if (!has_constant) {
      std::string name = "bot";
      while (arities_.count({name, static_cast<int>(SymbolKind::Function)})) name += "_";
      prog_.fresh_constant = prog_.table->intern(name, 0, SymbolKind::Function);
    }
  }

  Lexer lex_;
  Program prog_;
  std::map<std::string, int> clause_vars_;
  std::map<std::pair<std::string, int>, int> arities_;
};

}  // namespace

Program parse_program(const std::string& text, std::shared_ptr<SymbolTable> table) {
  ProgramParser p(text, std::move(table));
  return p.run();
}

namespace {

// Splits "%query:"/"%filter:" payloads on commas and periods at depth 0.
std::vector<std::string> split_entries(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  bool quoted = false;
  for (char c : s) {
    if (c == '\'') quoted = !quoted;
    if (!quoted) {
      if (c == '(' || c == '[') ++depth;
      if (c == ')' || c == ']') --depth;
      if (depth == 0 && (c == ',' || c == '.')) {
        out.push_back(cur);
        cur.clear();
        continue;
      }
    }
    cur += c;
  }
  out.push_back(cur);
  std::vector<std::string> trimmed;
  for (std::string& e : out) {
    size_t a = e.find_first_not_of(" \t");
    size_t b = e.find_last_not_of(" \t");
    if (a == std::string::npos) continue;
    trimmed.push_back(e.substr(a, b - a + 1));
  }
  return trimmed;
}

SymbolId resolve_symbol(const std::string& name, const Program& program, int line) {
  for (SymbolId p : program.predicates)
    if ((*program.table)[p].name == name) return p;
  for (SymbolId f : program.sigma())
    if ((*program.table)[f].name == name) return f;
  throw UnknownSymbol("unknown symbol '" + name + "' in directive at line " +
                      std::to_string(line));
}

}  // namespace

QuerySpec parse_query_spec(const std::string& text, const Program& program) {
  QuerySpec spec;
  const SymbolTable& table = *program.table;
  int line_no = 0;
  size_t start = 0;
  while (start <= text.size()) {
    size_t end = text.find('\n', start);
    std::string line = text.substr(start, end == std::string::npos ? std::string::npos
                                                                   : end - start);
    ++line_no;
    start = end == std::string::npos ? text.size() + 1 : end + 1;

    size_t at = line.find_first_not_of(" \t");
    if (at == std::string::npos || line[at] != '%') continue;
    std::string rest = line.substr(at + 1);
    bool is_query = rest.rfind("query:", 0) == 0;
    bool is_filter = rest.rfind("filter:", 0) == 0;
    if (!is_query && !is_filter) continue;
    std::string payload = rest.substr(rest.find(':') + 1);

    if (is_query) {
      if (spec.filter)
        throw SyntaxError("cannot mix %query and %filter directives", line_no, 1);
      if (!spec.moding) spec.moding = Moding{};
      for (const std::string& entry : split_entries(payload)) {
        size_t lp = entry.find('(');
        size_t rp = entry.rfind(')');
        if (lp == std::string::npos || rp == std::string::npos || rp < lp)
          throw SyntaxError("malformed %query directive", line_no, 1);
        std::string name = entry.substr(0, lp);
        name.erase(std::remove_if(name.begin(), name.end(), ::isspace), name.end());
        if (!name.empty() && name.front() == '\'' && name.back() == '\'')
          name = name.substr(1, name.size() - 2);
        std::vector<Mode> modes;
        for (char c : entry.substr(lp + 1, rp - lp - 1)) {
          if (c == ' ' || c == '\t') continue;
          if (c == ',') continue;
          if (c == 'i') modes.push_back(Mode::In);
          else if (c == 'o') modes.push_back(Mode::Out);
          else throw SyntaxError(std::string("bad mode '") + c + "' in %query", line_no, 1);
        }
        SymbolId p = resolve_symbol(name, program, line_no);
        if (table[p].kind != SymbolKind::Predicate)
          throw UnknownSymbol("'" + name + "' is not a predicate");
        if (static_cast<int>(modes.size()) != table[p].arity)
          throw SyntaxError("moding arity mismatch for '" + name + "'", line_no, 1);
        if (spec.moding->modes.count(p))
          throw SyntaxError("duplicate %query for '" + name + "'", line_no, 1);
        spec.moding->modes.emplace(p, std::move(modes));
        if (!spec.entry) spec.entry = p;
      }
    } else {
      if (spec.moding)
        throw SyntaxError("cannot mix %query and %filter directives", line_no, 1);
      if (!spec.filter) spec.filter = ArgumentFilter{};
      for (const std::string& entry : split_entries(payload)) {
        size_t eq = entry.find('=');
        if (eq == std::string::npos)
          throw SyntaxError("malformed %filter directive", line_no, 1);
        std::string name = entry.substr(0, eq);
        name.erase(std::remove_if(name.begin(), name.end(), ::isspace), name.end());
        if (!name.empty() && name.front() == '\'' && name.back() == '\'')
          name = name.substr(1, name.size() - 2);
        std::string rhs = entry.substr(eq + 1);
        size_t lb = rhs.find('[');
        size_t rb = rhs.rfind(']');
        if (lb == std::string::npos || rb == std::string::npos || rb < lb)
          throw SyntaxError("malformed %filter directive", line_no, 1);
        std::vector<int> kept;
        std::string inner = rhs.substr(lb + 1, rb - lb - 1);
        std::string num;
        for (char c : inner + ",") {
          if (std::isdigit(static_cast<unsigned char>(c))) {
            num += c;
          } else if (c == ',' || c == ' ') {
            if (!num.empty()) kept.push_back(std::stoi(num));
            num.clear();
          } else {
            throw SyntaxError("malformed %filter index list", line_no, 1);
          }
        }
        SymbolId s = resolve_symbol(name, program, line_no);
        for (int i : kept)
          if (i < 1 || i > table[s].arity)
            throw SyntaxError("filter index out of range for '" + name + "'", line_no, 1);
        spec.filter->set(s, kept);
        if (!spec.entry && table[s].kind == SymbolKind::Predicate) spec.entry = s;
      }
    }
  }
  return spec;
}

}  // namespace lpterm
