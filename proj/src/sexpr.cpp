#include "hyprepair/sexpr.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <set>
#include <sstream>

namespace hyprepair {

ParseError::ParseError(const std::string& what, std::size_t offset)
    : std::runtime_error(what + " at offset " + std::to_string(offset)), offset_(offset) {}

namespace {

// Reader output before it is interpreted as data or as a term.
struct Sexp {
  enum class Kind { Atom, String, Char, List, Quote };
  Kind kind;
  std::size_t offset;
  std::string text;  // atom token, string contents, or the single character
  std::vector<Sexp> items;
  std::vector<Sexp> tail;  // dotted tail (0 or 1 element); quoted datum for Quote
};

bool is_delimiter(char c) {
  return std::isspace(static_cast<unsigned char>(c)) || c == '(' || c == ')' || c == '\'' || c == '"' ||
         c == ';';
}

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }

  std::size_t position() const { return pos_; }

  Sexp read() {
    skip_space();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    const std::size_t start = pos_;
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      return read_list(start);
    }
    if (c == ')') throw ParseError("unbalanced ')'", pos_);
    if (c == '\'') {
      ++pos_;
      Sexp q{Sexp::Kind::Quote, start, {}, {}, {}};
      q.tail.push_back(read());
      return q;
    }
    if (c == '"') return read_string(start);
    if (c == '#' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '\\') return read_char(start);
    std::string token = read_token();
    if (token == ".") throw ParseError("stray '.'", start);
    return Sexp{Sexp::Kind::Atom, start, std::move(token), {}, {}};
  }

 private:
  void skip_space() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else if (c == ';') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  std::string read_token() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && !is_delimiter(text_[pos_])) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  Sexp read_list(std::size_t start) {
    Sexp list{Sexp::Kind::List, start, {}, {}, {}};
    for (;;) {
      skip_space();
      if (pos_ >= text_.size()) throw ParseError("unbalanced '(': missing ')'", start);
      if (text_[pos_] == ')') {
        ++pos_;
        return list;
      }
      if (text_[pos_] == '.' && (pos_ + 1 >= text_.size() || is_delimiter(text_[pos_ + 1]))) {
        const std::size_t dot = pos_;
        if (list.items.empty()) throw ParseError("stray '.'", dot);
        ++pos_;
        skip_space();
        if (pos_ >= text_.size() || text_[pos_] == ')') throw ParseError("stray '.'", dot);
        list.tail.push_back(read());
        skip_space();
        if (pos_ >= text_.size() || text_[pos_] != ')') throw ParseError("stray '.'", dot);
        ++pos_;
        return list;
      }
      list.items.push_back(read());
    }
  }

  Sexp read_string(std::size_t start) {
    ++pos_;
    std::string out;
    while (pos_ < text_.size() && text_[pos_] != '"') {
      if (text_[pos_] == '\\') {
        ++pos_;
        if (pos_ >= text_.size()) break;
      }
      out.push_back(text_[pos_++]);
    }
    if (pos_ >= text_.size()) throw ParseError("unterminated string", start);
    ++pos_;
    return Sexp{Sexp::Kind::String, start, std::move(out), {}, {}};
  }

  Sexp read_char(std::size_t start) {
    pos_ += 2;
    if (pos_ >= text_.size()) throw ParseError("incomplete character literal", start);
    // The first character is taken verbatim, so #\( and #\  work.
    std::string name(1, text_[pos_++]);
    while (pos_ < text_.size() && !is_delimiter(text_[pos_])) name.push_back(text_[pos_++]);
    if (name.size() == 1) return Sexp{Sexp::Kind::Char, start, name, {}, {}};
    std::string lower = name;
    std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
    char c = 0;
    if (lower == "space") {
      c = ' ';
    } else if (lower == "newline") {
      c = '\n';
    } else if (lower == "tab") {
      c = '\t';
    } else {
      throw ParseError("unknown character name #\\" + name, start);
    }
    return Sexp{Sexp::Kind::Char, start, std::string(1, c), {}, {}};
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string lowercase(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

std::optional<Value> read_number(const std::string& token, std::size_t offset) {
  std::string_view body = token;
  bool negative = false;
  if (!body.empty() && (body[0] == '-' || body[0] == '+')) {
    negative = body[0] == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  if (slash == std::string_view::npos) {
    if (!all_digits(body)) return std::nullopt;
    BigInt n{std::string(body)};
    return Value::integer(negative ? BigInt(-n) : n);
  }
  const auto num = body.substr(0, slash);
  const auto den = body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) return std::nullopt;
  BigInt d(std::string{den});
  if (d == 0) throw ParseError("zero denominator in " + token, offset);
  BigInt n(std::string{num});
  if (negative) n = -n;
  return Value::number(BigRat(n, d));
}

Value atom_value(const Sexp& s) {
  if (auto n = read_number(s.text, s.offset)) return *n;
  std::string name = lowercase(s.text);
  if (name == "nil") return Value::nil();
  if (name == "t") return Value::t();
  return Value::symbol(std::move(name));
}

Value to_value(const Sexp& s) {
  switch (s.kind) {
    case Sexp::Kind::Atom: return atom_value(s);
    case Sexp::Kind::String: return Value::string(s.text);
    case Sexp::Kind::Char: return Value::character(s.text[0]);
    case Sexp::Kind::Quote:
      return Value::cons(Value::symbol("quote"), Value::cons(to_value(s.tail.front()), Value::nil()));
    case Sexp::Kind::List: {
      Value out = s.tail.empty() ? Value::nil() : to_value(s.tail.front());
      for (auto it = s.items.rbegin(); it != s.items.rend(); ++it) out = Value::cons(to_value(*it), out);
      return out;
    }
  }
  return Value::nil();
}

Term to_term(const Sexp& s) {
  switch (s.kind) {
    case Sexp::Kind::String:
    case Sexp::Kind::Char: return Term::constant(to_value(s));
    case Sexp::Kind::Quote: return Term::constant(to_value(s.tail.front()));
    case Sexp::Kind::Atom: {
      Value v = atom_value(s);
      if (v.kind() == ValueKind::Sym) return Term::var(v.as_sym());
      return Term::constant(std::move(v));
    }
    case Sexp::Kind::List: {
      if (!s.tail.empty()) throw ParseError("stray '.' in term", s.offset);
      if (s.items.empty()) return Term::constant(Value::nil());
      const Sexp& head = s.items.front();
      if (head.kind != Sexp::Kind::Atom) throw ParseError("expected a function symbol", head.offset);
      Value fn = atom_value(head);
      if (fn.kind() != ValueKind::Sym) throw ParseError("expected a function symbol", head.offset);
      if (fn.as_sym() == "quote") {
        if (s.items.size() != 2) throw ParseError("quote takes exactly one datum", s.offset);
        return Term::constant(to_value(s.items[1]));
      }
      std::vector<Term> args;
      args.reserve(s.items.size() - 1);
      for (std::size_t i = 1; i < s.items.size(); ++i) args.push_back(to_term(s.items[i]));
      return Term::app(fn.as_sym(), std::move(args));
    }
  }
  throw ParseError("unreadable term", s.offset);
}

Sexp read_single(std::string_view text) {
  Reader reader(text);
  if (reader.at_end()) throw ParseError("empty input", 0);
  Sexp s = reader.read();
  if (!reader.at_end()) throw ParseError("trailing input after expression", reader.position());
  return s;
}

std::string symbol_of(const Sexp& s, const char* what) {
  if (s.kind == Sexp::Kind::Atom) {
    Value v = atom_value(s);
    if (v.kind() == ValueKind::Sym) return v.as_sym();
  }
  throw ParseError(std::string("expected ") + what, s.offset);
}

void print_value_to(std::ostringstream& out, const Value& v) {
  switch (v.kind()) {
    case ValueKind::Nil: out << "nil"; return;
    case ValueKind::True: out << "t"; return;
    case ValueKind::Int: out << v.as_int(); return;
    case ValueKind::Rat: out << v.as_rat(); return;
    case ValueKind::Char: {
      const char c = v.as_char();
      if (c == ' ') {
        out << "#\\Space";
      } else if (c == '\n') {
        out << "#\\Newline";
      } else if (c == '\t') {
        out << "#\\Tab";
      } else {
        out << "#\\" << c;
      }
      return;
    }
    case ValueKind::Str: {
      out << '"';
      for (char c : v.as_str()) {
        if (c == '"' || c == '\\') out << '\\';
        out << c;
      }
      out << '"';
      return;
    }
    case ValueKind::Sym: out << v.as_sym(); return;
    case ValueKind::Pair: {
      out << '(';
      const Value* cur = &v;
      bool first = true;
      while (cur->is_pair()) {
        if (!first) out << ' ';
        first = false;
        print_value_to(out, cur->car());
        cur = &cur->cdr();
      }
      if (!cur->is_nil()) {
        out << " . ";
        print_value_to(out, *cur);
      }
      out << ')';
      return;
    }
  }
}

void print_term_to(std::ostringstream& out, const Term& t) {
  switch (t.kind()) {
    case TermKind::Hole: out << '_'; return;
    case TermKind::Var: out << t.name(); return;
    case TermKind::Const: {
      const auto k = t.value().kind();
      const bool self_quoting =
          k == ValueKind::Int || k == ValueKind::Rat || k == ValueKind::Char || k == ValueKind::Str;
      if (!self_quoting) out << '\'';
      print_value_to(out, t.value());
      return;
    }
    case TermKind::App: {
      out << '(' << t.name();
      for (const auto& a : t.args()) {
        out << ' ';
        print_term_to(out, a);
      }
      out << ')';
      return;
    }
  }
}

void check_closed(const Term& body, const std::set<std::string>& params, const FunctionDef& def,
                  std::size_t offset) {
  for (const auto& v : free_vars(body)) {
    if (!params.count(v)) throw ParseError("free variable " + v + " in body of " + def.name, offset);
  }
}

}  // namespace

Term parse_term(std::string_view text) { return to_term(read_single(text)); }

Value parse_value(std::string_view text) { return to_value(read_single(text)); }

std::vector<FunctionDef> parse_defs(std::string_view text) {
  Reader reader(text);
  std::vector<FunctionDef> defs;
  std::set<std::string> names;
  while (!reader.at_end()) {
    const Sexp form = reader.read();
    if (form.kind != Sexp::Kind::List || !form.tail.empty() || form.items.size() != 4 ||
        form.items[0].kind != Sexp::Kind::Atom || lowercase(form.items[0].text) != "defun") {
      throw ParseError("expected (defun name (params...) body)", form.offset);
    }
    FunctionDef def;
    def.name = symbol_of(form.items[1], "function name");
    const Sexp& params = form.items[2];
    if (params.kind == Sexp::Kind::Atom && lowercase(params.text) == "nil") {
      // (defun f nil body) is an empty parameter list.
    } else if (params.kind != Sexp::Kind::List || !params.tail.empty()) {
      throw ParseError("expected parameter list", params.offset);
    } else {
      std::set<std::string> seen;
      for (const auto& p : params.items) {
        std::string name = symbol_of(p, "parameter name");
        if (!seen.insert(name).second) throw ParseError("duplicate parameter " + name, p.offset);
        def.params.push_back(std::move(name));
      }
    }
    def.body = to_term(form.items[3]);
    check_closed(def.body, {def.params.begin(), def.params.end()}, def, form.items[3].offset);
    if (!names.insert(def.name).second) throw ParseError("duplicate function " + def.name, form.offset);
    defs.push_back(std::move(def));
  }
  return defs;
}

std::string print_value(const Value& v) {
  std::ostringstream out;
  print_value_to(out, v);
  return out.str();
}

std::string print_term(const Term& t) {
  std::ostringstream out;
  print_term_to(out, t);
  return out.str();
}

std::string print_assignment(const Assignment& a) {
  std::ostringstream out;
  out << '(';
  bool first = true;
  for (const auto& [name, value] : a) {
    if (!first) out << ' ';
    first = false;
    out << '(' << name << ' ';
    print_term_to(out, Term::constant(value));
    out << ')';
  }
  out << ')';
  return out.str();
}

std::string print_def(const FunctionDef& def) {
  std::ostringstream out;
  out << "(defun " << def.name << " (";
  for (std::size_t i = 0; i < def.params.size(); ++i) out << (i ? " " : "") << def.params[i];
  out << ") ";
  print_term_to(out, def.body);
  out << ')';
  return out.str();
}

}  // namespace hyprepair
