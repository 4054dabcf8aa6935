#include "hyprepair/value.hpp"

#include <cassert>
#include <variant>

namespace hyprepair {

namespace {
struct TrueTag {};
struct StrBox {
  std::string text;
};
struct SymBox {
  std::string name;
};
}  // namespace

struct PairCell {
  Value head;
  Value tail;
};

struct Value::Node {
  std::variant<TrueTag, BigInt, BigRat, char, StrBox, SymBox, PairCell> data;
};

const char* to_string(ValueKind kind) {
  switch (kind) {
    case ValueKind::Nil: return "nil";
    case ValueKind::True: return "t";
    case ValueKind::Int: return "int";
    case ValueKind::Rat: return "rat";
    case ValueKind::Char: return "char";
    case ValueKind::Str: return "str";
    case ValueKind::Sym: return "sym";
    case ValueKind::Pair: return "pair";
  }
  return "?";
}

Value Value::t() {
  static const auto node = std::make_shared<const Node>(Node{TrueTag{}});
  return Value(node);
}

Value Value::integer(BigInt n) {
  return Value(std::make_shared<const Node>(Node{std::move(n)}));
}

Value Value::number(const BigRat& q) {
  if (boost::multiprecision::denominator(q) == 1) {
    return integer(boost::multiprecision::numerator(q));
  }
  return Value(std::make_shared<const Node>(Node{q}));
}

Value Value::character(char c) {
  return Value(std::make_shared<const Node>(Node{c}));
}

Value Value::string(std::string s) {
  return Value(std::make_shared<const Node>(Node{StrBox{std::move(s)}}));
}

Value Value::symbol(std::string name) {
  return Value(std::make_shared<const Node>(Node{SymBox{std::move(name)}}));
}

Value Value::cons(Value head, Value tail) {
  return Value(std::make_shared<const Node>(Node{PairCell{std::move(head), std::move(tail)}}));
}

ValueKind Value::kind() const {
  if (!node_) return ValueKind::Nil;
  switch (node_->data.index()) {
    case 0: return ValueKind::True;
    case 1: return ValueKind::Int;
    case 2: return ValueKind::Rat;
    case 3: return ValueKind::Char;
    case 4: return ValueKind::Str;
    case 5: return ValueKind::Sym;
    default: return ValueKind::Pair;
  }
}

const BigInt& Value::as_int() const {
  assert(kind() == ValueKind::Int);
  return std::get<BigInt>(node_->data);
}

const BigRat& Value::as_rat() const {
  assert(kind() == ValueKind::Rat);
  return std::get<BigRat>(node_->data);
}

char Value::as_char() const {
  assert(kind() == ValueKind::Char);
  return std::get<char>(node_->data);
}

const std::string& Value::as_str() const {
  assert(kind() == ValueKind::Str);
  return std::get<StrBox>(node_->data).text;
}

const std::string& Value::as_sym() const {
  assert(kind() == ValueKind::Sym);
  return std::get<SymBox>(node_->data).name;
}

const Value& Value::car() const {
  assert(kind() == ValueKind::Pair);
  return std::get<PairCell>(node_->data).head;
}

const Value& Value::cdr() const {
  assert(kind() == ValueKind::Pair);
  return std::get<PairCell>(node_->data).tail;
}

BigRat Value::to_rational() const {
  switch (kind()) {
    case ValueKind::Int: return BigRat(as_int());
    case ValueKind::Rat: return as_rat();
    default: return BigRat(0);
  }
}

bool operator==(const Value& a, const Value& b) {
  if (a.node_ == b.node_) return true;
  const ValueKind ka = a.kind();
  if (ka != b.kind()) return false;
  switch (ka) {
    case ValueKind::Nil:
    case ValueKind::True: return true;
    case ValueKind::Int: return a.as_int() == b.as_int();
    case ValueKind::Rat: return a.as_rat() == b.as_rat();
    case ValueKind::Char: return a.as_char() == b.as_char();
    case ValueKind::Str: return a.as_str() == b.as_str();
    case ValueKind::Sym: return a.as_sym() == b.as_sym();
    case ValueKind::Pair: return a.car() == b.car() && a.cdr() == b.cdr();
  }
  return false;
}

namespace {
int kind_rank(ValueKind k) {
  switch (k) {
    case ValueKind::Nil: return 0;
    case ValueKind::True: return 1;
    case ValueKind::Int:
    case ValueKind::Rat: return 2;
    case ValueKind::Char: return 3;
    case ValueKind::Str: return 4;
    case ValueKind::Sym: return 5;
    case ValueKind::Pair: return 6;
  }
  return 7;
}

template <typename T>
int three_way(const T& a, const T& b) {
  if (a < b) return -1;
  if (b < a) return 1;
  return 0;
}
}  // namespace

int compare_total(const Value& a, const Value& b) {
  const int ra = kind_rank(a.kind());
  const int rb = kind_rank(b.kind());
  if (ra != rb) return ra < rb ? -1 : 1;
  switch (a.kind()) {
    case ValueKind::Nil:
    case ValueKind::True: return 0;
    case ValueKind::Int:
    case ValueKind::Rat: return three_way(a.to_rational(), b.to_rational());
    case ValueKind::Char: return three_way(a.as_char(), b.as_char());
    case ValueKind::Str: return three_way(a.as_str(), b.as_str());
    case ValueKind::Sym: return three_way(a.as_sym(), b.as_sym());
    case ValueKind::Pair: {
      const int head = compare_total(a.car(), b.car());
      return head != 0 ? head : compare_total(a.cdr(), b.cdr());
    }
  }
  return 0;
}

std::size_t value_size(const Value& v) {
  std::size_t n = 0;
  const Value* cur = &v;
  while (cur->is_pair()) {
    n += 1 + value_size(cur->car());
    cur = &cur->cdr();
  }
  return n + 1;
}

bool is_true_list(const Value& v) {
  const Value* cur = &v;
  while (cur->is_pair()) cur = &cur->cdr();
  return cur->is_nil();
}

}  // namespace hyprepair
