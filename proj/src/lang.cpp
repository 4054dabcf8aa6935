#include "hyprepair/lang.hpp"

#include <stdexcept>

namespace hyprepair {

namespace {

struct BuiltinSpec {
  const char* name;
  Builtin id;
  int arity;
};

constexpr BuiltinSpec kBuiltins[] = {
    {"cons", Builtin::Cons, 2},
    {"car", Builtin::Car, 1},
    {"cdr", Builtin::Cdr, 1},
    {"consp", Builtin::Consp, 1},
    {"atom", Builtin::Atom, 1},
    {"equal", Builtin::Equal, 2},
    {"not", Builtin::Not, 1},
    {"and", Builtin::And, DefTable::kVariadic},
    {"or", Builtin::Or, DefTable::kVariadic},
    {"implies", Builtin::Implies, 2},
    {"if", Builtin::If, 3},
    {"<", Builtin::Less, 2},
    {"<=", Builtin::LessEq, 2},
    {"+", Builtin::Plus, 2},
    {"*", Builtin::Times, 2},
    {"-", Builtin::Minus, 1},
    {"stringp", Builtin::Stringp, 1},
    {"symbolp", Builtin::Symbolp, 1},
    {"integerp", Builtin::Integerp, 1},
    {"rationalp", Builtin::Rationalp, 1},
    {"numberp", Builtin::Numberp, 1},
    {"natp", Builtin::Natp, 1},
    {"posp", Builtin::Posp, 1},
    {"booleanp", Builtin::Booleanp, 1},
    {"characterp", Builtin::Characterp, 1},
    {"coerce", Builtin::Coerce, 2},
    {"<<", Builtin::TotalLess, 2},
};

struct Abort {
  EvalFailure failure;
};

// Variable scope: the top-level assignment, or one function call's frame.
struct Frame {
  const Assignment* top = nullptr;
  const std::vector<std::string>* names = nullptr;
  const std::vector<Value>* values = nullptr;

  const Value* lookup(const std::string& name) const {
    if (top) {
      auto it = top->find(name);
      return it == top->end() ? nullptr : &it->second;
    }
    for (std::size_t i = 0; i < names->size(); ++i) {
      if ((*names)[i] == name) return &(*values)[i];
    }
    return nullptr;
  }
};

Value coerce(const Value& x, const Value& target) {
  if (target.kind() == ValueKind::Sym && target.as_sym() == "list") {
    if (x.kind() != ValueKind::Str) return Value::nil();
    Value out;
    const auto& s = x.as_str();
    for (auto it = s.rbegin(); it != s.rend(); ++it) out = Value::cons(Value::character(*it), out);
    return out;
  }
  std::string out;
  for (const Value* cur = &x; cur->is_pair(); cur = &cur->cdr()) {
    if (cur->car().kind() == ValueKind::Char) out.push_back(cur->car().as_char());
  }
  return Value::string(std::move(out));
}

bool is_integer(const Value& v) { return v.kind() == ValueKind::Int; }

class Evaluator {
 public:
  Evaluator(const DefTable& defs, std::uint64_t budget) : defs_(defs), budget_(budget) {}

  Value eval(const Term& t, const Frame& frame) {
    switch (t.kind()) {
      case TermKind::Const: return t.value();
      case TermKind::Var: {
        const Value* v = frame.lookup(t.name());
        if (!v) throw Abort{{EvalFailure::Kind::UnboundVariable, t.name()}};
        return *v;
      }
      case TermKind::Hole: throw Abort{{EvalFailure::Kind::UnboundVariable, "_"}};
      case TermKind::App: break;
    }
    if (++steps_ > budget_) throw Abort{{EvalFailure::Kind::BudgetExhausted, t.name()}};
    const auto arity = defs_.arity(t.name());
    if (!arity) throw Abort{{EvalFailure::Kind::UnknownFunction, t.name()}};
    const auto& args = t.args();
    if (*arity != DefTable::kVariadic && static_cast<std::size_t>(*arity) != args.size()) {
      throw Abort{{EvalFailure::Kind::ArityMismatch, t.name()}};
    }
    if (auto b = defs_.builtin(t.name())) return apply_builtin(*b, args, frame);
    return call(*defs_.definition(t.name()), args, frame);
  }

 private:
  Value call(const FunctionDef& def, const std::vector<Term>& args, const Frame& frame) {
    std::vector<Value> values;
    values.reserve(args.size());
    for (const auto& a : args) values.push_back(eval(a, frame));
    if (++depth_ > kMaxCallDepth) throw Abort{{EvalFailure::Kind::BudgetExhausted, def.name + " (depth)"}};
    Frame inner{nullptr, &def.params, &values};
    Value out = eval(def.body, inner);
    --depth_;
    return out;
  }

  Value apply_builtin(Builtin b, const std::vector<Term>& args, const Frame& frame) {
    // Special forms evaluate their operands lazily.
    switch (b) {
      case Builtin::If:
        return eval(args[0], frame).truthy() ? eval(args[1], frame) : eval(args[2], frame);
      case Builtin::And: {
        Value last = Value::t();
        for (const auto& a : args) {
          last = eval(a, frame);
          if (last.is_nil()) return last;
        }
        return last;
      }
      case Builtin::Or: {
        for (const auto& a : args) {
          Value v = eval(a, frame);
          if (v.truthy()) return v;
        }
        return Value::nil();
      }
      case Builtin::Implies:
        if (!eval(args[0], frame).truthy()) return Value::t();
        return Value::boolean(eval(args[1], frame).truthy());
      default: break;
    }

    const Value x = eval(args[0], frame);
    switch (b) {
      case Builtin::Car: return x.is_pair() ? x.car() : Value::nil();
      case Builtin::Cdr: return x.is_pair() ? x.cdr() : Value::nil();
      case Builtin::Consp: return Value::boolean(x.is_pair());
      case Builtin::Atom: return Value::boolean(!x.is_pair());
      case Builtin::Not: return Value::boolean(x.is_nil());
      case Builtin::Minus: return Value::number(-x.to_rational());
      case Builtin::Stringp: return Value::boolean(x.kind() == ValueKind::Str);
      case Builtin::Symbolp: {
        // nil and t are symbols, as in the host logic.
        const auto k = x.kind();
        return Value::boolean(k == ValueKind::Sym || k == ValueKind::Nil || k == ValueKind::True);
      }
      case Builtin::Integerp: return Value::boolean(is_integer(x));
      case Builtin::Rationalp:
      case Builtin::Numberp: return Value::boolean(x.is_number());
      case Builtin::Natp: return Value::boolean(is_integer(x) && x.as_int() >= 0);
      case Builtin::Posp: return Value::boolean(is_integer(x) && x.as_int() > 0);
      case Builtin::Booleanp:
        return Value::boolean(x.kind() == ValueKind::Nil || x.kind() == ValueKind::True);
      case Builtin::Characterp: return Value::boolean(x.kind() == ValueKind::Char);
      default: break;
    }

    const Value y = eval(args[1], frame);
    switch (b) {
      case Builtin::Cons: return Value::cons(x, y);
      case Builtin::Equal: return Value::boolean(x == y);
      case Builtin::Less: return Value::boolean(x.to_rational() < y.to_rational());
      case Builtin::LessEq: return Value::boolean(!(y.to_rational() < x.to_rational()));
      case Builtin::Plus: return Value::number(x.to_rational() + y.to_rational());
      case Builtin::Times: return Value::number(x.to_rational() * y.to_rational());
      case Builtin::Coerce: return coerce(x, y);
      case Builtin::TotalLess: return Value::boolean(compare_total(x, y) < 0);
      default: break;
    }
    throw std::logic_error("unhandled builtin");
  }

  const DefTable& defs_;
  std::uint64_t budget_;
  std::uint64_t steps_ = 0;
  unsigned depth_ = 0;
};

}  // namespace

const char* to_string(EvalFailure::Kind kind) {
  switch (kind) {
    case EvalFailure::Kind::BudgetExhausted: return "budget_exhausted";
    case EvalFailure::Kind::UnknownFunction: return "unknown_function";
    case EvalFailure::Kind::ArityMismatch: return "arity_mismatch";
    case EvalFailure::Kind::UnboundVariable: return "unbound_variable";
  }
  return "?";
}

DefTable::DefTable() {
  for (const auto& spec : kBuiltins) entries_.emplace(spec.name, Entry{spec.arity, spec.id, 0});
}

DefTable DefTable::with_prelude() {
  DefTable table;
  table.add_all(parse_defs(prelude_text()));
  return table;
}

void DefTable::add(const FunctionDef& def) {
  if (entries_.count(def.name)) throw std::invalid_argument("function already defined: " + def.name);
  entries_.emplace(def.name, Entry{static_cast<int>(def.params.size()), std::nullopt, defs_.size()});
  defs_.push_back(def);
  order_.push_back(def.name);
}

void DefTable::add_all(const std::vector<FunctionDef>& defs) {
  // Register every name first so definitions may refer to later ones.
  for (const auto& def : defs) add(def);
  for (const auto& def : defs) {
    if (auto problem = check_term(def.body, *this)) {
      throw std::invalid_argument("in definition of " + def.name + ": " + *problem);
    }
  }
}

std::optional<int> DefTable::arity(const std::string& name) const {
  auto it = entries_.find(name);
  if (it == entries_.end()) return std::nullopt;
  return it->second.arity;
}

std::optional<Builtin> DefTable::builtin(const std::string& name) const {
  auto it = entries_.find(name);
  if (it == entries_.end()) return std::nullopt;
  return it->second.builtin;
}

const FunctionDef* DefTable::definition(const std::string& name) const {
  auto it = entries_.find(name);
  if (it == entries_.end() || it->second.builtin) return nullptr;
  return &defs_[it->second.def_index];
}

EvalResult eval(const Term& t, const Assignment& a, const DefTable& d, std::uint64_t step_budget) {
  Evaluator ev(d, step_budget);
  try {
    return ev.eval(t, Frame{&a});
  } catch (const Abort& abort) {
    return abort.failure;
  }
}

std::optional<std::string> check_term(const Term& t, const DefTable& d) {
  if (t.is_hole()) return "template hole in term";
  if (!t.is_app()) return std::nullopt;
  const auto arity = d.arity(t.name());
  if (!arity) return "unknown function " + t.name();
  if (*arity != DefTable::kVariadic && static_cast<std::size_t>(*arity) != t.args().size()) {
    return "wrong number of arguments to " + t.name() + " (expected " + std::to_string(*arity) + ", got " +
           std::to_string(t.args().size()) + ")";
  }
  for (const auto& arg : t.args()) {
    if (auto problem = check_term(arg, d)) return problem;
  }
  return std::nullopt;
}

}  // namespace hyprepair
