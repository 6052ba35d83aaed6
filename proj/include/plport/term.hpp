#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "plport/bigint.hpp"

namespace plport {

/// Half-open source range. Lines and columns are 1-based; columns count
/// Unicode scalar values (a tab is one column). end points one past the
/// last character.
struct SourceSpan {
  std::string file;
  int start_line = 0;
  int start_col = 0;
  int end_line = 0;
  int end_col = 0;

  bool valid() const { return start_line > 0; }

  bool operator==(const SourceSpan& o) const {
    return file == o.file && start_line == o.start_line &&
           start_col == o.start_col && end_line == o.end_line &&
           end_col == o.end_col;
  }
};

enum class TermKind { Var, Atom, Int, Float, Str, Compound };

class Term;
using TermRef = std::shared_ptr<const Term>;

/// Immutable tagged term tree. Variables carry both the surface name and
/// a numeric identity; two variables are the same variable iff their ids
/// match. Compounds always have arity >= 1 (an arity-0 name is an Atom).
/// Str is a distinct kind so SWI double-quoted strings survive the model.
class Term {
public:
  static TermRef var(std::string name, std::uint64_t id, SourceSpan span = {}) {
    auto t = std::make_shared<Term>(private_tag{});
    t->kind_ = TermKind::Var;
    t->text_ = std::move(name);
    t->var_id_ = id;
    t->span_ = std::move(span);
    return t;
  }

  static TermRef atom(std::string name, SourceSpan span = {}) {
    auto t = std::make_shared<Term>(private_tag{});
    t->kind_ = TermKind::Atom;
    t->text_ = std::move(name);
    t->span_ = std::move(span);
    return t;
  }

  static TermRef integer(BigInt v, SourceSpan span = {}) {
    auto t = std::make_shared<Term>(private_tag{});
    t->kind_ = TermKind::Int;
    t->int_ = std::move(v);
    t->span_ = std::move(span);
    return t;
  }

  static TermRef integer(long long v, SourceSpan span = {}) {
    return integer(BigInt(v), std::move(span));
  }

  static TermRef floating(double v, SourceSpan span = {}) {
    auto t = std::make_shared<Term>(private_tag{});
    t->kind_ = TermKind::Float;
    t->float_ = v;
    t->span_ = std::move(span);
    return t;
  }

  static TermRef str(std::string value, SourceSpan span = {}) {
    auto t = std::make_shared<Term>(private_tag{});
    t->kind_ = TermKind::Str;
    t->text_ = std::move(value);
    t->span_ = std::move(span);
    return t;
  }

  static TermRef compound(std::string functor, std::vector<TermRef> args,
                          SourceSpan span = {}) {
    assert(!args.empty() && "arity-0 compound must be an Atom");
    auto t = std::make_shared<Term>(private_tag{});
    t->kind_ = TermKind::Compound;
    t->text_ = std::move(functor);
    t->args_ = std::move(args);
    t->span_ = std::move(span);
    return t;
  }

  TermKind kind() const { return kind_; }

  /// Var name, atom name, string value or compound functor.
  const std::string& text() const { return text_; }

  std::uint64_t var_id() const {
    assert(kind_ == TermKind::Var);
    return var_id_;
  }

  const BigInt& int_value() const {
    assert(kind_ == TermKind::Int);
    return int_;
  }

  double float_value() const {
    assert(kind_ == TermKind::Float);
    return float_;
  }

  std::span<const TermRef> args() const { return args_; }

  std::size_t arity() const {
    return kind_ == TermKind::Compound ? args_.size() : 0;
  }

  const SourceSpan& span() const { return span_; }

  bool is_atom(std::string_view name) const {
    return kind_ == TermKind::Atom && text_ == name;
  }

  bool is_compound(std::string_view functor, std::size_t arity) const {
    return kind_ == TermKind::Compound && text_ == functor &&
           args_.size() == arity;
  }

  bool is_nil() const { return is_atom("[]"); }

  bool is_callable() const {
    return kind_ == TermKind::Atom || kind_ == TermKind::Compound;
  }

  struct private_tag {};
  explicit Term(private_tag) {}

private:
  TermKind kind_ = TermKind::Atom;
  std::string text_;
  BigInt int_;
  double float_ = 0.0;
  std::uint64_t var_id_ = 0;
  std::vector<TermRef> args_;
  SourceSpan span_;
};

inline bool is_cons_functor(std::string_view f) { return f == "." || f == "[|]"; }

/// Any cons cell regardless of dialect.
inline bool is_cons_cell(const Term& t) {
  return t.kind() == TermKind::Compound && t.arity() == 2 &&
         is_cons_functor(t.text());
}

inline TermRef cons(TermRef head, TermRef tail, std::string_view functor = ".") {
  return Term::compound(std::string(functor), {std::move(head), std::move(tail)});
}

inline TermRef make_list(std::vector<TermRef> elements, TermRef tail,
                         std::string_view functor = ".") {
  TermRef t = tail ? std::move(tail) : Term::atom("[]");
  for (std::size_t i = elements.size(); i-- > 0;)
    t = cons(std::move(elements[i]), std::move(t), functor);
  return t;
}

struct ListView {
  std::vector<TermRef> elements;
  TermRef tail;  // atom [] for proper lists

  bool proper() const { return tail && tail->is_nil(); }
};

/// Maximal chain of cons cells built from the given list functor.
/// Returns nullopt when t is not a cons cell of that functor.
inline std::optional<ListView> list_view(const TermRef& t,
                                         std::string_view list_functor) {
  if (!t || !t->is_compound(list_functor, 2)) return std::nullopt;
  ListView v;
  TermRef cur = t;
  while (cur->is_compound(list_functor, 2)) {
    v.elements.push_back(cur->args()[0]);
    cur = cur->args()[1];
  }
  v.tail = cur;
  return v;
}

namespace detail {

inline TermRef alpha_number_walk(const TermRef& t,
                                 std::map<std::uint64_t, std::uint64_t>& seen) {
  switch (t->kind()) {
    case TermKind::Var: {
      auto [it, inserted] = seen.emplace(t->var_id(), seen.size());
      std::uint64_t k = it->second;
      return Term::var("_G" + std::to_string(k), k);
    }
    case TermKind::Compound: {
      std::vector<TermRef> args;
      args.reserve(t->arity());
      bool changed = false;
      for (const TermRef& a : t->args()) {
        TermRef na = alpha_number_walk(a, seen);
        changed = changed || na != a;
        args.push_back(std::move(na));
      }
      if (!changed) return t;
      return Term::compound(t->text(), std::move(args));
    }
    default:
      return t;
  }
}

}  // namespace detail

/// Replaces every variable with a canonical one named by its
/// first-occurrence index (left-to-right, depth-first). Idempotent.
inline TermRef alpha_number(const TermRef& t) {
  std::map<std::uint64_t, std::uint64_t> seen;
  return detail::alpha_number_walk(t, seen);
}

namespace detail {

inline bool structural_eq_walk(const TermRef& a, const TermRef& b,
                               std::map<std::uint64_t, std::uint64_t>& la,
                               std::map<std::uint64_t, std::uint64_t>& lb) {
  if (a->kind() != b->kind()) return false;
  switch (a->kind()) {
    case TermKind::Var: {
      auto [ia, fresh_a] = la.emplace(a->var_id(), la.size());
      auto [ib, fresh_b] = lb.emplace(b->var_id(), lb.size());
      return ia->second == ib->second;
    }
    case TermKind::Atom:
    case TermKind::Str:
      return a->text() == b->text();
    case TermKind::Int:
      return a->int_value() == b->int_value();
    case TermKind::Float:
      // bit-pattern equality keeps this an equivalence relation (NaN == NaN)
      return std::bit_cast<std::uint64_t>(a->float_value()) ==
             std::bit_cast<std::uint64_t>(b->float_value());
    case TermKind::Compound: {
      if (a->text() != b->text() || a->arity() != b->arity()) return false;
      for (std::size_t i = 0; i < a->arity(); ++i) {
        if (!structural_eq_walk(a->args()[i], b->args()[i], la, lb))
          return false;
      }
      return true;
    }
  }
  return false;
}

}  // namespace detail

/// Alpha-equivalence: true iff the alpha-numbered trees are identical.
inline bool structural_eq(const TermRef& a, const TermRef& b) {
  std::map<std::uint64_t, std::uint64_t> la, lb;
  return detail::structural_eq_walk(a, b, la, lb);
}

/// Standard order of terms: Var < Number < Atom < Str < Compound.
/// Numbers compare by value with Float before Int on ties; compounds by
/// arity, then functor, then arguments left to right.
inline int standard_order_compare(const TermRef& a, const TermRef& b) {
  auto rank = [](const Term& t) {
    switch (t.kind()) {
      case TermKind::Var: return 0;
      case TermKind::Float:
      case TermKind::Int: return 1;
      case TermKind::Atom: return 2;
      case TermKind::Str: return 3;
      case TermKind::Compound: return 4;
    }
    return 5;
  };
  int ra = rank(*a), rb = rank(*b);
  if (ra != rb) return ra < rb ? -1 : 1;
  switch (a->kind()) {
    case TermKind::Var: {
      if (a->var_id() == b->var_id()) return 0;
      return a->var_id() < b->var_id() ? -1 : 1;
    }
    case TermKind::Atom:
    case TermKind::Str:
      return a->text().compare(b->text()) < 0   ? -1
             : a->text() == b->text()           ? 0
                                                : 1;
    case TermKind::Float:
    case TermKind::Int: {
      if (a->kind() == TermKind::Int && b->kind() == TermKind::Int)
        return a->int_value().compare(b->int_value());
      auto as_double = [](const Term& t) {
        if (t.kind() == TermKind::Float) return t.float_value();
        long long v = 0;
        if (t.int_value().fits_int64(v)) return static_cast<double>(v);
        return t.int_value().is_negative() ? -1e308 : 1e308;
      };
      double da = as_double(*a), db = as_double(*b);
      if (da < db) return -1;
      if (da > db) return 1;
      // equal value: Float precedes Int
      if (a->kind() == b->kind()) return 0;
      return a->kind() == TermKind::Float ? -1 : 1;
    }
    case TermKind::Compound: {
      if (a->arity() != b->arity()) return a->arity() < b->arity() ? -1 : 1;
      if (int c = a->text().compare(b->text()); c != 0) return c < 0 ? -1 : 1;
      for (std::size_t i = 0; i < a->arity(); ++i) {
        int c = standard_order_compare(a->args()[i], b->args()[i]);
        if (c != 0) return c;
      }
      return 0;
    }
  }
  return 0;
}

}  // namespace plport
