#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "plport/term.hpp"

namespace plport {

enum class OpType { xfx, xfy, yfx, fy, fx, xf, yf };

inline bool op_is_prefix(OpType t) { return t == OpType::fy || t == OpType::fx; }
inline bool op_is_postfix(OpType t) { return t == OpType::xf || t == OpType::yf; }
inline bool op_is_infix(OpType t) {
  return t == OpType::xfx || t == OpType::xfy || t == OpType::yfx;
}

inline std::optional<OpType> op_type_from_name(std::string_view s) {
  if (s == "xfx") return OpType::xfx;
  if (s == "xfy") return OpType::xfy;
  if (s == "yfx") return OpType::yfx;
  if (s == "fy") return OpType::fy;
  if (s == "fx") return OpType::fx;
  if (s == "xf") return OpType::xf;
  if (s == "yf") return OpType::yf;
  return std::nullopt;
}

/// Where an operator definition came from. Library extras matter for the
/// module-local-operators lint: on SWI an operator declared by a library
/// is only visible after importing that library.
enum class OpOrigin { core, dialect_extra, local_directive };

struct OperatorDef {
  std::string name;
  int priority = 0;  // 1..1200
  OpType type = OpType::xfx;
  OpOrigin origin = OpOrigin::core;
  std::string library;  // owning library for dialect_extra, else empty

  /// Max priority of the left operand.
  int left_max() const {
    switch (type) {
      case OpType::yfx:
      case OpType::yf: return priority;
      default: return priority - 1;
    }
  }

  /// Max priority of the right operand.
  int right_max() const {
    switch (type) {
      case OpType::xfy:
      case OpType::fy: return priority;
      default: return priority - 1;
    }
  }
};

class OperatorTable {
public:
  struct Entry {
    std::optional<OperatorDef> prefix, infix, postfix;
  };

  /// Installs a definition; priority 0 removes the slot. Returns false on
  /// the ISO-forbidden infix+postfix combination (definition is refused).
  bool add(const OperatorDef& def) {
    Entry& e = entries_[def.name];
    if (def.priority == 0) {
      if (op_is_prefix(def.type)) e.prefix.reset();
      else if (op_is_infix(def.type)) e.infix.reset();
      else e.postfix.reset();
      return true;
    }
    if (op_is_prefix(def.type)) {
      e.prefix = def;
    } else if (op_is_infix(def.type)) {
      if (e.postfix) return false;
      e.infix = def;
    } else {
      if (e.infix) return false;
      e.postfix = def;
    }
    return true;
  }

  const OperatorDef* prefix_op(std::string_view name) const {
    const Entry* e = find(name);
    return e && e->prefix ? &*e->prefix : nullptr;
  }
  const OperatorDef* infix_op(std::string_view name) const {
    const Entry* e = find(name);
    return e && e->infix ? &*e->infix : nullptr;
  }
  const OperatorDef* postfix_op(std::string_view name) const {
    const Entry* e = find(name);
    return e && e->postfix ? &*e->postfix : nullptr;
  }
  bool is_operator(std::string_view name) const { return find(name) != nullptr; }

private:
  const Entry* find(std::string_view name) const {
    auto it = entries_.find(name);
    return it == entries_.end() ? nullptr : &it->second;
  }

  std::map<std::string, Entry, std::less<>> entries_;
};

enum class QuoteMode { codes, chars, atom, string };

inline std::optional<QuoteMode> quote_mode_from_name(std::string_view s) {
  if (s == "codes") return QuoteMode::codes;
  if (s == "chars") return QuoteMode::chars;
  if (s == "atom") return QuoteMode::atom;
  if (s == "string") return QuoteMode::string;
  return std::nullopt;
}

enum class OperatorScope { global, module_local };
enum class CharPolicy { latin1_only, full_unicode };
enum class DialectId { sicstus4, swi8, iso };

inline std::string_view to_string(DialectId d) {
  switch (d) {
    case DialectId::sicstus4: return "sicstus4";
    case DialectId::swi8: return "swi8";
    case DialectId::iso: return "iso";
  }
  return "?";
}

/// Syntax + semantics configuration of one reader/writer target.
struct DialectProfile {
  DialectId id = DialectId::iso;
  QuoteMode double_quotes_default = QuoteMode::codes;
  std::string list_functor = ".";
  OperatorScope operator_scope = OperatorScope::global;
  CharPolicy nonascii_unquoted_policy = CharPolicy::full_unicode;
  OperatorTable initial_operators;

  static const DialectProfile& sicstus4();
  static const DialectProfile& swi8();
  static const DialectProfile& iso();
  static const DialectProfile* by_name(std::string_view name);
};

namespace detail {

inline void add_iso_core_ops(OperatorTable& t) {
  auto core = [&](const char* n, int p, OpType ty) {
    t.add({n, p, ty, OpOrigin::core, ""});
  };
  core(":-", 1200, OpType::xfx);
  core("-->", 1200, OpType::xfx);
  core(":-", 1200, OpType::fx);
  core("?-", 1200, OpType::fx);
  core(";", 1100, OpType::xfy);
  core("|", 1100, OpType::xfy);
  core("->", 1050, OpType::xfy);
  core(",", 1000, OpType::xfy);
  core("\\+", 900, OpType::fy);
  for (const char* n : {"=", "\\=", "==", "\\==", "@<", "@>", "@=<", "@>=",
                        "=..", "is", "=:=", "=\\=", "<", ">", "=<", ">="})
    core(n, 700, OpType::xfx);
  for (const char* n : {"+", "-", "/\\", "\\/", "xor"}) core(n, 500, OpType::yfx);
  for (const char* n : {"*", "/", "//", "rem", "mod", "div", "<<", ">>"})
    core(n, 400, OpType::yfx);
  core("**", 200, OpType::xfx);
  core("^", 200, OpType::xfy);
  core("-", 200, OpType::fy);
  core("+", 200, OpType::fy);
  core("\\", 200, OpType::fy);
}

inline void add_clpfd_ops(OperatorTable& t) {
  auto lib = [&](const char* n, int p, OpType ty) {
    t.add({n, p, ty, OpOrigin::dialect_extra, "clpfd"});
  };
  lib("#<=>", 760, OpType::yfx);
  lib("#=>", 750, OpType::xfy);
  lib("#<=", 750, OpType::yfx);
  lib("#\\/", 740, OpType::yfx);
  lib("#\\", 730, OpType::yfx);
  lib("#/\\", 720, OpType::yfx);
  lib("#\\", 710, OpType::fy);
  for (const char* n : {"#=", "#\\=", "#<", "#>", "#=<", "#>=", "in", "ins",
                        "in_set"})
    lib(n, 700, OpType::xfx);
  lib("..", 500, OpType::yfx);
}

inline DialectProfile make_iso_profile() {
  DialectProfile p;
  p.id = DialectId::iso;
  p.double_quotes_default = QuoteMode::codes;
  p.list_functor = ".";
  p.operator_scope = OperatorScope::global;
  p.nonascii_unquoted_policy = CharPolicy::full_unicode;
  add_iso_core_ops(p.initial_operators);
  return p;
}

inline DialectProfile make_sicstus4_profile() {
  DialectProfile p;
  p.id = DialectId::sicstus4;
  p.double_quotes_default = QuoteMode::codes;
  p.list_functor = ".";
  p.operator_scope = OperatorScope::global;
  p.nonascii_unquoted_policy = CharPolicy::latin1_only;
  OperatorTable& t = p.initial_operators;
  add_iso_core_ops(t);
  t.add({":", 550, OpType::xfy, OpOrigin::core, ""});
  t.add({"*->", 1050, OpType::xfy, OpOrigin::core, ""});
  for (const char* n : {"block", "dynamic", "discontiguous", "meta_predicate",
                        "mode", "multifile", "public", "volatile"})
    t.add({n, 1150, OpType::fx, OpOrigin::dialect_extra, ""});
  add_clpfd_ops(t);
  return p;
}

inline DialectProfile make_swi8_profile() {
  DialectProfile p;
  p.id = DialectId::swi8;
  p.double_quotes_default = QuoteMode::string;
  p.list_functor = "[|]";
  p.operator_scope = OperatorScope::module_local;
  p.nonascii_unquoted_policy = CharPolicy::full_unicode;
  OperatorTable& t = p.initial_operators;
  add_iso_core_ops(t);
  t.add({":", 600, OpType::xfy, OpOrigin::core, ""});
  t.add({"*->", 1050, OpType::xfy, OpOrigin::core, ""});
  t.add({":=", 990, OpType::xfx, OpOrigin::dialect_extra, ""});
  t.add({"$", 1, OpType::fx, OpOrigin::dialect_extra, ""});
  for (const char* n :
       {"dynamic", "discontiguous", "initialization", "meta_predicate",
        "module_transparent", "multifile", "public", "thread_local", "table",
        "volatile"})
    t.add({n, 1150, OpType::fx, OpOrigin::dialect_extra, ""});
  for (const char* n : {"as", ">:<", ":<", "=@=", "\\=@="})
    t.add({n, 700, OpType::xfx, OpOrigin::dialect_extra, ""});
  add_clpfd_ops(t);
  return p;
}

}  // namespace detail

inline const DialectProfile& DialectProfile::sicstus4() {
  static const DialectProfile p = detail::make_sicstus4_profile();
  return p;
}

inline const DialectProfile& DialectProfile::swi8() {
  static const DialectProfile p = detail::make_swi8_profile();
  return p;
}

inline const DialectProfile& DialectProfile::iso() {
  static const DialectProfile p = detail::make_iso_profile();
  return p;
}

inline const DialectProfile* DialectProfile::by_name(std::string_view name) {
  if (name == "sicstus4" || name == "sicstus") return &sicstus4();
  if (name == "swi8" || name == "swi") return &swi8();
  if (name == "iso") return &iso();
  return nullptr;
}

inline std::optional<ListView> list_view(const TermRef& t,
                                         const DialectProfile& profile) {
  return list_view(t, profile.list_functor);
}

}  // namespace plport
