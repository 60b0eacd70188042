#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace terse {

enum class Fixity { Prefix, Infix, Postfix };
enum class SymbolKind { Function, Constant };

using SymbolId = int;

struct Symbol {
  std::string name;
  int arity = 0;
  Fixity fixity = Fixity::Prefix;
  int precedence = 0;  // larger = heavier in the term ordering
  SymbolKind kind = SymbolKind::Constant;
};

/// Signature of a problem: the function and constant symbols, identified by
/// dense ids. Names are unique per (name, arity). Precedence defaults to
/// reverse declaration order (symbols declared earlier rank higher); callers
/// may override per symbol.
class SymbolTable {
 public:
  SymbolId declare(const std::string& name, int arity,
                   Fixity fixity = Fixity::Prefix) {
    if (auto id = lookup(name, arity)) return *id;
    SymbolId id = static_cast<SymbolId>(symbols_.size());
    Symbol s;
    s.name = name;
    s.arity = arity;
    s.fixity = fixity;
    s.precedence = -id;
    s.kind = arity == 0 ? SymbolKind::Constant : SymbolKind::Function;
    symbols_.push_back(std::move(s));
    index_.emplace(std::make_pair(name, arity), id);
    return id;
  }

  std::optional<SymbolId> lookup(const std::string& name, int arity) const {
    auto it = index_.find({name, arity});
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  // Any symbol with this name, regardless of arity. The parser uses this to
  // diagnose arity conflicts.
  std::optional<SymbolId> lookup_name(const std::string& name) const {
    for (SymbolId i = 0; i < size(); ++i)
      if (symbols_[static_cast<size_t>(i)].name == name) return i;
    return std::nullopt;
  }

  const Symbol& operator[](SymbolId id) const {
    return symbols_.at(static_cast<size_t>(id));
  }

  SymbolId size() const { return static_cast<SymbolId>(symbols_.size()); }

  void set_precedence(SymbolId id, int precedence) {
    symbols_.at(static_cast<size_t>(id)).precedence = precedence;
  }

 private:
  std::vector<Symbol> symbols_;
  std::map<std::pair<std::string, int>, SymbolId> index_;
};

}  // namespace terse
