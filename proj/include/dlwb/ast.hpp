#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace dlwb {

/// Interned constant symbol. Two symbols are equal iff their printable
/// names are equal; comparison by id is O(1), ordering helpers compare
/// by name so user-visible output never depends on interning order.
class Symbol {
public:
    Symbol() = default;

    static Symbol intern(std::string_view name);

    const std::string& name() const;
    uint32_t id() const { return id_; }

    bool operator==(const Symbol& o) const { return id_ == o.id_; }
    bool operator!=(const Symbol& o) const { return id_ != o.id_; }

private:
    explicit Symbol(uint32_t id) : id_(id) {}
    uint32_t id_ = 0;
};

/// Name-based (not id-based) ordering for deterministic output.
bool symbol_name_less(Symbol a, Symbol b);

struct SymbolHash {
    size_t operator()(Symbol s) const { return s.id() * 0x9E3779B9u; }
};

class Term {
public:
    static Term constant(Symbol s) { return Term(s); }
    static Term constant(std::string_view name) { return Term(Symbol::intern(name)); }
    static Term variable(std::string name) { return Term(std::move(name)); }

    bool is_constant() const { return is_const_; }
    bool is_variable() const { return !is_const_; }
    Symbol symbol() const { return sym_; }
    const std::string& var() const { return var_; }

    bool operator==(const Term& o) const {
        if (is_const_ != o.is_const_) return false;
        return is_const_ ? sym_ == o.sym_ : var_ == o.var_;
    }

private:
    explicit Term(Symbol s) : is_const_(true), sym_(s) {}
    explicit Term(std::string v) : is_const_(false), var_(std::move(v)) {}
    bool is_const_;
    Symbol sym_{};
    std::string var_;
};

/// Predicate identity is the (name, arity) pair: p/1 and p/2 coexist.
struct Predicate {
    Symbol name;
    uint32_t arity = 0;

    bool operator==(const Predicate& o) const { return name == o.name && arity == o.arity; }
    bool operator!=(const Predicate& o) const { return !(*this == o); }
};

/// (name, arity) ordering by printable name, for deterministic iteration.
struct PredicateNameLess {
    bool operator()(const Predicate& a, const Predicate& b) const {
        if (a.name != b.name) return symbol_name_less(a.name, b.name);
        return a.arity < b.arity;
    }
};

struct PredicateHash {
    size_t operator()(const Predicate& p) const {
        return p.name.id() * 0x9E3779B9u ^ (p.arity + 0x85EBCA6Bu);
    }
};

struct Atom {
    Predicate pred;
    std::vector<Term> args;

    bool operator==(const Atom& o) const { return pred == o.pred && args == o.args; }
};

Atom make_atom(std::string_view name, std::vector<Term> args);

struct Rule {
    Atom head;
    std::vector<Atom> body;  // empty body = fact

    bool operator==(const Rule& o) const { return head == o.head && body == o.body; }
};

struct Program {
    std::vector<Predicate> edb_decls;  // declaration order preserved
    std::vector<Rule> rules;
    std::optional<Atom> query;

    bool is_edb(const Predicate& p) const;
    bool operator==(const Program& o) const {
        return edb_decls == o.edb_decls && rules == o.rules && query == o.query;
    }
};

/// Structural equality with per-rule variable names normalized away.
bool equal_modulo_var_names(const Program& a, const Program& b);

/// Ground tuple of constants.
using Tuple = std::vector<Symbol>;

struct TupleHash {
    size_t operator()(const Tuple& t) const {
        size_t h = 0x811C9DC5u;
        for (Symbol s : t) h = (h ^ s.id()) * 0x01000193u;
        return h;
    }
};

struct TupleNameLess {
    bool operator()(const Tuple& a, const Tuple& b) const;
};

/// Deduplicated query result, ordered lexicographically by constant name.
/// A boolean "yes" is the singleton empty tuple.
using AnswerSet = std::set<Tuple, TupleNameLess>;

std::string format_tuple(const Tuple& t);

}  // namespace dlwb
