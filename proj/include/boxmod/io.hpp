#pragma once

// The text syntax shared by the CLI and the test fixtures:
//
//   ring a, b, c, d;
//   I = a^4*d^4, a^2*b^3, b^3*c^2, b^3*d;
//   J = a^3*d^3, a^3*b, b^2;
//   module quotient J I t=(4,3,2,4);
//
// or a presentation:
//
//   ring x, y;
//   module presentation t=(2,1);
//   rows (0,0);
//   cols (2,0), (1,1);
//   (0,0) = 1 * x^(2,0);
//   (0,1) = 1 * x^(1,1);
//
// Exponent 1 may be omitted; "1" is the unit monomial, "0" the zero ideal.
// Whitespace is insignificant; statements end with ';' (optional on the
// last one).

#include <cctype>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "boxmod/box_module.hpp"
#include "boxmod/monomial_ideal.hpp"
#include "boxmod/monomial_matrix.hpp"

namespace boxmod {

struct RingContext {
  std::vector<std::string> vars;

  int arity() const { return static_cast<int>(vars.size()); }

  int var_index(const std::string& name) const {
    for (std::size_t i = 0; i < vars.size(); ++i)
      if (vars[i] == name) return static_cast<int>(i);
    throw std::invalid_argument("unknown variable '" + name + "'");
  }

  std::string monomial(const ExponentVector& a) const {
    if (a == ExponentVector::zero(arity())) return "1";
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < arity(); ++i) {
      if (a[i] == 0) continue;
      if (!first) os << '*';
      os << vars[i];
      if (a[i] > 1) os << '^' << a[i];
      first = false;
    }
    return os.str();
  }

  static RingContext generic(int n) {
    RingContext r;
    for (int i = 0; i < n; ++i) r.vars.push_back("x" + std::to_string(i + 1));
    return r;
  }
};

struct PresentationData {
  struct Entry {
    int j, k;
    long num = 1, den = 1;
    ExponentVector exp;
  };
  std::vector<ExponentVector> rows, cols;
  std::vector<Entry> entries;
};

struct ParsedInput {
  RingContext ring;
  std::vector<std::pair<std::string, MonomialIdeal>> ideals;

  enum class ModuleKind { none, quotient, presentation };
  ModuleKind kind = ModuleKind::none;
  std::string quot_num, quot_den;  // module quotient <J> <I>
  std::optional<ExponentVector> t;
  PresentationData pres;

  const MonomialIdeal* find_ideal(const std::string& name) const {
    for (const auto& [n, i] : ideals)
      if (n == name) return &i;
    return nullptr;
  }

  const MonomialIdeal& ideal(const std::string& name) const {
    const MonomialIdeal* p = find_ideal(name);
    if (!p) throw std::invalid_argument("no ideal named '" + name + "'");
    return *p;
  }

  // the single declared ideal, for subcommands that operate on one
  const std::pair<std::string, MonomialIdeal>& sole_ideal() const {
    if (ideals.size() != 1)
      throw std::invalid_argument("expected exactly one ideal, found " +
                                  std::to_string(ideals.size()));
    return ideals.front();
  }

  BoundVector bound() const {
    if (!t) throw std::invalid_argument("no bound t given");
    return BoundVector(*t);
  }

  template <Field K>
  MonomialMatrix<K> build_presentation() const {
    DenseMatrix<K> scal(static_cast<int>(pres.rows.size()), static_cast<int>(pres.cols.size()));
    for (const auto& e : pres.entries) {
      if (e.j < 0 || e.j >= scal.rows() || e.k < 0 || e.k >= scal.cols())
        throw std::invalid_argument("presentation entry index out of range");
      if (e.exp != pres.cols[e.k] - pres.rows[e.j])
        throw std::invalid_argument("presentation entry exponent " + e.exp.str() +
                                    " does not equal column minus row shift");
      scal(e.j, e.k) = K(e.num) / K(e.den);
    }
    return MonomialMatrix<K>(pres.rows, pres.cols, std::move(scal));
  }

  template <Field K>
  BoxModule<K> build_module() const {
    switch (kind) {
      case ModuleKind::quotient:
        return BoxModule<K>::from_ideal_pair(ideal(quot_den), ideal(quot_num), bound());
      case ModuleKind::presentation:
        return BoxModule<K>::from_presentation(build_presentation<K>(), bound());
      case ModuleKind::none: {
        // convenience: a single ideal I denotes S/I at its tight bound
        const auto& [name, I] = sole_ideal();
        BoundVector tb = t ? bound() : I.tight_bound();
        return BoxModule<K>::from_ideal_pair(I, MonomialIdeal::unit(ring.arity()), tb);
      }
    }
    throw std::logic_error("unreachable");
  }

  std::string text() const;
};

namespace detail {

class Tokens {
 public:
  explicit Tokens(const std::string& s) : s_(s) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool done() {
    skip_ws();
    return pos_ >= s_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  std::string ident() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
      ++pos_;
    if (start == pos_) fail("expected an identifier");
    return s_.substr(start, pos_ - start);
  }
  long integer() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return std::stol(s_.substr(start, pos_ - start));
  }
  [[noreturn]] void fail(const std::string& msg) {
    throw std::invalid_argument("parse error near position " + std::to_string(pos_) + ": " + msg +
                                " in '" + s_ + "'");
  }

 private:
  const std::string& s_;
  std::size_t pos_ = 0;
};

inline ExponentVector parse_vector(Tokens& tk) {
  tk.expect('(');
  std::vector<int> entries;
  if (!tk.accept(')')) {
    do entries.push_back(static_cast<int>(tk.integer()));
    while (tk.accept(','));
    tk.expect(')');
  }
  return ExponentVector(entries);
}

inline ExponentVector parse_monomial(Tokens& tk, const RingContext& ring) {
  ExponentVector a = ExponentVector::zero(ring.arity());
  if (tk.peek() == '1') {
    tk.expect('1');
    return a;
  }
  do {
    std::string v = tk.ident();
    int i = ring.var_index(v);
    long e = 1;
    if (tk.accept('^')) e = tk.integer();
    if (e < 0) tk.fail("negative exponent");
    a[i] += static_cast<int>(e);
  } while (tk.accept('*'));
  return a;
}

}  // namespace detail

inline ParsedInput parse_input(const std::string& text) {
  ParsedInput out;
  // strip # comments, then split on ';' into statements
  std::vector<std::string> statements;
  std::string cur;
  bool in_comment = false;
  for (char c : text) {
    if (in_comment) {
      if (c == '\n') in_comment = false;
      continue;
    }
    if (c == '#') {
      in_comment = true;
    } else if (c == ';') {
      statements.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  statements.push_back(cur);

  for (const std::string& stmt : statements) {
    detail::Tokens tk(stmt);
    if (tk.done()) continue;
    if (tk.peek() == '(') {
      // entry statement: (j,k) = c * x^(v)
      if (out.kind != ParsedInput::ModuleKind::presentation)
        tk.fail("entry outside a module presentation");
      tk.expect('(');
      PresentationData::Entry e;
      e.j = static_cast<int>(tk.integer());
      tk.expect(',');
      e.k = static_cast<int>(tk.integer());
      tk.expect(')');
      tk.expect('=');
      e.num = tk.integer();
      if (tk.accept('/')) e.den = tk.integer();
      tk.expect('*');
      std::string x = tk.ident();
      if (x != "x") tk.fail("expected monomial written as x^(v)");
      tk.expect('^');
      e.exp = detail::parse_vector(tk);
      out.pres.entries.push_back(std::move(e));
      continue;
    }
    std::string head = tk.ident();
    if (head == "ring") {
      do out.ring.vars.push_back(tk.ident());
      while (tk.accept(','));
    } else if (head == "module") {
      std::string what = tk.ident();
      if (what == "quotient") {
        out.kind = ParsedInput::ModuleKind::quotient;
        out.quot_num = tk.ident();
        out.quot_den = tk.ident();
      } else if (what == "presentation") {
        out.kind = ParsedInput::ModuleKind::presentation;
      } else {
        tk.fail("unknown module kind '" + what + "'");
      }
      std::string t = tk.ident();
      if (t != "t") tk.fail("expected t=(...)");
      tk.expect('=');
      out.t = detail::parse_vector(tk);
      if (out.t->size() != out.ring.arity()) tk.fail("bound arity differs from the ring");
    } else if (head == "rows" || head == "cols") {
      if (out.kind != ParsedInput::ModuleKind::presentation)
        tk.fail("'" + head + "' outside a module presentation");
      auto& dst = head == "rows" ? out.pres.rows : out.pres.cols;
      if (tk.peek() == '(') {
        do dst.push_back(detail::parse_vector(tk));
        while (tk.accept(','));
      }
    } else {
      // ideal definition: <name> = monomials | 0
      tk.expect('=');
      std::vector<ExponentVector> gens;
      if (tk.peek() == '0') {
        tk.expect('0');
      } else {
        do gens.push_back(detail::parse_monomial(tk, out.ring));
        while (tk.accept(','));
      }
      out.ideals.emplace_back(head, MonomialIdeal::from_generators(out.ring.arity(), gens));
    }
    if (!tk.done()) tk.fail("trailing input");
  }
  return out;
}

inline std::string ParsedInput::text() const {
  std::ostringstream os;
  os << "ring ";
  for (std::size_t i = 0; i < ring.vars.size(); ++i) os << (i ? "," : "") << ring.vars[i];
  os << ";\n";
  for (const auto& [name, I] : ideals) {
    os << name << " = ";
    if (I.is_zero()) {
      os << '0';
    } else {
      const auto& gens = I.generators();
      for (std::size_t i = 0; i < gens.size(); ++i) os << (i ? ", " : "") << ring.monomial(gens[i]);
    }
    os << ";\n";
  }
  if (kind == ModuleKind::quotient)
    os << "module quotient " << quot_num << ' ' << quot_den << " t=" << t->str() << ";\n";
  if (kind == ModuleKind::presentation) {
    os << "module presentation t=" << t->str() << ";\n";
    os << "rows";
    for (std::size_t i = 0; i < pres.rows.size(); ++i)
      os << (i ? ", " : " ") << pres.rows[i].str();
    os << ";\ncols";
    for (std::size_t i = 0; i < pres.cols.size(); ++i)
      os << (i ? ", " : " ") << pres.cols[i].str();
    os << ";\n";
    for (const auto& e : pres.entries) {
      os << '(' << e.j << ',' << e.k << ") = " << e.num;
      if (e.den != 1) os << '/' << e.den;
      os << " * x^" << e.exp.str() << ";\n";
    }
  }
  return os.str();
}

}  // namespace boxmod
