#include "anick/presentation.hpp"

#include <cctype>
#include <set>

#include "anick/error.hpp"

namespace anick {

namespace {

enum class Tok { ident, number, sym, end };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int col;
};

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> toks;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  while (i < src.size()) {
    unsigned char c = static_cast<unsigned char>(src[i]);
    if (std::isspace(c)) {
      advance(1);
    } else if (c == '#') {
      while (i < src.size() && src[i] != '\n') advance(1);
    } else if (std::isalpha(c) || c == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_' || src[j] == '\''))
        ++j;
      toks.push_back({Tok::ident, std::string(src.substr(i, j - i)), line, col});
      advance(j - i);
    } else if (std::isdigit(c)) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      toks.push_back({Tok::number, std::string(src.substr(i, j - i)), line, col});
      advance(j - i);
    } else if (std::string_view("+-*^/=();:>").find(static_cast<char>(c)) != std::string_view::npos) {
      toks.push_back({Tok::sym, std::string(1, static_cast<char>(c)), line, col});
      advance(1);
    } else {
      throw ParseError(std::string("unexpected character '") + static_cast<char>(c) + "'", line, col);
    }
  }
  toks.push_back({Tok::end, "", line, col});
  return toks;
}

const std::set<std::string> kKeywords = {"algebra", "kind", "generators", "order", "relations",
                                         "commutative", "noncommutative", "deglex", "lex"};

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  const Token& peek(std::size_t k = 0) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
  const Token& take() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
  bool at_sym(const char* s) const { return peek().kind == Tok::sym && peek().text == s; }
  bool at_end() const { return peek().kind == Tok::end; }

  [[noreturn]] void fail(const std::string& msg, const Token& t) const { throw ParseError(msg, t.line, t.col); }

  void expect_sym(const char* s) {
    if (!at_sym(s)) fail(std::string("expected '") + s + "'" + found(), peek());
    take();
  }
  std::string found() const {
    if (peek().kind == Tok::end) return " but reached end of input";
    return " but found '" + peek().text + "'";
  }

  // Polynomials are evaluated in the free algebra; commutative callers fold words afterwards.
  NcPoly expr(const RingPtr& ring) {
    NcPoly acc(ring);
    bool first = true;
    while (true) {
      int sign = 1;
      if (at_sym("+") || at_sym("-")) {
        sign = take().text == "-" ? -1 : 1;
      } else if (!first) {
        break;
      }
      NcPoly t = term(ring);
      acc = sign > 0 ? acc + t : acc - t;
      first = false;
      if (!(at_sym("+") || at_sym("-"))) break;
    }
    return acc;
  }

  NcPoly relation(const RingPtr& ring) {
    NcPoly lhs = expr(ring);
    if (at_sym("=")) {
      take();
      lhs = lhs - expr(ring);
    }
    return lhs;
  }

  NcPoly term(const RingPtr& ring) {
    NcPoly acc = factor(ring);
    while (at_sym("*")) {
      take();
      acc = acc * factor(ring);
    }
    return acc;
  }

  NcPoly factor(const RingPtr& ring) {
    NcPoly base = atom(ring);
    if (at_sym("^")) {
      take();
      if (peek().kind != Tok::number) fail("expected an exponent" + found(), peek());
      const Token& t = take();
      if (t.text.size() > 4) fail("exponent too large", t);
      int e = std::stoi(t.text);
      NcPoly r = NcPoly::constant(ring, 1);
      for (int k = 0; k < e; ++k) r = r * base;
      return r;
    }
    return base;
  }

  NcPoly atom(const RingPtr& ring) {
    const Token& t = peek();
    if (t.kind == Tok::number) {
      take();
      std::string s = t.text;
      if (at_sym("/") && peek(1).kind == Tok::number) {
        take();
        s += "/" + take().text;
      }
      Scalar q;
      try {
        q = parse_scalar(s);
      } catch (const InputError& e) {
        fail(e.what(), t);
      }
      return NcPoly::constant(ring, q);
    }
    if (t.kind == Tok::ident) {
      take();
      auto x = ring->find(t.text);
      if (!x) fail("unknown generator '" + t.text + "'", t);
      return NcPoly::monomial(ring, Word{*x});
    }
    if (at_sym("(")) {
      take();
      NcPoly inner = expr(ring);
      expect_sym(")");
      return inner;
    }
    fail("expected a number, generator or '('" + found(), t);
  }

  std::size_t pos_ = 0;

 private:
  std::vector<Token> toks_;
};

CommPoly fold(const RingPtr& comm_ring, const NcPoly& p) {
  std::vector<CommPoly::Term> terms;
  for (const auto& [w, c] : p.terms()) {
    CommMonomial m = comm_ring->one();
    for (Letter x : w) ++m.exps[x];
    terms.emplace_back(std::move(m), c);
  }
  return CommPoly(comm_ring, std::move(terms));
}

RingPtr free_ring_like(const RingPtr& ring) {
  return std::make_shared<const PolyRing>(AlgebraKind::noncommutative, ring->generators(),
                                          MonomialOrder(OrderKind::deglex, ring->order().precedence(),
                                                        ring->order().weights()));
}

}  // namespace

int Presentation::max_relation_degree() const {
  int d = 0;
  for (const auto& r : nc_relations) d = std::max(d, r.degree());
  for (const auto& r : comm_relations) d = std::max(d, r.degree());
  return d;
}

bool Presentation::is_homogeneous() const {
  for (const auto& r : nc_relations)
    if (!r.is_homogeneous()) return false;
  for (const auto& r : comm_relations)
    if (!r.is_homogeneous()) return false;
  return true;
}

void Presentation::require_homogeneous() const {
  auto strs = relation_strings();
  for (std::size_t i = 0; i < strs.size(); ++i) {
    bool h = kind() == AlgebraKind::noncommutative ? nc_relations[i].is_homogeneous()
                                                   : comm_relations[i].is_homogeneous();
    if (!h) throw InputError("relation " + std::to_string(i + 1) + " is not homogeneous: " + strs[i]);
  }
}

std::vector<std::string> Presentation::relation_strings() const {
  std::vector<std::string> out;
  for (const auto& r : nc_relations) out.push_back(r.to_string());
  for (const auto& r : comm_relations) out.push_back(r.to_string());
  return out;
}

bool Presentation::operator==(const Presentation& o) const {
  return name == o.name && same_ring(ring, o.ring) && nc_relations == o.nc_relations &&
         comm_relations == o.comm_relations;
}

Presentation parse_presentation(std::string_view text) {
  Parser ps(lex(text));
  std::string name;
  AlgebraKind kind = AlgebraKind::noncommutative;
  std::vector<Generator> gens;
  bool have_gens = false, have_order = false, have_kind = false;
  OrderKind okind = OrderKind::deglex;
  std::vector<Letter> prec;
  std::vector<NcPoly> raw;
  std::vector<Token> raw_at;
  RingPtr ring;

  auto build_ring = [&]() {
    std::vector<int> weights;
    for (const auto& g : gens) weights.push_back(g.degree);
    if (!have_order) {
      prec.clear();
      for (std::size_t i = 0; i < gens.size(); ++i) prec.push_back(static_cast<Letter>(i));
    }
    ring = std::make_shared<const PolyRing>(kind, gens, MonomialOrder(okind, prec, weights));
  };

  while (!ps.at_end()) {
    if (ps.at_sym(";")) {
      ps.take();
      continue;
    }
    const Token kw = ps.peek();
    if (kw.kind != Tok::ident) ps.fail("expected a statement keyword" + ps.found(), kw);
    ps.take();
    if (kw.text == "algebra") {
      bool prev_word = false;
      while (!ps.at_end() && !ps.at_sym(";")) {
        const Token& t = ps.take();
        bool word = t.kind != Tok::sym;
        if (prev_word && word) name += " ";
        name += t.text;
        prev_word = word;
      }
    } else if (kw.text == "kind" || kw.text == "commutative" || kw.text == "noncommutative") {
      std::string k = kw.text;
      if (kw.text == "kind") {
        if (ps.peek().kind != Tok::ident) ps.fail("expected commutative or noncommutative" + ps.found(), ps.peek());
        k = ps.take().text;
      }
      if (have_gens) ps.fail("kind must precede generators", kw);
      if (k == "commutative") {
        kind = AlgebraKind::commutative;
      } else if (k == "noncommutative") {
        kind = AlgebraKind::noncommutative;
      } else {
        ps.fail("unknown algebra kind '" + k + "'", kw);
      }
      have_kind = true;
    } else if (kw.text == "generators") {
      if (have_gens) ps.fail("generators declared twice", kw);
      while (!ps.at_end() && !ps.at_sym(";")) {
        const Token g = ps.take();
        if (g.kind != Tok::ident) ps.fail("expected a generator name but found '" + g.text + "'", g);
        if (kKeywords.count(g.text)) ps.fail("'" + g.text + "' is reserved", g);
        for (const auto& h : gens)
          if (h.name == g.text) ps.fail("duplicate generator '" + g.text + "'", g);
        int deg = 1;
        if (ps.at_sym(":")) {
          ps.take();
          const Token d = ps.take();
          if (d.kind != Tok::number || d.text.size() > 6 || std::stoi(d.text) < 1)
            ps.fail("generator degree must be a positive integer", d);
          deg = std::stoi(d.text);
        }
        gens.push_back({g.text, deg});
      }
      have_gens = true;
    } else if (kw.text == "order") {
      if (!have_gens) ps.fail("order must follow generators", kw);
      const Token o = ps.take();
      if (o.text == "deglex") {
        okind = OrderKind::deglex;
      } else if (o.text == "lex") {
        okind = OrderKind::lex;
        if (kind == AlgebraKind::noncommutative)
          ps.fail("lex order requested for a noncommutative algebra (not a well-order on words)", o);
      } else {
        ps.fail("unknown order '" + o.text + "'", o);
      }
      prec.clear();
      std::vector<bool> used(gens.size(), false);
      while (!ps.at_end() && !ps.at_sym(";")) {
        if (!prec.empty()) ps.expect_sym(">");
        const Token g = ps.take();
        std::size_t idx = gens.size();
        for (std::size_t i = 0; i < gens.size(); ++i)
          if (gens[i].name == g.text) idx = i;
        if (idx == gens.size()) ps.fail("unknown generator '" + g.text + "' in order", g);
        if (used[idx]) ps.fail("generator '" + g.text + "' ranked twice", g);
        used[idx] = true;
        prec.push_back(static_cast<Letter>(idx));
      }
      if (prec.size() != gens.size()) ps.fail("order must rank every generator exactly once", kw);
      have_order = true;
    } else if (kw.text == "relations") {
      if (!have_gens) ps.fail("relations must follow generators", kw);
      build_ring();
      RingPtr free_ring = kind == AlgebraKind::noncommutative ? ring : free_ring_like(ring);
      // the remaining statements are all relations
      while (true) {
        while (ps.at_sym(";")) ps.take();
        if (ps.at_end()) break;
        const Token start = ps.peek();
        NcPoly r = ps.relation(free_ring);
        if (!ps.at_end() && !ps.at_sym(";")) ps.fail("expected ';' after relation" + ps.found(), ps.peek());
        raw.push_back(std::move(r));
        raw_at.push_back(start);
      }
    } else {
      ps.fail("unknown statement '" + kw.text + "'", kw);
    }
    if (!ps.at_end()) ps.expect_sym(";");
  }
  (void)have_kind;
  if (!have_gens) throw ParseError("missing generators statement", 1, 1);
  if (!ring) build_ring();

  Presentation p;
  p.name = name;
  p.ring = ring;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (raw[i].is_zero()) ps.fail("relation is zero", raw_at[i]);
    if (kind == AlgebraKind::noncommutative) {
      p.nc_relations.push_back(raw[i]);
    } else {
      CommPoly c = fold(ring, raw[i]);
      if (c.is_zero()) ps.fail("relation is zero", raw_at[i]);
      p.comm_relations.push_back(std::move(c));
    }
  }
  return p;
}

std::string serialize_presentation(const Presentation& p) {
  std::string s;
  if (!p.name.empty()) s += "algebra " + p.name + ";\n";
  s += std::string("kind ") + (p.kind() == AlgebraKind::commutative ? "commutative" : "noncommutative") + ";\n";
  s += "generators";
  for (const auto& g : p.ring->generators()) {
    s += " " + g.name;
    if (g.degree != 1) s += ":" + std::to_string(g.degree);
  }
  s += ";\n";
  s += std::string("order ") + (p.ring->order().kind() == OrderKind::lex ? "lex" : "deglex");
  bool first = true;
  for (Letter x : p.ring->order().precedence()) {
    s += (first ? " " : " > ") + p.ring->generators()[x].name;
    first = false;
  }
  s += ";\n";
  auto rels = p.relation_strings();
  if (!rels.empty()) {
    s += "relations\n";
    for (const auto& r : rels) s += "  " + r + ";\n";
  }
  return s;
}

NcPoly parse_nc_polynomial(const RingPtr& ring, std::string_view text) {
  Parser ps(lex(text));
  NcPoly p = ps.relation(ring);
  if (!ps.at_end()) ps.fail("unexpected input after polynomial" + ps.found(), ps.peek());
  return p;
}

CommPoly parse_comm_polynomial(const RingPtr& ring, std::string_view text) {
  Parser ps(lex(text));
  NcPoly p = ps.relation(free_ring_like(ring));
  if (!ps.at_end()) ps.fail("unexpected input after polynomial" + ps.found(), ps.peek());
  return fold(ring, p);
}

Presentation make_Bn(int n) {
  if (n < 1) throw InputError("B_n needs n >= 1");
  std::vector<Generator> gens;
  for (int i = 0; i <= n; ++i)
    for (const char* l : {"a", "b", "c"}) gens.push_back({l + std::to_string(i), 1});
  std::vector<Letter> prec;
  for (int i = n; i >= 0; --i)
    for (int k = 0; k < 3; ++k) prec.push_back(static_cast<Letter>(3 * i + k));
  auto ring = std::make_shared<const PolyRing>(AlgebraKind::noncommutative, gens,
                                               MonomialOrder(OrderKind::deglex, prec, std::vector<int>(gens.size(), 1)));
  auto a = [](int i) { return static_cast<Letter>(3 * i); };
  auto b = [](int i) { return static_cast<Letter>(3 * i + 1); };
  auto c = [](int i) { return static_cast<Letter>(3 * i + 2); };
  auto mono = [&](Word w) { return NcPoly::monomial(ring, std::move(w)); };
  Presentation p;
  p.name = "B" + std::to_string(n);
  p.ring = ring;
  p.nc_relations.push_back(mono({a(n), b(n), c(n)}));
  p.nc_relations.push_back(mono({c(0), a(0)}));
  for (int i = 0; i < n; ++i) {
    p.nc_relations.push_back(mono({a(i), b(i), c(i)}) + mono({c(i + 1), a(i + 1), b(i + 1)}));
    p.nc_relations.push_back(mono({b(i + 1), c(i + 1), a(i + 1)}));
    p.nc_relations.push_back(mono({c(i), c(i + 1)}));
    p.nc_relations.push_back(mono({b(i + 1), a(i)}));
  }
  return p;
}

Presentation free_product(const Presentation& p, const Presentation& q) {
  if (p.kind() != AlgebraKind::noncommutative || q.kind() != AlgebraKind::noncommutative)
    throw InputError("free products are defined here for noncommutative presentations only");
  std::vector<Generator> gens = p.ring->generators();
  std::set<std::string> names;
  for (const auto& g : gens) names.insert(g.name);
  for (auto g : q.ring->generators()) {
    while (names.count(g.name)) g.name += "'";
    names.insert(g.name);
    gens.push_back(g);
  }
  Letter off = static_cast<Letter>(p.ring->size());
  std::vector<Letter> prec = p.ring->order().precedence();
  for (Letter x : q.ring->order().precedence()) prec.push_back(static_cast<Letter>(x + off));
  std::vector<int> weights;
  for (const auto& g : gens) weights.push_back(g.degree);
  auto ring = std::make_shared<const PolyRing>(AlgebraKind::noncommutative, gens,
                                               MonomialOrder(OrderKind::deglex, prec, weights));
  Presentation r;
  r.name = p.name.empty() && q.name.empty() ? "" : (p.name.empty() ? "A" : p.name) + "*" + (q.name.empty() ? "B" : q.name);
  r.ring = ring;
  for (const auto& f : p.nc_relations) r.nc_relations.emplace_back(ring, f.terms());
  for (const auto& f : q.nc_relations) {
    std::vector<NcPoly::Term> terms;
    for (const auto& [w, c] : f.terms()) {
      Word v = w;
      for (auto& x : v) x = static_cast<Letter>(x + off);
      terms.emplace_back(std::move(v), c);
    }
    r.nc_relations.emplace_back(ring, std::move(terms));
  }
  return r;
}

}  // namespace anick
