#include "gradix/parser.hpp"

#include <cctype>
#include <optional>

namespace gradix {

namespace {

enum class Tok { Ident, Number, Symbol, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_blank();
      if (pos_ >= text_.size()) {
        out.push_back(Token{Tok::End, "", line_, col_});
        return out;
      }
      const std::size_t line = line_, col = col_;
      char c = text_[pos_];
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
          advance();
        }
        out.push_back(Token{Tok::Ident, std::string(text_.substr(start, pos_ - start)), line, col});
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) advance();
        out.push_back(Token{Tok::Number, std::string(text_.substr(start, pos_ - start)), line, col});
      } else if (std::string_view("+-*/^()[],;=").find(c) != std::string_view::npos) {
        advance();
        out.push_back(Token{Tok::Symbol, std::string(1, c), line, col});
      } else {
        throw ParseError(line, col, std::string("unexpected character '") + c + "'");
      }
    }
  }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_blank() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        return;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(Lexer(text).run()) {}

  Document document() {
    Document doc;
    bool have_order = false;
    while (peek().kind != Tok::End) {
      const Token& t = peek();
      if (t.kind != Tok::Ident) fail(t, "expected 'ring', 'ideal' or 'order'");
      if (t.text == "ring") {
        if (doc.ring) fail(t, "duplicate ring declaration");
        next();
        doc.ring = ring_declaration();
        ring_ = doc.ring;
      } else if (t.text == "ideal") {
        if (!doc.ring) fail(t, "ideal declared before the ring");
        next();
        const Token& name = expect(Tok::Ident, "ideal name");
        if (doc.ideals.count(name.text) != 0) fail(name, "duplicate ideal name '" + name.text + "'");
        expect_symbol("=");
        std::vector<Polynomial> gens;
        if (!is_symbol(";")) {
          gens.push_back(expression());
          while (accept_symbol(",")) gens.push_back(expression());
        }
        expect_symbol(";");
        doc.ideal_names.push_back(name.text);
        doc.ideals.emplace(name.text, Ideal(doc.ring, std::move(gens)));
      } else if (t.text == "order") {
        if (have_order) fail(t, "duplicate order declaration");
        next();
        const Token& o = expect(Tok::Ident, "order name");
        if (o.text == "grevlex") {
          doc.order = MonomialOrder::grevlex();
        } else if (o.text == "lex") {
          doc.order = MonomialOrder::lex();
        } else {
          fail(o, "unknown order '" + o.text + "'");
        }
        have_order = true;
        expect_symbol(";");
      } else {
        fail(t, "unknown statement '" + t.text + "'");
      }
    }
    if (!doc.ring) fail(peek(), "missing ring declaration");
    return doc;
  }

  Polynomial standalone(const RingPtr& ring) {
    ring_ = ring;
    Polynomial f = expression();
    if (peek().kind != Tok::End) fail(peek(), "trailing input after expression");
    return f;
  }

 private:
  RingPtr ring_declaration() {
    Field field = Field::rationals();
    const Token& f = expect(Tok::Ident, "field");
    if (f.text == "QQ") {
      field = Field::rationals();
    } else if (f.text == "GF") {
      expect_symbol("(");
      const Token& p = expect(Tok::Number, "modulus");
      expect_symbol(")");
      mpz_class modulus(p.text);
      if (modulus >= mpz_class(1) << 31 || !is_prime(modulus.get_ui())) {
        fail(p, "GF modulus " + p.text + " is not a prime below 2^31");
      }
      field = Field::prime(modulus.get_ui());
    } else {
      fail(f, "unknown field '" + f.text + "' (expected QQ or GF(p))");
    }
    expect_symbol("[");
    std::vector<std::string> names;
    std::vector<std::pair<std::string, Token>> inverses;
    do {
      const Token& v = expect(Tok::Ident, "variable name");
      if (accept_symbol("^")) {
        expect_symbol("-");
        const Token& one = expect(Tok::Number, "1");
        if (one.text != "1") fail(one, "only t^-1 may appear in the variable list");
        inverses.emplace_back(v.text, v);
      } else {
        for (const auto& n : names) {
          if (n == v.text) fail(v, "duplicate variable '" + v.text + "'");
        }
        names.push_back(v.text);
      }
    } while (accept_symbol(","));
    expect_symbol("]");
    std::vector<bool> invertible(names.size(), false);
    for (const auto& [name, tok] : inverses) {
      bool found = false;
      for (std::size_t i = 0; i < names.size(); ++i) {
        if (names[i] == name) {
          invertible[i] = true;
          found = true;
        }
      }
      if (!found) fail(tok, "inverse of undeclared variable '" + name + "'");
    }
    std::vector<std::int64_t> weights;
    if (peek().kind == Tok::Ident && peek().text == "weights") {
      const Token& w = next();
      expect_symbol("(");
      do {
        bool negative = accept_symbol("-");
        const Token& n = expect(Tok::Number, "weight");
        std::int64_t value = std::stoll(n.text);
        weights.push_back(negative ? -value : value);
      } while (accept_symbol(","));
      expect_symbol(")");
      if (weights.size() != names.size()) {
        fail(w, "expected " + std::to_string(names.size()) + " weights, got " + std::to_string(weights.size()));
      }
    }
    expect_symbol(";");
    if (names.size() + inverses.size() > kMaxVariables) fail(peek(), "too many variables");
    return Ring::create(field, std::move(names), std::move(weights), std::move(invertible));
  }

  Polynomial expression() {
    Polynomial acc = product();
    while (true) {
      if (accept_symbol("+")) {
        acc += product();
      } else if (accept_symbol("-")) {
        acc -= product();
      } else {
        return acc;
      }
    }
  }

  Polynomial product() {
    Polynomial acc = unary();
    while (true) {
      if (accept_symbol("*")) {
        acc *= unary();
      } else if (is_symbol("/")) {
        const Token& slash = next();
        Polynomial d = unary();
        if (!d.is_constant() || d.is_zero()) fail(slash, "division only by nonzero constants");
        acc = acc.scaled(d.leading_coeff().inverse());
      } else {
        return acc;
      }
    }
  }

  Polynomial unary() {
    if (accept_symbol("-")) return -unary();
    if (accept_symbol("+")) return unary();
    return power();
  }

  Polynomial power() {
    const Token& start = peek();
    Polynomial base = primary();
    if (!accept_symbol("^")) return base;
    bool negative = accept_symbol("-");
    const Token& e = expect(Tok::Number, "exponent");
    mpz_class big(e.text);
    if (big > 65535) fail(e, "exponent too large");
    auto exponent = static_cast<std::uint32_t>(big.get_ui());
    if (!negative) return base.pow(exponent);
    if (base.is_constant()) {
      if (base.is_zero()) fail(e, "negative power of zero");
      return Polynomial::constant(ring_, base.leading_coeff().inverse()).pow(exponent);
    }
    if (base.is_monomial() && base.leading_coeff().is_one() && base.leading_monomial().support_size() == 1 &&
        base.leading_monomial().total_degree() == 1) {
      for (std::size_t i = 0; i < ring_->num_declared(); ++i) {
        if (base.leading_monomial()[i] == 1) {
          if (auto inv = ring_->inverse_variable(i)) return Polynomial::variable(ring_, *inv).pow(exponent);
        }
      }
    }
    fail(start, "negative exponent requires an invertible variable");
  }

  Polynomial primary() {
    const Token& t = peek();
    if (t.kind == Tok::Number) {
      next();
      return Polynomial::constant(ring_, ring_->field().from_integer(mpz_class(t.text)));
    }
    if (t.kind == Tok::Ident) {
      next();
      auto idx = ring_->index_of(t.text);
      if (!idx || ring_->base_of_inverse(*idx)) fail(t, "unknown variable '" + t.text + "'");
      return Polynomial::variable(ring_, *idx);
    }
    if (accept_symbol("(")) {
      Polynomial inner = expression();
      expect_symbol(")");
      return inner;
    }
    fail(t, t.kind == Tok::End ? "unexpected end of input" : "unexpected '" + t.text + "'");
  }

  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }
  bool is_symbol(std::string_view s) const { return peek().kind == Tok::Symbol && peek().text == s; }
  bool accept_symbol(std::string_view s) {
    if (!is_symbol(s)) return false;
    next();
    return true;
  }
  void expect_symbol(std::string_view s) {
    if (!accept_symbol(s)) fail(peek(), "expected '" + std::string(s) + "'");
  }
  const Token& expect(Tok kind, const std::string& what) {
    if (peek().kind != kind) fail(peek(), "expected " + what);
    return next();
  }
  [[noreturn]] void fail(const Token& t, const std::string& message) const {
    throw ParseError(t.line, t.column, message);
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  RingPtr ring_;
};

}  // namespace

const Ideal& Document::ideal(const std::string& name) const {
  auto it = ideals.find(name);
  if (it == ideals.end()) throw Error(ErrorCode::InvalidArgument, "no ideal named '" + name + "'");
  return it->second;
}

Document parse_document(std::string_view text) { return Parser(text).document(); }

Polynomial parse_polynomial(const RingPtr& ring, std::string_view text) { return Parser(text).standalone(ring); }

std::string render(const Polynomial& f) { return f.to_string(); }

std::string render(const Ideal& ideal) {
  const auto& gens = ideal.generators();
  if (gens.empty()) return "0";
  std::string s;
  for (std::size_t k = 0; k < gens.size(); ++k) {
    if (k > 0) s += ", ";
    s += render(gens[k]);
  }
  return s;
}

std::string render_document(const RingPtr& ring, const std::vector<std::pair<std::string, Ideal>>& ideals) {
  std::string s = "ring " + ring->to_string() + ";\n";
  for (const auto& [name, ideal] : ideals) s += "ideal " + name + " = " + render(ideal) + ";\n";
  return s;
}

}  // namespace gradix
