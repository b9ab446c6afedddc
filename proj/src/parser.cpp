#include "stoup/parser.hpp"

#include <cctype>

namespace stoup {

namespace {

enum class Tok : std::uint8_t {
  Ident,      // atom name or reserved word I/Top/Bot
  Star,       // *
  Wedge,      // conjunction operator
  Vee,        // disjunction operator
  Arrow,      // -o
  Dash,       // - (empty stoup)
  Bar,        // |
  Turnstile,  // |-
  Dot,        // .
  Comma,      // ,
  LParen,
  RParen,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

class Lexer {
 public:
  explicit Lexer(const std::string& input) : in_(input) { advance(); }

  const Token& peek() const { return tok_; }
  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < in_.size() && std::isspace(static_cast<unsigned char>(in_[pos_]))) ++pos_;
    std::size_t start = pos_;
    if (pos_ >= in_.size()) {
      tok_ = {Tok::End, "", start};
      return;
    }
    char c = in_[pos_];
    auto two = [&](Tok k, const char* s) {
      pos_ += 2;
      tok_ = {k, s, start};
    };
    switch (c) {
      case '*':
        ++pos_;
        tok_ = {Tok::Star, "*", start};
        return;
      case '/':
        if (pos_ + 1 < in_.size() && in_[pos_ + 1] == '\\') return two(Tok::Wedge, "/\\");
        throw ParseError("stray '/'", start);
      case '\\':
        if (pos_ + 1 < in_.size() && in_[pos_ + 1] == '/') return two(Tok::Vee, "\\/");
        throw ParseError("stray '\\'", start);
      case '-':
        if (pos_ + 1 < in_.size() && in_[pos_ + 1] == 'o') return two(Tok::Arrow, "-o");
        ++pos_;
        tok_ = {Tok::Dash, "-", start};
        return;
      case '|':
        if (pos_ + 1 < in_.size() && in_[pos_ + 1] == '-') return two(Tok::Turnstile, "|-");
        ++pos_;
        tok_ = {Tok::Bar, "|", start};
        return;
      case '.':
        ++pos_;
        tok_ = {Tok::Dot, ".", start};
        return;
      case ',':
        ++pos_;
        tok_ = {Tok::Comma, ",", start};
        return;
      case '(':
        ++pos_;
        tok_ = {Tok::LParen, "(", start};
        return;
      case ')':
        ++pos_;
        tok_ = {Tok::RParen, ")", start};
        return;
      default:
        break;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t end = pos_;
      while (end < in_.size() &&
             (std::isalnum(static_cast<unsigned char>(in_[end])) || in_[end] == '_'))
        ++end;
      tok_ = {Tok::Ident, in_.substr(pos_, end - pos_), start};
      pos_ = end;
      return;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", start);
  }

  const std::string& in_;
  std::size_t pos_ = 0;
  Token tok_{Tok::End, "", 0};
};

class Parser {
 public:
  Parser(const std::string& text, const LogicProfile& profile)
      : lex_(text), profile_(profile) {}

  FormulaPtr formula() { return limp(); }

  Sequent sequent() {
    Sequent s;
    if (lex_.peek().kind == Tok::Dash) {
      lex_.take();
    } else {
      s.stoup = formula();
    }
    expect(Tok::Bar, "'|'");
    if (lex_.peek().kind == Tok::Dot) {
      lex_.take();
    } else {
      s.context.push_back({formula(), false});
      while (lex_.peek().kind == Tok::Comma) {
        lex_.take();
        s.context.push_back({formula(), false});
      }
    }
    expect(Tok::Turnstile, "'|-'");
    s.succedent = formula();
    return s;
  }

  void end() {
    if (lex_.peek().kind != Tok::End)
      throw ParseError("trailing input after '" + lex_.peek().text + "'", lex_.peek().pos);
  }

 private:
  Token expect(Tok kind, const char* what) {
    if (lex_.peek().kind != kind)
      throw ParseError(std::string("expected ") + what, lex_.peek().pos);
    return lex_.take();
  }

  FormulaPtr limp() {
    FormulaPtr left = plus();
    if (lex_.peek().kind == Tok::Arrow) {
      Token t = lex_.take();
      if (!profile_.implication)
        throw ParseError("-o requires the implication profile", t.pos);
      return Formula::limp(std::move(left), limp());
    }
    return left;
  }

  FormulaPtr plus() {
    FormulaPtr left = with();
    if (lex_.peek().kind == Tok::Vee) {
      lex_.take();
      return Formula::disj(std::move(left), plus());
    }
    return left;
  }

  FormulaPtr with() {
    FormulaPtr left = tensor();
    if (lex_.peek().kind == Tok::Wedge) {
      lex_.take();
      return Formula::conj(std::move(left), with());
    }
    return left;
  }

  FormulaPtr tensor() {
    FormulaPtr left = primary();
    if (lex_.peek().kind == Tok::Star) {
      lex_.take();
      return Formula::tensor(std::move(left), tensor());
    }
    return left;
  }

  FormulaPtr primary() {
    Token t = lex_.peek();
    switch (t.kind) {
      case Tok::LParen: {
        lex_.take();
        FormulaPtr f = formula();
        expect(Tok::RParen, "')'");
        return f;
      }
      case Tok::Ident:
        lex_.take();
        if (t.text == "I") return Formula::unit();
        if (t.text == "Top") {
          if (!profile_.units) throw ParseError("Top requires the units profile", t.pos);
          return Formula::top();
        }
        if (t.text == "Bot") {
          if (!profile_.units) throw ParseError("Bot requires the units profile", t.pos);
          return Formula::zero();
        }
        return Formula::atom(t.text);
      default:
        throw ParseError("expected a formula, found '" + t.text + "'", t.pos);
    }
  }

  Lexer lex_;
  LogicProfile profile_;
};

}  // namespace

FormulaPtr parse_formula(const std::string& text, const LogicProfile& profile) {
  Parser p(text, profile);
  FormulaPtr f = p.formula();
  p.end();
  return f;
}

Sequent parse_sequent(const std::string& text, const LogicProfile& profile) {
  Parser p(text, profile);
  Sequent s = p.sequent();
  p.end();
  return s;
}

}  // namespace stoup
