#include "valueset/poly_text.hpp"

#include <cctype>
#include <optional>
#include <sstream>

namespace valueset {

namespace {

enum class Tok { Word, Number, Symbol, Newline, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t col;
};

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1, i = 0;
  auto advance = [&] {
    if (src[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++i;
  };
  while (i < src.size()) {
    const char c = src[i];
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') advance();
    } else if (c == '\n') {
      out.push_back({Tok::Newline, "\n", line, col});
      advance();
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      advance();
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      Token t{Tok::Word, "", line, col};
      while (i < src.size() && (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_')) {
        t.text += src[i];
        advance();
      }
      out.push_back(std::move(t));
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      Token t{Tok::Number, "", line, col};
      while (i < src.size() && (std::isdigit(static_cast<unsigned char>(src[i])) || src[i] == '.')) {
        t.text += src[i];
        advance();
      }
      if (t.text.back() == '.') throw SyntaxError(t.line, t.col, "number ends with '.'");
      out.push_back(std::move(t));
    } else if (std::string_view("=:*^+(),").find(c) != std::string_view::npos) {
      out.push_back({Tok::Symbol, std::string(1, c), line, col});
      advance();
    } else {
      throw SyntaxError(line, col, std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  const Token& peek(bool skip_newlines = true) {
    if (skip_newlines)
      while (toks_[pos_].kind == Tok::Newline) ++pos_;
    return toks_[pos_];
  }

  Token next(bool skip_newlines = true) {
    const Token t = peek(skip_newlines);
    if (t.kind != Tok::End) ++pos_;
    return t;
  }

  [[noreturn]] void fail(const Token& t, const std::string& what) {
    throw SyntaxError(t.line, t.col, what + (t.kind == Tok::End ? " (at end of input)" : ", found '" +
                                                                                         (t.kind == Tok::Newline ? std::string("newline") : t.text) + "'"));
  }

  bool accept_symbol(char c, bool skip_newlines = true) {
    const Token& t = peek(skip_newlines);
    if (t.kind == Tok::Symbol && t.text[0] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect_symbol(char c, bool skip_newlines = true) {
    if (!accept_symbol(c, skip_newlines)) fail(peek(skip_newlines), std::string("expected '") + c + "'");
  }

  bool accept_word(std::string_view w, bool skip_newlines = true) {
    const Token& t = peek(skip_newlines);
    if (t.kind == Tok::Word && t.text == w) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect_word(std::string_view w, bool skip_newlines = true) {
    if (!accept_word(w, skip_newlines)) fail(peek(skip_newlines), "expected '" + std::string(w) + "'");
  }

  BigInt integer(bool skip_newlines = true) {
    const Token t = next(skip_newlines);
    if (t.kind != Tok::Number || t.text.find('.') != std::string::npos) fail(t, "expected an integer");
    return BigInt(t.text, 10);
  }

  std::uint64_t small_integer(bool skip_newlines = true) {
    const Token& t = peek(skip_newlines);
    const BigInt v = integer(skip_newlines);
    auto small = big_to_u64(v);
    if (!small) throw SyntaxError(t.line, t.col, "integer too large");
    return *small;
  }

  FieldElement element(const Field& field, bool skip_newlines = true) {
    const Token t = next(skip_newlines);
    if (t.kind != Tok::Number) fail(t, "expected a field element");
    std::vector<std::uint64_t> digits;
    std::stringstream ss(t.text);
    std::string part;
    while (std::getline(ss, part, '.')) {
      const BigInt v(part, 10);
      auto small = big_to_u64(v);
      if (!small || *small >= field.p())
        throw Error(ErrorKind::FieldMismatch, "line " + std::to_string(t.line) + ", column " +
                                                  std::to_string(t.col) + ": coefficient " + part +
                                                  " is not below p = " + std::to_string(field.p()));
      digits.push_back(*small);
    }
    if (digits.size() > field.m())
      throw Error(ErrorKind::FieldMismatch, "line " + std::to_string(t.line) + ": element " + t.text +
                                                " has more than m = " + std::to_string(field.m()) + " digits");
    return field.from_coeffs(digits);
  }

  struct Header {
    std::string kind;
    FieldPtr field;
    std::optional<SlpMode> mode;
  };

  Header header() {
    Header h;
    const Token kw = next();
    if (kw.kind != Tok::Word || (kw.text != "dense" && kw.text != "sparse" && kw.text != "shift" && kw.text != "slp"))
      fail(kw, "expected one of dense, sparse, shift, slp");
    h.kind = kw.text;
    const bool slp = h.kind == "slp";
    std::optional<std::uint64_t> p, m;
    std::optional<PrimePoly> modulus;
    while (true) {
      const Token& t = peek(!slp);
      if (t.kind != Tok::Word) break;
      const Token key = next(!slp);
      expect_symbol('=', !slp);
      if (key.text == "p") {
        p = small_integer(!slp);
      } else if (key.text == "m") {
        m = small_integer(!slp);
      } else if (key.text == "mod") {
        modulus.emplace();
        do {
          modulus->push_back(small_integer(!slp));
        } while (accept_symbol(',', !slp));
      } else if (key.text == "mode" && slp) {
        const Token v = next(false);
        if (v.kind == Tok::Word && v.text == "strict") {
          h.mode = SlpMode::Strict;
        } else if (v.kind == Tok::Word && v.text == "extended") {
          h.mode = SlpMode::Extended;
        } else {
          fail(v, "expected strict or extended");
        }
      } else {
        fail(key, "unknown header key");
      }
    }
    if (!p) fail(peek(!slp), "header is missing p=");
    if (slp && !h.mode) fail(peek(false), "slp header is missing mode=");
    if (modulus) {
      for (auto c : *modulus)
        if (c >= *p) throw Error(ErrorKind::FieldMismatch, "modulus coefficient not below p");
      h.field = make_field_with_modulus(*p, *modulus);
      if (m && *m != h.field->m())
        throw SyntaxError(kw.line, kw.col, "m= disagrees with the degree of mod=");
    } else {
      h.field = make_field(*p, m ? static_cast<unsigned>(*m) : 1u);
    }
    if (!slp) expect_symbol(':');
    return h;
  }

  bool at_end() { return peek().kind == Tok::End; }

  // A lone "0" body is the zero polynomial.
  bool zero_body() {
    const Token& t = peek();
    if (t.kind == Tok::End) return true;
    if (t.kind == Tok::Number && t.text == "0" && toks_[pos_ + 1].kind != Tok::Symbol) {
      std::size_t save = pos_;
      ++pos_;
      if (at_end()) return true;
      pos_ = save;
    }
    return false;
  }

  PolyInput dense(const FieldPtr& field) {
    std::vector<FieldElement> coeffs;
    while (!at_end()) coeffs.push_back(element(*field));
    return DensePoly(field, std::move(coeffs));
  }

  PolyInput sparse(const FieldPtr& field) {
    std::vector<SparseTerm> terms;
    if (!zero_body()) {
      do {
        FieldElement c = field->one();
        BigInt e = 0;
        if (peek().kind == Tok::Number) {
          c = element(*field);
          if (accept_symbol('*')) {
            expect_word("x");
            e = 1;
            if (accept_symbol('^')) e = integer();
          }
        } else {
          expect_word("x");
          e = 1;
          if (accept_symbol('^')) e = integer();
        }
        terms.push_back({c, std::move(e)});
      } while (accept_symbol('+'));
    }
    if (!at_end()) fail(peek(), "expected '+' or end of input");
    return SparsePoly(field, std::move(terms));
  }

  PolyInput shift(const FieldPtr& field) {
    std::vector<ShiftTerm> terms;
    FieldElement constant{};
    if (!zero_body()) {
      do {
        if (accept_word("const")) {
          constant = field->add(constant, element(*field));
          continue;
        }
        FieldElement a = field->one();
        if (peek().kind == Tok::Number) {
          a = element(*field);
          expect_symbol('*');
        }
        expect_symbol('(');
        expect_word("x");
        FieldElement b{};
        if (accept_symbol('+')) b = element(*field);
        expect_symbol(')');
        expect_symbol('^');
        terms.push_back({a, b, integer()});
      } while (accept_symbol('+'));
    }
    if (!at_end()) fail(peek(), "expected '+' or end of input");
    return SparseShiftPoly(field, std::move(terms), constant);
  }

  std::uint32_t reg_ref(std::size_t defined) {
    const Token t = next(false);
    if (t.kind != Tok::Word || t.text.size() < 2 || t.text[0] != 'r')
      fail(t, "expected a register name r<i>");
    for (std::size_t i = 1; i < t.text.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t.text[i]))) fail(t, "expected a register name r<i>");
    const unsigned long idx = std::stoul(t.text.substr(1));
    if (idx < 1 || idx > defined) fail(t, "register is not defined yet");
    return static_cast<std::uint32_t>(idx - 1);
  }

  void end_of_line() {
    const Token& t = peek(false);
    if (t.kind == Tok::End) return;
    if (t.kind != Tok::Newline) fail(t, "expected end of line");
    ++pos_;
  }

  PolyInput slp(const Header& h) {
    end_of_line();
    std::vector<SlpInstr> code;
    std::optional<std::uint32_t> output;
    while (peek().kind != Tok::End) {
      const Token first = peek();
      if (output) fail(first, "nothing may follow the out line");
      if (accept_word("out")) {
        output = reg_ref(code.size());
        end_of_line();
        continue;
      }
      const Token name = next();
      if (name.kind != Tok::Word || name.text != "r" + std::to_string(code.size() + 1))
        fail(name, "expected register r" + std::to_string(code.size() + 1));
      expect_symbol(':', false);
      expect_symbol('=', false);
      const Token op = next(false);
      if (op.kind != Tok::Word) fail(op, "expected an instruction");
      SlpInstr ins;
      if (op.text == "one") {
        ins.op = SlpOp::One;
      } else if (op.text == "gen") {
        ins.op = SlpOp::Gen;
      } else if (op.text == "x") {
        ins.op = SlpOp::X;
      } else if (op.text == "const") {
        ins.op = SlpOp::Const;
        ins.constant = big_mod_u64(integer(false), h.field->p());
      } else if (op.text == "add" || op.text == "sub" || op.text == "mul") {
        ins.op = op.text == "add" ? SlpOp::Add : op.text == "sub" ? SlpOp::Sub : SlpOp::Mul;
        ins.lhs = reg_ref(code.size());
        ins.rhs = reg_ref(code.size());
      } else {
        fail(op, "unknown instruction");
      }
      code.push_back(ins);
      end_of_line();
    }
    if (!output) fail(peek(), "missing out line");
    return Slp(h.field, *h.mode, std::move(code), *output);
  }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

std::string header_text(std::string_view kind, const Field& field) {
  std::string s = std::string(kind) + " p=" + std::to_string(field.p());
  if (field.m() > 1) {
    s += " m=" + std::to_string(field.m()) + " mod=";
    for (std::size_t i = 0; i < field.modulus().size(); ++i) {
      if (i) s += ',';
      s += std::to_string(field.modulus()[i]);
    }
  }
  return s;
}

}  // namespace

PolyInput parse_poly(std::string_view text) {
  Parser parser(lex(text));
  const auto h = parser.header();
  if (h.kind == "dense") return parser.dense(h.field);
  if (h.kind == "sparse") return parser.sparse(h.field);
  if (h.kind == "shift") return parser.shift(h.field);
  return parser.slp(h);
}

std::string format_element(const Field& field, FieldElement e) {
  if (field.m() == 1) return std::to_string(e.index());
  std::string s;
  const auto digits = field.coeffs(e);
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (i) s += '.';
    s += std::to_string(digits[i]);
  }
  return s;
}

std::string serialize_poly(const PolyInput& f) {
  const Field& F = field_of(f);
  if (const auto* d = std::get_if<DensePoly>(&f)) {
    std::string s = header_text("dense", F) + ":";
    if (d->is_zero()) return s + " 0";
    for (auto c : d->coeffs()) s += " " + format_element(F, c);
    return s;
  }
  if (const auto* sp = std::get_if<SparsePoly>(&f)) {
    std::string s = header_text("sparse", F) + ":";
    if (sp->is_zero()) return s + " 0";
    for (std::size_t i = 0; i < sp->terms().size(); ++i) {
      const auto& t = sp->terms()[i];
      s += (i ? " + " : " ") + format_element(F, t.coeff) + "*x^" + to_decimal(t.exp);
    }
    return s;
  }
  if (const auto* sh = std::get_if<SparseShiftPoly>(&f)) {
    std::string s = header_text("shift", F) + ":";
    bool first = true;
    for (const auto& t : sh->terms()) {
      s += (first ? " " : " + ") + format_element(F, t.a) + "*(x+" + format_element(F, t.b) + ")^" +
           to_decimal(t.e);
      first = false;
    }
    if (!sh->constant().is_zero()) {
      s += (first ? " const " : " + const ") + format_element(F, sh->constant());
      first = false;
    }
    if (first) s += " 0";
    return s;
  }
  const auto& slp = std::get<Slp>(f);
  std::string s = header_text("slp", F) + (slp.mode() == SlpMode::Strict ? " mode=strict\n" : " mode=extended\n");
  for (std::size_t i = 0; i < slp.instrs().size(); ++i) {
    const auto& ins = slp.instrs()[i];
    s += "r" + std::to_string(i + 1) + " := ";
    auto reg = [](std::uint32_t r) { return "r" + std::to_string(r + 1); };
    switch (ins.op) {
      case SlpOp::One: s += "one"; break;
      case SlpOp::Gen: s += "gen"; break;
      case SlpOp::X: s += "x"; break;
      case SlpOp::Const: s += "const " + std::to_string(ins.constant); break;
      case SlpOp::Add: s += "add " + reg(ins.lhs) + " " + reg(ins.rhs); break;
      case SlpOp::Sub: s += "sub " + reg(ins.lhs) + " " + reg(ins.rhs); break;
      case SlpOp::Mul: s += "mul " + reg(ins.lhs) + " " + reg(ins.rhs); break;
    }
    s += "\n";
  }
  s += "out r" + std::to_string(slp.output() + 1) + "\n";
  return s;
}

}  // namespace valueset
