#include "rrclosure/problem.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "rrclosure/error.hpp"

namespace rrc {

namespace {

constexpr std::int64_t kMaxExponent = 1'000'000;

[[noreturn]] void fail_at(std::string_view text, std::size_t offset, const std::string& message) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  throw Error(ErrorCode::ParseError,
              message + " at line " + std::to_string(line) + ", column " + std::to_string(column),
              offset, line, column);
}

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

enum class Tok { Int, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, Comma, End, Bad };

struct Token {
  Tok kind = Tok::End;
  std::size_t offset = 0;
  std::string_view text;
};

// Tokenizes text[begin, end); '#' comments and newlines count as blanks.
class Lexer {
 public:
  Lexer(std::string_view text, std::size_t begin, std::size_t end)
      : text_(text), pos_(begin), end_(end) {
    advance();
  }

  const Token& peek() const { return tok_; }
  Token next() {
    Token t = tok_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < end_) {
      char c = text_[pos_];
      if (c == '#') {
        while (pos_ < end_ && text_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else {
        break;
      }
    }
    tok_.offset = pos_;
    if (pos_ >= end_) {
      tok_.kind = Tok::End;
      tok_.text = {};
      return;
    }
    std::size_t start = pos_;
    char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (pos_ < end_ && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      tok_.kind = Tok::Int;
    } else if (ident_start(c)) {
      while (pos_ < end_ && ident_char(text_[pos_])) ++pos_;
      tok_.kind = Tok::Ident;
    } else {
      ++pos_;
      switch (c) {
        case '+': tok_.kind = Tok::Plus; break;
        case '-': tok_.kind = Tok::Minus; break;
        case '*': tok_.kind = Tok::Star; break;
        case '/': tok_.kind = Tok::Slash; break;
        case '^': tok_.kind = Tok::Caret; break;
        case '(': tok_.kind = Tok::LParen; break;
        case ')': tok_.kind = Tok::RParen; break;
        case ',': tok_.kind = Tok::Comma; break;
        default: tok_.kind = Tok::Bad; break;
      }
    }
    tok_.text = text_.substr(start, pos_ - start);
  }

  std::string_view text_;
  std::size_t pos_;
  std::size_t end_;
  Token tok_;
};

class ExprParser {
 public:
  ExprParser(const RingPtr& ring, std::string_view text, std::size_t begin, std::size_t end)
      : ring_(ring), text_(text), lex_(text, begin, end) {}

  std::vector<Polynomial> list() {
    std::vector<Polynomial> out;
    for (;;) {
      std::size_t at = lex_.peek().offset;
      Polynomial f = expr();
      if (f.is_zero()) fail_at(text_, at, "zero polynomial in list");
      out.push_back(std::move(f));
      if (lex_.peek().kind == Tok::Comma) {
        Token comma = lex_.next();
        if (lex_.peek().kind == Tok::End) fail_at(text_, comma.offset, "expected an expression after ','");
        continue;
      }
      expect_end();
      return out;
    }
  }

  Polynomial single() {
    Polynomial f = expr();
    expect_end();
    return f;
  }

 private:
  void expect_end() {
    const Token& t = lex_.peek();
    if (t.kind != Tok::End) fail_at(text_, t.offset, "unexpected '" + std::string(t.text) + "'");
  }

  // Operand missing after `op`: at end of input blame the operator itself.
  [[noreturn]] void missing_operand(const Token& op) {
    const Token& t = lex_.peek();
    if (t.kind == Tok::End || t.kind == Tok::Comma)
      fail_at(text_, op.offset, "expected an operand after '" + std::string(op.text) + "'");
    fail_at(text_, t.offset, "unexpected '" + std::string(t.text) + "'");
  }

  bool starts_operand() const {
    Tok k = lex_.peek().kind;
    return k == Tok::Int || k == Tok::Ident || k == Tok::LParen || k == Tok::Minus || k == Tok::Plus;
  }

  Polynomial expr() {
    if (!starts_operand()) {
      const Token& t = lex_.peek();
      fail_at(text_, t.offset,
              t.kind == Tok::End ? "expected an expression" : "unexpected '" + std::string(t.text) + "'");
    }
    Polynomial acc = term();
    while (lex_.peek().kind == Tok::Plus || lex_.peek().kind == Tok::Minus) {
      Token op = lex_.next();
      if (!starts_operand()) missing_operand(op);
      Polynomial rhs = term();
      acc = op.kind == Tok::Plus ? acc + rhs : acc - rhs;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = unary();
    while (lex_.peek().kind == Tok::Star || lex_.peek().kind == Tok::Slash) {
      Token op = lex_.next();
      if (!starts_operand()) missing_operand(op);
      std::size_t at = lex_.peek().offset;
      Polynomial rhs = unary();
      if (op.kind == Tok::Star) {
        acc = acc * rhs;
      } else {
        if (rhs.is_zero()) fail_at(text_, at, "division by zero");
        if (!rhs.is_constant()) fail_at(text_, at, "division by a non-constant");
        const Field& K = ring_->field();
        acc = acc.scaled(K.inv(rhs.leading_coefficient()));
      }
    }
    return acc;
  }

  Polynomial unary() {
    if (lex_.peek().kind == Tok::Minus || lex_.peek().kind == Tok::Plus) {
      Token op = lex_.next();
      if (!starts_operand()) missing_operand(op);
      Polynomial f = unary();
      return op.kind == Tok::Minus ? -f : f;
    }
    return power();
  }

  Polynomial power() {
    Polynomial base = atom();
    if (lex_.peek().kind == Tok::Caret) {
      Token op = lex_.next();
      const Token& t = lex_.peek();
      if (t.kind != Tok::Int) {
        if (t.kind == Tok::End) fail_at(text_, op.offset, "expected an exponent after '^'");
        fail_at(text_, t.offset, "exponent must be a nonnegative integer");
      }
      std::int64_t e = 0;
      auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), e);
      if (ec != std::errc() || e > kMaxExponent)
        fail_at(text_, t.offset, "exponent is too large");
      lex_.next();
      if (lex_.peek().kind == Tok::Caret)
        fail_at(text_, lex_.peek().offset, "chained '^' is ambiguous; use parentheses");
      base = base.pow(e);
    }
    return base;
  }

  Polynomial atom() {
    Token t = lex_.next();
    switch (t.kind) {
      case Tok::Int: {
        mpz_class v(std::string(t.text), 10);
        return Polynomial(ring_, ring_->field().from_integer(v));
      }
      case Tok::Ident: {
        int idx = ring_->index_of(t.text);
        if (idx < 0) fail_at(text_, t.offset, "unknown variable '" + std::string(t.text) + "'");
        return Polynomial::variable(ring_, static_cast<std::size_t>(idx));
      }
      case Tok::LParen: {
        if (lex_.peek().kind == Tok::RParen) fail_at(text_, lex_.peek().offset, "empty parentheses");
        Polynomial inner = expr();
        if (lex_.peek().kind != Tok::RParen) {
          if (lex_.peek().kind == Tok::End) fail_at(text_, t.offset, "unbalanced '('");
          fail_at(text_, lex_.peek().offset, "expected ')'");
        }
        lex_.next();
        return inner;
      }
      case Tok::End: fail_at(text_, t.offset, "expected an expression");
      default: fail_at(text_, t.offset, "unexpected '" + std::string(t.text) + "'");
    }
  }

  const RingPtr& ring_;
  std::string_view text_;
  Lexer lex_;
};

struct Segment {
  std::size_t key_offset = 0;
  std::size_t begin = 0;
  std::size_t end = 0;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Value of a segment with comments removed and blanks trimmed, plus the
// offset of its first character.
std::pair<std::string_view, std::size_t> scalar_value(std::string_view text, const Segment& seg) {
  std::size_t b = seg.begin, e = seg.end;
  std::size_t hash = text.substr(b, e - b).find('#');
  if (hash != std::string_view::npos) e = b + hash;
  while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  return {text.substr(b, e - b), b};
}

RingPtr parse_ring(std::string_view text, const Segment& seg, TermOrder order) {
  auto [value, at] = scalar_value(text, seg);
  std::size_t open = value.find('[');
  if (open == std::string_view::npos || value.back() != ']')
    fail_at(text, at, "ring must look like QQ[x,y] or Fp:32003[x,y]");
  Field field = Field::rationals();
  try {
    field = Field::parse(trim(value.substr(0, open)));
  } catch (const Error& e) {
    fail_at(text, at, e.what());
  }
  std::vector<std::string> vars;
  std::size_t pos = open + 1;
  const std::size_t close = value.size() - 1;
  while (pos <= close) {
    std::size_t comma = value.find(',', pos);
    if (comma == std::string_view::npos || comma > close) comma = close;
    std::string_view raw = value.substr(pos, comma - pos);
    std::string_view name = trim(raw);
    std::size_t name_at = at + pos + (name.empty() ? 0 : raw.find(name.front()));
    if (name.empty()) fail_at(text, name_at, "empty variable name");
    if (!ident_start(name.front()) || !std::all_of(name.begin(), name.end(), ident_char))
      fail_at(text, name_at, "invalid variable name '" + std::string(name) + "'");
    if (std::find(vars.begin(), vars.end(), name) != vars.end())
      fail_at(text, name_at, "duplicate variable '" + std::string(name) + "'");
    vars.emplace_back(name);
    pos = comma + 1;
  }
  if (vars.empty()) fail_at(text, at, "ring needs at least one variable");
  return make_ring(field, std::move(vars), order);
}

std::vector<std::string> infer_variables(std::string_view text, const std::vector<Segment>& segs) {
  std::set<std::string> names;
  for (const auto& seg : segs) {
    Lexer lex(text, seg.begin, seg.end);
    while (lex.peek().kind != Tok::End) {
      Token t = lex.next();
      if (t.kind == Tok::Ident) names.emplace(t.text);
    }
  }
  return {names.begin(), names.end()};
}

template <typename Int>
Int parse_integer(std::string_view text, const Segment& seg, const char* what) {
  auto [value, at] = scalar_value(text, seg);
  Int v{};
  auto [p, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
  if (ec != std::errc() || p != value.data() + value.size())
    fail_at(text, at, std::string("invalid ") + what + " '" + std::string(value) + "'");
  return v;
}

}  // namespace

Mode parse_mode(std::string_view text) {
  if (text == "heuristic") return Mode::Heuristic;
  if (text == "certified") return Mode::Certified;
  throw Error(ErrorCode::InvalidArgument,
              "mode must be heuristic or certified, got '" + std::string(text) + "'");
}

Polynomial parse_polynomial(const RingPtr& ring, std::string_view text) {
  return ExprParser(ring, text, 0, text.size()).single();
}

std::vector<Polynomial> parse_polynomial_list(const RingPtr& ring, std::string_view text) {
  return ExprParser(ring, text, 0, text.size()).list();
}

Problem parse_problem(std::string_view text) {
  static const char* const kKeys[] = {"ring", "order", "ideal", "reduction", "mode", "seed", "k"};
  std::vector<std::pair<std::string, Segment>> entries;
  Segment* current = nullptr;

  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    std::string_view content = line.substr(0, std::min(line.find('#'), line.size()));
    if (!trim(content).empty()) {
      if (std::isspace(static_cast<unsigned char>(line.front()))) {
        if (!current) fail_at(text, pos, "indented line without a preceding key");
        current->end = eol;
      } else {
        std::size_t colon = content.find(':');
        std::string key(trim(content.substr(0, colon == std::string_view::npos ? 0 : colon)));
        if (colon == std::string_view::npos || key.empty())
          fail_at(text, pos, "expected 'key: value'");
        if (std::find(std::begin(kKeys), std::end(kKeys), key) == std::end(kKeys))
          fail_at(text, pos, "unknown key '" + key + "'");
        for (const auto& [k, s] : entries)
          if (k == key) fail_at(text, pos, "duplicate key '" + key + "'");
        entries.push_back({key, Segment{pos, pos + colon + 1, eol}});
        current = &entries.back().second;
      }
    }
    pos = eol + 1;
  }

  auto find = [&](const std::string& key) -> const Segment* {
    for (const auto& [k, s] : entries)
      if (k == key) return &s;
    return nullptr;
  };

  Problem out;
  TermOrder order = TermOrder::degrevlex();
  if (const Segment* s = find("order")) {
    auto [value, at] = scalar_value(text, *s);
    if (value == "degrevlex") order = TermOrder::degrevlex();
    else if (value == "deglex") order = TermOrder(OrderKind::DegLex);
    else if (value == "lex") order = TermOrder::lex();
    else fail_at(text, at, "unknown order '" + std::string(value) + "'");
  }

  const Segment* ideal = find("ideal");
  if (!ideal) fail_at(text, text.size(), "missing 'ideal:' line");
  const Segment* reduction = find("reduction");

  if (const Segment* s = find("ring")) {
    out.ring = parse_ring(text, *s, order);
  } else {
    std::vector<Segment> segs{*ideal};
    if (reduction) segs.push_back(*reduction);
    auto vars = infer_variables(text, segs);
    if (vars.empty()) fail_at(text, ideal->begin, "no variables found; add a 'ring:' line");
    out.ring = make_ring(Field::rationals(), std::move(vars), order);
    out.ring_inferred = true;
  }

  out.generators = ExprParser(out.ring, text, ideal->begin, ideal->end).list();
  if (reduction) out.reduction = ExprParser(out.ring, text, reduction->begin, reduction->end).list();
  if (const Segment* s = find("mode")) {
    auto [value, at] = scalar_value(text, *s);
    try {
      out.mode = parse_mode(value);
    } catch (const Error& e) {
      fail_at(text, at, e.what());
    }
  }
  if (const Segment* s = find("seed")) out.seed = parse_integer<std::uint64_t>(text, *s, "seed");
  if (const Segment* s = find("k")) {
    out.k = parse_integer<std::int64_t>(text, *s, "k");
    if (*out.k < 1) fail_at(text, scalar_value(text, *s).second, "k must be at least 1");
  }
  return out;
}

Problem load_problem(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_problem(ss.str());
}

std::string print_problem(const Problem& problem) {
  const Ring& ring = *problem.ring;
  std::string out = "ring: " + ring.field().descriptor() + "[";
  for (std::size_t i = 0; i < ring.nvars(); ++i) out += (i ? "," : "") + ring.variables()[i];
  out += "]\n";
  if (ring.order().kind() != OrderKind::DegRevLex) out += "order: " + ring.order().name() + "\n";
  auto join = [](const std::vector<Polynomial>& fs) {
    std::string s;
    for (std::size_t i = 0; i < fs.size(); ++i) s += (i ? ", " : "") + fs[i].to_string();
    return s;
  };
  out += "ideal: " + join(problem.generators) + "\n";
  if (problem.reduction) out += "reduction: " + join(*problem.reduction) + "\n";
  if (problem.mode) out += "mode: " + std::string(mode_name(*problem.mode)) + "\n";
  if (problem.seed) out += "seed: " + std::to_string(*problem.seed) + "\n";
  if (problem.k) out += "k: " + std::to_string(*problem.k) + "\n";
  return out;
}

}  // namespace rrc
