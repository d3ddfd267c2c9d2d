#include "subshift/syntax.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <sstream>

#include "subshift/error.hpp"

namespace subshift {

namespace {

constexpr std::string_view kReserved = "(),_:#|&!*+-.";

bool valid_symbol(char c) {
  return std::isgraph(static_cast<unsigned char>(c)) && kReserved.find(c) == std::string_view::npos;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string where(std::size_t line, std::size_t col) {
  return "line " + std::to_string(line) + " column " + std::to_string(col) + ": ";
}

class Parser {
 public:
  Parser(std::string_view text, const SftSpec& spec) : text_(text), spec_(spec) {}

  SetAst whole_set() {
    SetAst out = set_or();
    finish();
    return out;
  }

  ExprAst whole_expr() {
    ExprAst out = expr();
    finish();
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorCode::SyntaxError, "column " + std::to_string(pos_ + 1) + ": " + msg);
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  void finish() {
    if (peek() != '\0') fail("unexpected trailing input");
  }

  std::string identifier() {
    skip();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  mpz_class number() {
    skip();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  Word word() {
    skip();
    std::size_t start = pos_;
    while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) &&
           std::string_view("(),").find(text_[pos_]) == std::string_view::npos)
      ++pos_;
    std::string_view tok = text_.substr(start, pos_ - start);
    if (tok.empty()) fail("expected a word");
    Word out;
    if (tok == "_") return out;
    for (std::size_t i = 0; i < tok.size(); ++i) {
      auto it = std::find(spec_.alphabet.begin(), spec_.alphabet.end(), tok[i]);
      if (it == spec_.alphabet.end())
        throw Error(ErrorCode::UnknownLetter,
                    "column " + std::to_string(start + i + 1) + ": unknown letter '" + tok[i] + "'");
      out.push_back(static_cast<Letter>(it - spec_.alphabet.begin()));
    }
    return out;
  }

  SetAst set_or() {
    SetAst lhs = set_and();
    while (accept('|')) {
      SetAst node{SetAst::Kind::Or, {}, {}, {}};
      node.children.push_back(std::move(lhs));
      node.children.push_back(set_and());
      lhs = std::move(node);
    }
    return lhs;
  }

  SetAst set_and() {
    SetAst lhs = set_not();
    while (accept('&')) {
      SetAst node{SetAst::Kind::And, {}, {}, {}};
      node.children.push_back(std::move(lhs));
      node.children.push_back(set_not());
      lhs = std::move(node);
    }
    return lhs;
  }

  SetAst set_not() {
    if (accept('!')) {
      SetAst node{SetAst::Kind::Not, {}, {}, {}};
      node.children.push_back(set_not());
      return node;
    }
    if (accept('(')) {
      SetAst inner = set_or();
      expect(')');
      return inner;
    }
    std::size_t at = pos_;
    std::string id = identifier();
    SetAst node;
    if (id == "X") {
      node.kind = SetAst::Kind::Full;
      return node;
    }
    if (id == "Z" || id == "F") {
      node.kind = id == "Z" ? SetAst::Kind::Cylinder : SetAst::Kind::Follower;
      expect('(');
      node.first = word();
      expect(')');
      return node;
    }
    if (id == "C") {
      node.kind = SetAst::Kind::CSet;
      expect('(');
      node.first = word();
      expect(',');
      node.second = word();
      expect(')');
      return node;
    }
    pos_ = at;
    fail(id.empty() ? "expected a set" : "unknown set constructor '" + id + "'");
  }

  ExprAst expr() {
    ExprAst lhs = term();
    for (;;) {
      ExprAst::Kind kind;
      if (accept('+'))
        kind = ExprAst::Kind::Add;
      else if (accept('-'))
        kind = ExprAst::Kind::Sub;
      else
        return lhs;
      ExprAst node;
      node.kind = kind;
      node.children.push_back(std::move(lhs));
      node.children.push_back(term());
      lhs = std::move(node);
    }
  }

  ExprAst term() {
    ExprAst lhs = factor();
    while (accept('*')) {
      ExprAst node;
      node.kind = ExprAst::Kind::Mul;
      node.children.push_back(std::move(lhs));
      node.children.push_back(factor());
      lhs = std::move(node);
    }
    return lhs;
  }

  ExprAst factor() {
    if (accept('-')) {
      ExprAst node;
      node.kind = ExprAst::Kind::Neg;
      node.children.push_back(factor());
      return node;
    }
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      ExprAst node;
      node.num = number();
      if (accept('/')) {
        node.den = number();
        if (node.den == 0) fail("zero denominator");
        expect('.');
      } else if (!accept('.')) {
        node.kind = ExprAst::Kind::Constant;
        return node;
      }
      node.kind = ExprAst::Kind::Scale;
      node.children.push_back(factor());
      return node;
    }
    return primary();
  }

  ExprAst primary() {
    if (accept('(')) {
      ExprAst inner = expr();
      expect(')');
      return inner;
    }
    std::size_t at = pos_;
    std::string id = identifier();
    ExprAst node;
    if (id == "s" || id == "st") {
      node.kind = id == "s" ? ExprAst::Kind::S : ExprAst::Kind::SStar;
      expect('(');
      node.word = word();
      expect(')');
      return node;
    }
    if (id == "p") {
      node.kind = ExprAst::Kind::P;
      expect('(');
      node.set = set_or();
      expect(')');
      return node;
    }
    pos_ = at;
    skip();
    fail(id.empty() ? "expected a term" : "unknown generator '" + id + "'");
  }

  std::string_view text_;
  const SftSpec& spec_;
  std::size_t pos_ = 0;
};

std::string coefficient_prefix(const RingValue& c) {
  if (c.value() == 1) return "";
  return c.to_string() + ".";
}

}  // namespace

SftSpec parse_shift(std::string_view text) {
  std::optional<std::vector<char>> alphabet;
  struct RawWord {
    std::string text;
    std::size_t line, col;
  };
  std::optional<std::vector<RawWord>> forbidden;

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    start = end + 1;

    std::string_view body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    std::size_t colon = line.find(':');
    if (colon == std::string_view::npos)
      throw Error(ErrorCode::SyntaxError, where(line_no, 1) + "expected 'alphabet:' or 'forbidden:'");
    std::string_view key = trim(line.substr(0, colon));

    if (key == "alphabet") {
      if (alphabet) throw Error(ErrorCode::SyntaxError, where(line_no, 1) + "alphabet given twice");
      alphabet.emplace();
      std::size_t i = colon + 1;
      while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
        if (j == i) break;
        std::string_view sym = line.substr(i, j - i);
        if (sym.size() != 1 || !valid_symbol(sym[0]))
          throw Error(ErrorCode::SyntaxError, where(line_no, i + 1) + "symbols must be single characters");
        if (std::find(alphabet->begin(), alphabet->end(), sym[0]) != alphabet->end())
          throw Error(ErrorCode::DuplicateSymbol, where(line_no, i + 1) + "symbol '" + std::string(sym) + "' repeated");
        alphabet->push_back(sym[0]);
        i = j;
      }
    } else if (key == "forbidden") {
      if (forbidden) throw Error(ErrorCode::SyntaxError, where(line_no, 1) + "forbidden given twice");
      forbidden.emplace();
      std::string_view value = line.substr(colon + 1);
      if (trim(value).empty()) continue;
      std::size_t i = 0;
      while (i <= value.size()) {
        std::size_t j = value.find(',', i);
        if (j == std::string_view::npos) j = value.size();
        std::string_view item = value.substr(i, j - i);
        std::size_t lead = 0;
        while (lead < item.size() && std::isspace(static_cast<unsigned char>(item[lead]))) ++lead;
        std::string_view word = trim(item);
        std::size_t col = colon + 2 + i + lead;
        if (word.empty()) throw Error(ErrorCode::IllegalForbiddenWord, where(line_no, col) + "empty forbidden word");
        forbidden->push_back({std::string(word), line_no, col});
        i = j + 1;
      }
    } else {
      throw Error(ErrorCode::SyntaxError, where(line_no, 1) + "unknown key '" + std::string(key) + "'");
    }
  }

  if (!alphabet || alphabet->empty()) throw Error(ErrorCode::EmptyAlphabet, "no alphabet symbols given");
  std::vector<Word> words;
  if (forbidden) {
    for (const RawWord& raw : *forbidden) {
      Word w;
      for (std::size_t k = 0; k < raw.text.size(); ++k) {
        auto it = std::find(alphabet->begin(), alphabet->end(), raw.text[k]);
        if (it == alphabet->end())
          throw Error(ErrorCode::IllegalForbiddenWord,
                      where(raw.line, raw.col + k) + "unknown symbol '" + raw.text[k] + "'");
        w.push_back(static_cast<Letter>(it - alphabet->begin()));
      }
      words.push_back(std::move(w));
    }
  }
  return SftSpec::make(std::move(*alphabet), std::move(words));
}

std::string print_shift(const SftSpec& spec) {
  std::string out = "alphabet:";
  for (char c : spec.alphabet) {
    out += ' ';
    out += c;
  }
  out += "\nforbidden:";
  for (std::size_t i = 0; i < spec.forbidden.size(); ++i) {
    out += i == 0 ? " " : ", ";
    for (Letter a : spec.forbidden[i]) out += spec.alphabet.at(a);
  }
  out += '\n';
  return out;
}

SetAst parse_set_expr(std::string_view text, const SftSpec& spec) { return Parser(text, spec).whole_set(); }

ExprAst parse_expr(std::string_view text, const SftSpec& spec) { return Parser(text, spec).whole_expr(); }

ClopenSet evaluate(const SetAst& ast, const Shift& g) {
  switch (ast.kind) {
    case SetAst::Kind::Cylinder: return cylinder(g, ast.first);
    case SetAst::Kind::Follower: return follower(g, ast.first);
    case SetAst::Kind::CSet: return c_set(g, ast.first, ast.second);
    case SetAst::Kind::Full: return full_set(g);
    case SetAst::Kind::Not: return complement(evaluate(ast.children.at(0), g));
    case SetAst::Kind::And: return intersect(evaluate(ast.children.at(0), g), evaluate(ast.children.at(1), g));
    case SetAst::Kind::Or: return unite(evaluate(ast.children.at(0), g), evaluate(ast.children.at(1), g));
  }
  throw std::logic_error("unknown set node");
}

AlgebraElement evaluate(const ExprAst& ast, const Algebra& alg) {
  switch (ast.kind) {
    case ExprAst::Kind::S: return alg.s_word(ast.word);
    case ExprAst::Kind::SStar: return alg.s_star_word(ast.word);
    case ExprAst::Kind::P: return alg.p(evaluate(ast.set, alg.shift()));
    case ExprAst::Kind::Constant: return alg.constant(alg.ring().from_integer(ast.num));
    case ExprAst::Kind::Scale:
      return scale(alg.ring().from_fraction(ast.num, ast.den), evaluate(ast.children.at(0), alg));
    case ExprAst::Kind::Neg: return negate(evaluate(ast.children.at(0), alg));
    case ExprAst::Kind::Add: return evaluate(ast.children.at(0), alg) + evaluate(ast.children.at(1), alg);
    case ExprAst::Kind::Sub: return evaluate(ast.children.at(0), alg) - evaluate(ast.children.at(1), alg);
    case ExprAst::Kind::Mul: return evaluate(ast.children.at(0), alg) * evaluate(ast.children.at(1), alg);
  }
  throw std::logic_error("unknown expression node");
}

AlgebraElement parse_element(std::string_view text, const Algebra& alg) {
  return evaluate(parse_expr(text, alg.shift()->spec()), alg);
}

ClopenSet parse_set(std::string_view text, const Shift& g) { return evaluate(parse_set_expr(text, g->spec()), g); }

std::string format_nf(const AlgebraElement& x) {
  if (x.is_zero()) return "0\n";
  const FollowerGraph& g = x.graph();
  std::string out;
  for (const auto& [key, f] : x.components()) {
    out += g.spell(key.u) + " " + g.spell(key.v) + "^-1 |";
    bool first = true;
    for (const auto& [w, c] : f.values) {
      out += first ? " " : " ; ";
      out += c.to_string() + " " + g.spell(w);
      first = false;
    }
    out += '\n';
  }
  return out;
}

std::string format_set(const ClopenSet& a) {
  ClopenSet c = compact(a);
  std::string out = "{";
  for (std::size_t i = 0; i < c.words().size(); ++i) {
    if (i) out += ',';
    out += c.graph().spell(c.words()[i]);
  }
  return out + "}@" + std::to_string(c.resolution());
}

std::string format_set_expr(const ClopenSet& a) {
  ClopenSet c = compact(a);
  if (c.empty()) return "!X";
  if (equals(c, full_set(c.shift()))) return "X";
  std::string out;
  for (std::size_t i = 0; i < c.words().size(); ++i) {
    if (i) out += '|';
    out += "Z(" + c.graph().spell(c.words()[i]) + ")";
  }
  return out;
}

std::string format_expr(const AlgebraElement& x) {
  if (x.is_zero()) return "0";
  const FollowerGraph& g = x.graph();
  std::vector<std::string> terms;
  for (const auto& [key, f] : x.components()) {
    CoeffFunction view = translate(g, f, key.u, Word{});
    std::map<RingValue, std::vector<Word>> levels;
    for (const auto& [w, c] : view.values) levels[c].push_back(w);
    for (auto& [c, words] : levels) {
      std::vector<std::string> factors;
      if (!key.u.empty()) factors.push_back("s(" + g.spell(key.u) + ")");
      std::string set = format_set_expr(ClopenSet(x.shift(), view.resolution, std::move(words)));
      if (set != "X") factors.push_back("p(" + set + ")");
      if (!key.v.empty()) factors.push_back("st(" + g.spell(key.v) + ")");
      if (factors.empty()) {
        terms.push_back(c.value().get_den() == 1 ? c.to_string() : coefficient_prefix(c) + "1");
        continue;
      }
      std::string body;
      for (std::size_t i = 0; i < factors.size(); ++i) body += (i ? "*" : "") + factors[i];
      terms.push_back(coefficient_prefix(c) + body);
    }
  }
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) out += (i ? " + " : "") + terms[i];
  return out;
}

std::string format_laurent(const LaurentPoly& l) {
  if (l.coeffs.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [n, c] : l.coeffs) {
    if (!first) out += " + ";
    out += c.to_string() + " x^" + std::to_string(n);
    first = false;
  }
  return out;
}

std::string format_form(const ReducedForm& form) {
  if (const auto* pm = std::get_if<ProjectionMultiple>(&form))
    return "PROJ gamma=" + pm->gamma.to_string() + " SET=" + format_set(pm->set);
  const auto& cf = std::get<CycleForm>(form);
  std::string out = "CYCLE A=" + format_set(cf.set) + " beta=" + cf.set.graph().spell(cf.beta) + " gammas=[";
  for (std::size_t i = 0; i < cf.gammas.size(); ++i) out += (i ? "," : "") + cf.gammas[i].to_string();
  out += "] exps=[";
  for (std::size_t i = 0; i < cf.exps.size(); ++i) out += (i ? "," : "") + std::to_string(cf.exps[i]);
  return out + "]";
}

}  // namespace subshift
