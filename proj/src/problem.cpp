#include "sheafsem/problem.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace sheafsem {

namespace {

enum class TokenKind { Ident, Int, Str, Punct, End };

struct Token {
  TokenKind kind = TokenKind::End;
  std::string text;
  int col = 1;
};

bool is_ident_head(char c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_';
}

bool is_ident_tail(char c) {
  return is_ident_head(c) || (c >= '0' && c <= '9');
}

[[noreturn]] void syntax_error(int line, int col, const std::string& what) {
  throw Error(ErrorKind::Syntax,
              "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + what);
}

[[noreturn]] void name_error(int line, const std::string& what) {
  throw Error(ErrorKind::Name, "line " + std::to_string(line) + ": " + what);
}

std::vector<Token> lex_line(std::string_view text, int line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    int col = static_cast<int>(i) + 1;
    if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
      continue;
    }
    if (c == '#') break;
    if (is_ident_head(c)) {
      std::size_t j = i + 1;
      while (j < text.size() && is_ident_tail(text[j])) ++j;
      while (j < text.size() && text[j] == '\'') ++j;
      tokens.push_back({TokenKind::Ident, std::string(text.substr(i, j - i)), col});
      i = j;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i + 1;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      tokens.push_back({TokenKind::Int, std::string(text.substr(i, j - i)), col});
      i = j;
      continue;
    }
    if (c == '"') {
      std::string value;
      std::size_t j = i + 1;
      while (j < text.size() && text[j] != '"') {
        if (text[j] == '\\' && j + 1 < text.size()) {
          ++j;
        }
        value += text[j];
        ++j;
      }
      if (j >= text.size()) syntax_error(line, col, "unterminated string");
      tokens.push_back({TokenKind::Str, std::move(value), col});
      i = j + 1;
      continue;
    }
    if (c == '-' ) {
      if (i + 1 < text.size() && text[i + 1] == '>') {
        tokens.push_back({TokenKind::Punct, "->", col});
        i += 2;
        continue;
      }
      syntax_error(line, col, "expected '->'");
    }
    // U+00AC, the negation sign, reads the same as '!'.
    if (static_cast<unsigned char>(c) == 0xC2 && i + 1 < text.size() &&
        static_cast<unsigned char>(text[i + 1]) == 0xAC) {
      tokens.push_back({TokenKind::Punct, "!", col});
      i += 2;
      continue;
    }
    if (std::string_view("{}()[],;/:=!").find(c) != std::string_view::npos) {
      tokens.push_back({TokenKind::Punct, std::string(1, c), col});
      ++i;
      continue;
    }
    syntax_error(line, col, std::string("unexpected character '") + c + "'");
  }
  int end_col = static_cast<int>(text.size()) + 1;
  tokens.push_back({TokenKind::End, "", end_col});
  return tokens;
}

class LineParser {
 public:
  LineParser(std::vector<Token> tokens, int line) : tokens_(std::move(tokens)), line_(line) {}

  int line() const { return line_; }
  const Token& peek() const { return tokens_[pos_]; }
  bool at_end() const { return peek().kind == TokenKind::End; }

  bool try_punct(std::string_view text) {
    if (peek().kind == TokenKind::Punct && peek().text == text) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect_punct(std::string_view text) {
    if (!try_punct(text)) fail("expected '" + std::string(text) + "'");
  }

  bool try_keyword(std::string_view word) {
    if (peek().kind == TokenKind::Ident && peek().text == word) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect_keyword(std::string_view word) {
    if (!try_keyword(word)) fail("expected '" + std::string(word) + "'");
  }

  std::string expect_ident(const std::string& what) {
    if (peek().kind != TokenKind::Ident) fail("expected " + what);
    return tokens_[pos_++].text;
  }

  int expect_int(const std::string& what) {
    if (peek().kind != TokenKind::Int) fail("expected " + what);
    int value = 0;
    try {
      value = std::stoi(peek().text);
    } catch (const std::exception&) {
      fail("number out of range");
    }
    ++pos_;
    return value;
  }

  std::string expect_string(const std::string& what) {
    if (peek().kind != TokenKind::Str) fail("expected " + what);
    return tokens_[pos_++].text;
  }

  void expect_end() {
    if (!at_end()) fail("expected end of line");
  }

  [[noreturn]] void fail(const std::string& what) {
    std::string found = peek().kind == TokenKind::End ? "end of line" : "'" + peek().text + "'";
    syntax_error(line_, peek().col, what + ", found " + found);
  }

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  int line_;
};

// Parses `{ a, b, c }` with possibly empty content.
std::set<Var> parse_var_set(LineParser& p) {
  std::set<Var> out;
  p.expect_punct("{");
  if (p.try_punct("}")) return out;
  while (true) {
    Var var = p.expect_ident("a variable name");
    if (!out.insert(var).second) name_error(p.line(), "duplicate variable '" + var + "'");
    if (p.try_punct("}")) return out;
    p.expect_punct(",");
  }
}

class Builder {
 public:
  ProblemFile file;

  void parse_line(std::string_view text, int line) {
    LineParser p(lex_line(text, line), line);
    if (p.at_end()) return;
    if (p.try_keyword("vocab")) return parse_vocab(p);
    if (p.try_keyword("context")) return parse_context(p);
    if (p.try_keyword("section")) return parse_section(p);
    if (p.try_keyword("morphism")) return parse_morphism(p);
    if (p.try_keyword("cover")) return parse_cover(p);
    if (p.try_keyword("drs")) return parse_drs(p);
    if (p.try_keyword("anaphor")) return parse_anaphor(p);
    if (p.try_keyword("pattern")) return parse_pattern(p);
    p.fail("expected a declaration keyword");
  }

 private:
  template <class F>
  auto at_line(int line, F&& build) {
    try {
      return build();
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::Syntax || e.kind() == ErrorKind::Name) throw;
      throw Error(e.kind(), "line " + std::to_string(line) + ": " + e.message());
    }
  }

  template <class Decl>
  void check_fresh(const std::vector<Decl>& decls, const std::string& name, int line,
                   const char* kind) {
    for (const auto& decl : decls) {
      if (decl.name == name) {
        name_error(line, std::string("duplicate ") + kind + " '" + name + "'");
      }
    }
  }

  template <class Decl>
  const Decl& lookup(const std::vector<Decl>& decls, const std::string& name, int line,
                     const char* kind) {
    for (const auto& decl : decls) {
      if (decl.name == name) return decl;
    }
    name_error(line, std::string(kind) + " '" + name + "' is not declared");
  }

  // Resolves a relation against every declared vocabulary; the name must be
  // declared somewhere and carry one arity across declarations.
  RelationSymbol resolve_relation(const std::string& name, int line) {
    std::set<int> arities;
    for (const auto& decl : file.vocabs) {
      if (auto arity = decl.vocab.arity_of(name)) arities.insert(*arity);
    }
    if (arities.empty()) name_error(line, "relation '" + name + "' is not declared");
    if (arities.size() > 1) {
      name_error(line, "relation '" + name + "' is declared with several arities");
    }
    return RelationSymbol(name, *arities.begin());
  }

  Literal parse_literal(LineParser& p, const Vocabulary* vocab) {
    bool positive = !p.try_punct("!");
    std::string name = p.expect_ident("a relation name");
    RelationSymbol rel = [&] {
      if (vocab == nullptr) return resolve_relation(name, p.line());
      auto arity = vocab->arity_of(name);
      if (!arity) name_error(p.line(), "relation '" + name + "' is not in the vocabulary");
      return RelationSymbol(name, *arity);
    }();
    std::vector<Var> args;
    p.expect_punct("(");
    if (!p.try_punct(")")) {
      while (true) {
        args.push_back(p.expect_ident("a variable name"));
        if (p.try_punct(")")) break;
        p.expect_punct(",");
      }
    }
    return at_line(p.line(), [&] { return Literal(positive, rel, std::move(args)); });
  }

  std::set<Literal> parse_literal_set(LineParser& p, const Vocabulary* vocab) {
    std::set<Literal> out;
    p.expect_punct("{");
    if (p.try_punct("}")) return out;
    while (true) {
      out.insert(parse_literal(p, vocab));
      if (p.try_punct("}")) return out;
      p.expect_punct(";");
    }
  }

  void parse_vocab(LineParser& p) {
    std::string name = p.expect_ident("a vocabulary name");
    check_fresh(file.vocabs, name, p.line(), "vocabulary");
    Vocabulary vocab;
    std::set<std::string> seen;
    p.expect_punct("{");
    if (!p.try_punct("}")) {
      while (true) {
        std::string rel = p.expect_ident("a relation name");
        p.expect_punct("/");
        int arity = p.expect_int("an arity");
        if (!seen.insert(rel).second) name_error(p.line(), "duplicate relation '" + rel + "'");
        at_line(p.line(), [&] {
          vocab.add(RelationSymbol(rel, arity));
          return 0;
        });
        if (p.try_punct("}")) break;
        p.expect_punct(",");
      }
    }
    p.expect_end();
    file.vocabs.push_back({name, std::move(vocab), p.line()});
  }

  void parse_context(LineParser& p) {
    std::string name = p.expect_ident("a context name");
    check_fresh(file.contexts, name, p.line(), "context");
    p.expect_punct("=");
    p.expect_punct("(");
    std::string vocab_name = p.expect_ident("a vocabulary name");
    const auto& vocab = lookup(file.vocabs, vocab_name, p.line(), "vocabulary");
    p.expect_punct(",");
    std::set<Var> vars = parse_var_set(p);
    p.expect_punct(")");
    p.expect_end();
    Context ctx = at_line(p.line(), [&] { return Context(vocab.vocab, std::move(vars)); });
    file.contexts.push_back({name, vocab_name, std::move(ctx), p.line()});
  }

  void parse_section(LineParser& p) {
    std::string name = p.expect_ident("a section name");
    check_fresh(file.sections, name, p.line(), "section");
    p.expect_keyword("over");
    std::string context_name = p.expect_ident("a context name");
    const auto& ctx = lookup(file.contexts, context_name, p.line(), "context");
    std::set<Literal> lits = parse_literal_set(p, &ctx.context.vocab);
    p.expect_end();
    Section section =
        at_line(p.line(), [&] { return Section::make(ctx.context, std::move(lits)); });
    file.sections.push_back({name, context_name, std::move(section), p.line()});
  }

  void parse_morphism(LineParser& p) {
    std::string name = p.expect_ident("a morphism name");
    check_fresh(file.morphisms, name, p.line(), "morphism");
    p.expect_punct(":");
    std::string source_name = p.expect_ident("a context name");
    const auto& source = lookup(file.contexts, source_name, p.line(), "context");
    p.expect_punct("->");
    std::string target_name = p.expect_ident("a context name");
    const auto& target = lookup(file.contexts, target_name, p.line(), "context");
    std::map<Var, Var> varmap;
    p.expect_punct("{");
    if (!p.try_punct("}")) {
      while (true) {
        Var from = p.expect_ident("a variable name");
        p.expect_punct("->");
        Var to = p.expect_ident("a variable name");
        if (!varmap.emplace(from, to).second) {
          name_error(p.line(), "variable '" + from + "' is mapped twice");
        }
        if (p.try_punct("}")) break;
        p.expect_punct(",");
      }
    }
    p.expect_end();
    Morphism morphism = at_line(
        p.line(), [&] { return Morphism::make(source.context, target.context, std::move(varmap)); });
    file.morphisms.push_back({name, source_name, target_name, std::move(morphism), p.line()});
  }

  void parse_cover(LineParser& p) {
    std::string name = p.expect_ident("a cover name");
    check_fresh(file.covers, name, p.line(), "cover");
    p.expect_keyword("on");
    std::string target_name = p.expect_ident("a context name");
    const auto& target = lookup(file.contexts, target_name, p.line(), "context");
    p.expect_punct("=");
    p.expect_punct("[");
    std::vector<std::string> leg_names;
    std::vector<Morphism> legs;
    while (true) {
      std::string leg = p.expect_ident("a morphism name");
      legs.push_back(lookup(file.morphisms, leg, p.line(), "morphism").morphism);
      leg_names.push_back(std::move(leg));
      if (p.try_punct("]")) break;
      p.expect_punct(",");
    }
    p.expect_end();
    Cover cover = at_line(p.line(), [&] {
      Cover c = Cover::make(target.context, std::move(legs));
      validate_cover(c);
      return c;
    });
    file.covers.push_back({name, target_name, std::move(leg_names), std::move(cover), p.line()});
  }

  void parse_drs(LineParser& p) {
    std::string name = p.expect_ident("a DRS name");
    check_fresh(file.drses, name, p.line(), "DRS");
    p.expect_punct("{");
    p.expect_keyword("refs");
    std::set<Var> refs = parse_var_set(p);
    p.expect_keyword("conds");
    std::set<Literal> conds = parse_literal_set(p, nullptr);
    p.expect_punct("}");
    p.expect_end();
    Drs drs = at_line(p.line(), [&] { return Drs::make(std::move(refs), std::move(conds)); });
    file.drses.push_back({name, std::move(drs), p.line()});
  }

  void parse_anaphor(LineParser& p) {
    Var var = p.expect_ident("an anaphor variable");
    for (const auto& decl : file.anaphors) {
      if (decl.var == var) name_error(p.line(), "duplicate anaphor '" + var + "'");
    }
    AnaphorSpec spec;
    spec.anaphor_vars.insert(var);
    if (p.try_keyword("constraints")) {
      spec.constraints = parse_literal_set(p, nullptr);
      for (const auto& lit : spec.constraints) {
        for (const auto& arg : lit.args) {
          if (arg != var) {
            name_error(p.line(), "constraint " + to_string(lit) + " must only use '" + var + "'");
          }
        }
      }
    }
    if (p.try_keyword("allowed")) {
      spec.allowed = parse_var_set(p);
    }
    p.expect_end();
    file.anaphors.push_back({std::move(var), std::move(spec), p.line()});
  }

  void parse_pattern(LineParser& p) {
    Var anaphor = p.expect_ident("an anaphor variable");
    p.expect_punct("->");
    Var antecedent = p.expect_ident("an antecedent variable");
    p.expect_keyword("label");
    std::string label = p.expect_string("a label string");
    p.expect_end();
    for (const auto& decl : file.patterns) {
      if (decl.pattern.anaphor_var == anaphor && decl.pattern.antecedent_var == antecedent) {
        name_error(p.line(), "duplicate pattern '" + anaphor + " -> " + antecedent + "'");
      }
    }
    file.patterns.push_back({MergingPattern{anaphor, antecedent, std::move(label)}, p.line()});
  }
};

template <class Decl>
const Decl& find_or_throw(const std::vector<Decl>& decls, std::string_view name,
                          const char* kind) {
  for (const auto& decl : decls) {
    if (decl.name == name) return decl;
  }
  throw Error(ErrorKind::Name, std::string(kind) + " '" + std::string(name) + "' is not declared");
}

}  // namespace

const VocabDecl& ProblemFile::vocab(std::string_view name) const {
  return find_or_throw(vocabs, name, "vocabulary");
}
const ContextDecl& ProblemFile::context(std::string_view name) const {
  return find_or_throw(contexts, name, "context");
}
const SectionDecl& ProblemFile::section(std::string_view name) const {
  return find_or_throw(sections, name, "section");
}
const MorphismDecl& ProblemFile::morphism(std::string_view name) const {
  return find_or_throw(morphisms, name, "morphism");
}
const CoverDecl& ProblemFile::cover(std::string_view name) const {
  return find_or_throw(covers, name, "cover");
}
const DrsDecl& ProblemFile::drs(std::string_view name) const {
  return find_or_throw(drses, name, "DRS");
}

ProblemFile parse_problem(std::string_view text) {
  Builder builder;
  int line = 1;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    builder.parse_line(text.substr(start, end - start), line);
    start = end + 1;
    ++line;
  }
  return std::move(builder.file);
}

namespace {

std::string quote(const std::string& raw) {
  std::string out = "\"";
  for (char c : raw) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

std::string var_list(const std::set<Var>& vars) {
  std::string out = "{";
  bool first = true;
  for (const auto& var : vars) {
    if (!first) out += ", ";
    out += var;
    first = false;
  }
  out += "}";
  return out;
}

std::string literal_list(const std::set<Literal>& lits) {
  if (lits.empty()) return "{ }";
  std::string out = "{ ";
  bool first = true;
  for (const auto& lit : lits) {
    if (!first) out += "; ";
    out += to_string(lit);
    first = false;
  }
  out += " }";
  return out;
}

}  // namespace

std::string serialize_problem(const ProblemFile& file) {
  std::ostringstream os;
  for (const auto& decl : file.vocabs) {
    os << "vocab " << decl.name << " {";
    bool first = true;
    for (const auto& symbol : decl.vocab.symbols()) {
      os << (first ? " " : ", ") << to_string(symbol);
      first = false;
    }
    os << (first ? "}" : " }") << "\n";
  }
  for (const auto& decl : file.contexts) {
    os << "context " << decl.name << " = (" << decl.vocab_name << ", "
       << var_list(decl.context.vars) << ")\n";
  }
  for (const auto& decl : file.sections) {
    os << "section " << decl.name << " over " << decl.context_name << " "
       << literal_list(decl.section.literals()) << "\n";
  }
  for (const auto& decl : file.morphisms) {
    os << "morphism " << decl.name << " : " << decl.source_name << " -> " << decl.target_name
       << " {";
    bool first = true;
    for (const auto& [from, to] : decl.morphism.varmap()) {
      os << (first ? " " : ", ") << from << " -> " << to;
      first = false;
    }
    os << (first ? "}" : " }") << "\n";
  }
  for (const auto& decl : file.covers) {
    os << "cover " << decl.name << " on " << decl.target_name << " = [";
    bool first = true;
    for (const auto& leg : decl.leg_names) {
      if (!first) os << ", ";
      os << leg;
      first = false;
    }
    os << "]\n";
  }
  for (const auto& decl : file.drses) {
    os << "drs " << decl.name << " { refs " << var_list(decl.drs.referents()) << " conds "
       << literal_list(decl.drs.conditions()) << " }\n";
  }
  for (const auto& decl : file.anaphors) {
    os << "anaphor " << decl.var;
    if (!decl.spec.constraints.empty()) {
      os << " constraints " << literal_list(decl.spec.constraints);
    }
    if (decl.spec.allowed) {
      os << " allowed " << var_list(*decl.spec.allowed);
    }
    os << "\n";
  }
  for (const auto& decl : file.patterns) {
    os << "pattern " << decl.pattern.anaphor_var << " -> " << decl.pattern.antecedent_var
       << " label " << quote(decl.pattern.label) << "\n";
  }
  return os.str();
}

FrequencyTable parse_frequency_tsv(std::string_view text) {
  FrequencyTable table;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;

    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.remove_suffix(1);
    if (line.empty()) continue;

    std::size_t tab = line.find('\t');
    if (tab == std::string_view::npos) {
      throw Error(ErrorKind::Syntax,
                  "line " + std::to_string(line_no) + ": expected label<TAB>count");
    }
    std::string label(line.substr(0, tab));
    std::string_view rest = line.substr(tab + 1);
    while (!rest.empty() && (rest.front() == ' ' || rest.front() == '\t')) rest.remove_prefix(1);
    if (label.empty() || rest.empty() ||
        !std::all_of(rest.begin(), rest.end(),
                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      throw Error(ErrorKind::Syntax, "line " + std::to_string(line_no) +
                                         ": expected a nonnegative base-10 count");
    }
    if (table.has(label)) {
      throw Error(ErrorKind::Name,
                  "line " + std::to_string(line_no) + ": duplicate label '" + label + "'");
    }
    try {
      table.set(label, std::stoll(std::string(rest)));
    } catch (const std::exception&) {
      throw Error(ErrorKind::Syntax, "line " + std::to_string(line_no) + ": count out of range");
    }
  }
  return table;
}

}  // namespace sheafsem
