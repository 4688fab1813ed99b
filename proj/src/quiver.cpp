#include "fdalg/quiver.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <sstream>

#include "fdalg/errors.hpp"

namespace fdalg {

namespace {

constexpr std::size_t path_limit = 20000;

bool is_keyword(std::string_view s) { return s == "vertices" || s == "arrows" || s == "relations"; }

}  // namespace

std::size_t QuiverPresentation::add_vertex(std::string name) {
  if (std::find(vertices.begin(), vertices.end(), name) != vertices.end()) {
    throw Error(ErrorKind::syntax_error, "duplicate vertex '" + name + "'");
  }
  vertices.push_back(std::move(name));
  return vertices.size() - 1;
}

std::size_t QuiverPresentation::add_arrow(std::string name, std::size_t source, std::size_t target) {
  if (source >= vertices.size() || target >= vertices.size()) {
    throw Error(ErrorKind::unknown_symbol, "arrow '" + name + "' refers to an unknown vertex");
  }
  for (const auto& a : arrows) {
    if (a.name == name) throw Error(ErrorKind::syntax_error, "duplicate arrow '" + name + "'");
  }
  arrows.push_back({std::move(name), source, target});
  return arrows.size() - 1;
}

QuiverPath QuiverPresentation::path(const std::vector<std::size_t>& word) const {
  if (word.empty()) throw Error(ErrorKind::bad_parameter, "empty arrow word");
  QuiverPath p;
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (word[k] >= arrows.size()) throw Error(ErrorKind::unknown_symbol, "arrow index out of range");
    const auto& a = arrows[word[k]];
    if (k == 0) {
      p.source = a.source;
    } else if (p.target != a.source) {
      QuiverPath partial{p.source, p.target, p.arrows};
      throw Error(ErrorKind::not_parallel, "path " + path_label(*this, partial) + "*" + a.name + " is not composable");
    }
    p.target = a.target;
    p.arrows.push_back(word[k]);
  }
  return p;
}

void QuiverPresentation::add_relation(std::vector<RelationTerm> terms) {
  std::vector<RelationTerm> merged;
  for (auto& t : terms) {
    if (t.path.length() < 2) {
      throw Error(ErrorKind::not_admissible,
                  "relation term " + path_label(*this, t.path) + " has length below 2");
    }
    auto it = std::find_if(merged.begin(), merged.end(), [&](const RelationTerm& m) { return m.path == t.path; });
    if (it == merged.end()) {
      merged.push_back(std::move(t));
    } else {
      it->coeff += t.coeff;
    }
  }
  for (std::size_t k = 1; k < merged.size(); ++k) {
    if (merged[k].path.source != merged[0].path.source || merged[k].path.target != merged[0].path.target) {
      throw Error(ErrorKind::not_parallel, "relation mixes paths " + path_label(*this, merged[0].path) + " and " +
                                               path_label(*this, merged[k].path) + " with different endpoints");
    }
  }
  std::erase_if(merged, [](const RelationTerm& t) { return t.coeff.is_zero(); });
  if (!merged.empty()) relations.push_back({std::move(merged)});
}

std::string path_label(const QuiverPresentation& q, const QuiverPath& p) {
  if (p.arrows.empty()) return p.source < q.vertices.size() ? q.vertices[p.source] : "e" + std::to_string(p.source);
  std::string out;
  for (std::size_t k = 0; k < p.arrows.size(); ++k) {
    if (k != 0) out += '*';
    out += q.arrows[p.arrows[k]].name;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

enum class Tok { ident, number, slash, star, caret, plus, minus, colon, arrow, sep, newline, end };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t col;
};

[[noreturn]] void syntax(const Token& t, const std::string& msg, ErrorKind kind = ErrorKind::syntax_error) {
  throw Error(kind, "line " + std::to_string(t.line) + ", col " + std::to_string(t.col) + ": " + msg);
}

/// Message of a nested error without its kind prefix.
std::string bare(const Error& e) {
  std::string s = e.what();
  const std::string prefix = std::string(to_string(e.kind())) + ": ";
  return s.rfind(prefix, 0) == 0 ? s.substr(prefix.size()) : s;
}

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1, i = 0;
  auto push = [&](Tok k, std::string s, std::size_t c) { out.push_back({k, std::move(s), line, c}); };
  while (i < text.size()) {
    const char c = text[i];
    const std::size_t start = col;
    if (c == '\n') {
      push(Tok::newline, "\\n", start);
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      ++col;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_' || text[j] == '\'')) ++j;
      push(Tok::ident, std::string(text.substr(i, j - i)), start);
      col += j - i;
      i = j;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      push(Tok::number, std::string(text.substr(i, j - i)), start);
      col += j - i;
      i = j;
      continue;
    }
    if (c == '-' && i + 1 < text.size() && text[i + 1] == '>') {
      push(Tok::arrow, "->", start);
      i += 2;
      col += 2;
      continue;
    }
    Tok k;
    switch (c) {
      case '/': k = Tok::slash; break;
      case '*': k = Tok::star; break;
      case '^': k = Tok::caret; break;
      case '+': k = Tok::plus; break;
      case '-': k = Tok::minus; break;
      case ':': k = Tok::colon; break;
      case ',':
      case ';': k = Tok::sep; break;
      default:
        throw Error(ErrorKind::syntax_error, "line " + std::to_string(line) + ", col " + std::to_string(col) +
                                                 ": unexpected character '" + std::string(1, c) + "'");
    }
    push(k, std::string(1, c), start);
    ++i;
    ++col;
  }
  out.push_back({Tok::end, "end of input", line, col});
  return out;
}

/// Strips an optional `quiver key=value ...` header line, blanking it so
/// token positions keep their original line numbers.
std::string take_header(std::string_view text, FieldSpec& field) {
  std::string body(text);
  std::size_t pos = 0;
  while (pos < body.size()) {
    std::size_t eol = body.find('\n', pos);
    if (eol == std::string::npos) eol = body.size();
    std::string_view line(body.data() + pos, eol - pos);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos || line[first] == '#') {
      pos = eol + 1;
      continue;
    }
    std::istringstream words{std::string(line.substr(first))};
    std::string word;
    words >> word;
    if (word != "quiver") break;
    while (words >> word) {
      if (word[0] == '#') break;
      const auto eq = word.find('=');
      if (eq == std::string::npos) throw Error(ErrorKind::syntax_error, "header option '" + word + "' lacks '='");
      const std::string key = word.substr(0, eq), value = word.substr(eq + 1);
      if (key == "field") {
        field = FieldSpec::parse(value);
      } else if (key != "name") {
        throw Error(ErrorKind::syntax_error, "unknown header option '" + key + "'");
      }
    }
    std::fill(body.begin() + static_cast<std::ptrdiff_t>(pos), body.begin() + static_cast<std::ptrdiff_t>(eol), ' ');
    break;
  }
  return body;
}

class Parser {
 public:
  Parser(std::vector<Token> tokens, QuiverPresentation& q, std::map<std::string, Scalar> params)
      : toks_(std::move(tokens)), q_(q), params_(std::move(params)) {}

  void run() {
    enum class Section { none, vertices, arrows, relations } section = Section::none;
    while (peek().kind != Tok::end) {
      const Token& t = peek();
      if (t.kind == Tok::newline || t.kind == Tok::sep) {
        ++pos_;
        continue;
      }
      if (at_section()) {
        section = t.text == "vertices" ? Section::vertices : t.text == "arrows" ? Section::arrows : Section::relations;
        pos_ += 2;
        continue;
      }
      switch (section) {
        case Section::none:
          syntax(t, "expected 'vertices:', 'arrows:' or 'relations:'");
        case Section::vertices:
          vertex();
          break;
        case Section::arrows:
          arrow();
          break;
        case Section::relations:
          relation();
          break;
      }
    }
  }

 private:
  const Token& peek(std::size_t ahead = 0) const { return toks_[std::min(pos_ + ahead, toks_.size() - 1)]; }
  const Token& next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

  bool at_section() const {
    return peek().kind == Tok::ident && is_keyword(peek().text) && peek(1).kind == Tok::colon;
  }

  const Token& expect(Tok kind, const char* what) {
    const Token& t = next();
    if (t.kind != kind) syntax(t, std::string("expected ") + what + ", found '" + t.text + "'");
    return t;
  }

  std::size_t vertex_index(const Token& t) const {
    auto it = std::find(q_.vertices.begin(), q_.vertices.end(), t.text);
    if (it == q_.vertices.end()) syntax(t, "unknown vertex '" + t.text + "'", ErrorKind::unknown_symbol);
    return static_cast<std::size_t>(it - q_.vertices.begin());
  }

  std::optional<std::size_t> arrow_index(const std::string& name) const {
    for (std::size_t k = 0; k < q_.arrows.size(); ++k) {
      if (q_.arrows[k].name == name) return k;
    }
    return std::nullopt;
  }

  void vertex() {
    const Token& t = expect(Tok::ident, "vertex name");
    if (is_keyword(t.text)) syntax(t, "'" + t.text + "' is reserved");
    if (std::find(q_.vertices.begin(), q_.vertices.end(), t.text) != q_.vertices.end()) {
      syntax(t, "duplicate vertex '" + t.text + "'");
    }
    q_.vertices.push_back(t.text);
  }

  void arrow() {
    const Token& name = expect(Tok::ident, "arrow name");
    if (is_keyword(name.text)) syntax(name, "'" + name.text + "' is reserved");
    if (arrow_index(name.text) || std::find(q_.vertices.begin(), q_.vertices.end(), name.text) != q_.vertices.end()) {
      syntax(name, "duplicate name '" + name.text + "'");
    }
    expect(Tok::colon, "':'");
    const std::size_t s = vertex_index(expect(Tok::ident, "source vertex"));
    expect(Tok::arrow, "'->'");
    const std::size_t t = vertex_index(expect(Tok::ident, "target vertex"));
    q_.arrows.push_back({name.text, s, t});
  }

  Scalar number() {
    const Token& t = next();
    mpz_class num(t.text), den = 1;
    if (peek().kind == Tok::slash) {
      ++pos_;
      const Token& d = expect(Tok::number, "denominator");
      den = mpz_class(d.text);
      if (den == 0) syntax(d, "zero denominator");
    }
    try {
      return Scalar::from_rational(q_.field, mpq_class(num, den));
    } catch (const Error& e) {
      syntax(t, bare(e), e.kind());
    }
  }

  long long exponent() {
    bool negative = false;
    if (peek().kind == Tok::minus) {
      negative = true;
      ++pos_;
    }
    const Token& t = expect(Tok::number, "exponent");
    if (t.text.size() > 6) syntax(t, "exponent too large");
    const long long v = std::stoll(t.text);
    return negative ? -v : v;
  }

  void relation() {
    std::vector<RelationTerm> terms;
    const Token& start = peek();
    bool first = true;
    while (true) {
      Scalar sign = Scalar::one(q_.field);
      const Token& t = peek();
      if (t.kind == Tok::plus || t.kind == Tok::minus) {
        if (t.kind == Tok::minus) sign = -sign;
        ++pos_;
      } else if (!first) {
        break;
      }
      const Token& term_start = peek();
      auto [coeff, word] = term();
      if (word.empty()) syntax(term_start, "relation term has no arrows", ErrorKind::not_admissible);
      QuiverPath path;
      try {
        path = q_.path(word);
      } catch (const Error& e) {
        syntax(term_start, bare(e), e.kind());
      }
      terms.push_back({sign * coeff, std::move(path)});
      first = false;
    }
    const Token& end = peek();
    if (end.kind != Tok::sep && end.kind != Tok::newline && end.kind != Tok::end && !at_section()) {
      syntax(end, "unexpected '" + end.text + "' in relation");
    }
    try {
      q_.add_relation(std::move(terms));
    } catch (const Error& e) {
      syntax(start, bare(e), e.kind());
    }
  }

  std::pair<Scalar, std::vector<std::size_t>> term() {
    Scalar coeff = Scalar::one(q_.field);
    std::vector<std::size_t> word;
    bool any = false;
    while (true) {
      const Token& t = peek();
      if (t.kind == Tok::number) {
        coeff *= number();
      } else if (t.kind == Tok::ident && !at_section()) {
        ++pos_;
        long long power = 1;
        if (peek().kind == Tok::caret) {
          ++pos_;
          power = exponent();
        }
        if (auto a = arrow_index(t.text)) {
          if (power < 1) syntax(t, "arrow exponent must be positive");
          for (long long k = 0; k < power; ++k) word.push_back(*a);
        } else if (auto it = params_.find(t.text); it != params_.end()) {
          Scalar v = it->second;
          if (power < 0) {
            if (v.is_zero()) syntax(t, "negative power of zero parameter", ErrorKind::bad_parameter);
            v = v.inverse();
            power = -power;
          }
          coeff *= v.pow(static_cast<std::uint64_t>(power));
        } else {
          syntax(t, "unknown symbol '" + t.text + "'", ErrorKind::unknown_symbol);
        }
      } else if (t.kind == Tok::star && any) {
        ++pos_;
        const Tok k = peek().kind;
        if (k != Tok::ident && k != Tok::number) syntax(peek(), "expected a factor after '*'");
        continue;
      } else {
        break;
      }
      any = true;
    }
    if (!any) syntax(peek(), "expected a term, found '" + peek().text + "'");
    return {coeff, word};
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  QuiverPresentation& q_;
  std::map<std::string, Scalar> params_;
};

}  // namespace

QuiverPresentation parse_quiver(std::string_view text, const FieldSpec& default_field,
                                const std::map<std::string, std::string>& params) {
  QuiverPresentation q;
  q.field = default_field;
  const std::string body = take_header(text, q.field);
  std::map<std::string, Scalar> values;
  for (const auto& [name, value] : params) values.emplace(name, Scalar::parse(q.field, value));
  Parser(lex(body), q, std::move(values)).run();
  if (q.vertices.empty()) throw Error(ErrorKind::syntax_error, "quiver has no vertices");
  return q;
}

// ---------------------------------------------------------------------------
// Path enumeration and normal forms

namespace {

struct PathTable {
  std::vector<QuiverPath> paths;  // ascending (length, lex)
  std::map<std::pair<std::size_t, std::vector<std::size_t>>, std::size_t> index;
  std::size_t max_length = 0;

  std::size_t count_below(std::size_t length) const {
    std::size_t n = 0;
    while (n < paths.size() && paths[n].length() < length) ++n;
    return n;
  }
  std::optional<std::size_t> find(const QuiverPath& p) const {
    auto it = index.find({p.source, p.arrows});
    if (it == index.end()) return std::nullopt;
    return it->second;
  }
};

PathTable enumerate_paths(const QuiverPresentation& q, std::size_t max_length) {
  PathTable t;
  t.max_length = max_length;
  for (std::size_t v = 0; v < q.vertices.size(); ++v) t.paths.push_back({v, v, {}});
  std::size_t begin = 0, end = t.paths.size();
  for (std::size_t len = 1; len <= max_length; ++len) {
    for (std::size_t i = begin; i < end; ++i) {
      for (std::size_t a = 0; a < q.arrows.size(); ++a) {
        if (q.arrows[a].source != t.paths[i].target) continue;
        QuiverPath p = t.paths[i];
        if (p.arrows.empty()) p.source = q.arrows[a].source;
        p.arrows.push_back(a);
        p.target = q.arrows[a].target;
        t.paths.push_back(std::move(p));
        if (t.paths.size() > path_limit) {
          throw Error(ErrorKind::not_admissible, "more than " + std::to_string(path_limit) + " paths of length <= " +
                                                     std::to_string(max_length) + "; relations do not bound the algebra");
        }
      }
    }
    begin = end;
    end = t.paths.size();
  }
  for (std::size_t i = 0; i < t.paths.size(); ++i) t.index[{t.paths[i].source, t.paths[i].arrows}] = i;
  return t;
}

std::optional<QuiverPath> concat(const QuiverPath& a, const QuiverPath& b) {
  if (a.target != b.source) return std::nullopt;
  if (a.arrows.empty()) return b;
  if (b.arrows.empty()) return a;
  QuiverPath p{a.source, b.target, a.arrows};
  p.arrows.insert(p.arrows.end(), b.arrows.begin(), b.arrows.end());
  return p;
}

/// Span of u*r*v modulo paths of length >= bound. Column c holds the path of
/// ascending index (n - 1 - c), so elimination pivots on the largest path.
SpanBuilder ideal_span(const QuiverPresentation& q, const PathTable& table, std::size_t bound) {
  const std::size_t n = table.count_below(bound);
  SpanBuilder builder(q.field, n);
  for (const auto& rel : q.relations) {
    std::size_t min_len = rel.terms.front().path.length();
    for (const auto& t : rel.terms) min_len = std::min(min_len, t.path.length());
    if (min_len >= bound) continue;
    const std::size_t s = rel.terms.front().path.source, tg = rel.terms.front().path.target;
    for (std::size_t ui = 0; ui < n; ++ui) {
      const QuiverPath& u = table.paths[ui];
      if (u.target != s || u.length() + min_len >= bound) continue;
      for (std::size_t vi = 0; vi < n; ++vi) {
        const QuiverPath& v = table.paths[vi];
        if (v.source != tg) continue;
        if (u.length() + v.length() + min_len >= bound) break;
        Vector vec = zero_vector(q.field, n);
        for (const auto& term : rel.terms) {
          if (u.length() + term.path.length() + v.length() >= bound) continue;
          const QuiverPath w = *concat(*concat(u, term.path), v);
          vec[n - 1 - *table.find(w)] += term.coeff;
        }
        builder.add(vec);
        if (builder.full()) return builder;
      }
    }
  }
  return builder;
}

}  // namespace

std::size_t admissibility_bound(const QuiverPresentation& q, std::size_t cap) {
  if (q.arrows.empty()) return 1;
  for (std::size_t n = 1; n <= cap; ++n) {
    const PathTable table = enumerate_paths(q, n);
    const std::size_t below = table.count_below(n);
    if (below == table.paths.size()) return n;
    const SpanBuilder span = ideal_span(q, table, n + 1);
    const std::size_t total = table.paths.size();
    bool all = true;
    for (std::size_t i = below; i < total && all; ++i) {
      all = span.contains(unit_vector(q.field, total, total - 1 - i));
    }
    if (all) return n;
  }
  throw Error(ErrorKind::not_admissible, "no bound N <= " + std::to_string(cap) + " with all length-N paths in the ideal");
}

PathAlgebra build_path_algebra(const QuiverPresentation& q, std::size_t cap) {
  const std::size_t bound = admissibility_bound(q, cap);
  const PathTable table = enumerate_paths(q, bound == 0 ? 0 : bound - 1);
  const std::size_t n = table.paths.size();
  const Subspace ideal = ideal_span(q, table, bound).build();

  std::vector<std::size_t> basis_paths;  // ascending path indices
  for (std::size_t c : ideal.free_coordinates()) basis_paths.push_back(n - 1 - c);
  std::sort(basis_paths.begin(), basis_paths.end());
  const std::size_t d = basis_paths.size();

  std::vector<Vector> products;
  products.reserve(d * d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      Vector out = zero_vector(q.field, d);
      auto w = concat(table.paths[basis_paths[i]], table.paths[basis_paths[j]]);
      if (w && w->length() < bound) {
        const Vector r = ideal.reduce(unit_vector(q.field, n, n - 1 - *table.find(*w)));
        for (std::size_t k = 0; k < d; ++k) out[k] = r[n - 1 - basis_paths[k]];
      }
      products.push_back(std::move(out));
    }
  }

  const std::size_t nv = q.vertices.size();
  QuiverProvenance prov;
  prov.vertex_names = q.vertices;
  Vector unit = zero_vector(q.field, d);
  for (std::size_t v = 0; v < nv; ++v) {
    prov.vertex_idempotents.push_back(unit_vector(q.field, d, v));
    unit[v] = Scalar::one(q.field);
  }
  std::vector<Vector> arrow_span;
  for (std::size_t k = nv; k < d; ++k) {
    prov.arrow_coordinates.push_back(k);
    arrow_span.push_back(unit_vector(q.field, d, k));
  }
  PathAlgebra out{Algebra::from_products(q.field, d, products, std::move(unit), prov),
                  prov.vertex_idempotents,
                  Subspace::span(q.field, d, arrow_span),
                  {},
                  bound};
  for (std::size_t k : basis_paths) out.basis.push_back(table.paths[k]);
  return out;
}

}  // namespace fdalg
