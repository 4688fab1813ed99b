#include "fdalg/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <iterator>
#include <limits>
#include <optional>
#include <sstream>
#include <vector>

#include "fdalg/errors.hpp"
#include "fdalg/quiver.hpp"

namespace fdalg {

namespace {

struct Line {
  std::size_t number;
  std::string text;
};

/// Non-empty lines with comments stripped.
std::vector<Line> meaningful_lines(std::string_view text) {
  std::vector<Line> out;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    const auto first = raw.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto last = raw.find_last_not_of(" \t\r");
    out.push_back({number, raw.substr(first, last - first + 1)});
  }
  return out;
}

std::vector<std::string> words(const std::string& s) {
  std::istringstream in(s);
  return {std::istream_iterator<std::string>(in), std::istream_iterator<std::string>()};
}

[[noreturn]] void syntax(std::size_t line, const std::string& msg) {
  throw Error(ErrorKind::syntax_error, "line " + std::to_string(line) + ": " + msg);
}

std::size_t parse_index(const std::string& w, std::size_t bound, std::size_t line) {
  if (w.empty() || !std::all_of(w.begin(), w.end(), [](unsigned char c) { return std::isdigit(c); })) {
    syntax(line, "expected a basis index, got '" + w + "'");
  }
  const unsigned long long v = std::stoull(w);
  if (v >= bound) syntax(line, "index " + w + " out of range");
  return static_cast<std::size_t>(v);
}

Scalar parse_scalar(const FieldSpec& f, const std::string& w, std::size_t line) {
  try {
    return Scalar::parse(f, w);
  } catch (const Error& e) {
    syntax(line, e.what());
  }
}

std::string rest_after(const std::string& s, std::size_t n) {
  const auto first = s.find_first_not_of(" \t", n);
  return first == std::string::npos ? std::string() : s.substr(first);
}

}  // namespace

std::string write_algebra(const Algebra& a) {
  std::ostringstream out;
  const std::size_t d = a.dim();
  out << "algebra dim=" << d << " field=" << a.field().to_string() << "\n";
  if (!a.name().empty()) out << "name: " << a.name() << "\n";
  out << "unit:";
  for (const auto& s : a.unit()) out << ' ' << s.to_string();
  out << "\n";
  if (const auto* q = std::get_if<QuiverProvenance>(&a.provenance())) {
    for (std::size_t v = 0; v < q->vertex_idempotents.size(); ++v) {
      out << "vertex " << q->vertex_names[v] << ":";
      for (const auto& s : q->vertex_idempotents[v]) out << ' ' << s.to_string();
      out << "\n";
    }
    out << "arrow_ideal:";
    for (std::size_t c : q->arrow_coordinates) out << ' ' << c;
    out << "\n";
  } else if (const auto* g = std::get_if<GroupProvenance>(&a.provenance())) {
    out << "group order=" << g->order << "\n";
    for (const auto& cls : g->classes) {
      out << "class:";
      for (std::size_t c : cls) out << ' ' << c;
      out << "\n";
    }
  }
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      for (const auto& t : a.basis_product(i, j)) out << "mul " << i << ' ' << j << ' ' << t.index << ' ' << t.coeff << "\n";
    }
  }
  return out.str();
}

Algebra read_algebra(std::string_view text) {
  const auto lines = meaningful_lines(text);
  if (lines.empty()) throw Error(ErrorKind::syntax_error, "empty input");
  const auto head = words(lines[0].text);
  if (head.empty() || head[0] != "algebra") syntax(lines[0].number, "expected header 'algebra dim=<d> field=<F>'");
  std::optional<std::size_t> dim;
  std::optional<FieldSpec> field;
  for (std::size_t i = 1; i < head.size(); ++i) {
    const auto eq = head[i].find('=');
    if (eq == std::string::npos) syntax(lines[0].number, "header option '" + head[i] + "' lacks '='");
    const std::string key = head[i].substr(0, eq), value = head[i].substr(eq + 1);
    if (key == "dim") {
      dim = parse_index(value, std::numeric_limits<std::size_t>::max(), lines[0].number);
    } else if (key == "field") {
      try {
        field = FieldSpec::parse(value);
      } catch (const Error& e) {
        syntax(lines[0].number, e.what());
      }
    } else {
      syntax(lines[0].number, "unknown header option '" + key + "'");
    }
  }
  if (!dim || *dim == 0) syntax(lines[0].number, "header needs a positive dim");
  if (!field) syntax(lines[0].number, "header needs field=Fp:p or field=Q");
  const std::size_t d = *dim;
  const FieldSpec& f = *field;

  std::optional<Vector> unit;
  std::string name;
  QuiverProvenance quiver;
  bool has_quiver = false, has_arrow_ideal = false;
  GroupProvenance group;
  bool has_group = false;
  std::vector<std::vector<ProductTerm>> terms(d * d);
  std::vector<std::vector<bool>> seen(d * d);

  for (std::size_t li = 1; li < lines.size(); ++li) {
    const Line& line = lines[li];
    const auto w = words(line.text);
    const std::string& key = w[0];
    if (key == "name:") {
      name = rest_after(line.text, 5);
    } else if (key == "unit:") {
      if (unit) syntax(line.number, "duplicate unit line");
      if (w.size() != d + 1) syntax(line.number, "unit needs " + std::to_string(d) + " scalars");
      Vector u;
      for (std::size_t i = 1; i < w.size(); ++i) u.push_back(parse_scalar(f, w[i], line.number));
      unit = std::move(u);
    } else if (key == "mul") {
      if (w.size() != 5) syntax(line.number, "expected 'mul i j k <scalar>'");
      const std::size_t i = parse_index(w[1], d, line.number), j = parse_index(w[2], d, line.number);
      const std::size_t k = parse_index(w[3], d, line.number);
      auto& flags = seen[i * d + j];
      if (flags.empty()) flags.assign(d, false);
      if (flags[k]) syntax(line.number, "duplicate structure constant");
      flags[k] = true;
      terms[i * d + j].push_back({k, parse_scalar(f, w[4], line.number)});
    } else if (key == "vertex") {
      if (w.size() != d + 2 || w[1].empty() || w[1].back() != ':') syntax(line.number, "expected 'vertex <name>: <scalars>'");
      Vector e;
      for (std::size_t i = 2; i < w.size(); ++i) e.push_back(parse_scalar(f, w[i], line.number));
      quiver.vertex_names.push_back(w[1].substr(0, w[1].size() - 1));
      quiver.vertex_idempotents.push_back(std::move(e));
      has_quiver = true;
    } else if (key == "arrow_ideal:") {
      for (std::size_t i = 1; i < w.size(); ++i) quiver.arrow_coordinates.push_back(parse_index(w[i], d, line.number));
      has_arrow_ideal = true;
    } else if (key == "group") {
      if (w.size() != 2 || w[1].rfind("order=", 0) != 0) syntax(line.number, "expected 'group order=<n>'");
      group.order = parse_index(w[1].substr(6), d + 1, line.number);
      has_group = true;
    } else if (key == "class:") {
      std::vector<std::size_t> cls;
      for (std::size_t i = 1; i < w.size(); ++i) cls.push_back(parse_index(w[i], d, line.number));
      group.classes.push_back(std::move(cls));
    } else {
      syntax(line.number, "unknown directive '" + key + "'");
    }
  }
  if (!unit) throw Error(ErrorKind::syntax_error, "missing 'unit:' line");
  if (has_quiver != has_arrow_ideal) throw Error(ErrorKind::syntax_error, "quiver provenance needs vertex and arrow_ideal lines");
  if (has_quiver && has_group) throw Error(ErrorKind::syntax_error, "conflicting provenance");
  if (!group.classes.empty() && !has_group) throw Error(ErrorKind::syntax_error, "class lines need a group line");
  Provenance prov;
  if (has_quiver) prov = std::move(quiver);
  if (has_group) prov = std::move(group);
  return Algebra::from_terms(f, d, std::move(terms), std::move(*unit), std::move(prov), std::move(name));
}

CayleyTable read_cayley(std::string_view text) {
  const auto lines = meaningful_lines(text);
  if (lines.empty()) throw Error(ErrorKind::syntax_error, "empty input");
  const auto head = words(lines[0].text);
  if (head.size() != 1) syntax(lines[0].number, "expected the group order alone");
  const std::size_t n = parse_index(head[0], 4097, lines[0].number);
  if (n == 0) syntax(lines[0].number, "group order must be positive");
  if (lines.size() != n + 1) throw Error(ErrorKind::syntax_error, "expected " + std::to_string(n) + " table rows");
  CayleyTable t;
  for (std::size_t r = 1; r <= n; ++r) {
    const auto w = words(lines[r].text);
    if (w.size() != n) syntax(lines[r].number, "expected " + std::to_string(n) + " entries");
    std::vector<std::size_t> row;
    for (const auto& x : w) row.push_back(parse_index(x, n, lines[r].number));
    t.push_back(std::move(row));
  }
  return t;
}

InputFormat detect_format(std::string_view text) {
  const auto lines = meaningful_lines(text);
  if (lines.empty()) throw Error(ErrorKind::syntax_error, "empty input");
  const auto w = words(lines[0].text);
  if (w[0] == "algebra") return InputFormat::structure_constants;
  if (std::all_of(w[0].begin(), w[0].end(), [](unsigned char c) { return std::isdigit(c); })) return InputFormat::cayley;
  return InputFormat::quiver;
}

Algebra parse_any(std::string_view text, const LoadOptions& options, const std::string& descriptor) {
  switch (detect_format(text)) {
    case InputFormat::structure_constants: {
      Algebra a = read_algebra(text);
      return a.name().empty() && !descriptor.empty() ? a.renamed(descriptor) : a;
    }
    case InputFormat::cayley:
      return group_algebra_from_cayley(options.field, read_cayley(text)).renamed(descriptor);
    case InputFormat::quiver:
      return build_path_algebra(parse_quiver(text, options.field, options.params)).algebra.renamed(descriptor);
  }
  throw Error(ErrorKind::internal, "unhandled input format");
}

std::string read_text(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::io_error, "cannot open '" + path + "'");
  std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  if (in.bad()) throw Error(ErrorKind::io_error, "cannot read '" + path + "'");
  return text;
}

void write_text(const std::string& path, std::string_view text) {
  if (path == "-") {
    std::cout << text;
    std::cout.flush();
    if (!std::cout) throw Error(ErrorKind::io_error, "cannot write to standard output");
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::io_error, "cannot open '" + path + "' for writing");
  out << text;
  if (!out) throw Error(ErrorKind::io_error, "cannot write '" + path + "'");
}

Algebra load_algebra(const std::string& path, const LoadOptions& options) {
  return parse_any(read_text(path), options, path == "-" ? std::string("stdin") : path);
}

}  // namespace fdalg
