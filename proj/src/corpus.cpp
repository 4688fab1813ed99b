#include "fdalg/corpus.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <random>

#include "fdalg/errors.hpp"

namespace fdalg {

namespace {

constexpr std::size_t max_family_parameter = 16;
constexpr int max_attempts = 100;

void require_range(std::size_t n, std::size_t lo, std::size_t hi, const char* what) {
  if (n < lo || n > hi) {
    throw Error(ErrorKind::bad_parameter,
                std::string(what) + " must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "], got " +
                    std::to_string(n));
  }
}

Scalar random_scalar(const FieldSpec& f, std::mt19937_64& rng) {
  if (f.is_prime()) return Scalar::from_integer(f, static_cast<long long>(rng() % f.characteristic()));
  return Scalar::from_integer(f, static_cast<long long>(rng() % 7) - 3);
}

/// All paths of exactly `length` arrows (length >= 1).
std::vector<QuiverPath> paths_of_length(const QuiverPresentation& q, std::size_t length) {
  std::vector<std::vector<std::size_t>> words;
  for (std::size_t a = 0; a < q.arrows.size(); ++a) words.push_back({a});
  for (std::size_t len = 1; len < length; ++len) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& w : words) {
      for (std::size_t a = 0; a < q.arrows.size(); ++a) {
        if (q.arrows[w.back()].target != q.arrows[a].source) continue;
        auto x = w;
        x.push_back(a);
        next.push_back(std::move(x));
      }
    }
    words = std::move(next);
  }
  std::vector<QuiverPath> out;
  for (const auto& w : words) out.push_back(q.path(w));
  return out;
}

std::size_t count_paths_below(const QuiverPresentation& q, std::size_t bound) {
  std::vector<std::size_t> ending(q.vertices.size(), 1);
  std::size_t total = q.vertices.size();
  for (std::size_t len = 1; len < bound; ++len) {
    std::vector<std::size_t> next(q.vertices.size(), 0);
    for (const auto& a : q.arrows) next[a.target] += ending[a.source];
    ending = std::move(next);
    for (std::size_t c : ending) total += c;
    if (total > 100000) break;
  }
  return total;
}

void add_all_paths(QuiverPresentation& q, std::size_t length) {
  for (auto& p : paths_of_length(q, length)) q.add_relation({{Scalar::one(q.field), std::move(p)}});
}

/// A random combination of parallel paths of the given length.
void add_random_relation(QuiverPresentation& q, std::size_t length, std::mt19937_64& rng) {
  const auto paths = paths_of_length(q, length);
  if (paths.empty()) return;
  std::map<std::pair<std::size_t, std::size_t>, std::vector<QuiverPath>> groups;
  for (const auto& p : paths) groups[{p.source, p.target}].push_back(p);
  auto it = groups.begin();
  std::advance(it, static_cast<std::ptrdiff_t>(rng() % groups.size()));
  std::vector<RelationTerm> terms;
  for (const auto& p : it->second) {
    Scalar c = random_scalar(q.field, rng);
    if (!c.is_zero()) terms.push_back({c, p});
  }
  if (terms.empty()) terms.push_back({Scalar::one(q.field), it->second[rng() % it->second.size()]});
  q.add_relation(std::move(terms));
}

}  // namespace

std::string_view to_string(Family f) noexcept {
  switch (f) {
    case Family::truncated: return "truncated";
    case Family::triangular: return "triangular";
    case Family::kronecker: return "kronecker";
    case Family::a_q: return "a_q";
    case Family::cyclic_group: return "cyclic_group";
    case Family::s3: return "s3";
    case Family::matrix: return "matrix";
    case Family::random_quiver: return "random_quiver";
    case Family::random_local: return "random_local";
  }
  return "truncated";
}

Family parse_family(std::string_view name) {
  for (Family f : {Family::truncated, Family::triangular, Family::kronecker, Family::a_q, Family::cyclic_group, Family::s3,
                   Family::matrix, Family::random_quiver, Family::random_local}) {
    if (to_string(f) == name) return f;
  }
  throw Error(ErrorKind::bad_parameter, "unknown family '" + std::string(name) + "'");
}

std::string GeneratorSpec::describe() const {
  std::string out(to_string(family));
  switch (family) {
    case Family::truncated:
    case Family::triangular:
    case Family::kronecker:
    case Family::cyclic_group:
    case Family::matrix:
      out += "(" + std::to_string(n) + ")";
      break;
    case Family::a_q:
      out += "(q=" + (q ? q->to_string() : std::string("?")) + ")";
      break;
    case Family::s3:
      break;
    case Family::random_quiver:
      out += "(seed=" + std::to_string(seed) + (quiver.radical_square_zero ? ", rsz" : "") + ")";
      break;
    case Family::random_local:
      out += "(seed=" + std::to_string(seed) + ", g=" + std::to_string(local.generators) +
             ", trunc=" + std::to_string(local.truncation) + ")";
      break;
  }
  return out + " over " + field.to_string();
}

QuiverPresentation truncated_quiver(const FieldSpec& field, std::size_t n) {
  require_range(n, 1, max_family_parameter, "truncation degree");
  QuiverPresentation q;
  q.field = field;
  q.add_vertex("v");
  if (n == 1) return q;
  const std::size_t x = q.add_arrow("x", 0, 0);
  q.add_relation({{Scalar::one(field), q.path(std::vector<std::size_t>(n, x))}});
  return q;
}

QuiverPresentation kronecker_quiver(const FieldSpec& field, std::size_t n) {
  require_range(n, 1, max_family_parameter, "number of Kronecker arrows");
  QuiverPresentation q;
  q.field = field;
  q.add_vertex("u");
  q.add_vertex("v");
  for (std::size_t i = 1; i <= n; ++i) q.add_arrow("a" + std::to_string(i), 0, 1);
  return q;
}

QuiverPresentation a_q_quiver(const FieldSpec& field, const Scalar& qv) {
  if (!(qv.field() == field)) throw Error(ErrorKind::bad_parameter, "parameter q lies in a different field");
  if (qv.is_zero() || qv.is_one()) throw Error(ErrorKind::bad_parameter, "A_q needs q outside {0, 1}");
  QuiverPresentation q;
  q.field = field;
  q.add_vertex("v");
  const std::size_t x = q.add_arrow("x", 0, 0), y = q.add_arrow("y", 0, 0);
  const Scalar one = Scalar::one(field);
  q.add_relation({{one, q.path({x, x})}});
  q.add_relation({{one, q.path({y, y})}});
  q.add_relation({{one, q.path({x, y})}, {-qv, q.path({y, x})}});
  return q;
}

CayleyTable cyclic_group_table(std::size_t n) {
  require_range(n, 1, max_family_parameter, "group order");
  CayleyTable t(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  }
  return t;
}

CayleyTable s3_table() {
  using Perm = std::array<std::size_t, 3>;
  const std::vector<Perm> perms{{0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
  CayleyTable t(6, std::vector<std::size_t>(6));
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = 0; j < 6; ++j) {
      Perm c{};
      for (std::size_t k = 0; k < 3; ++k) c[k] = perms[i][perms[j][k]];
      t[i][j] = static_cast<std::size_t>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  }
  return t;
}

Algebra truncated_polynomial(const FieldSpec& field, std::size_t n) {
  return build_path_algebra(truncated_quiver(field, n)).algebra;
}
Algebra kronecker_algebra(const FieldSpec& field, std::size_t n) {
  return build_path_algebra(kronecker_quiver(field, n)).algebra;
}
Algebra a_q_algebra(const FieldSpec& field, const Scalar& q) { return build_path_algebra(a_q_quiver(field, q)).algebra; }
Algebra triangular_algebra(const FieldSpec& field, std::size_t n) {
  require_range(n, 1, max_family_parameter, "matrix size");
  return lower_triangular_algebra(field, n);
}
Algebra cyclic_group_algebra(const FieldSpec& field, std::size_t n) {
  return group_algebra_from_cayley(field, cyclic_group_table(n));
}
Algebra s3_group_algebra(const FieldSpec& field) { return group_algebra_from_cayley(field, s3_table()); }

QuiverPresentation random_quiver_presentation(const FieldSpec& field, std::uint64_t seed, const RandomQuiverParams& params) {
  require_range(params.max_vertices, 1, 8, "max_vertices");
  require_range(params.max_arrows, 1, 12, "max_arrows");
  require_range(params.max_length, 2, 6, "max_length");
  std::mt19937_64 rng(seed);
  QuiverPresentation q;
  q.field = field;
  const std::size_t nv = 1 + rng() % params.max_vertices;
  const std::size_t min_arrows = std::min(std::max<std::size_t>(nv - 1, 1), params.max_arrows);
  const std::size_t na = min_arrows + rng() % (params.max_arrows - min_arrows + 1);
  const bool acyclic = nv > 1 && rng() % 2 == 0;
  for (std::size_t v = 0; v < nv; ++v) q.add_vertex("v" + std::to_string(v + 1));
  for (std::size_t a = 0; a < na; ++a) {
    std::size_t s, t;
    if (acyclic) {
      s = rng() % (nv - 1);
      t = s + 1 + rng() % (nv - 1 - s);
    } else {
      s = rng() % nv;
      t = rng() % nv;
    }
    q.add_arrow("a" + std::to_string(a + 1), s, t);
  }
  std::size_t bound = params.radical_square_zero ? 2 : 2 + rng() % (params.max_length - 1);
  while (bound > 2 && count_paths_below(q, bound) > 4 * params.max_dim) --bound;
  if (!params.radical_square_zero && bound > 2) {
    const std::size_t extra = rng() % 3;
    for (std::size_t r = 0; r < extra; ++r) add_random_relation(q, 2 + rng() % (bound - 2), rng);
  }
  add_all_paths(q, bound);
  return q;
}

Algebra random_quiver(const FieldSpec& field, std::uint64_t seed, const RandomQuiverParams& params) {
  std::mt19937_64 seeds(seed);
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    const std::uint64_t s = attempt == 0 ? seed : seeds();
    PathAlgebra pa = build_path_algebra(random_quiver_presentation(field, s, params));
    if (pa.algebra.dim() <= params.max_dim) return pa.algebra;
  }
  throw Error(ErrorKind::generator_failed, "no random quiver algebra within the dimension cap after 100 draws");
}

Algebra random_local(const FieldSpec& field, std::uint64_t seed, const RandomLocalParams& params) {
  require_range(params.generators, 1, 3, "number of generators");
  require_range(params.truncation, 2, 4, "truncation length");
  std::mt19937_64 rng(seed);
  const char* names[] = {"x", "y", "z"};
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    QuiverPresentation q;
    q.field = field;
    q.add_vertex("o");
    for (std::size_t g = 0; g < params.generators; ++g) q.add_arrow(names[g], 0, 0);
    if (params.truncation > 2) {
      const std::size_t extra = rng() % (params.generators * params.generators + 1);
      for (std::size_t r = 0; r < extra; ++r) add_random_relation(q, 2 + rng() % (params.truncation - 2), rng);
    }
    add_all_paths(q, params.truncation);
    PathAlgebra pa = build_path_algebra(q);
    if (pa.algebra.dim() <= params.max_dim) return pa.algebra.with_provenance({});
  }
  throw Error(ErrorKind::generator_failed, "no random local algebra within the dimension cap after 100 draws");
}

Algebra generate(const GeneratorSpec& spec) {
  const FieldSpec& f = spec.field;
  Algebra a = [&] {
    switch (spec.family) {
      case Family::truncated: return truncated_polynomial(f, spec.n);
      case Family::triangular: return triangular_algebra(f, spec.n);
      case Family::kronecker: return kronecker_algebra(f, spec.n);
      case Family::a_q:
        if (!spec.q) throw Error(ErrorKind::bad_parameter, "a_q needs the parameter q");
        return a_q_algebra(f, *spec.q);
      case Family::cyclic_group: return cyclic_group_algebra(f, spec.n);
      case Family::s3: return s3_group_algebra(f);
      case Family::matrix:
        require_range(spec.n, 1, max_family_parameter, "matrix size");
        return matrix_algebra(f, spec.n);
      case Family::random_quiver: return random_quiver(f, spec.seed, spec.quiver);
      case Family::random_local: return random_local(f, spec.seed, spec.local);
    }
    throw Error(ErrorKind::bad_parameter, "unknown family");
  }();
  return a.renamed(spec.describe());
}

std::vector<GeneratorSpec> standard_corpus() {
  std::vector<GeneratorSpec> out;
  for (const FieldSpec& f : {FieldSpec::prime(2), FieldSpec::prime(3), FieldSpec::prime(5), FieldSpec::rationals()}) {
    auto push = [&](Family fam, std::size_t n) {
      GeneratorSpec s;
      s.family = fam;
      s.field = f;
      s.n = n;
      out.push_back(s);
    };
    for (std::size_t n = 1; n <= 6; ++n) push(Family::truncated, n);
    for (std::size_t n = 1; n <= 4; ++n) push(Family::triangular, n);
    for (std::size_t n = 1; n <= 4; ++n) push(Family::kronecker, n);
    for (long long qv : {2LL, 3LL}) {
      const Scalar q = Scalar::from_integer(f, qv);
      if (q.is_zero() || q.is_one()) continue;
      GeneratorSpec s;
      s.family = Family::a_q;
      s.field = f;
      s.q = q;
      out.push_back(s);
    }
    for (std::size_t n = 2; n <= 5; ++n) push(Family::cyclic_group, n);
    push(Family::s3, 0);
    for (std::size_t n = 1; n <= 3; ++n) push(Family::matrix, n);
  }
  return out;
}

}  // namespace fdalg
