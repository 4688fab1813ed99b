#include "fdalg/algebra.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "fdalg/errors.hpp"

namespace fdalg {

struct Algebra::Data {
  FieldSpec field;
  std::size_t dim;
  std::vector<std::vector<ProductTerm>> products;
  Vector unit;
  Provenance provenance;
  std::string name;
};

Algebra Algebra::from_products(const FieldSpec& field, std::size_t dim, const std::vector<Vector>& products,
                               Vector unit, Provenance provenance, std::string name) {
  if (dim == 0) throw Error(ErrorKind::invalid_algebra, "algebra dimension must be positive");
  if (products.size() != dim * dim) throw Error(ErrorKind::invalid_algebra, "expected dim^2 basis products");
  if (unit.size() != dim) throw Error(ErrorKind::invalid_algebra, "unit has wrong length");
  auto data = std::make_shared<Data>(Data{field, dim, {}, std::move(unit), std::move(provenance), std::move(name)});
  data->products.resize(dim * dim);
  for (std::size_t ij = 0; ij < dim * dim; ++ij) {
    if (products[ij].size() != dim) throw Error(ErrorKind::invalid_algebra, "basis product has wrong length");
    for (std::size_t k = 0; k < dim; ++k) {
      if (!products[ij][k].is_zero()) data->products[ij].push_back({k, products[ij][k]});
    }
  }
  return Algebra(std::move(data));
}

Algebra Algebra::from_terms(const FieldSpec& field, std::size_t dim, std::vector<std::vector<ProductTerm>> terms,
                            Vector unit, Provenance provenance, std::string name) {
  if (dim == 0) throw Error(ErrorKind::invalid_algebra, "algebra dimension must be positive");
  if (terms.size() != dim * dim) throw Error(ErrorKind::invalid_algebra, "expected dim^2 basis products");
  if (unit.size() != dim) throw Error(ErrorKind::invalid_algebra, "unit has wrong length");
  for (auto& list : terms) {
    std::sort(list.begin(), list.end(), [](const ProductTerm& x, const ProductTerm& y) { return x.index < y.index; });
    std::vector<ProductTerm> merged;
    for (auto& t : list) {
      if (t.index >= dim) throw Error(ErrorKind::invalid_algebra, "structure constant index out of range");
      if (!merged.empty() && merged.back().index == t.index) merged.back().coeff += t.coeff;
      else merged.push_back(std::move(t));
    }
    std::erase_if(merged, [](const ProductTerm& t) { return t.coeff.is_zero(); });
    list = std::move(merged);
  }
  return Algebra(std::make_shared<Data>(
      Data{field, dim, std::move(terms), std::move(unit), std::move(provenance), std::move(name)}));
}

const FieldSpec& Algebra::field() const noexcept { return data_->field; }
std::size_t Algebra::dim() const noexcept { return data_->dim; }
const Vector& Algebra::unit() const noexcept { return data_->unit; }
const Provenance& Algebra::provenance() const noexcept { return data_->provenance; }
const std::string& Algebra::name() const noexcept { return data_->name; }

const std::vector<ProductTerm>& Algebra::basis_product(std::size_t i, std::size_t j) const {
  return data_->products.at(i * data_->dim + j);
}

Vector Algebra::basis_product_vector(std::size_t i, std::size_t j) const {
  Vector v = zero();
  for (const auto& t : basis_product(i, j)) v[t.index] = t.coeff;
  return v;
}

Scalar Algebra::structure_constant(std::size_t i, std::size_t j, std::size_t k) const {
  for (const auto& t : basis_product(i, j)) {
    if (t.index == k) return t.coeff;
  }
  return Scalar::zero(field());
}

Vector Algebra::basis_vector(std::size_t i) const { return unit_vector(field(), dim(), i); }
Vector Algebra::zero() const { return zero_vector(field(), dim()); }

Vector Algebra::multiply(const Vector& x, const Vector& y) const {
  const std::size_t d = dim();
  if (x.size() != d || y.size() != d) throw Error(ErrorKind::ambient_mismatch, "element length differs from algebra dimension");
  std::vector<std::size_t> nx, ny;
  for (std::size_t i = 0; i < d; ++i) {
    if (!x[i].is_zero()) nx.push_back(i);
    if (!y[i].is_zero()) ny.push_back(i);
  }
  Vector out = zero();
  for (std::size_t i : nx) {
    for (std::size_t j : ny) {
      const auto& terms = data_->products[i * d + j];
      if (terms.empty()) continue;
      const Scalar s = x[i] * y[j];
      for (const auto& t : terms) out[t.index] += s * t.coeff;
    }
  }
  return out;
}

Vector Algebra::power(const Vector& x, std::uint64_t exponent) const {
  Vector result = unit();
  Vector base = x;
  while (exponent != 0) {
    if (exponent & 1) result = multiply(result, base);
    exponent >>= 1;
    if (exponent != 0) base = multiply(base, base);
  }
  return result;
}

Vector Algebra::commutator(const Vector& x, const Vector& y) const { return sub(multiply(x, y), multiply(y, x)); }

Matrix Algebra::left_regular(const Vector& x) const {
  const std::size_t d = dim();
  Matrix m(field(), d, d);
  for (std::size_t i = 0; i < d; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < d; ++j) {
      for (const auto& t : data_->products[i * d + j]) m(t.index, j) += x[i] * t.coeff;
    }
  }
  return m;
}

Matrix Algebra::right_regular(const Vector& x) const {
  const std::size_t d = dim();
  Matrix m(field(), d, d);
  for (std::size_t i = 0; i < d; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < d; ++j) {
      for (const auto& t : data_->products[j * d + i]) m(t.index, j) += x[i] * t.coeff;
    }
  }
  return m;
}

bool Algebra::is_commutative() const {
  const std::size_t d = dim();
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      const auto& a = data_->products[i * d + j];
      const auto& b = data_->products[j * d + i];
      if (a.size() != b.size()) return false;
      for (std::size_t t = 0; t < a.size(); ++t) {
        if (a[t].index != b[t].index || !(a[t].coeff == b[t].coeff)) return false;
      }
    }
  }
  return true;
}

Algebra Algebra::with_provenance(Provenance provenance) const {
  auto data = std::make_shared<Data>(*data_);
  data->provenance = std::move(provenance);
  return Algebra(std::move(data));
}

Algebra Algebra::renamed(std::string name) const {
  auto data = std::make_shared<Data>(*data_);
  data->name = std::move(name);
  return Algebra(std::move(data));
}

// ---------------------------------------------------------------------------
// Element

Element::Element(Algebra parent, Vector coords) : parent_(std::move(parent)), coords_(std::move(coords)) {
  if (coords_.size() != parent_.dim()) throw Error(ErrorKind::ambient_mismatch, "element length differs from algebra dimension");
}

namespace {
void require_same_parent(const Element& x, const Element& y) {
  if (!x.parent().same_as(y.parent())) throw Error(ErrorKind::parent_mismatch, "elements belong to different algebras");
}
}  // namespace

Element operator*(const Element& x, const Element& y) {
  require_same_parent(x, y);
  return Element(x.parent_, x.parent_.multiply(x.coords_, y.coords_));
}

Element operator+(const Element& x, const Element& y) {
  require_same_parent(x, y);
  return Element(x.parent_, add(x.coords_, y.coords_));
}

Element operator-(const Element& x, const Element& y) {
  require_same_parent(x, y);
  return Element(x.parent_, sub(x.coords_, y.coords_));
}

Element operator*(const Scalar& a, const Element& x) { return Element(x.parent_, scaled(a, x.coords_)); }

bool operator==(const Element& x, const Element& y) {
  return x.parent_.same_as(y.parent_) && x.coords_ == y.coords_;
}

Element unit_element(const Algebra& a) { return Element(a, a.unit()); }

Element multiply(const Algebra& a, const Element& x, const Element& y) {
  if (!x.parent().same_as(a) || !y.parent().same_as(a)) {
    throw Error(ErrorKind::parent_mismatch, "element does not belong to this algebra");
  }
  return x * y;
}

Matrix left_regular(const Algebra& a, const Element& x) {
  if (!x.parent().same_as(a)) throw Error(ErrorKind::parent_mismatch, "element does not belong to this algebra");
  return a.left_regular(x.coords());
}

Matrix right_regular(const Algebra& a, const Element& x) {
  if (!x.parent().same_as(a)) throw Error(ErrorKind::parent_mismatch, "element does not belong to this algebra");
  return a.right_regular(x.coords());
}

// ---------------------------------------------------------------------------
// Validation and elementary subspaces

namespace {

bool associative_at(const Algebra& a, std::size_t i, std::size_t j, std::size_t k) {
  const std::size_t d = a.dim();
  Vector lhs = a.zero(), rhs = a.zero();
  for (const auto& t : a.basis_product(i, j)) {
    for (const auto& u : a.basis_product(t.index, k)) lhs[u.index] += t.coeff * u.coeff;
  }
  for (const auto& t : a.basis_product(j, k)) {
    for (const auto& u : a.basis_product(i, t.index)) rhs[u.index] += t.coeff * u.coeff;
  }
  (void)d;
  return lhs == rhs;
}

}  // namespace

ValidationReport validate(const Algebra& a, ValidationMode mode, std::uint64_t seed) {
  ValidationReport report;
  const std::size_t d = a.dim();
  for (std::size_t i = 0; i < d; ++i) {
    const Vector b = a.basis_vector(i);
    if (a.multiply(a.unit(), b) != b || a.multiply(b, a.unit()) != b) report.unit_failures.push_back(i);
  }
  const bool full = mode == ValidationMode::full || (mode == ValidationMode::automatic && d <= 64);
  report.full = full;
  if (full) {
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t k = 0; k < d; ++k) {
          if (!associative_at(a, i, j, k)) report.associativity_failures.push_back({i, j, k});
        }
      }
    }
  } else {
    std::mt19937_64 rng(seed);
    for (int t = 0; t < 4096; ++t) {
      std::size_t i = rng() % d, j = rng() % d, k = rng() % d;
      if (!associative_at(a, i, j, k)) report.associativity_failures.push_back({i, j, k});
    }
  }
  return report;
}

Subspace center(const Algebra& a) {
  const std::size_t d = a.dim();
  // Rows (i, k) of the stacked maps L_{b_i} - R_{b_i}.
  std::vector<Vector> rows;
  rows.reserve(d * d);
  for (std::size_t i = 0; i < d; ++i) {
    std::vector<Vector> block(d, a.zero());
    for (std::size_t j = 0; j < d; ++j) {
      for (const auto& t : a.basis_product(i, j)) block[t.index][j] += t.coeff;
      for (const auto& t : a.basis_product(j, i)) block[t.index][j] -= t.coeff;
    }
    for (auto& r : block) rows.push_back(std::move(r));
  }
  // Reduce the row space first; the kernel only depends on it.
  Subspace row_space = Subspace::span(a.field(), d, rows);
  if (row_space.is_zero()) return Subspace::full(a.field(), d);
  return kernel(row_space.basis_matrix());
}

std::size_t k_star(const Algebra& a) { return center(a).dim(); }

Subspace product_space(const Algebra& a, const Subspace& u, const Subspace& v) {
  SpanBuilder builder(a.field(), a.dim());
  for (const auto& x : u.basis()) {
    for (const auto& y : v.basis()) {
      if (builder.full()) return builder.build();
      builder.add(a.multiply(x, y));
    }
  }
  return builder.build();
}

Subspace sandwich(const Algebra& a, const Vector& e, const Subspace& x, const Vector& f) {
  SpanBuilder builder(a.field(), a.dim());
  for (const auto& v : x.basis()) builder.add(a.multiply(a.multiply(e, v), f));
  return builder.build();
}

bool is_idempotent(const Algebra& a, const Vector& e) { return a.multiply(e, e) == e; }

bool is_two_sided_ideal(const Algebra& a, const Subspace& s) {
  for (const auto& v : s.basis()) {
    for (std::size_t i = 0; i < a.dim(); ++i) {
      const Vector b = a.basis_vector(i);
      if (!s.contains(a.multiply(b, v)) || !s.contains(a.multiply(v, b))) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Constructions

std::vector<std::vector<std::size_t>> conjugacy_classes(const CayleyTable& table) {
  const std::size_t n = table.size();
  std::vector<std::size_t> inverse(n);
  for (std::size_t h = 0; h < n; ++h) {
    for (std::size_t j = 0; j < n; ++j) {
      if (table[h][j] == 0) inverse[h] = j;
    }
  }
  std::vector<bool> seen(n, false);
  std::vector<std::vector<std::size_t>> classes;
  for (std::size_t g = 0; g < n; ++g) {
    if (seen[g]) continue;
    std::set<std::size_t> cls;
    for (std::size_t h = 0; h < n; ++h) cls.insert(table[table[h][g]][inverse[h]]);
    for (std::size_t x : cls) seen[x] = true;
    classes.emplace_back(cls.begin(), cls.end());
  }
  return classes;
}

Algebra group_algebra_from_cayley(const FieldSpec& field, const CayleyTable& table) {
  const std::size_t n = table.size();
  auto fail = [](const std::string& msg) { return Error(ErrorKind::not_a_group, msg); };
  if (n == 0) throw fail("empty Cayley table");
  for (std::size_t i = 0; i < n; ++i) {
    if (table[i].size() != n) throw fail("row " + std::to_string(i) + " has " + std::to_string(table[i].size()) + " entries");
    for (std::size_t x : table[i]) {
      if (x >= n) throw fail("entry " + std::to_string(x) + " out of range in row " + std::to_string(i));
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (table[0][i] != i || table[i][0] != i) throw fail("identity axiom: element 0 is not a two-sided identity");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (table[table[i][j]][k] != table[i][table[j][k]]) {
          throw fail("associativity axiom fails at (" + std::to_string(i) + ", " + std::to_string(j) + ", " +
                     std::to_string(k) + ")");
        }
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    bool left = false, right = false;
    for (std::size_t j = 0; j < n; ++j) {
      right = right || table[i][j] == 0;
      left = left || table[j][i] == 0;
    }
    if (!left || !right) throw fail("inverse axiom: element " + std::to_string(i) + " has no inverse");
  }
  std::vector<Vector> products;
  products.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) products.push_back(unit_vector(field, n, table[i][j]));
  }
  GroupProvenance prov{n, conjugacy_classes(table)};
  return Algebra::from_products(field, n, products, unit_vector(field, n, 0), std::move(prov));
}

Algebra matrix_algebra(const FieldSpec& field, std::size_t n) {
  if (n == 0) throw Error(ErrorKind::bad_parameter, "matrix size must be positive");
  const std::size_t d = n * n;
  std::vector<std::vector<ProductTerm>> terms(d * d);
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = 0; b < d; ++b) {
      const std::size_t i = a / n, j = a % n, k = b / n, l = b % n;
      if (j == k) terms[a * d + b].push_back({i * n + l, Scalar::one(field)});
    }
  }
  Vector unit = zero_vector(field, d);
  for (std::size_t i = 0; i < n; ++i) unit[i * n + i] = Scalar::one(field);
  return Algebra::from_terms(field, d, std::move(terms), std::move(unit));
}

Algebra lower_triangular_algebra(const FieldSpec& field, std::size_t n) {
  if (n == 0) throw Error(ErrorKind::bad_parameter, "matrix size must be positive");
  std::vector<std::pair<std::size_t, std::size_t>> units;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= i; ++j) units.emplace_back(i, j);
  }
  const std::size_t d = units.size();
  auto index_of = [&](std::size_t i, std::size_t j) {
    return static_cast<std::size_t>(std::find(units.begin(), units.end(), std::make_pair(i, j)) - units.begin());
  };
  std::vector<Vector> products;
  products.reserve(d * d);
  for (const auto& [i, j] : units) {
    for (const auto& [k, l] : units) {
      products.push_back(j == k ? unit_vector(field, d, index_of(i, l)) : zero_vector(field, d));
    }
  }
  Vector unit = zero_vector(field, d);
  for (std::size_t i = 0; i < n; ++i) unit[index_of(i, i)] = Scalar::one(field);
  return Algebra::from_products(field, d, products, std::move(unit));
}

Algebra direct_sum(const Algebra& a, const Algebra& b) {
  if (!(a.field() == b.field())) throw Error(ErrorKind::bad_parameter, "direct sum of algebras over different fields");
  const std::size_t da = a.dim(), db = b.dim(), d = da + db;
  const FieldSpec& f = a.field();
  std::vector<Vector> products;
  products.reserve(d * d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      Vector v = zero_vector(f, d);
      if (i < da && j < da) {
        for (const auto& t : a.basis_product(i, j)) v[t.index] = t.coeff;
      } else if (i >= da && j >= da) {
        for (const auto& t : b.basis_product(i - da, j - da)) v[da + t.index] = t.coeff;
      }
      products.push_back(std::move(v));
    }
  }
  Vector unit = a.unit();
  unit.insert(unit.end(), b.unit().begin(), b.unit().end());
  return Algebra::from_products(f, d, products, std::move(unit));
}

Vector Corner::to_parent(const Vector& coords) const {
  Vector v = zero_vector(image.field(), image.ambient_dim());
  for (std::size_t k = 0; k < coords.size(); ++k) axpy(v, coords[k], image.basis()[k]);
  return v;
}

Corner corner(const Algebra& a, const Vector& e) {
  if (!is_idempotent(a, e)) throw Error(ErrorKind::not_idempotent, "corner requires an idempotent");
  Subspace image = sandwich(a, e, Subspace::full(a.field(), a.dim()), e);
  if (image.is_zero()) throw Error(ErrorKind::not_idempotent, "corner of the zero idempotent");
  const std::size_t m = image.dim();
  std::vector<Vector> products;
  products.reserve(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) products.push_back(image.coordinates(a.multiply(image.basis()[i], image.basis()[j])));
  }
  Vector unit = image.coordinates(e);
  Algebra alg = Algebra::from_products(a.field(), m, products, std::move(unit));
  return Corner{std::move(alg), std::move(image), e};
}

Vector Quotient::project(const Vector& v) const {
  Vector r = ideal.reduce(v);
  Vector out;
  out.reserve(representatives.size());
  for (std::size_t c : representatives) out.push_back(r[c]);
  return out;
}

Vector Quotient::lift(const Vector& coords) const {
  Vector v = zero_vector(ideal.field(), ideal.ambient_dim());
  for (std::size_t k = 0; k < representatives.size(); ++k) v[representatives[k]] = coords[k];
  return v;
}

Quotient quotient(const Algebra& a, const Subspace& ideal) {
  std::vector<std::size_t> reps = ideal.free_coordinates();
  if (reps.empty()) throw Error(ErrorKind::bad_parameter, "quotient by the whole algebra");
  const std::size_t m = reps.size();
  Quotient q{a, ideal, reps};
  std::vector<Vector> products;
  products.reserve(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) products.push_back(q.project(a.basis_product_vector(reps[i], reps[j])));
  }
  q.algebra = Algebra::from_products(a.field(), m, products, q.project(a.unit()));
  return q;
}

}  // namespace fdalg
