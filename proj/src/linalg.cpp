#include "fdalg/linalg.hpp"

#include <sstream>
#include <variant>

#include "echelon.hpp"
#include "fdalg/errors.hpp"

namespace fdalg {

using detail::Echelon;
using detail::ModArith;
using detail::RatArith;

Vector zero_vector(const FieldSpec& field, std::size_t n) { return Vector(n, Scalar::zero(field)); }

Vector unit_vector(const FieldSpec& field, std::size_t n, std::size_t index) {
  Vector v = zero_vector(field, n);
  v.at(index) = Scalar::one(field);
  return v;
}

Vector vector_from_integers(const FieldSpec& field, std::initializer_list<long long> values) {
  Vector v;
  v.reserve(values.size());
  for (long long x : values) v.push_back(Scalar::from_integer(field, x));
  return v;
}

bool is_zero(const Vector& v) noexcept {
  for (const auto& s : v) {
    if (!s.is_zero()) return false;
  }
  return true;
}

void axpy(Vector& y, const Scalar& a, const Vector& x) {
  if (y.size() != x.size()) throw Error(ErrorKind::ambient_mismatch, "axpy on vectors of different length");
  if (a.is_zero()) return;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!x[i].is_zero()) y[i] += a * x[i];
  }
}

Vector add(const Vector& x, const Vector& y) {
  if (x.size() != y.size()) throw Error(ErrorKind::ambient_mismatch, "vector lengths differ");
  Vector out = x;
  for (std::size_t i = 0; i < y.size(); ++i) out[i] += y[i];
  return out;
}

Vector sub(const Vector& x, const Vector& y) {
  if (x.size() != y.size()) throw Error(ErrorKind::ambient_mismatch, "vector lengths differ");
  Vector out = x;
  for (std::size_t i = 0; i < y.size(); ++i) out[i] -= y[i];
  return out;
}

Vector scaled(const Scalar& a, const Vector& x) {
  Vector out = x;
  for (auto& s : out) s *= a;
  return out;
}

std::string to_string(const Vector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  os << ')';
  return os.str();
}

Matrix::Matrix(const FieldSpec& field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(field)) {}

Matrix Matrix::identity(const FieldSpec& field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(field);
  return m;
}

Matrix Matrix::from_rows(const FieldSpec& field, std::size_t cols, const std::vector<Vector>& rows) {
  Matrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error(ErrorKind::ambient_mismatch, "row length differs from column count");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::from_columns(const FieldSpec& field, std::size_t rows, const std::vector<Vector>& columns) {
  Matrix m(field, rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw Error(ErrorKind::ambient_mismatch, "column length differs from row count");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

Matrix Matrix::from_integers(const FieldSpec& field, std::initializer_list<std::initializer_list<long long>> rows) {
  const std::size_t cols = rows.size() == 0 ? 0 : rows.begin()->size();
  Matrix m(field, rows.size(), cols);
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != cols) throw Error(ErrorKind::ambient_mismatch, "ragged integer matrix");
    std::size_t c = 0;
    for (long long x : row) m(r, c++) = Scalar::from_integer(field, x);
    ++r;
  }
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const {
  Vector v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
  return v;
}

Vector Matrix::apply(const Vector& v) const {
  if (v.size() != cols_) throw Error(ErrorKind::ambient_mismatch, "matrix-vector size mismatch");
  Vector out = zero_vector(field_, rows_);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (v[c].is_zero()) continue;
    for (std::size_t r = 0; r < rows_; ++r) {
      const Scalar& a = (*this)(r, c);
      if (!a.is_zero()) out[r] += a * v[c];
    }
  }
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

Scalar Matrix::trace() const {
  Scalar t = Scalar::zero(field_);
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

Matrix Matrix::operator*(const Matrix& other) const {
  if (cols_ != other.rows_) throw Error(ErrorKind::ambient_mismatch, "matrix product size mismatch");
  Matrix out(field_, rows_, other.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(r, k);
      if (a.is_zero()) continue;
      for (std::size_t c = 0; c < other.cols_; ++c) {
        const Scalar& b = other(k, c);
        if (!b.is_zero()) out(r, c) += a * b;
      }
    }
  }
  return out;
}

Matrix Matrix::operator+(const Matrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw Error(ErrorKind::ambient_mismatch, "matrix sum size mismatch");
  Matrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += other.data_[i];
  return out;
}

Matrix Matrix::operator-(const Matrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw Error(ErrorKind::ambient_mismatch, "matrix difference size mismatch");
  Matrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= other.data_[i];
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

RrefResult rref(const Matrix& m) {
  return detail::with_arith(m.field(), [&](auto arith) {
    Echelon<decltype(arith)> ech(arith, m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) ech.insert(ech.convert(m.row(r)));
    Matrix reduced(m.field(), m.rows(), m.cols());
    for (std::size_t r = 0; r < ech.rank(); ++r) {
      const auto& row = ech.rows()[r];
      for (std::size_t c = 0; c < m.cols(); ++c) reduced(r, c) = arith.to(row[c]);
    }
    return RrefResult{std::move(reduced), ech.rank(), ech.pivots()};
  });
}

std::size_t rank(const Matrix& m) {
  return detail::with_arith(m.field(), [&](auto arith) {
    Echelon<decltype(arith)> ech(arith, m.cols());
    for (std::size_t r = 0; r < m.rows() && ech.rank() < m.cols(); ++r) ech.insert(ech.convert(m.row(r)));
    return ech.rank();
  });
}

std::optional<Vector> solve(const Matrix& m, const Vector& rhs) {
  if (rhs.size() != m.rows()) throw Error(ErrorKind::ambient_mismatch, "right-hand side length differs from row count");
  Matrix aug(m.field(), m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = rhs[r];
  }
  RrefResult red = rref(aug);
  Vector x = zero_vector(m.field(), m.cols());
  for (std::size_t i = 0; i < red.rank; ++i) {
    if (red.pivots[i] == m.cols()) return std::nullopt;
    x[red.pivots[i]] = red.reduced(i, m.cols());
  }
  return x;
}

// ---------------------------------------------------------------------------
// Subspace

Subspace::Subspace(const FieldSpec& field, std::size_t ambient) : field_(field), ambient_(ambient) {}

Subspace Subspace::full(const FieldSpec& field, std::size_t ambient) {
  Subspace s(field, ambient);
  for (std::size_t i = 0; i < ambient; ++i) {
    s.basis_.push_back(unit_vector(field, ambient, i));
    s.pivots_.push_back(i);
  }
  return s;
}

Subspace Subspace::span(const FieldSpec& field, std::size_t ambient, const std::vector<Vector>& vectors) {
  SpanBuilder builder(field, ambient);
  for (const auto& v : vectors) {
    if (v.size() != ambient) throw Error(ErrorKind::ambient_mismatch, "spanning vector has wrong length");
    if (builder.full()) break;
    builder.add(v);
  }
  return builder.build();
}

Matrix Subspace::basis_matrix() const { return Matrix::from_rows(field_, ambient_, basis_); }

std::vector<std::size_t> Subspace::free_coordinates() const {
  std::vector<std::size_t> out;
  std::size_t k = 0;
  for (std::size_t c = 0; c < ambient_; ++c) {
    if (k < pivots_.size() && pivots_[k] == c) {
      ++k;
    } else {
      out.push_back(c);
    }
  }
  return out;
}

Vector Subspace::reduce(const Vector& v) const {
  if (v.size() != ambient_) throw Error(ErrorKind::ambient_mismatch, "vector length differs from ambient dimension");
  Vector out = v;
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    const Scalar f = out[pivots_[k]];
    if (f.is_zero()) continue;
    const Vector& row = basis_[k];
    for (std::size_t j = pivots_[k]; j < ambient_; ++j) {
      if (!row[j].is_zero()) out[j] -= f * row[j];
    }
  }
  return out;
}

bool Subspace::contains(const Vector& v) const { return fdalg::is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_ || !(other.field_ == field_)) {
    throw Error(ErrorKind::ambient_mismatch, "subspaces live in different ambient spaces");
  }
  for (const auto& v : other.basis_) {
    if (!contains(v)) return false;
  }
  return true;
}

Vector Subspace::coordinates(const Vector& v) const {
  if (!contains(v)) throw Error(ErrorKind::bad_parameter, "vector is not a member of the subspace");
  Vector out;
  out.reserve(pivots_.size());
  for (std::size_t c : pivots_) out.push_back(v[c]);
  return out;
}

bool operator==(const Subspace& a, const Subspace& b) {
  return a.field_ == b.field_ && a.ambient_ == b.ambient_ && a.pivots_ == b.pivots_ && a.basis_ == b.basis_;
}

Subspace kernel(const Matrix& m) {
  RrefResult red = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : red.pivots) is_pivot[c] = true;
  std::vector<Vector> gens;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v = zero_vector(m.field(), m.cols());
    v[f] = Scalar::one(m.field());
    for (std::size_t i = 0; i < red.rank; ++i) v[red.pivots[i]] = -red.reduced(i, f);
    gens.push_back(std::move(v));
  }
  return Subspace::span(m.field(), m.cols(), gens);
}

namespace {
void check_compatible(const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim() || !(u.field() == v.field())) {
    throw Error(ErrorKind::ambient_mismatch, "subspaces live in different ambient spaces");
  }
}
}  // namespace

Subspace subspace_sum(const Subspace& u, const Subspace& v) {
  check_compatible(u, v);
  SpanBuilder builder(u);
  for (const auto& x : v.basis()) {
    if (builder.full()) break;
    builder.add(x);
  }
  return builder.build();
}

Subspace subspace_intersect(const Subspace& u, const Subspace& v) {
  check_compatible(u, v);
  const std::size_t r = u.dim(), s = v.dim();
  if (r == 0 || s == 0) return Subspace(u.field(), u.ambient_dim());
  // Kernel of [U^T | -V^T] gives coefficient pairs with sum(a u) = sum(b v).
  std::vector<Vector> cols;
  cols.reserve(r + s);
  for (const auto& x : u.basis()) cols.push_back(x);
  for (const auto& x : v.basis()) cols.push_back(scaled(-Scalar::one(u.field()), x));
  Subspace coeffs = kernel(Matrix::from_columns(u.field(), u.ambient_dim(), cols));
  std::vector<Vector> gens;
  for (const auto& c : coeffs.basis()) {
    Vector w = zero_vector(u.field(), u.ambient_dim());
    for (std::size_t i = 0; i < r; ++i) axpy(w, c[i], u.basis()[i]);
    gens.push_back(std::move(w));
  }
  return Subspace::span(u.field(), u.ambient_dim(), gens);
}

// ---------------------------------------------------------------------------
// SpanBuilder

struct SpanBuilder::Impl {
  std::variant<Echelon<ModArith>, Echelon<RatArith>> state;
};

SpanBuilder::SpanBuilder(const FieldSpec& field, std::size_t ambient) : field_(field), ambient_(ambient) {
  if (field.is_prime()) {
    impl_ = std::make_unique<Impl>(Impl{Echelon<ModArith>(ModArith(field), ambient)});
  } else {
    impl_ = std::make_unique<Impl>(Impl{Echelon<RatArith>(RatArith(field), ambient)});
  }
}

SpanBuilder::SpanBuilder(const Subspace& start) : SpanBuilder(start.field(), start.ambient_dim()) {
  for (const auto& v : start.basis()) add(v);
}

SpanBuilder::SpanBuilder(SpanBuilder&&) noexcept = default;
SpanBuilder& SpanBuilder::operator=(SpanBuilder&&) noexcept = default;
SpanBuilder::~SpanBuilder() = default;

bool SpanBuilder::add(const Vector& v) {
  if (v.size() != ambient_) throw Error(ErrorKind::ambient_mismatch, "vector length differs from ambient dimension");
  return std::visit([&](auto& ech) { return ech.insert(ech.convert(v)); }, impl_->state);
}

bool SpanBuilder::contains(const Vector& v) const {
  if (v.size() != ambient_) throw Error(ErrorKind::ambient_mismatch, "vector length differs from ambient dimension");
  return std::visit([&](const auto& ech) { return ech.in_span(ech.convert(v)); }, impl_->state);
}

std::size_t SpanBuilder::rank() const noexcept {
  return std::visit([](const auto& ech) { return ech.rank(); }, impl_->state);
}

Subspace SpanBuilder::build() const {
  Subspace out(field_, ambient_);
  std::visit(
      [&](const auto& ech) {
        for (const auto& row : ech.rows()) out.basis_.push_back(ech.export_row(row));
        out.pivots_ = ech.pivots();
      },
      impl_->state);
  return out;
}

}  // namespace fdalg
