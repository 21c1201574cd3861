#include "hopfgal/linalg.hpp"

#include <algorithm>
#include <utility>

namespace hopfgal {

// ---------------------------------------------------------------- Matrix

Matrix::Matrix(const BaseRing& ring, std::size_t rows, std::size_t cols)
    : ring_(ring), rows_(rows), cols_(cols), data_(rows * cols, ring.zero()) {}

Matrix Matrix::identity(const BaseRing& ring, std::size_t n) {
    Matrix m(ring, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = ring.one();
    return m;
}

std::vector<BaseElement> Matrix::column(std::size_t j) const {
    std::vector<BaseElement> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out.push_back((*this)(i, j));
    return out;
}

void Matrix::set_column(std::size_t j, const std::vector<BaseElement>& v) {
    if (v.size() != rows_) throw Error(ErrorKind::DimensionMismatch, "column length");
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

std::vector<BaseElement> Matrix::operator*(const std::vector<BaseElement>& v) const {
    if (v.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "matrix-vector product");
    std::vector<BaseElement> out(rows_, ring_.zero());
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            const BaseElement& a = (*this)(i, j);
            if (!a.is_zero() && !v[j].is_zero()) out[i] += a * v[j];
        }
    return out;
}

Matrix Matrix::operator*(const Matrix& other) const {
    if (cols_ != other.rows_) throw Error(ErrorKind::DimensionMismatch, "matrix product");
    if (ring_ != other.ring_) throw Error(ErrorKind::RingMismatch, "matrix product over different rings");
    Matrix out(ring_, rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const BaseElement& a = (*this)(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < other.cols_; ++j)
                if (!other(k, j).is_zero()) out(i, j) += a * other(k, j);
        }
    return out;
}

bool Matrix::operator==(const Matrix& other) const {
    return ring_ == other.ring_ && rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
}

std::size_t Matrix::depth() const {
    std::size_t d = 0;
    for (const BaseElement& e : data_) d = std::max(d, e.depth());
    return d;
}

// ---------------------------------------------------------------- elimination kernels

namespace {

struct PrimeOps {
    using T = std::int64_t;
    std::int64_t p;
    T zero() const { return 0; }
    T one() const { return 1; }
    bool is_zero(T a) const { return a == 0; }
    T add(T a, T b) const { return (a + b) % p; }
    T sub(T a, T b) const { return ((a - b) % p + p) % p; }
    T mul(T a, T b) const { return static_cast<T>((static_cast<__int128>(a) * b) % p); }
    T inv(T a) const {
        T r = 1, base = a, e = p - 2;
        while (e > 0) {
            if (e & 1) r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }
    T from(const Scalar& s) const { return s.residue(); }
    Scalar to(const Field& k, T a) const { return Scalar::make_residue(k, a); }
};

struct ScalarOps {
    using T = Scalar;
    Field k;
    T zero() const { return k.zero(); }
    T one() const { return k.one(); }
    bool is_zero(const T& a) const { return a.is_zero(); }
    T add(const T& a, const T& b) const { return a + b; }
    T sub(const T& a, const T& b) const { return a - b; }
    T mul(const T& a, const T& b) const { return a * b; }
    T inv(const T& a) const { return a.inverse(); }
    T from(const Scalar& s) const { return s; }
    Scalar to(const Field&, const T& a) const { return a; }
};

template <class Ops>
struct Reduced {
    std::vector<typename Ops::T> a;  // row-major, rows x (cols + extra)
    std::vector<std::size_t> pivots;
    typename Ops::T det;
};

// Reduced row echelon form of [M | extra columns]; pivots only among the first
// `cols` columns. `det` is the determinant when M is square and of full rank.
template <class Ops>
Reduced<Ops> rref(const Ops& ops, std::vector<typename Ops::T> a, std::size_t rows, std::size_t cols,
                  std::size_t width) {
    using T = typename Ops::T;
    Reduced<Ops> out{std::move(a), {}, ops.one()};
    auto at = [&](std::size_t i, std::size_t j) -> T& { return out.a[i * width + j]; };
    std::size_t r = 0;
    bool negate = false;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && ops.is_zero(at(piv, c))) ++piv;
        if (piv == rows) continue;
        if (piv != r) {
            for (std::size_t j = 0; j < width; ++j) std::swap(at(piv, j), at(r, j));
            negate = !negate;
        }
        const T pv = at(r, c);
        out.det = ops.mul(out.det, pv);
        const T inv = ops.inv(pv);
        for (std::size_t j = c; j < width; ++j) at(r, j) = ops.mul(at(r, j), inv);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || ops.is_zero(at(i, c))) continue;
            const T f = at(i, c);
            for (std::size_t j = c; j < width; ++j)
                if (!ops.is_zero(at(r, j))) at(i, j) = ops.sub(at(i, j), ops.mul(f, at(r, j)));
        }
        out.pivots.push_back(c);
        ++r;
    }
    if (negate) out.det = ops.sub(ops.zero(), out.det);
    return out;
}

template <class Ops>
std::vector<typename Ops::T> convert(const Ops& ops, const ScalarMatrix& m, const std::vector<Scalar>* rhs) {
    const std::size_t width = m.cols() + (rhs ? 1 : 0);
    std::vector<typename Ops::T> a;
    a.reserve(m.rows() * width);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) a.push_back(ops.from(m(i, j)));
        if (rhs) a.push_back(ops.from((*rhs)[i]));
    }
    return a;
}

template <class Ops>
Scalar det_impl(const Ops& ops, const ScalarMatrix& m) {
    auto red = rref(ops, convert(ops, m, nullptr), m.rows(), m.cols(), m.cols());
    if (red.pivots.size() < m.rows()) return m.field().zero();
    return ops.to(m.field(), red.det);
}

template <class Ops>
std::vector<std::vector<Scalar>> kernel_impl(const Ops& ops, const ScalarMatrix& m) {
    const std::size_t n = m.cols();
    auto red = rref(ops, convert(ops, m, nullptr), m.rows(), n, n);
    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : red.pivots) is_pivot[c] = true;
    std::vector<std::vector<Scalar>> basis;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Scalar> v(n, m.field().zero());
        v[f] = m.field().one();
        for (std::size_t r = 0; r < red.pivots.size(); ++r)
            v[red.pivots[r]] = ops.to(m.field(), ops.sub(ops.zero(), red.a[r * n + f]));
        basis.push_back(std::move(v));
    }
    return basis;
}

template <class Ops>
std::optional<std::vector<Scalar>> solve_impl(const Ops& ops, const ScalarMatrix& m, const std::vector<Scalar>& b) {
    const std::size_t n = m.cols(), width = n + 1;
    auto red = rref(ops, convert(ops, m, &b), m.rows(), n, width);
    for (std::size_t r = red.pivots.size(); r < m.rows(); ++r)
        if (!ops.is_zero(red.a[r * width + n])) return std::nullopt;
    std::vector<Scalar> x(n, m.field().zero());
    for (std::size_t r = 0; r < red.pivots.size(); ++r) x[red.pivots[r]] = ops.to(m.field(), red.a[r * width + n]);
    return x;
}

template <class F>
auto dispatch(const Field& k, F&& f) {
    if (k.kind() == FieldKind::Prime) return f(PrimeOps{k.characteristic()});
    return f(ScalarOps{k});
}

bool all_constant(const Matrix& m) { return m.depth() == 0; }

ScalarMatrix to_scalar(const Matrix& m) {
    ScalarMatrix s(m.ring().field(), m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) s(i, j) = *m(i, j).constant_value();
    return s;
}

void require_square(const Matrix& m) {
    if (!m.is_square()) throw Error(ErrorKind::DimensionMismatch, "square matrix required");
}

}  // namespace

// ---------------------------------------------------------------- ring matrices

std::vector<BaseElement> characteristic_polynomial(const Matrix& m) {
    require_square(m);
    const BaseRing& R = m.ring();
    const std::size_t n = m.rows();
    // Berkowitz; p holds coefficients highest degree first.
    std::vector<BaseElement> p{R.one()};
    for (std::size_t r = 0; r < n; ++r) {
        // t = [1, -a, -R S, -R A S, ..., -R A^{r-1} S]
        std::vector<BaseElement> t;
        t.reserve(r + 2);
        t.push_back(R.one());
        t.push_back(-m(r, r));
        std::vector<BaseElement> v(r, R.zero());
        for (std::size_t i = 0; i < r; ++i) v[i] = m(i, r);
        for (std::size_t k = 0; k < r; ++k) {
            BaseElement dot = R.zero();
            for (std::size_t i = 0; i < r; ++i)
                if (!m(r, i).is_zero() && !v[i].is_zero()) dot += m(r, i) * v[i];
            t.push_back(-dot);
            if (k + 1 < r) {
                std::vector<BaseElement> w(r, R.zero());
                for (std::size_t i = 0; i < r; ++i)
                    for (std::size_t j = 0; j < r; ++j)
                        if (!m(i, j).is_zero() && !v[j].is_zero()) w[i] += m(i, j) * v[j];
                v = std::move(w);
            }
        }
        std::vector<BaseElement> q(r + 2, R.zero());
        for (std::size_t i = 0; i < r + 2; ++i)
            for (std::size_t j = 0; j <= std::min(i, r); ++j)
                if (!t[i - j].is_zero() && !p[j].is_zero()) q[i] += t[i - j] * p[j];
        p = std::move(q);
    }
    std::reverse(p.begin(), p.end());
    return p;
}

BaseElement determinant(const Matrix& m) {
    require_square(m);
    if (m.rows() == 0) return m.ring().one();
    if (all_constant(m)) return m.ring().constant(determinant(to_scalar(m)));
    BaseElement c0 = characteristic_polynomial(m).front();
    return m.rows() % 2 == 0 ? c0 : -c0;
}

std::optional<std::vector<BaseElement>> solve_unit_determinant(const Matrix& m, const std::vector<BaseElement>& b) {
    require_square(m);
    if (b.size() != m.rows()) throw Error(ErrorKind::DimensionMismatch, "right-hand side length");
    const BaseRing& R = m.ring();
    const std::size_t n = m.rows();
    if (n == 0) return std::vector<BaseElement>{};
    const bool rhs_constant = std::all_of(b.begin(), b.end(), [](const BaseElement& e) { return e.depth() == 0; });
    if (all_constant(m) && rhs_constant) {
        ScalarMatrix s = to_scalar(m);
        if (determinant(s).is_zero()) return std::nullopt;
        std::vector<Scalar> rhs;
        for (const BaseElement& e : b) rhs.push_back(*e.constant_value());
        auto x = solve(std::move(s), std::move(rhs));
        std::vector<BaseElement> out;
        for (const Scalar& c : *x) out.push_back(R.constant(c));
        return out;
    }
    // Cayley-Hamilton: x = -c0^{-1} sum_{k>=1} c_k M^{k-1} b.
    const auto c = characteristic_polynomial(m);
    const auto c0_inv = try_inverse(c[0]);
    if (!c0_inv) return std::nullopt;
    std::vector<BaseElement> y = b;
    for (auto& e : y) e *= c[n];
    for (std::size_t k = n - 1; k >= 1; --k) {
        y = m * y;
        for (std::size_t i = 0; i < n; ++i)
            if (!c[k].is_zero() && !b[i].is_zero()) y[i] += c[k] * b[i];
    }
    const BaseElement f = -*c0_inv;
    for (auto& e : y) e *= f;
    return y;
}

std::optional<Matrix> inverse(const Matrix& m) {
    require_square(m);
    const std::size_t n = m.rows();
    const BaseRing& R = m.ring();
    Matrix out(R, n, n);
    if (all_constant(m)) {
        ScalarMatrix s = to_scalar(m);
        if (determinant(s).is_zero()) return std::nullopt;
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<Scalar> e(n, R.field().zero());
            e[j] = R.field().one();
            auto x = solve(s, std::move(e));
            for (std::size_t i = 0; i < n; ++i) out(i, j) = R.constant((*x)[i]);
        }
        return out;
    }
    const auto c = characteristic_polynomial(m);
    const auto c0_inv = try_inverse(c[0]);
    if (!c0_inv) return std::nullopt;
    // Horner on matrices: sum_{k>=1} c_k M^{k-1}
    Matrix acc = Matrix::identity(R, n);
    for (std::size_t i = 0; i < n; ++i) acc(i, i) = c[n];
    for (std::size_t k = n - 1; k >= 1; --k) {
        acc = m * acc;
        for (std::size_t i = 0; i < n; ++i) acc(i, i) += c[k];
    }
    const BaseElement f = -*c0_inv;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) acc(i, j) *= f;
    return acc;
}

// ---------------------------------------------------------------- ScalarMatrix

ScalarMatrix::ScalarMatrix(const Field& k, std::size_t rows, std::size_t cols)
    : k_(k), rows_(rows), cols_(cols), data_(rows * cols, k.zero()) {}

Scalar determinant(ScalarMatrix m) {
    if (m.rows() != m.cols()) throw Error(ErrorKind::DimensionMismatch, "square matrix required");
    if (m.rows() == 0) return m.field().one();
    return dispatch(m.field(), [&](const auto& ops) { return det_impl(ops, m); });
}

std::size_t rank(ScalarMatrix m) {
    return dispatch(m.field(), [&](const auto& ops) {
        return rref(ops, convert(ops, m, nullptr), m.rows(), m.cols(), m.cols()).pivots.size();
    });
}

std::vector<std::vector<Scalar>> kernel_basis(ScalarMatrix m) {
    return dispatch(m.field(), [&](const auto& ops) { return kernel_impl(ops, m); });
}

std::optional<std::vector<Scalar>> solve(ScalarMatrix m, std::vector<Scalar> b) {
    if (b.size() != m.rows()) throw Error(ErrorKind::DimensionMismatch, "right-hand side length");
    return dispatch(m.field(), [&](const auto& ops) { return solve_impl(ops, m, b); });
}

}  // namespace hopfgal
