#include "mixspec/int_matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace mixspec {

IntMatrix::IntMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
    a_.assign(static_cast<size_t>(rows) * cols, 0);
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

bool IntMatrix::is_symmetric() const {
    if (!square()) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("matrix product shape mismatch");
    IntMatrix out(rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const mpz_class& f = at(i, k);
            if (f == 0) continue;
            for (int j = 0; j < rhs.cols_; ++j) out.at(i, j) += f * rhs.at(k, j);
        }
    return out;
}

IntMatrix IntMatrix::minor_matrix(int i, int j) const {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
        throw std::invalid_argument("minor index out of range");
    IntMatrix out(rows_ - 1, cols_ - 1);
    for (int r = 0, ro = 0; r < rows_; ++r) {
        if (r == i) continue;
        for (int c = 0, co = 0; c < cols_; ++c) {
            if (c == j) continue;
            out.at(ro, co) = at(r, c);
            ++co;
        }
        ++ro;
    }
    return out;
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) {
            if (j) os << ' ';
            os << at(i, j);
        }
        os << '\n';
    }
    return os.str();
}

IntPoly IntPoly::constant(const mpz_class& v) {
    IntPoly p;
    if (v != 0) p.c = {v};
    return p;
}

IntPoly IntPoly::monomial(int degree, const mpz_class& coeff) {
    IntPoly p;
    if (coeff != 0) {
        p.c.assign(static_cast<size_t>(degree) + 1, 0);
        p.c.back() = coeff;
    }
    return p;
}

const mpz_class& IntPoly::coeff(int k) const {
    static const mpz_class zero = 0;
    if (k < 0 || k >= static_cast<int>(c.size())) return zero;
    return c[static_cast<size_t>(k)];
}

mpz_class IntPoly::eval(const mpz_class& x) const {
    mpz_class acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

double IntPoly::eval_double(double x) const {
    double acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + it->get_d();
    return acc;
}

void IntPoly::trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

IntPoly IntPoly::operator+(const IntPoly& rhs) const {
    IntPoly out;
    out.c.resize(std::max(c.size(), rhs.c.size()), 0);
    for (size_t i = 0; i < out.c.size(); ++i) {
        if (i < c.size()) out.c[i] += c[i];
        if (i < rhs.c.size()) out.c[i] += rhs.c[i];
    }
    out.trim();
    return out;
}

IntPoly IntPoly::operator-(const IntPoly& rhs) const {
    return *this + rhs.scaled(-1);
}

IntPoly IntPoly::operator*(const IntPoly& rhs) const {
    if (is_zero() || rhs.is_zero()) return zero();
    IntPoly out;
    out.c.assign(c.size() + rhs.c.size() - 1, 0);
    for (size_t i = 0; i < c.size(); ++i)
        for (size_t j = 0; j < rhs.c.size(); ++j) out.c[i + j] += c[i] * rhs.c[j];
    out.trim();
    return out;
}

IntPoly IntPoly::shifted(int k) const {
    if (is_zero()) return zero();
    IntPoly out;
    out.c.assign(c.size() + static_cast<size_t>(k), 0);
    std::copy(c.begin(), c.end(), out.c.begin() + k);
    return out;
}

IntPoly IntPoly::scaled(const mpz_class& f) const {
    if (f == 0) return zero();
    IntPoly out = *this;
    for (auto& v : out.c) v *= f;
    return out;
}

std::string IntPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const mpz_class& v = coeff(k);
        if (v == 0) continue;
        mpz_class mag = abs(v);
        if (first) {
            if (v < 0) os << "-";
            first = false;
        } else {
            os << (v < 0 ? " - " : " + ");
        }
        if (mag != 1 || k == 0) os << mag.get_str();
        if (k > 0) {
            if (mag != 1) os << "*";
            os << "x";
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

IntPoly CharPoly::to_poly() const {
    IntPoly p;
    p.c.assign(coeffs.rbegin(), coeffs.rend());
    p.trim();
    return p;
}

CharPoly CharPoly::from_poly(const IntPoly& p) {
    if (p.is_zero() || p.c.back() != 1) throw std::invalid_argument("polynomial is not monic");
    CharPoly cp;
    cp.coeffs.assign(p.c.rbegin(), p.c.rend());
    return cp;
}

CharPoly char_poly_exact(const IntMatrix& m) {
    if (!m.square()) throw std::invalid_argument("characteristic polynomial needs a square matrix");
    const int n = m.rows();
    CharPoly cp;
    cp.coeffs = {mpz_class(1)};
    if (n == 0) return cp;

    // Berkowitz recursion over leading principal blocks: the coefficient
    // vector of the r x r block is the Toeplitz product T_r * c_{r-1}, where
    // the first column of T_r is (1, -a_rr, -R C, -R M C, -R M^2 C, ...).
    std::vector<mpz_class> c = {1, -m.at(0, 0)};
    for (int r = 2; r <= n; ++r) {
        const int k = r - 1;  // leading block of the previous step is k x k
        std::vector<mpz_class> t(static_cast<size_t>(r) + 1);
        t[0] = 1;
        t[1] = -m.at(k, k);
        // w starts as the column C = m[0..k-1][k] and is repeatedly hit by M.
        std::vector<mpz_class> w(static_cast<size_t>(k));
        for (int i = 0; i < k; ++i) w[static_cast<size_t>(i)] = m.at(i, k);
        for (int step = 2; step <= r; ++step) {
            mpz_class dot = 0;
            for (int i = 0; i < k; ++i) dot += m.at(k, i) * w[static_cast<size_t>(i)];
            t[static_cast<size_t>(step)] = -dot;
            if (step == r) break;
            std::vector<mpz_class> next(static_cast<size_t>(k), 0);
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j) next[static_cast<size_t>(i)] += m.at(i, j) * w[static_cast<size_t>(j)];
            w.swap(next);
        }
        std::vector<mpz_class> out(static_cast<size_t>(r) + 1, 0);
        for (size_t i = 0; i < out.size(); ++i)
            for (size_t j = 0; j < c.size() && j <= i; ++j) out[i] += t[i - j] * c[j];
        c.swap(out);
    }
    cp.coeffs = std::move(c);
    return cp;
}

mpz_class det_exact(const IntMatrix& m) {
    if (!m.square()) throw std::invalid_argument("determinant needs a square matrix");
    const int n = m.rows();
    if (n == 0) return 1;
    IntMatrix b = m;
    mpz_class prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (b.at(k, k) == 0) {
            int swap_row = -1;
            for (int i = k + 1; i < n; ++i)
                if (b.at(i, k) != 0) {
                    swap_row = i;
                    break;
                }
            if (swap_row < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(b.at(k, j), b.at(swap_row, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                mpz_class num = b.at(i, j) * b.at(k, k) - b.at(i, k) * b.at(k, j);
                mpz_divexact(b.at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
        prev = b.at(k, k);
    }
    return sign * b.at(n - 1, n - 1);
}

IntMatrix power(const IntMatrix& m, unsigned k) {
    if (!m.square()) throw std::invalid_argument("matrix power needs a square matrix");
    IntMatrix result = IntMatrix::identity(m.rows());
    IntMatrix base = m;
    while (k > 0) {
        if (k & 1u) result = result * base;
        k >>= 1u;
        if (k > 0) base = base * base;
    }
    return result;
}

IntPoly interpolate_integer_poly(const std::vector<long>& xs, const std::vector<mpz_class>& ys) {
    if (xs.size() != ys.size()) throw std::invalid_argument("interpolation point count mismatch");
    const size_t n = xs.size();
    // Newton divided differences over exact rationals.
    std::vector<mpq_class> dd(n);
    for (size_t i = 0; i < n; ++i) dd[i] = mpq_class(ys[i]);
    for (size_t level = 1; level < n; ++level)
        for (size_t i = n - 1; i >= level; --i) {
            dd[i] = (dd[i] - dd[i - 1]) / mpq_class(xs[i] - xs[i - level]);
            if (i == level) break;
        }
    // Horner expansion of the Newton form into monomial coefficients.
    std::vector<mpq_class> acc;  // ascending
    for (size_t i = n; i-- > 0;) {
        std::vector<mpq_class> next(acc.size() + 1, mpq_class(0));
        for (size_t j = 0; j < acc.size(); ++j) {
            next[j + 1] += acc[j];
            next[j] -= mpq_class(xs[i]) * acc[j];
        }
        next[0] += dd[i];
        acc.swap(next);
    }
    IntPoly p;
    p.c.reserve(acc.size());
    for (auto& q : acc) {
        q.canonicalize();
        if (q.get_den() != 1)
            throw std::invalid_argument("interpolated polynomial is not integral");
        p.c.push_back(q.get_num());
    }
    p.trim();
    return p;
}

IntPoly char_matrix_minor_poly(const IntMatrix& m, int i, int j) {
    if (!m.square()) throw std::invalid_argument("characteristic-matrix minor needs a square matrix");
    const int n = m.rows();
    if (i < 0 || i >= n || j < 0 || j >= n) throw std::invalid_argument("minor index out of range");
    if (n == 1) return IntPoly::constant(1);  // empty determinant
    // Degree is at most n-1; evaluate at n integer points and interpolate.
    std::vector<long> xs;
    std::vector<mpz_class> ys;
    for (long x = 0; x < n; ++x) {
        IntMatrix cm(n, n);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) cm.at(r, c) = (r == c ? mpz_class(x) : mpz_class(0)) - m.at(r, c);
        xs.push_back(x);
        ys.push_back(det_exact(cm.minor_matrix(i, j)));
    }
    return interpolate_integer_poly(xs, ys);
}

}  // namespace mixspec
