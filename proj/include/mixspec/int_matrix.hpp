#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace mixspec {

// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols);

    static IntMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    mpz_class& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const mpz_class& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    bool is_symmetric() const;
    IntMatrix transpose() const;
    IntMatrix operator*(const IntMatrix& rhs) const;
    bool operator==(const IntMatrix&) const = default;

    // M[i|j]: drop row i and column j.
    IntMatrix minor_matrix(int i, int j) const;

    std::string to_string() const;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<mpz_class> a_;
};

// Integer polynomial, coefficients in ascending degree order with no
// trailing zeros (zero polynomial = empty vector).
struct IntPoly {
    std::vector<mpz_class> c;

    static IntPoly zero() { return {}; }
    static IntPoly constant(const mpz_class& v);
    static IntPoly monomial(int degree, const mpz_class& coeff = 1);

    int degree() const { return static_cast<int>(c.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c.empty(); }
    const mpz_class& coeff(int k) const;  // 0 outside range
    mpz_class eval(const mpz_class& x) const;
    double eval_double(double x) const;
    void trim();

    IntPoly operator+(const IntPoly& rhs) const;
    IntPoly operator-(const IntPoly& rhs) const;
    IntPoly operator*(const IntPoly& rhs) const;
    IntPoly shifted(int k) const;  // multiply by x^k
    IntPoly scaled(const mpz_class& f) const;
    bool operator==(const IntPoly&) const = default;

    std::string to_string() const;  // human form, highest degree first
};

// Monic characteristic polynomial det(xI - M): coefficient sequence
// c_0=1, c_1, ..., c_m for x^m + c_1 x^{m-1} + ... + c_m.
struct CharPoly {
    std::vector<mpz_class> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    const mpz_class& ck(int k) const { return coeffs.at(static_cast<size_t>(k)); }
    IntPoly to_poly() const;
    static CharPoly from_poly(const IntPoly& p);  // requires monic
    bool operator==(const CharPoly&) const = default;
    std::string to_string() const { return to_poly().to_string(); }
};

// Exact characteristic polynomial by the division-free Berkowitz recursion.
CharPoly char_poly_exact(const IntMatrix& m);

// Exact determinant by fraction-free (Bareiss) elimination.
// Empty matrix has determinant 1.
mpz_class det_exact(const IntMatrix& m);

// M^k by repeated squaring; k = 0 gives the identity.
IntMatrix power(const IntMatrix& m, unsigned k);

// det((xI - M)[i|j]): the (i,j) minor of the characteristic matrix,
// computed exactly by integer evaluation plus rational interpolation.
IntPoly char_matrix_minor_poly(const IntMatrix& m, int i, int j);

// Exact polynomial through (xs[k], ys[k]); throws if the points do not lie
// on an integer-coefficient polynomial.
IntPoly interpolate_integer_poly(const std::vector<long>& xs, const std::vector<mpz_class>& ys);

}  // namespace mixspec
