#include "cforge/matrix.hpp"

namespace cforge {

namespace {

// GMP objects in distinct rows never alias, so splitting the output by
// row is safe.  Guard small products: thread spawn costs more than a
// handful of mpz multiplies.
template <typename T>
Matrix<T> mul_omp(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix product shape mismatch");
    Matrix<T> c(a.rows(), b.cols());
    const long m = static_cast<long>(a.rows());
    const long n = static_cast<long>(b.cols());
    const long k = static_cast<long>(a.cols());
#pragma omp parallel for schedule(dynamic, 8) if (m * n * k > 8192)
    for (long i = 0; i < m; ++i) {
        for (long l = 0; l < k; ++l) {
            const T& ail = a(i, l);
            if (ail == 0) continue;
            for (long j = 0; j < n; ++j) {
                if (b(l, j) != 0) c(i, j) += ail * b(l, j);
            }
        }
    }
    return c;
}

template <typename T>
Matrix<T> mul_serial(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix product shape mismatch");
    Matrix<T> c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t l = 0; l < a.cols(); ++l) {
            if (a(i, l) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (b(l, j) != 0) c(i, j) += a(i, l) * b(l, j);
        }
    return c;
}

}  // namespace

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) { return mul_omp(a, b); }
RatMatrix multiply(const RatMatrix& a, const RatMatrix& b) { return mul_omp(a, b); }

namespace serial {
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) { return mul_serial(a, b); }
RatMatrix multiply(const RatMatrix& a, const RatMatrix& b) { return mul_serial(a, b); }
}  // namespace serial

}  // namespace cforge
