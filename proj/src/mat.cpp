#include "latentrack/mat.hpp"

#include <cmath>

namespace ltk {

void fail(const std::string& msg) { throw Error(msg); }

void ensure_finite(std::span<const double> xs, const char* what) {
    for (double x : xs) {
        if (!std::isfinite(x)) fail(std::string("non-finite value in ") + what);
    }
}

Vec Vec::segment(std::size_t start, std::size_t len) const {
    require(start + len <= dim(), "Vec::segment out of range");
    Vec out(len);
    for (std::size_t i = 0; i < len; ++i) out[i] = d_[start + i];
    return out;
}

void Vec::set_segment(std::size_t start, const Vec& v) {
    require(start + v.dim() <= dim(), "Vec::set_segment out of range");
    for (std::size_t i = 0; i < v.dim(); ++i) d_[start + i] = v[i];
}

bool Vec::finite() const {
    for (double x : d_)
        if (!std::isfinite(x)) return false;
    return true;
}

bool Mat::finite() const {
    for (double x : d_)
        if (!std::isfinite(x)) return false;
    return true;
}

Mat Mat::identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1.0;
    return m;
}

static void check_same_dim(const Vec& a, const Vec& b, const char* op) {
    if (a.dim() != b.dim()) fail(std::string("dimension mismatch in ") + op);
}

Vec operator+(const Vec& a, const Vec& b) {
    check_same_dim(a, b, "vector add");
    Vec c(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) c[i] = a[i] + b[i];
    ensure_finite(c.span(), "vector add");
    return c;
}

Vec operator-(const Vec& a, const Vec& b) {
    check_same_dim(a, b, "vector sub");
    Vec c(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) c[i] = a[i] - b[i];
    ensure_finite(c.span(), "vector sub");
    return c;
}

Vec operator*(double s, const Vec& a) {
    Vec c(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) c[i] = s * a[i];
    ensure_finite(c.span(), "vector scale");
    return c;
}

Vec hadamard(const Vec& a, const Vec& b) {
    check_same_dim(a, b, "hadamard");
    Vec c(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) c[i] = a[i] * b[i];
    ensure_finite(c.span(), "hadamard");
    return c;
}

double dot(const Vec& a, const Vec& b) {
    check_same_dim(a, b, "dot");
    double s = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
    return s;
}

double norm2(const Vec& a) { return std::sqrt(dot(a, a)); }

double inf_norm(const Vec& a) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) m = std::max(m, std::fabs(a[i]));
    return m;
}

Vec matvec(const Mat& m, const Vec& x) {
    require(m.cols() == x.dim(), "matvec dimension mismatch");
    Vec y(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        const double* r = m.row(i);
        double s = 0.0;
        for (std::size_t j = 0; j < m.cols(); ++j) s += r[j] * x[j];
        y[i] = s;
    }
    ensure_finite(y.span(), "matvec");
    return y;
}

void gemm_nn(const Mat& a, const Mat& b, Mat& c) {
    require(a.cols() == b.rows(), "gemm_nn dimension mismatch");
    require(c.rows() == a.rows() && c.cols() == b.cols(), "gemm_nn output shape");
    const std::size_t m = a.rows(), k = a.cols(), n = b.cols();
#pragma omp parallel for schedule(static) if (m > 16)
    for (std::ptrdiff_t ii = 0; ii < static_cast<std::ptrdiff_t>(m); ++ii) {
        const auto i = static_cast<std::size_t>(ii);
        double* ci = c.row(i);
        for (std::size_t j = 0; j < n; ++j) ci[j] = 0.0;
        const double* ai = a.row(i);
        for (std::size_t p = 0; p < k; ++p) {
            const double aip = ai[p];
            const double* bp = b.row(p);
            for (std::size_t j = 0; j < n; ++j) ci[j] += aip * bp[j];
        }
    }
}

void gemm_nt(const Mat& a, const Mat& b, Mat& c) {
    require(a.cols() == b.cols(), "gemm_nt dimension mismatch");
    require(c.rows() == a.rows() && c.cols() == b.rows(), "gemm_nt output shape");
    const std::size_t m = a.rows(), k = a.cols(), n = b.rows();
#pragma omp parallel for schedule(static) if (m > 16)
    for (std::ptrdiff_t ii = 0; ii < static_cast<std::ptrdiff_t>(m); ++ii) {
        const auto i = static_cast<std::size_t>(ii);
        const double* ai = a.row(i);
        double* ci = c.row(i);
        for (std::size_t j = 0; j < n; ++j) {
            const double* bj = b.row(j);
            double s = 0.0;
            for (std::size_t p = 0; p < k; ++p) s += ai[p] * bj[p];
            ci[j] = s;
        }
    }
}

void gemm_tn(const Mat& a, const Mat& b, Mat& c) {
    require(a.rows() == b.rows(), "gemm_tn dimension mismatch");
    require(c.rows() == a.cols() && c.cols() == b.cols(), "gemm_tn output shape");
    const std::size_t m = a.cols(), k = a.rows(), n = b.cols();
#pragma omp parallel for schedule(static) if (m > 8)
    for (std::ptrdiff_t ii = 0; ii < static_cast<std::ptrdiff_t>(m); ++ii) {
        const auto i = static_cast<std::size_t>(ii);
        double* ci = c.row(i);
        for (std::size_t j = 0; j < n; ++j) ci[j] = 0.0;
        for (std::size_t p = 0; p < k; ++p) {
            const double api = a.at(p, i);
            const double* bp = b.row(p);
            for (std::size_t j = 0; j < n; ++j) ci[j] += api * bp[j];
        }
    }
}

}  // namespace ltk
