#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ltk {

// Raised for every contract violation: dimension mismatches, non-finite
// values, malformed files. The C API maps it to status codes.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

[[noreturn]] void fail(const std::string& msg);

inline void require(bool cond, const char* msg) {
    if (!cond) throw Error(msg);
}

// Dense column vector, 64-bit floats.
class Vec {
public:
    Vec() = default;
    explicit Vec(std::size_t n, double fill = 0.0) : d_(n, fill) {}
    Vec(std::initializer_list<double> xs) : d_(xs) {}

    std::size_t dim() const { return d_.size(); }
    double& operator[](std::size_t i) { return d_[i]; }
    double operator[](std::size_t i) const { return d_[i]; }
    double* data() { return d_.data(); }
    const double* data() const { return d_.data(); }
    std::span<const double> span() const { return d_; }

    auto begin() { return d_.begin(); }
    auto end() { return d_.end(); }
    auto begin() const { return d_.begin(); }
    auto end() const { return d_.end(); }

    Vec segment(std::size_t start, std::size_t len) const;
    void set_segment(std::size_t start, const Vec& v);

    bool finite() const;

private:
    std::vector<double> d_;
};

// Dense row-major matrix.
class Mat {
public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), d_(rows * cols, fill) {}

    static Mat identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    double& at(std::size_t i, std::size_t j) { return d_[i * cols_ + j]; }
    double at(std::size_t i, std::size_t j) const { return d_[i * cols_ + j]; }
    double* row(std::size_t i) { return d_.data() + i * cols_; }
    const double* row(std::size_t i) const { return d_.data() + i * cols_; }
    double* data() { return d_.data(); }
    const double* data() const { return d_.data(); }
    std::size_t size() const { return d_.size(); }

    void fill(double v) { d_.assign(d_.size(), v); }
    bool finite() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<double> d_;
};

// Element ops. Dimension agreement is checked; results are checked finite.
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(double s, const Vec& a);
Vec hadamard(const Vec& a, const Vec& b);
double dot(const Vec& a, const Vec& b);
double norm2(const Vec& a);
double inf_norm(const Vec& a);

Vec matvec(const Mat& m, const Vec& x);

// C = A * B / A * B^T / A^T * B. Row-parallel, deterministic for any
// thread count (each output row is one sequential accumulation).
void gemm_nn(const Mat& a, const Mat& b, Mat& c);
void gemm_nt(const Mat& a, const Mat& b, Mat& c);
void gemm_tn(const Mat& a, const Mat& b, Mat& c);

void ensure_finite(std::span<const double> xs, const char* what);

}  // namespace ltk
