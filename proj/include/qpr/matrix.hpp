#pragma once

#include <stdexcept>
#include <vector>

namespace qpr {

template <class T>
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(long long rows, long long cols, const T& fill = T())
      : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows * cols), fill) {}

  static Mat identity(long long n, const T& one) {
    Mat m(n, n);
    for (long long i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }

  long long rows() const { return rows_; }
  long long cols() const { return cols_; }

  T& operator()(long long i, long long j) { return data_[static_cast<size_t>(i * cols_ + j)]; }
  const T& operator()(long long i, long long j) const {
    return data_[static_cast<size_t>(i * cols_ + j)];
  }

  bool operator==(const Mat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

  Mat operator+(const Mat& o) const {
    check_same_shape(o);
    Mat out = *this;
    for (size_t i = 0; i < data_.size(); ++i) out.data_[i] = out.data_[i] + o.data_[i];
    return out;
  }

  Mat operator-(const Mat& o) const {
    check_same_shape(o);
    Mat out = *this;
    for (size_t i = 0; i < data_.size(); ++i) out.data_[i] = out.data_[i] - o.data_[i];
    return out;
  }

  Mat operator*(const Mat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("Mat::operator*: shape mismatch");
    Mat out(rows_, o.cols_);
    for (long long i = 0; i < rows_; ++i)
      for (long long k = 0; k < cols_; ++k) {
        const T& a = (*this)(i, k);
        for (long long j = 0; j < o.cols_; ++j) out(i, j) = out(i, j) + a * o(k, j);
      }
    return out;
  }

  Mat scaled(const T& s) const {
    Mat out = *this;
    for (auto& v : out.data_) v = v * s;
    return out;
  }

  Mat pow(long long e, const T& one) const {
    if (rows_ != cols_) throw std::invalid_argument("Mat::pow: not square");
    Mat acc = identity(rows_, one);
    Mat base = *this;
    while (e > 0) {
      if (e & 1) acc = acc * base;
      base = base * base;
      e >>= 1;
    }
    return acc;
  }

 private:
  long long rows_, cols_;
  std::vector<T> data_;

  void check_same_shape(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw std::invalid_argument("Mat: shape mismatch");
  }
};

// Fraction-free (Bareiss) forward elimination over an exact field.  T needs
// +, -, *, /, is_zero(), default construction to zero.  Returns the echelon
// matrix and pivot columns; divisions are exact at every step.
template <class T>
struct EchelonResult {
  Mat<T> mat;
  std::vector<long long> pivot_cols;
  long long rank = 0;
};

template <class T>
EchelonResult<T> bareiss_echelon(Mat<T> m) {
  EchelonResult<T> res;
  long long rows = m.rows(), cols = m.cols();
  long long pr = 0;  // current pivot row
  T prev_piv;
  bool have_prev = false;
  for (long long pc = 0; pc < cols && pr < rows; ++pc) {
    long long sel = -1;
    for (long long i = pr; i < rows; ++i) {
      if (!m(i, pc).is_zero()) {
        sel = i;
        break;
      }
    }
    if (sel < 0) continue;
    if (sel != pr)
      for (long long j = 0; j < cols; ++j) std::swap(m(sel, j), m(pr, j));
    const T piv = m(pr, pc);
    for (long long i = pr + 1; i < rows; ++i) {
      const T head = m(i, pc);
      for (long long j = pc; j < cols; ++j) {
        T v = m(i, j) * piv - head * m(pr, j);
        if (have_prev) v = v / prev_piv;
        m(i, j) = v;
      }
    }
    prev_piv = piv;
    have_prev = true;
    res.pivot_cols.push_back(pc);
    ++pr;
  }
  res.rank = pr;
  res.mat = std::move(m);
  return res;
}

template <class T>
long long exact_rank(const Mat<T>& m) {
  return bareiss_echelon(m).rank;
}

// basis of the right nullspace  { v : M v = 0 }
template <class T>
std::vector<std::vector<T>> exact_nullspace(const Mat<T>& m, const T& one) {
  auto ech = bareiss_echelon(m);
  long long cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (long long c : ech.pivot_cols) is_pivot[c] = true;

  std::vector<std::vector<T>> basis;
  for (long long f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<T> v(cols, T());
    v[f] = one;
    // back-substitute pivot coordinates bottom-up
    for (long long i = ech.rank - 1; i >= 0; --i) {
      long long pc = ech.pivot_cols[i];
      T acc = T();
      for (long long j = pc + 1; j < cols; ++j) {
        if (!v[j].is_zero()) acc = acc + ech.mat(i, j) * v[j];
      }
      if (acc.is_zero())
        v[pc] = T();
      else
        v[pc] = -(acc / ech.mat(i, pc));
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace qpr
