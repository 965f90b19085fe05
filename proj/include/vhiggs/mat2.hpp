#pragma once

#include <array>

namespace vhiggs {

/// 2x2 matrix over a commutative ring T.
template <class T>
struct Mat2 {
  std::array<std::array<T, 2>, 2> e{};

  static Mat2 identity() {
    Mat2 m;
    m.e[0][0] = T(1);
    m.e[1][1] = T(1);
    return m;
  }
  static Mat2 scalar(const T& s) {
    Mat2 m;
    m.e[0][0] = s;
    m.e[1][1] = s;
    return m;
  }
  static Mat2 of(T a, T b, T c, T d) {
    Mat2 m;
    m.e[0][0] = std::move(a);
    m.e[0][1] = std::move(b);
    m.e[1][0] = std::move(c);
    m.e[1][1] = std::move(d);
    return m;
  }

  T& operator()(int i, int j) { return e[static_cast<size_t>(i)][static_cast<size_t>(j)]; }
  const T& operator()(int i, int j) const { return e[static_cast<size_t>(i)][static_cast<size_t>(j)]; }

  T trace() const { return e[0][0] + e[1][1]; }
  T det() const { return e[0][0] * e[1][1] - e[0][1] * e[1][0]; }

  /// Adjugate; the inverse is adjugate / det.
  Mat2 adjugate() const { return of(e[1][1], -e[0][1], -e[1][0], e[0][0]); }

  template <class F>
  Mat2<T> map(F&& f) const {
    Mat2<T> r;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) r(i, j) = f((*this)(i, j));
    return r;
  }

  friend Mat2 operator+(const Mat2& a, const Mat2& b) {
    Mat2 r;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) r(i, j) = a(i, j) + b(i, j);
    return r;
  }
  friend Mat2 operator-(const Mat2& a, const Mat2& b) {
    Mat2 r;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) r(i, j) = a(i, j) - b(i, j);
    return r;
  }
  friend Mat2 operator*(const Mat2& a, const Mat2& b) {
    Mat2 r;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) r(i, j) = a(i, 0) * b(0, j) + a(i, 1) * b(1, j);
    return r;
  }
  friend Mat2 operator*(const T& s, const Mat2& a) {
    Mat2 r;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) r(i, j) = s * a(i, j);
    return r;
  }
  Mat2 operator-() const {
    Mat2 r;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) r(i, j) = -(*this)(i, j);
    return r;
  }
  friend bool operator==(const Mat2& a, const Mat2& b) { return a.e == b.e; }
};

template <class T>
Mat2<T> commutator(const Mat2<T>& a, const Mat2<T>& b) {
  return a * b - b * a;
}

template <class T>
bool is_zero_matrix(const Mat2<T>& m) {
  return m == Mat2<T>();
}

}  // namespace vhiggs
