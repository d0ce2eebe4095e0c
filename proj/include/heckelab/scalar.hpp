#ifndef HECKELAB_SCALAR_HPP
#define HECKELAB_SCALAR_HPP

#include <gmpxx.h>
#include <stdexcept>
#include <string>
#include <vector>

namespace heckelab {

using Rat = mpq_class;

std::string rat_to_string(const Rat& q);
Rat rat_from_string(const std::string& s);

/// Exact element of Q(i). All arithmetic in the library goes through this
/// type; there is no floating point anywhere.
struct Scalar {
  Rat re, im;

  Scalar() : re(0), im(0) {}
  Scalar(long v) : re(v), im(0) {}
  Scalar(const Rat& r) : re(r), im(0) {}
  Scalar(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

  static Scalar i() { return Scalar(Rat(0), Rat(1)); }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_one() const { return re == 1 && im == 0; }
  bool is_real() const { return im == 0; }
  bool is_integer() const { return im == 0 && re.get_den() == 1; }

  Scalar conj() const { return Scalar(re, -im); }
  // |z|^2, a nonnegative rational
  Rat norm() const { return re * re + im * im; }

  Scalar operator-() const { return Scalar(-re, -im); }
  Scalar operator+(const Scalar& o) const { return Scalar(re + o.re, im + o.im); }
  Scalar operator-(const Scalar& o) const { return Scalar(re - o.re, im - o.im); }
  Scalar operator*(const Scalar& o) const {
    return Scalar(re * o.re - im * o.im, re * o.im + im * o.re);
  }
  Scalar operator/(const Scalar& o) const {
    Rat n = o.norm();
    if (n == 0) throw std::domain_error("Scalar: division by zero");
    return Scalar((re * o.re + im * o.im) / n, (im * o.re - re * o.im) / n);
  }
  Scalar inv() const { return Scalar(1) / *this; }

  Scalar& operator+=(const Scalar& o) { re += o.re; im += o.im; return *this; }
  Scalar& operator-=(const Scalar& o) { re -= o.re; im -= o.im; return *this; }
  Scalar& operator*=(const Scalar& o) { *this = *this * o; return *this; }

  bool operator==(const Scalar& o) const { return re == o.re && im == o.im; }
  bool operator!=(const Scalar& o) const { return !(*this == o); }
};

/// Total order used only for canonical sorting of reports and map keys.
int scalar_cmp(const Scalar& a, const Scalar& b);

inline bool scalar_less(const Scalar& a, const Scalar& b) { return scalar_cmp(a, b) < 0; }

// "a/b" or "a/b+c/d*i", lowest terms, denominator 1 omitted
std::string to_string(const Scalar& s);
Scalar scalar_from_string(const std::string& s);

using QVec = std::vector<Rat>;
using SVec = std::vector<Scalar>;

}  // namespace heckelab

#endif
