#ifndef SYMPENCIL_RATIONAL_HPP
#define SYMPENCIL_RATIONAL_HPP

#include <gmpxx.h>

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sympencil {

// Bad user-supplied data: sizes, formats, violated invariants.
class input_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Text parse failure; pos() is the byte offset of the offending character.
class parse_error : public input_error {
 public:
  parse_error(const std::string& what, std::size_t pos);
  std::size_t pos() const noexcept { return pos_; }

 private:
  std::size_t pos_;
};

/*
 * Exact scalar of Q(i): re + im*i with arbitrary-precision rational parts.
 * Denominators are kept nonzero, positive and in lowest terms, so equality
 * and zero tests are exact. This is a field: all four operations plus
 * conjugation and inversion.
 *
 * Text form (whitespace-free): "a/b+c/di" with optional parts, e.g.
 * "3", "-1/2", "2i", "1+1i", "1/2-3/4i".
 */
class GaussianRational {
 public:
  GaussianRational() : re_(0), im_(0) {}
  GaussianRational(long v) : re_(v), im_(0) {}  // NOLINT: implicit on purpose
  GaussianRational(mpq_class re, mpq_class im = mpq_class(0));
  static GaussianRational i() { return {mpq_class(0), mpq_class(1)}; }

  const mpq_class& re() const noexcept { return re_; }
  const mpq_class& im() const noexcept { return im_; }

  bool is_zero() const noexcept { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const noexcept { return sgn(im_) == 0; }

  GaussianRational conj() const { return {re_, -im_}; }
  mpq_class norm() const { return re_ * re_ + im_ * im_; }  // |z|^2
  GaussianRational inverse() const;                         // throws on zero

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);
  GaussianRational operator-() const { return {-re_, -im_}; }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

  // Parses the canonical text form; throws parse_error on malformed input.
  static GaussianRational parse(std::string_view text);
  std::string str() const;

 private:
  mpq_class re_, im_;
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& v);

}  // namespace sympencil

#endif
