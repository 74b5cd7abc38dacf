#include "sympencil/rational.hpp"

#include <cctype>
#include <ostream>

namespace sympencil {

parse_error::parse_error(const std::string& what, std::size_t pos)
    : input_error(what + " at position " + std::to_string(pos)), pos_(pos) {}

GaussianRational::GaussianRational(mpq_class re, mpq_class im)
    : re_(std::move(re)), im_(std::move(im)) {
  if (sgn(re_.get_den()) == 0 || sgn(im_.get_den()) == 0)
    throw input_error("rational with zero denominator");
  re_.canonicalize();
  im_.canonicalize();
}

GaussianRational GaussianRational::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  mpq_class n = norm();
  return {re_ / n, -im_ / n};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  im_ = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  mpq_class n = o.norm();
  mpq_class re = (re_ * o.re_ + im_ * o.im_) / n;
  im_ = (im_ * o.re_ - re_ * o.im_) / n;
  re_ = std::move(re);
  return *this;
}

namespace {

struct Scanner {
  std::string_view s;
  std::size_t pos = 0;

  bool eof() const { return pos >= s.size(); }
  char peek() const { return eof() ? '\0' : s[pos]; }
  char take() { return s[pos++]; }
};

mpz_class scan_digits(Scanner& sc) {
  std::size_t start = sc.pos;
  while (!sc.eof() && std::isdigit(static_cast<unsigned char>(sc.peek()))) sc.take();
  if (sc.pos == start) throw parse_error("expected digit", sc.pos);
  return mpz_class(std::string(sc.s.substr(start, sc.pos - start)), 10);
}

// digits ('/' digits)?
mpq_class scan_rational(Scanner& sc) {
  mpz_class num = scan_digits(sc);
  if (sc.peek() != '/') return mpq_class(num);
  sc.take();
  std::size_t den_pos = sc.pos;
  mpz_class den = scan_digits(sc);
  if (sgn(den) == 0) throw parse_error("zero denominator", den_pos);
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

struct Term {
  bool imaginary;
  mpq_class value;
};

Term scan_term(Scanner& sc, bool sign_required) {
  int sign = 1;
  if (sc.peek() == '+' || sc.peek() == '-') {
    if (sc.take() == '-') sign = -1;
  } else if (sign_required) {
    throw parse_error("expected '+' or '-'", sc.pos);
  }
  if (sc.peek() == 'i') {
    sc.take();
    return {true, mpq_class(sign)};
  }
  mpq_class v = scan_rational(sc);
  if (sign < 0) v = -v;
  if (sc.peek() == 'i') {
    sc.take();
    return {true, std::move(v)};
  }
  return {false, std::move(v)};
}

std::string q_str(const mpq_class& q) { return q.get_str(); }

}  // namespace

GaussianRational GaussianRational::parse(std::string_view text) {
  Scanner sc{text};
  if (sc.eof()) throw parse_error("empty literal", 0);
  Term first = scan_term(sc, false);
  if (sc.eof()) {
    return first.imaginary ? GaussianRational(mpq_class(0), std::move(first.value))
                           : GaussianRational(std::move(first.value));
  }
  if (first.imaginary)
    throw parse_error("imaginary part must come last", sc.pos);
  std::size_t second_pos = sc.pos;
  Term second = scan_term(sc, true);
  if (!second.imaginary)
    throw parse_error("second term must be imaginary", second_pos);
  if (!sc.eof()) throw parse_error("trailing characters", sc.pos);
  return {std::move(first.value), std::move(second.value)};
}

std::string GaussianRational::str() const {
  if (is_real()) return q_str(re_);
  std::string imag = q_str(abs(im_)) + "i";
  if (sgn(re_) == 0) return (sgn(im_) < 0 ? "-" : "") + imag;
  return q_str(re_) + (sgn(im_) < 0 ? "-" : "+") + imag;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& v) { return os << v.str(); }

}  // namespace sympencil
