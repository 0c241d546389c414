#include "hilbfan/scalar.hpp"

#include "hilbfan/error.hpp"

namespace hilbfan {

namespace {

std::uint64_t reduce(const mpz_class& v, unsigned p) {
  mpz_class r = v % p;
  if (r < 0) r += p;
  return r.get_ui();
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

}  // namespace

bool valid_characteristic(unsigned p) {
  if (p == 0) return true;
  if (p < 2) return false;
  for (unsigned d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

Scalar::Scalar(long value, unsigned characteristic) : p_(characteristic) {
  if (p_ == 0) {
    q_ = value;
  } else {
    long r = value % static_cast<long>(p_);
    if (r < 0) r += p_;
    r_ = static_cast<std::uint64_t>(r);
  }
}

Scalar::Scalar(const mpz_class& value, unsigned characteristic) : p_(characteristic) {
  if (p_ == 0)
    q_ = value;
  else
    r_ = reduce(value, p_);
}

Scalar::Scalar(const mpq_class& value) : p_(0), q_(value) {}

const mpq_class& Scalar::rational() const {
  if (p_ != 0) throw Error(ErrorCode::internal, "rational() on a residue class");
  return q_;
}

std::uint64_t Scalar::residue() const {
  if (p_ == 0) throw Error(ErrorCode::internal, "residue() in characteristic 0");
  return r_;
}

void Scalar::check_same(const Scalar& o) const {
  if (p_ != o.p_)
    throw Error(ErrorCode::domain, "scalar characteristic mismatch: " + std::to_string(p_) +
                                       " vs " + std::to_string(o.p_));
}

Scalar Scalar::operator-() const {
  Scalar r(*this);
  if (p_ == 0)
    r.q_ = -q_;
  else
    r.r_ = r_ == 0 ? 0 : p_ - r_;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same(o);
  if (p_ == 0)
    q_ += o.q_;
  else
    r_ = (r_ + o.r_) % p_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check_same(o);
  if (p_ == 0)
    q_ -= o.q_;
  else
    r_ = (r_ + p_ - o.r_) % p_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same(o);
  if (p_ == 0)
    q_ *= o.q_;
  else
    r_ = r_ * o.r_ % p_;
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorCode::domain, "division by zero");
  Scalar r(*this);
  if (p_ == 0)
    r.q_ = 1 / q_;
  else
    r.r_ = pow_mod(r_, p_ - 2, p_);
  return r;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  check_same(o);
  return *this *= o.inverse();
}

void Scalar::submul(const Scalar& a, const Scalar& b) {
  check_same(a);
  check_same(b);
  if (p_ == 0) {
    mpq_class t;
    mpq_mul(t.get_mpq_t(), a.q_.get_mpq_t(), b.q_.get_mpq_t());
    q_ -= t;
  } else {
    r_ = (r_ + p_ - a.r_ * b.r_ % p_) % p_;
  }
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.p_ != b.p_) return false;
  return a.p_ == 0 ? a.q_ == b.q_ : a.r_ == b.r_;
}

std::string Scalar::to_string() const {
  if (p_ == 0) return q_.get_str();
  return std::to_string(r_);
}

}  // namespace hilbfan
