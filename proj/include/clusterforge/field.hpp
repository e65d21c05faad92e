#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace cf {

using Scalar = mpq_class;

struct BadInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Coefficient field: char 0 means the rationals, otherwise a prime field F_p.
// All scalars are carried as canonical mpq values; over F_p they are kept as
// integers in [0, p).
class Field {
  public:
    Field() : p_(0) {}
    explicit Field(unsigned long characteristic);

    unsigned long characteristic() const { return p_; }
    bool is_rational() const { return p_ == 0; }

    Scalar reduce(const Scalar& x) const;
    Scalar add(const Scalar& a, const Scalar& b) const { return reduce(a + b); }
    Scalar sub(const Scalar& a, const Scalar& b) const { return reduce(a - b); }
    Scalar mul(const Scalar& a, const Scalar& b) const { return reduce(a * b); }
    Scalar neg(const Scalar& a) const { return reduce(-a); }
    Scalar inv(const Scalar& a) const;
    Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

    Scalar zero() const { return Scalar(0); }
    Scalar one() const { return Scalar(1); }

    Scalar parse(const std::string& text) const;
    static std::string to_string(const Scalar& x) { return x.get_str(); }

    bool operator==(const Field& o) const { return p_ == o.p_; }
    bool operator!=(const Field& o) const { return p_ != o.p_; }

  private:
    unsigned long p_;
};

}  // namespace cf
