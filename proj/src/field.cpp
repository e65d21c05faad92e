#include "clusterforge/field.hpp"

namespace cf {

namespace {

bool is_prime(unsigned long n) {
    if (n < 2) return false;
    for (unsigned long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

Field::Field(unsigned long characteristic) : p_(characteristic) {
    if (p_ != 0 && !is_prime(p_))
        throw BadInput("field characteristic must be 0 or prime, got " + std::to_string(p_));
}

Scalar Field::reduce(const Scalar& x) const {
    Scalar y = x;
    y.canonicalize();
    if (p_ == 0) return y;
    mpz_class p(static_cast<unsigned long>(p_));
    mpz_class num = y.get_num() % p;
    if (num < 0) num += p;
    if (y.get_den() != 1) {
        mpz_class den = y.get_den() % p;
        mpz_class deninv;
        if (mpz_invert(deninv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0)
            throw BadInput("denominator not invertible mod " + std::to_string(p_));
        num = (num * deninv) % p;
        if (num < 0) num += p;
    }
    return Scalar(num);
}

Scalar Field::inv(const Scalar& a) const {
    Scalar x = reduce(a);
    if (x == 0) throw BadInput("division by zero in field");
    if (p_ == 0) return Scalar(1) / x;
    mpz_class p(static_cast<unsigned long>(p_));
    mpz_class v = x.get_num();
    mpz_class r;
    mpz_invert(r.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t());
    if (r < 0) r += p;
    return Scalar(r);
}

Scalar Field::parse(const std::string& text) const {
    mpq_class q;
    if (q.set_str(text, 10) != 0)
        throw BadInput("bad rational literal: '" + text + "'");
    return reduce(q);
}

}  // namespace cf
