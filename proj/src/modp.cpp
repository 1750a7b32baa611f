#include "qaff/modp.hpp"

namespace qaff {

Fp Fp::from_rational(const Rational& q) {
  Fp d = from_mpz(q.get_den());
  if (d.is_zero()) throw std::domain_error("zero divisor");
  return from_mpz(q.get_num()) / d;
}

Fp eval_mod(const LaurentPoly& f, Fp x) {
  if (f.is_zero()) return Fp(0);
  Fp acc(0);
  const auto& p = f.prim();
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + Fp::from_mpz(p[i]);
  return acc * Fp::from_rational(f.scale()) * x.pow_signed(f.low());
}

Fp eval_mod(const RatFunc& f, Fp x) {
  Fp d = eval_mod(f.den(), x);
  if (d.is_zero()) throw std::domain_error("zero divisor");
  return eval_mod(f.num(), x) / d;
}

}  // namespace qaff
