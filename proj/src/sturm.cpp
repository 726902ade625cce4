#include "ratext/sturm.hpp"

#include <stdexcept>
#include <vector>

namespace ratext {

namespace {

std::vector<Poly> sturm_chain(const Poly& p) {
  std::vector<Poly> chain;
  chain.push_back(p);
  Poly d = p.derivative();
  if (d.is_zero()) return chain;
  chain.push_back(d);
  while (true) {
    const Poly& a = chain[chain.size() - 2];
    const Poly& b = chain.back();
    Poly r = -Poly::divmod(a, b).second;
    if (r.is_zero()) break;
    // Scaling by a positive constant preserves the sign sequence.
    BigRational lead = abs(r.leading());
    r *= BigRational(1) / lead;
    chain.push_back(std::move(r));
    if (chain.back().degree() == 0) break;
  }
  return chain;
}

int sign_at(const Poly& p, const std::optional<BigRational>& endpoint, bool is_lower) {
  if (endpoint) return sgn(p.eval(*endpoint));
  if (p.is_zero()) return 0;
  int lead = sgn(p.leading());
  if (is_lower)  // -infinity
    return p.degree() % 2 == 0 ? lead : -lead;
  return lead;  // +infinity
}

int sign_changes(const std::vector<Poly>& chain, const std::optional<BigRational>& endpoint,
                 bool is_lower) {
  int changes = 0, prev = 0;
  for (const Poly& q : chain) {
    int s = sign_at(q, endpoint, is_lower);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++changes;
    prev = s;
  }
  return changes;
}

}  // namespace

int sturm_count(const Poly& p, const Interval& iv) {
  if (p.is_zero()) throw std::domain_error("sturm_count on zero polynomial");
  if (iv.lo && iv.hi && !(*iv.lo < *iv.hi)) throw std::invalid_argument("empty interval");
  if (p.degree() == 0) return 0;

  Poly sf = p.square_free();
  std::vector<Poly> chain = sturm_chain(sf);

  // Sturm's theorem counts distinct roots in (lo, hi].
  int count = sign_changes(chain, iv.lo, true) - sign_changes(chain, iv.hi, false);
  if (iv.lo && !iv.lo_open && sf.eval(*iv.lo).is_zero()) ++count;
  if (iv.hi && iv.hi_open && sf.eval(*iv.hi).is_zero()) --count;
  return count;
}

}  // namespace ratext
