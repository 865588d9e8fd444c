#include <crossbraid/polysystem.hpp>

#include <crossbraid/linalg.hpp>

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>

namespace crossbraid {

Polynomial Polynomial::constant(std::size_t nvars, const Scalar& c) {
  Polynomial p(nvars);
  p.add_term(Monomial(nvars, 0), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t var) {
  Polynomial p(nvars);
  Monomial m(nvars, 0);
  m.at(var) = 1;
  p.add_term(m, 1);
  return p;
}

unsigned Polynomial::degree() const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, std::accumulate(m.begin(), m.end(), 0U));
  return d;
}

std::vector<std::size_t> Polynomial::variables() const {
  std::set<std::size_t> vars;
  for (const auto& [m, c] : terms_)
    for (std::size_t v = 0; v < m.size(); ++v)
      if (m[v] != 0) vars.insert(v);
  return {vars.begin(), vars.end()};
}

Scalar Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Scalar& c) {
  if (m.size() != nvars_) throw std::invalid_argument("Polynomial: monomial arity mismatch");
  if (crossbraid::is_zero(c)) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (crossbraid::is_zero(it->second)) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Scalar& s) {
  if (crossbraid::is_zero(s)) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out(a.nvars_);
  Polynomial::Monomial m(a.nvars_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      for (std::size_t v = 0; v < m.size(); ++v) m[v] = ma[v] + mb[v];
      out.add_term(m, ca * cb);
    }
  }
  return out;
}

Polynomial Polynomial::substitute(std::size_t var, const Polynomial& value) const {
  Polynomial out(nvars_);
  std::vector<Polynomial> powers{constant(nvars_, 1)};
  for (const auto& [m, c] : terms_) {
    const unsigned e = m[var];
    while (powers.size() <= e) powers.push_back(powers.back() * value);
    Monomial rest = m;
    rest[var] = 0;
    Polynomial term(nvars_);
    term.add_term(rest, c);
    out += term * powers[e];
  }
  return out;
}

Scalar Polynomial::evaluate(const std::vector<Scalar>& point) const {
  Scalar total = 0;
  for (const auto& [m, c] : terms_) {
    Scalar t = c;
    for (std::size_t v = 0; v < m.size(); ++v)
      for (unsigned k = 0; k < m[v]; ++k) t *= point.at(v);
    total += t;
  }
  return total;
}

std::vector<Scalar> Polynomial::univariate_coefficients(std::size_t var) const {
  std::vector<Scalar> coeffs(1);
  for (const auto& [m, c] : terms_) {
    for (std::size_t v = 0; v < m.size(); ++v)
      if (v != var && m[v] != 0) throw std::logic_error("univariate_coefficients: polynomial is not univariate");
    if (coeffs.size() <= m[var]) coeffs.resize(m[var] + 1);
    coeffs[m[var]] = c;
  }
  return coeffs;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    os << (first ? "" : " + ") << c.get_str();
    for (std::size_t v = 0; v < m.size(); ++v) {
      if (m[v] == 1) os << "*t" << v;
      if (m[v] > 1) os << "*t" << v << '^' << m[v];
    }
    first = false;
  }
  return os.str();
}

namespace {

std::vector<mpz_class> positive_divisors(mpz_class n) {
  if (n < 0) n = -n;
  std::vector<mpz_class> small, large;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

void trim(std::vector<Scalar>& c) {
  while (!c.empty() && is_zero(c.back())) c.pop_back();
}

Scalar horner(const std::vector<Scalar>& c, const Scalar& x) {
  Scalar acc = 0;
  for (std::size_t k = c.size(); k-- > 0;) acc = acc * x + c[k];
  return acc;
}

// divide by (x - r), assuming r is a root
std::vector<Scalar> deflate(const std::vector<Scalar>& c, const Scalar& r) {
  std::vector<Scalar> q(c.size() - 1);
  Scalar carry = 0;
  for (std::size_t k = c.size(); k-- > 1;) {
    carry = c[k] + carry * r;
    q[k - 1] = carry;
  }
  return q;
}

}  // namespace

std::vector<Scalar> rational_roots(std::vector<Scalar> coeffs) {
  trim(coeffs);
  if (coeffs.empty()) throw PositiveDimensional("rational_roots: zero polynomial");
  std::set<Scalar> roots;
  while (coeffs.size() > 1 && is_zero(coeffs.front())) {
    roots.insert(Scalar(0));
    coeffs.erase(coeffs.begin());
  }
  bool found = true;
  while (coeffs.size() > 1 && found) {
    found = false;
    mpz_class lcm = 1;
    for (const auto& c : coeffs) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
    std::vector<mpz_class> ints;
    for (const auto& c : coeffs) ints.emplace_back(c.get_num() * (lcm / c.get_den()));
    for (const auto& p : positive_divisors(ints.front())) {
      for (const auto& q : positive_divisors(ints.back())) {
        for (int sign : {1, -1}) {
          Scalar cand(sign * p, q);
          cand.canonicalize();
          if (is_zero(horner(coeffs, cand))) {
            roots.insert(cand);
            coeffs = deflate(coeffs, cand);
            found = true;
            break;
          }
        }
        if (found) break;
      }
      if (found) break;
    }
  }
  if (coeffs.size() > 1) {
    std::ostringstream os;
    os << "irreducible factor of degree " << coeffs.size() - 1 << " with coefficients";
    for (const auto& c : coeffs) os << ' ' << c.get_str();
    throw OutsideRationals(os.str());
  }
  return {roots.begin(), roots.end()};
}

namespace {

struct Branch {
  std::vector<Polynomial> equations;
  // var -> affine expression in the still-free variables (or a constant)
  std::vector<std::optional<Polynomial>> bound;
};

void drop_zeros(std::vector<Polynomial>& eqs) {
  std::erase_if(eqs, [](const Polynomial& p) { return p.is_zero(); });
}

bool has_nonzero_constant(const std::vector<Polynomial>& eqs) {
  return std::any_of(eqs.begin(), eqs.end(), [](const Polynomial& p) { return p.degree() == 0 && !p.is_zero(); });
}

void bind(Branch& b, std::size_t var, const Polynomial& value) {
  for (auto& e : b.equations) e = e.substitute(var, value);
  for (auto& v : b.bound)
    if (v) *v = v->substitute(var, value);
  b.bound[var] = value;
  drop_zeros(b.equations);
}

void solve_branch(std::size_t nvars, Branch b, std::vector<Vector>& out) {
  drop_zeros(b.equations);
  if (has_nonzero_constant(b.equations)) return;

  if (b.equations.empty()) {
    Vector point(nvars);
    for (std::size_t v = 0; v < nvars; ++v) {
      if (!b.bound[v]) throw PositiveDimensional("variable t" + std::to_string(v) + " is unconstrained");
    }
    for (std::size_t v = 0; v < nvars; ++v) {
      if (b.bound[v]->degree() > 0) throw PositiveDimensional("variable t" + std::to_string(v) + " stays free");
      point[v] = b.bound[v]->coefficient(Polynomial::Monomial(nvars, 0));
    }
    out.push_back(std::move(point));
    return;
  }

  // linear phase
  std::vector<const Polynomial*> linear;
  for (const auto& e : b.equations)
    if (e.degree() == 1) linear.push_back(&e);
  if (!linear.empty()) {
    Matrix a(linear.size(), nvars + 1);
    for (std::size_t r = 0; r < linear.size(); ++r) {
      for (const auto& [m, c] : linear[r]->terms()) {
        const auto it = std::find(m.begin(), m.end(), 1U);
        if (it == m.end()) {
          a(r, nvars) = -c;
        } else {
          a(r, static_cast<std::size_t>(it - m.begin())) = c;
        }
      }
    }
    const auto ech = rref(a);
    if (!ech.pivots.empty() && ech.pivots.back() == nvars) return;  // inconsistent
    for (std::size_t r = 0; r < ech.pivots.size(); ++r) {
      const std::size_t var = ech.pivots[r];
      Polynomial value = Polynomial::constant(nvars, ech.reduced(r, nvars));
      for (std::size_t j = var + 1; j < nvars; ++j) {
        if (!is_zero(ech.reduced(r, j))) value -= Polynomial::variable(nvars, j) * ech.reduced(r, j);
      }
      bind(b, var, value);
    }
    solve_branch(nvars, std::move(b), out);
    return;
  }

  // univariate branching: lowest degree first
  const Polynomial* best = nullptr;
  for (const auto& e : b.equations) {
    if (e.variables().size() == 1 && (!best || e.degree() < best->degree())) best = &e;
  }
  if (!best) {
    throw IrreducibleSystem("no linear or univariate equation left; first remaining: " +
                            b.equations.front().to_string());
  }
  const std::size_t var = best->variables().front();
  for (const auto& root : rational_roots(best->univariate_coefficients(var))) {
    Branch next = b;
    bind(next, var, Polynomial::constant(nvars, root));
    solve_branch(nvars, std::move(next), out);
  }
}

}  // namespace

std::vector<Vector> solve_polynomial_system(std::size_t nvars, std::vector<Polynomial> equations) {
  for (const auto& e : equations)
    if (e.nvars() != nvars) throw std::invalid_argument("solve_polynomial_system: arity mismatch");
  Branch root{std::move(equations), std::vector<std::optional<Polynomial>>(nvars)};
  std::vector<Vector> out;
  solve_branch(nvars, std::move(root), out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace crossbraid
