#include "qalex/hopf_rep.hpp"

#include <sstream>
#include <stdexcept>
#include <variant>

#include "qalex/errors.hpp"
#include "qalex/gaussian.hpp"

namespace qalex {

// ---------------------------------------------------------------- PolyFn

PolyFn::PolyFn(int variables, int order) : variables_(variables), order_(order) {
  if (variables != 1 && variables != 2) throw std::invalid_argument("PolyFn supports one or two variables");
}

PolyFn PolyFn::monomial(int variables, int order, int e0, int e1) {
  return monomial(variables, TruncSeries::one(order), e0, e1);
}

PolyFn PolyFn::monomial(int variables, const TruncSeries& c, int e0, int e1) {
  PolyFn p(variables, c.order());
  p.add_term({e0, e1}, c);
  return p;
}

void PolyFn::add_term(const Exponents& e, const TruncSeries& c) {
  if (e[0] < 0 || e[1] < 0) throw std::invalid_argument("negative exponent in PolyFn");
  if (variables_ == 1 && e[1] != 0) throw std::invalid_argument("z_1 used in a one-variable PolyFn");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void PolyFn::check_compatible(const PolyFn& rhs) const {
  if (variables_ != rhs.variables_ || order_ != rhs.order_)
    throw DimensionError("PolyFn operands differ in variables or order");
}

PolyFn& PolyFn::operator+=(const PolyFn& rhs) {
  check_compatible(rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

PolyFn& PolyFn::operator-=(const PolyFn& rhs) {
  check_compatible(rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

PolyFn operator*(const PolyFn& a, const PolyFn& b) {
  a.check_compatible(b);
  PolyFn out(a.variables_, a.order_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term({ea[0] + eb[0], ea[1] + eb[1]}, ca * cb);
  return out;
}

PolyFn operator*(const TruncSeries& c, const PolyFn& p) {
  PolyFn out(p.variables_, p.order_);
  for (const auto& [e, x] : p.terms_) out.add_term(e, c * x);
  return out;
}

bool operator==(const PolyFn& a, const PolyFn& b) {
  return a.variables_ == b.variables_ && a.order_ == b.order_ && a.terms_ == b.terms_;
}

PolyFn PolyFn::pow(unsigned k) const {
  PolyFn out = monomial(variables_, order_, 0, 0);
  for (unsigned i = 0; i < k; ++i) out = out * *this;
  return out;
}

std::string PolyFn::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << '(' << c.to_string() << ')';
    if (e[0]) os << "*z0^" << e[0];
    if (e[1]) os << "*z1^" << e[1];
  }
  return os.str();
}

// ----------------------------------------------------------- RepOperator

namespace {

struct MulVar {
  int variable;
};
struct DiffVar {
  int variable;
};
struct Scalar {
  TruncSeries value;
};
struct Graded {
  int variable;
};
struct Swap {};
struct Compose {
  std::shared_ptr<const RepOperator::Node> outer, inner;
};
struct Sum {
  std::shared_ptr<const RepOperator::Node> lhs, rhs;
  bool subtract;
};

}  // namespace

struct RepOperator::Node {
  std::variant<MulVar, DiffVar, Scalar, Graded, Swap, Compose, Sum> kind;
};

namespace {

void check_variable(const PolyFn& f, int variable) {
  if (variable < 0 || variable >= f.variables()) throw std::invalid_argument("operator variable out of range");
}

PolyFn apply_node(const RepOperator::Node& node, const PolyFn& f) {
  return std::visit(
      [&f](const auto& op) -> PolyFn {
        using T = std::decay_t<decltype(op)>;
        PolyFn out(f.variables(), f.order());
        if constexpr (std::is_same_v<T, MulVar>) {
          check_variable(f, op.variable);
          for (const auto& [e, c] : f.terms()) {
            auto e2 = e;
            ++e2[static_cast<std::size_t>(op.variable)];
            out.add_term(e2, c);
          }
        } else if constexpr (std::is_same_v<T, DiffVar>) {
          check_variable(f, op.variable);
          for (const auto& [e, c] : f.terms()) {
            const int k = e[static_cast<std::size_t>(op.variable)];
            if (k == 0) continue;
            auto e2 = e;
            --e2[static_cast<std::size_t>(op.variable)];
            out.add_term(e2, c * Rational(k));
          }
        } else if constexpr (std::is_same_v<T, Scalar>) {
          out = op.value * f;
        } else if constexpr (std::is_same_v<T, Graded>) {
          check_variable(f, op.variable);
          for (const auto& [e, c] : f.terms())
            out.add_term(e, one_plus_hbar_pow(-e[static_cast<std::size_t>(op.variable)], f.order()) * c);
        } else if constexpr (std::is_same_v<T, Swap>) {
          if (f.variables() != 2) throw std::invalid_argument("swap needs two variables");
          for (const auto& [e, c] : f.terms()) out.add_term({e[1], e[0]}, c);
        } else if constexpr (std::is_same_v<T, Compose>) {
          out = apply_node(*op.outer, apply_node(*op.inner, f));
        } else {
          out = apply_node(*op.lhs, f);
          if (op.subtract)
            out -= apply_node(*op.rhs, f);
          else
            out += apply_node(*op.rhs, f);
        }
        return out;
      },
      node.kind);
}

std::string describe(const RepOperator::Node& node) {
  return std::visit(
      [](const auto& op) -> std::string {
        using T = std::decay_t<decltype(op)>;
        if constexpr (std::is_same_v<T, MulVar>) {
          return "z" + std::to_string(op.variable);
        } else if constexpr (std::is_same_v<T, DiffVar>) {
          return "d/dz" + std::to_string(op.variable);
        } else if constexpr (std::is_same_v<T, Scalar>) {
          return "[" + op.value.to_string() + "]";
        } else if constexpr (std::is_same_v<T, Graded>) {
          return "(1+h)^(-z" + std::to_string(op.variable) + " d/dz" + std::to_string(op.variable) + ")";
        } else if constexpr (std::is_same_v<T, Swap>) {
          return "P";
        } else if constexpr (std::is_same_v<T, Compose>) {
          return describe(*op.outer) + " " + describe(*op.inner);
        } else {
          return "(" + describe(*op.lhs) + (op.subtract ? " - " : " + ") + describe(*op.rhs) + ")";
        }
      },
      node.kind);
}

}  // namespace

RepOperator RepOperator::multiply_by(int variable) {
  return RepOperator(std::make_shared<const Node>(Node{MulVar{variable}}));
}

RepOperator RepOperator::differentiate(int variable) {
  return RepOperator(std::make_shared<const Node>(Node{DiffVar{variable}}));
}

RepOperator RepOperator::scalar(const TruncSeries& c) {
  return RepOperator(std::make_shared<const Node>(Node{Scalar{c}}));
}

RepOperator RepOperator::graded_power(int variable) {
  return RepOperator(std::make_shared<const Node>(Node{Graded{variable}}));
}

RepOperator RepOperator::swap() { return RepOperator(std::make_shared<const Node>(Node{Swap{}})); }

PolyFn RepOperator::apply(const PolyFn& f) const { return apply_node(*node_, f); }

RepOperator operator*(const RepOperator& a, const RepOperator& b) {
  return RepOperator(std::make_shared<const RepOperator::Node>(RepOperator::Node{Compose{a.node_, b.node_}}));
}

RepOperator operator+(const RepOperator& a, const RepOperator& b) {
  return RepOperator(std::make_shared<const RepOperator::Node>(RepOperator::Node{Sum{a.node_, b.node_, false}}));
}

RepOperator operator-(const RepOperator& a, const RepOperator& b) {
  return RepOperator(std::make_shared<const RepOperator::Node>(RepOperator::Node{Sum{a.node_, b.node_, true}}));
}

std::string RepOperator::to_string() const { return describe(*node_); }

RepOperator rep_generator(std::string_view name, const Rational& lambda, int order) {
  if (name == "a") return RepOperator::scalar(one_plus_hbar_pow(1, order));
  if (name == "b") return RepOperator::differentiate(0);
  if (name == "phi") return RepOperator::scalar(TruncSeries::hbar(order)) * RepOperator::multiply_by(0);
  if (name == "psi")
    return RepOperator::scalar(TruncSeries::constant(order, lambda)) -
           RepOperator::multiply_by(0) * RepOperator::differentiate(0);
  throw std::invalid_argument("unknown generator '" + std::string(name) + "'");
}

// ---------------------------------------------------------------- checks

CommutatorReport commutator_check(const Rational& lambda, int order, int degree) {
  const RepOperator a = rep_generator("a", lambda, order);
  const RepOperator b = rep_generator("b", lambda, order);
  const RepOperator phi = rep_generator("phi", lambda, order);
  const RepOperator psi = rep_generator("psi", lambda, order);
  const RepOperator one = RepOperator::scalar(TruncSeries::one(order));

  struct Relation {
    const char* name;
    RepOperator lhs;
    RepOperator rhs;
  };
  const Relation relations[] = {
      {"phi psi - psi phi = phi", phi * psi - psi * phi, phi},
      {"phi b - b phi = 1 - a", phi * b - b * phi, one - a},
      {"psi b - b psi = b", psi * b - b * psi, b},
  };

  CommutatorReport report;
  for (const auto& rel : relations)
    for (int k = 0; k <= degree; ++k) {
      const PolyFn f = PolyFn::monomial(1, order, k);
      ++report.checked;
      if (!(rel.lhs.apply(f) == rel.rhs.apply(f)))
        report.violations.push_back(std::string(rel.name) + " fails on z^" + std::to_string(k) +
                                    " (lambda = " + qalex::to_string(lambda) + ")");
    }
  return report;
}

bool central_element_check(const Rational& lambda, int order, int degree) {
  const RepOperator a = rep_generator("a", lambda, order);
  const RepOperator b = rep_generator("b", lambda, order);
  const RepOperator phi = rep_generator("phi", lambda, order);
  const RepOperator psi = rep_generator("psi", lambda, order);
  const RepOperator c = phi * b + (a - RepOperator::scalar(TruncSeries::one(order))) * psi;
  const TruncSeries expected = TruncSeries::hbar(order) * lambda;
  for (int k = 0; k <= degree; ++k) {
    const PolyFn f = PolyFn::monomial(1, order, k);
    if (!(c.apply(f) == expected * f)) return false;
  }
  return true;
}

namespace {

void require_two_variables(const PolyFn& f) {
  if (f.variables() != 2) throw std::invalid_argument("R-matrix acts on two-variable polynomials");
}

Rational factorial(int n) {
  Rational out = 1;
  for (int i = 2; i <= n; ++i) out *= i;
  return out;
}

}  // namespace

PolyFn r_action_double_sum(const PolyFn& f) {
  require_two_variables(f);
  const int order = f.order();
  const PolyFn g = RepOperator::swap().apply(f);
  PolyFn out(2, order);
  for (const auto& [e, c] : g.terms()) {
    const int p = e[0];
    const int q = e[1];
    // (z0 d1)^n z0^p z1^q = q!/(q-n)! z0^{p+n} z1^{q-n}; binom(-z0 d0, m) then
    // multiplies by binom(-(p+n), m).
    for (int n = 0; n <= q && n <= order; ++n) {
      const Rational falling = factorial(q) / factorial(q - n);
      for (int m = 0; m + n <= order; ++m) {
        const Rational coeff = binomial(Rational(-(p + n)), m) * falling / factorial(n);
        std::vector<Rational> h(static_cast<std::size_t>(order) + 1, Rational(0));
        h[static_cast<std::size_t>(m + n)] = coeff;
        out.add_term({p + n, q - n}, TruncSeries(order, std::move(h)) * c);
      }
    }
  }
  return out;
}

PolyFn r_action_graded(const PolyFn& f) {
  require_two_variables(f);
  const int order = f.order();
  // exp(hbar z0 d1) as a finite operator sum: (z0 d1)^n vanishes past deg_z1.
  const RepOperator shift = RepOperator::multiply_by(0) * RepOperator::differentiate(1);
  PolyFn g = RepOperator::swap().apply(f);
  PolyFn acc = g;
  PolyFn power = g;
  for (int n = 1; n <= order && !power.is_zero(); ++n) {
    power = shift.apply(power);
    std::vector<Rational> h(static_cast<std::size_t>(order) + 1, Rational(0));
    h[static_cast<std::size_t>(n)] = 1 / factorial(n);
    acc += TruncSeries(order, std::move(h)) * power;
  }
  return RepOperator::graded_power(0).apply(acc);
}

PolyFn r_action_substitution(const PolyFn& f) {
  require_two_variables(f);
  const int order = f.order();
  const SeriesMatrix u = crossing_kernel(1, order);
  // (U^T z)_0 = U00 z0 + U10 z1, (U^T z)_1 = U01 z0 + U11 z1
  const PolyFn x0 = PolyFn::monomial(2, u(0, 0), 1, 0) + PolyFn::monomial(2, u(1, 0), 0, 1);
  const PolyFn x1 = PolyFn::monomial(2, u(0, 1), 1, 0) + PolyFn::monomial(2, u(1, 1), 0, 1);
  PolyFn out(2, order);
  for (const auto& [e, c] : f.terms())
    out += c * (x0.pow(static_cast<unsigned>(e[0])) * x1.pow(static_cast<unsigned>(e[1])));
  return out;
}

bool r_matrix_action_check(int p, int q, int order) {
  const PolyFn f = PolyFn::monomial(2, order, p, q);
  const PolyFn expected = r_action_substitution(f);
  return r_action_double_sum(f) == expected && r_action_graded(f) == expected;
}

}  // namespace qalex
