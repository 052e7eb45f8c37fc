#include "hbl/analytic_function.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <utility>
#include <variant>

#include "hbl/errors.hpp"

namespace hbl {

std::string to_string(Complex z) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g%+.17gi", z.real(), z.imag());
  return buf;
}

namespace {

Jet jet_constant(Complex v, int order) {
  Jet j;
  j.order = order;
  j.c[0] = v;
  return j;
}

Jet jet_add(const Jet& a, const Jet& b, double sign) {
  Jet r;
  r.order = a.order;
  for (int k = 0; k <= r.order; ++k) r.c[k] = a.c[k] + sign * b.c[k];
  return r;
}

Jet jet_mul(const Jet& a, const Jet& b) {
  Jet r;
  r.order = a.order;
  for (int k = 0; k <= r.order; ++k) {
    Complex s{};
    for (int i = 0; i <= k; ++i) s += a.c[i] * b.c[k - i];
    r.c[k] = s;
  }
  return r;
}

Jet jet_div(const Jet& a, const Jet& b) {
  if (b.c[0] == Complex{}) throw DomainError("division by an analytic function that vanishes");
  Jet r;
  r.order = a.order;
  for (int k = 0; k <= r.order; ++k) {
    Complex s = a.c[k];
    for (int i = 1; i <= k; ++i) s -= b.c[i] * r.c[k - i];
    r.c[k] = s / b.c[0];
  }
  return r;
}

// Taylor coefficients of sum_k coeffs[k] t^k about t = x (repeated Horner).
Jet polynomial_jet(const std::vector<Complex>& coeffs, Complex x, int order) {
  Jet j;
  j.order = order;
  std::vector<Complex> b = coeffs;
  for (int k = 0; k <= order && !b.empty(); ++k) {
    Complex acc{};
    for (std::size_t i = b.size(); i-- > 0;) {
      acc = acc * x + b[i];
      b[i] = acc;
    }
    j.c[k] = b.front();
    b.erase(b.begin());
  }
  return j;
}

}  // namespace

struct AnalyticFunction::Node {
  struct PowerSeries {
    Complex center;
    std::vector<Complex> coefficients;
    double radius;
  };
  struct Polynomial {
    std::vector<Complex> coefficients;
  };
  struct ScaledIdentity {
    Complex alpha;
  };
  struct Blaschke {
    std::vector<Complex> zeros;
    Complex rotation;
  };
  // offset + sum_j weight_j Log(1 - z conj(u_j)); branch-free on the open disk
  // because Re(1 - z conj(u)) > 0 there.
  struct StepPart {
    std::vector<Complex> units;
    std::vector<Complex> weights;
    Complex offset;
  };
  enum class Op { add, sub, mul, div };
  struct Binary {
    AnalyticFunction lhs, rhs;
    Op op;
  };
  struct Precomposed {
    AnalyticFunction inner;
    Complex alpha;
  };
  struct Dilatation {
    AnalyticFunction h, g;
  };

  std::variant<PowerSeries, Polynomial, ScaledIdentity, Blaschke, StepPart, Binary, Precomposed,
               Dilatation>
      data;

  bool contains(Complex z) const;
  Jet taylor(Complex z, int order) const;
};

bool AnalyticFunction::Node::contains(Complex z) const {
  if (!is_finite(z)) return false;
  return std::visit(
      [z](const auto& d) -> bool {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, PowerSeries>) {
          return std::abs(z - d.center) < 0.99 * d.radius;
        } else if constexpr (std::is_same_v<T, Polynomial> || std::is_same_v<T, ScaledIdentity>) {
          return true;
        } else if constexpr (std::is_same_v<T, Blaschke>) {
          return std::all_of(d.zeros.begin(), d.zeros.end(), [z](Complex a) {
            return std::abs(1.0 - std::conj(a) * z) > 1e-300 && std::abs(a) * std::abs(z) < 1.0;
          });
        } else if constexpr (std::is_same_v<T, StepPart>) {
          return std::abs(z) < 1.0;
        } else if constexpr (std::is_same_v<T, Binary>) {
          return d.lhs.contains(z) && d.rhs.contains(z);
        } else if constexpr (std::is_same_v<T, Precomposed>) {
          return d.inner.contains(d.alpha * z);
        } else {
          return d.h.contains(z) && d.g.contains(z);
        }
      },
      data);
}

Jet AnalyticFunction::Node::taylor(Complex z, int order) const {
  return std::visit(
      [z, order](const auto& d) -> Jet {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, PowerSeries>) {
          return polynomial_jet(d.coefficients, z - d.center, order);
        } else if constexpr (std::is_same_v<T, Polynomial>) {
          return polynomial_jet(d.coefficients, z, order);
        } else if constexpr (std::is_same_v<T, ScaledIdentity>) {
          Jet j = jet_constant(d.alpha * z, order);
          if (order >= 1) j.c[1] = d.alpha;
          return j;
        } else if constexpr (std::is_same_v<T, Blaschke>) {
          Jet acc = jet_constant(d.rotation, order);
          for (Complex a : d.zeros) {
            Jet num = jet_constant(z - a, order);
            Jet den = jet_constant(1.0 - std::conj(a) * z, order);
            if (order >= 1) {
              num.c[1] = 1.0;
              den.c[1] = -std::conj(a);
            }
            acc = jet_mul(acc, jet_div(num, den));
          }
          return acc;
        } else if constexpr (std::is_same_v<T, StepPart>) {
          Jet j = jet_constant(d.offset, order);
          for (std::size_t i = 0; i < d.units.size(); ++i) {
            const Complex u = d.units[i];
            j.c[0] += d.weights[i] * std::log(1.0 - z * std::conj(u));
            const Complex inv = 1.0 / (u - z);
            Complex p = inv;
            for (int k = 1; k <= order; ++k) {
              j.c[k] -= d.weights[i] * p / static_cast<double>(k);
              p *= inv;
            }
          }
          return j;
        } else if constexpr (std::is_same_v<T, Binary>) {
          const Jet a = d.lhs.taylor(z, order);
          const Jet b = d.rhs.taylor(z, order);
          switch (d.op) {
            case Op::add: return jet_add(a, b, 1.0);
            case Op::sub: return jet_add(a, b, -1.0);
            case Op::mul: return jet_mul(a, b);
            case Op::div: return jet_div(a, b);
          }
          return a;
        } else if constexpr (std::is_same_v<T, Precomposed>) {
          Jet j = d.inner.taylor(d.alpha * z, order);
          Complex p = 1.0;
          for (int k = 0; k <= order; ++k) {
            j.c[k] *= p;
            p *= d.alpha;
          }
          return j;
        } else {
          if (order + 1 > kMaxJetOrder) throw InvalidArgument("dilatation jet order too high");
          const Jet h = d.h.taylor(z, order + 1);
          const Jet g = d.g.taylor(z, order + 1);
          Jet hp, gp;
          hp.order = gp.order = order;
          for (int k = 0; k <= order; ++k) {
            hp.c[k] = static_cast<double>(k + 1) * h.c[k + 1];
            gp.c[k] = static_cast<double>(k + 1) * g.c[k + 1];
          }
          if (hp.c[0] == Complex{})
            throw DegeneratePoint("h' vanishes at " + to_string(z) + "; dilatation undefined");
          return jet_div(gp, hp);
        }
      },
      data);
}

namespace {

template <class T>
std::shared_ptr<const AnalyticFunction::Node> make_node(T payload) {
  auto n = std::make_shared<AnalyticFunction::Node>();
  n->data = std::move(payload);
  return n;
}

void require_finite(std::span<const Complex> values, const char* what) {
  for (Complex v : values)
    if (!is_finite(v)) throw InvalidArgument(std::string(what) + " must be finite");
}

}  // namespace

AnalyticFunction AnalyticFunction::power_series(Complex center, std::vector<Complex> coefficients,
                                                double radius) {
  if (!(radius > 0.0) || !std::isfinite(radius))
    throw InvalidArgument("power series radius must be positive and finite");
  if (coefficients.empty()) throw InvalidArgument("power series needs at least one coefficient");
  require_finite(coefficients, "power series coefficients");
  if (!is_finite(center)) throw InvalidArgument("power series center must be finite");
  return AnalyticFunction(make_node(Node::PowerSeries{center, std::move(coefficients), radius}));
}

AnalyticFunction AnalyticFunction::polynomial(std::vector<Complex> coefficients) {
  if (coefficients.empty()) coefficients.push_back(0.0);
  require_finite(coefficients, "polynomial coefficients");
  return AnalyticFunction(make_node(Node::Polynomial{std::move(coefficients)}));
}

AnalyticFunction AnalyticFunction::constant(Complex c) { return polynomial({c}); }

AnalyticFunction AnalyticFunction::scaled_identity(Complex alpha) {
  if (!is_finite(alpha)) throw InvalidArgument("scaled identity factor must be finite");
  return AnalyticFunction(make_node(Node::ScaledIdentity{alpha}));
}

AnalyticFunction AnalyticFunction::finite_blaschke(std::vector<Complex> zeros, Complex rotation) {
  require_finite(zeros, "Blaschke zeros");
  for (Complex a : zeros)
    if (!(std::abs(a) < 1.0))
      throw InvalidArgument("Blaschke zero " + to_string(a) + " is not inside the unit disk");
  if (!(std::abs(std::abs(rotation) - 1.0) <= 1e-12))
    throw InvalidArgument("Blaschke rotation must be unimodular");
  return AnalyticFunction(make_node(Node::Blaschke{std::move(zeros), rotation}));
}

AnalyticFunction AnalyticFunction::step_map_part(const StepBoundaryFunction& b, StepPartRole role) {
  // Writing the harmonic measure of arc k as Re of
  //   A_k(z) = l_k/(2 pi) + (1/(pi i)) [Log(1 - z/u_{k+1}) - Log(1 - z/u_k)],
  // with A_k'(z) = (1/(pi i)) [1/(u_k - z) - 1/(u_{k+1} - z)], gives
  //   h = sum_k w_k A_k/2 + const,   g = sum_k conj(w_k) (A_k - A_k(0))/2,
  // and regrouping per jump point j yields the weights below.
  const std::size_t n = b.size();
  const auto w = b.values();
  const Complex two_pi_i{0.0, kTwoPi};
  Node::StepPart part;
  part.units.reserve(n);
  part.weights.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    const Complex prev = w[(j + n - 1) % n];
    const Complex cur = w[j];
    part.units.push_back(b.jump_unit(j));
    part.weights.push_back(role == StepPartRole::analytic
                               ? (prev - cur) / two_pi_i
                               : (std::conj(prev) - std::conj(cur)) / two_pi_i);
  }
  if (role == StepPartRole::analytic) {
    for (std::size_t k = 0; k < n; ++k) part.offset += w[k] * (b.arc_length(k) / kTwoPi);
  }
  return AnalyticFunction(make_node(std::move(part)));
}

AnalyticFunction AnalyticFunction::dilatation_of(const AnalyticFunction& h,
                                                 const AnalyticFunction& g) {
  return AnalyticFunction(make_node(Node::Dilatation{h, g}));
}

AnalyticFunction AnalyticFunction::precomposed(Complex alpha) const {
  if (!is_finite(alpha)) throw InvalidArgument("precomposition factor must be finite");
  return AnalyticFunction(make_node(Node::Precomposed{*this, alpha}));
}

Jet AnalyticFunction::taylor(Complex z, int order) const {
  if (order < 0 || order > kMaxJetOrder) throw InvalidArgument("jet order out of range");
  if (!node_->contains(z))
    throw DomainError("point " + to_string(z) + " is outside the domain of evaluation");
  return node_->taylor(z, order);
}

Complex AnalyticFunction::value(Complex z) const { return taylor(z, 0).value(); }
Complex AnalyticFunction::derivative(Complex z) const { return taylor(z, 1).derivative(); }
bool AnalyticFunction::contains(Complex z) const { return node_->contains(z); }

AnalyticFunction::Kind AnalyticFunction::kind() const {
  return std::visit(
      [](const auto& d) -> Kind {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, Node::PowerSeries>) return Kind::power_series;
        else if constexpr (std::is_same_v<T, Node::Polynomial>) return Kind::polynomial;
        else if constexpr (std::is_same_v<T, Node::ScaledIdentity>) return Kind::scaled_identity;
        else if constexpr (std::is_same_v<T, Node::Blaschke>) return Kind::finite_blaschke;
        else if constexpr (std::is_same_v<T, Node::StepPart>) return Kind::step_map_part;
        else if constexpr (std::is_same_v<T, Node::Precomposed>) return Kind::precomposed;
        else if constexpr (std::is_same_v<T, Node::Dilatation>) return Kind::dilatation;
        else {
          switch (d.op) {
            case Node::Op::add:
            case Node::Op::sub: return Kind::sum;
            case Node::Op::mul: return Kind::product;
            case Node::Op::div: return Kind::quotient;
          }
          return Kind::sum;
        }
      },
      node_->data);
}

AnalyticFunction operator+(const AnalyticFunction& a, const AnalyticFunction& b) {
  return AnalyticFunction(make_node(AnalyticFunction::Node::Binary{a, b, AnalyticFunction::Node::Op::add}));
}
AnalyticFunction operator-(const AnalyticFunction& a, const AnalyticFunction& b) {
  return AnalyticFunction(make_node(AnalyticFunction::Node::Binary{a, b, AnalyticFunction::Node::Op::sub}));
}
AnalyticFunction operator*(const AnalyticFunction& a, const AnalyticFunction& b) {
  return AnalyticFunction(make_node(AnalyticFunction::Node::Binary{a, b, AnalyticFunction::Node::Op::mul}));
}
AnalyticFunction operator/(const AnalyticFunction& a, const AnalyticFunction& b) {
  return AnalyticFunction(make_node(AnalyticFunction::Node::Binary{a, b, AnalyticFunction::Node::Op::div}));
}
AnalyticFunction operator*(Complex c, const AnalyticFunction& f) {
  return AnalyticFunction::constant(c) * f;
}

}  // namespace hbl
