#pragma once

#include <memory>
#include <span>
#include <string>
#include <variant>

#include "vertalign/constraints.hpp"
#include "vertalign/prox.hpp"
#include "vertalign/spline_area.hpp"

namespace vertalign {

/// f == 0: prox is the identity, conjugate prox maps to 0.
struct ZeroTerm {};

/// alpha f(x - w) on R^2, f a planar norm.
struct PlanarNormTerm {
  PlanarNorm norm = PlanarNorm::stadium;
  double alpha = 1.0;
  PlanarPoint w;
};

/// alpha A_odd or alpha A_even.
struct AreaPartTerm {
  std::shared_ptr<const AreaModel> model;
  AreaPart part = AreaPart::odd;
  double alpha = 1.0;
};

/// alpha sum_i eta_i |x_i - w_i|
struct AreaL1Term {
  Vec w;
  Vec eta;
  double alpha = 1.0;
};

/// alpha |<eta, x - w>|
struct AbsSignedAreaTerm {
  Vec w;
  Vec eta;
  double alpha = 1.0;
};

/// One summand of a splitting objective, with closed-form evaluators for
/// prox_{gamma f} and prox_{gamma f*}. The catalog of kinds is closed.
class ProxTerm {
 public:
  using Descriptor =
      std::variant<ZeroTerm, TableTerm, PlanarNormTerm, AreaPartTerm, AreaL1Term, AbsSignedAreaTerm>;

  explicit ProxTerm(Descriptor descriptor, std::string label = {});

  Vec prox(double gamma, std::span<const double> x) const;
  Vec conjugate_prox(double gamma, std::span<const double> x) const;
  /// f(x), +inf outside the domain of an indicator.
  double value(std::span<const double> x) const;

  const Descriptor& descriptor() const { return descriptor_; }
  const std::string& label() const { return label_; }

 private:
  Descriptor descriptor_;
  std::string label_;
};

ProxTerm make_indicator_term(std::shared_ptr<const ConstraintSet> set);

}  // namespace vertalign
