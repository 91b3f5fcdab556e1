#pragma once

#include <functional>
#include <span>
#include <string_view>

#include "vertalign/planar_norms.hpp"
#include "vertalign/vec.hpp"

namespace vertalign {

/// x -> P(x) for some operator on R^n (a projector, or an unscaled prox).
using VecMap = std::function<Vec(std::span<const double>)>;

/// (gamma, x) -> prox_{gamma f}(x).
using ProxFn = std::function<Vec(double, std::span<const double>)>;

/// prox_{gamma f*}(x) obtained from the primal prox through the Moreau
/// decomposition: x - gamma prox_{f/gamma}(x / gamma).
Vec moreau_complement(const ProxFn& prox_f, double gamma, std::span<const double> x);

/// h = alpha f(. - w) for positively homogeneous convex f with known prox_f:
/// prox_{gamma h}(x) = w + gamma alpha prox_f((x - w) / (gamma alpha)).
Vec prox_scaled_shifted_homogeneous(const VecMap& base_prox, double alpha, double gamma,
                                    std::span<const double> w, std::span<const double> x);
/// prox_{gamma h*}(x) = alpha prox_{f*}((x - gamma w) / alpha).
Vec prox_scaled_shifted_homogeneous_conjugate(const VecMap& base_conjugate_prox, double alpha,
                                              double gamma, std::span<const double> w,
                                              std::span<const double> x);

/// h = alpha f(. - w) for a norm f whose dual unit ball has projector P:
/// prox_{gamma h}(x) = x - gamma alpha P((x - w) / (gamma alpha)).
Vec prox_via_dual_ball(const VecMap& ball_projector, double alpha, double gamma,
                       std::span<const double> w, std::span<const double> x);
/// prox_{gamma h*}(x) = alpha P((x - gamma w) / alpha).
Vec prox_via_dual_ball_conjugate(const VecMap& ball_projector, double alpha, double gamma,
                                 std::span<const double> w, std::span<const double> x);

/// Planar-norm prox: h = alpha f(. - w), f one of the three planar norms.
PlanarPoint prox_planar_norm(PlanarNorm norm, double alpha, double gamma, PlanarPoint w,
                             PlanarPoint x);
PlanarPoint prox_planar_norm_conjugate(PlanarNorm norm, double alpha, double gamma, PlanarPoint w,
                                       PlanarPoint x);

// Closed-form rows of the common operator table.

Vec prox_indicator(const VecMap& projector, std::span<const double> x);
Vec prox_indicator_conjugate(const VecMap& projector, double gamma, std::span<const double> x);

/// f = alpha |x - w|^2
Vec prox_squared_distance(double alpha, double gamma, std::span<const double> w,
                          std::span<const double> x);
Vec prox_squared_distance_conjugate(double alpha, double gamma, std::span<const double> w,
                                    std::span<const double> x);

/// f = alpha |x - w| (Euclidean)
Vec prox_norm_distance(double alpha, double gamma, std::span<const double> w,
                       std::span<const double> x);
Vec prox_norm_distance_conjugate(double alpha, double gamma, std::span<const double> w,
                                 std::span<const double> x);

/// f = alpha |x - w|_1
Vec prox_l1_distance(double alpha, double gamma, std::span<const double> w,
                     std::span<const double> x);
Vec prox_l1_distance_conjugate(double alpha, double gamma, std::span<const double> w,
                               std::span<const double> x);

/// f = alpha |<direction, x - w>|
Vec prox_abs_inner(double alpha, double gamma, std::span<const double> direction,
                   std::span<const double> w, std::span<const double> x);
Vec prox_abs_inner_conjugate(double alpha, double gamma, std::span<const double> direction,
                             std::span<const double> w, std::span<const double> x);

enum class TableKind { indicator, squared_distance, norm_distance, l1_distance, abs_inner };

std::string_view to_string(TableKind kind);

/// Descriptor for one table row. `projector` is used only by the indicator
/// row; `direction` only by the abs-inner row.
struct TableTerm {
  TableKind kind = TableKind::squared_distance;
  double alpha = 1.0;
  Vec w;
  Vec direction;
  VecMap projector;
};

Vec prox_table(const TableTerm& term, double gamma, std::span<const double> x);
Vec prox_table_conjugate(const TableTerm& term, double gamma, std::span<const double> x);
/// f(x); +inf for an indicator at a point its projector moves.
double table_value(const TableTerm& term, std::span<const double> x);

}  // namespace vertalign
