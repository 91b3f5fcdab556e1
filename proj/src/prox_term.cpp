#include "vertalign/prox_term.hpp"

#include <cmath>
#include <stdexcept>

namespace vertalign {

namespace {

template <class... Fs>
struct overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

Vec from_planar(PlanarPoint p) { return {p.x1, p.x2}; }

PlanarPoint to_planar(std::span<const double> x) {
  if (x.size() != 2) throw std::invalid_argument("planar norm term: expected a point in R^2");
  return {x[0], x[1]};
}

std::string default_label(const ProxTerm::Descriptor& d) {
  return std::visit(overloaded{
                        [](const ZeroTerm&) { return std::string("zero"); },
                        [](const TableTerm& t) { return std::string(to_string(t.kind)); },
                        [](const PlanarNormTerm& t) { return "planar_" + std::string(to_string(t.norm)); },
                        [](const AreaPartTerm& t) {
                          return std::string(t.part == AreaPart::odd ? "area_odd_" : "area_even_") +
                                 std::string(to_string(t.model->norm));
                        },
                        [](const AreaL1Term&) { return std::string("area_l1"); },
                        [](const AbsSignedAreaTerm&) { return std::string("abs_signed_area"); },
                    },
                    d);
}

}  // namespace

ProxTerm::ProxTerm(Descriptor descriptor, std::string label)
    : descriptor_(std::move(descriptor)), label_(std::move(label)) {
  if (const auto* area = std::get_if<AreaPartTerm>(&descriptor_); area && !area->model)
    throw std::invalid_argument("ProxTerm: area term needs a model");
  if (label_.empty()) label_ = default_label(descriptor_);
}

Vec ProxTerm::prox(double gamma, std::span<const double> x) const {
  return std::visit(
      overloaded{
          [&](const ZeroTerm&) { return Vec(x.begin(), x.end()); },
          [&](const TableTerm& t) { return prox_table(t, gamma, x); },
          [&](const PlanarNormTerm& t) {
            return from_planar(prox_planar_norm(t.norm, t.alpha, gamma, t.w, to_planar(x)));
          },
          [&](const AreaPartTerm& t) { return prox_area(*t.model, t.part, t.alpha, gamma, x); },
          [&](const AreaL1Term& t) { return prox_area_l1(t.w, t.eta, t.alpha, gamma, x); },
          [&](const AbsSignedAreaTerm& t) { return prox_abs_signed_area(t.w, t.eta, t.alpha, gamma, x); },
      },
      descriptor_);
}

Vec ProxTerm::conjugate_prox(double gamma, std::span<const double> x) const {
  return std::visit(
      overloaded{
          [&](const ZeroTerm&) { return Vec(x.size(), 0.0); },
          [&](const TableTerm& t) { return prox_table_conjugate(t, gamma, x); },
          [&](const PlanarNormTerm& t) {
            return from_planar(prox_planar_norm_conjugate(t.norm, t.alpha, gamma, t.w, to_planar(x)));
          },
          [&](const AreaPartTerm& t) {
            return prox_area_conjugate(*t.model, t.part, t.alpha, gamma, x);
          },
          [&](const AreaL1Term& t) { return prox_area_l1_conjugate(t.w, t.eta, t.alpha, gamma, x); },
          [&](const AbsSignedAreaTerm& t) {
            return prox_abs_signed_area_conjugate(t.w, t.eta, t.alpha, gamma, x);
          },
      },
      descriptor_);
}

double ProxTerm::value(std::span<const double> x) const {
  return std::visit(
      overloaded{
          [&](const ZeroTerm&) { return 0.0; },
          [&](const TableTerm& t) { return table_value(t, x); },
          [&](const PlanarNormTerm& t) { return t.alpha * norm_value(t.norm, to_planar(x) - t.w); },
          [&](const AreaPartTerm& t) { return t.alpha * area_part_value(*t.model, t.part, x); },
          [&](const AreaL1Term& t) { return t.alpha * area_l1_value(t.w, t.eta, x); },
          [&](const AbsSignedAreaTerm& t) {
            double s = 0.0;
            for (std::size_t i = 0; i < x.size(); ++i) s += t.eta[i] * (x[i] - t.w[i]);
            return t.alpha * std::abs(s);
          },
      },
      descriptor_);
}

ProxTerm make_indicator_term(std::shared_ptr<const ConstraintSet> set) {
  if (!set) throw std::invalid_argument("make_indicator_term: null set");
  TableTerm term;
  term.kind = TableKind::indicator;
  const std::string label = "indicator_" + std::string(to_string(set->kind()));
  term.projector = [set = std::move(set)](std::span<const double> x) { return project_set(*set, x); };
  return ProxTerm(std::move(term), label);
}

}  // namespace vertalign
