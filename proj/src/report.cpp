#include "orbit/report.hpp"

#include <cmath>

namespace orbit::report {

Json rational(const Rational& q) { return to_string(q); }

Json scalar(const Scalar& z) {
  if (z.is_exact()) {
    const auto& g = z.exact();
    if (g.im == 0) return rational(g.re);
    return Json::array({rational(g.re), rational(g.im)});
  }
  auto c = z.to_complex();
  if (c.imag() == 0.0) return c.real();
  return Json::array({c.real(), c.imag()});
}

Json coords(const Coords& v) {
  Json out = Json::array();
  for (const auto& z : v) out.push_back(scalar(z));
  return out;
}

Json blocks(const BlockVector& v) {
  Json out = Json::array();
  for (const auto& seg : v) out.push_back(coords(seg));
  return out;
}

namespace {

// JSON has no infinities; non-finite doubles are written as strings.
Json number(double d) {
  if (std::isfinite(d)) return d;
  return std::isnan(d) ? "nan" : (d > 0 ? "inf" : "-inf");
}

Json coords_list(const std::vector<Coords>& list) {
  Json out = Json::array();
  for (const auto& v : list) out.push_back(coords(v));
  return out;
}

}  // namespace

Json block_verdict(const BlockVerdict& bv, const std::vector<JordanBlock>& blocks) {
  Json out;
  out["block"] = bv.block;
  if (bv.block < blocks.size()) {
    out["lambda"] = scalar(blocks[bv.block].lambda);
    out["size"] = blocks[bv.block].size;
  }
  out["case"] = bv.case_label;
  out["behavior"] = std::string(to_string(bv.behavior));
  if (bv.witness) out["witness"] = *bv.witness;
  out["detail"] = bv.detail;
  if (bv.limit) out["limit"] = coords(*bv.limit);
  return out;
}

Json verdict(const Verdict& v, const std::vector<JordanBlock>& blocks) {
  Json out;
  out["kind"] = std::string(to_string(v.kind));
  out["linear"] = v.linear;
  out["numerically_uncertain"] = v.numerically_uncertain;
  if (v.limit) out["limit"] = report::blocks(*v.limit);
  if (v.lower_bound) {
    Json bounds;
    bounds["F"] = number(*v.lower_bound);
    bounds["G"] = number(*v.upper_bound);
    bounds["window"] = "empirical, k in [K/2, K] with K = " + std::to_string(*v.bounds_horizon);
    out["bounds"] = bounds;
  }
  Json list = Json::array();
  for (const auto& bv : v.blocks) list.push_back(block_verdict(bv, blocks));
  out["blocks"] = list;
  return out;
}

Json trend(const EmpiricalTrend& t) {
  Json out;
  out["diverges"] = t.diverges;
  out["reason"] = t.reason;
  if (t.overflow_step) out["overflow_step"] = *t.overflow_step;
  out["window_min"] = number(t.window_min);
  out["window_max"] = number(t.window_max);
  out["final_norm"] = number(t.final_norm);
  out["max_norm"] = number(t.max_norm);
  return out;
}

Json iterate_expansion(const BlockExpansion& e) {
  Json out;
  if (const auto* g = std::get_if<IterateExpansion>(&e)) {
    out["form"] = "B + sum_{j<w} lambda^(k-j) C(k,j) A_j";
    out["lambda"] = scalar(g->lambda);
    out["s"] = g->s;
    out["t"] = g->t;
    out["w"] = g->w;
    out["valid_for"] = "k > " + std::to_string(g->w);
    out["A"] = coords_list(g->a);
    out["B"] = coords(g->b);
    return out;
  }
  const auto& u = std::get<UnitIterateExpansion>(e);
  out["form"] = "v + sum_{j=1}^{l} C(k,j) B_j";
  out["s"] = u.s;
  out["t"] = u.t;
  out["l"] = u.l;
  out["valid_for"] = "k > " + std::to_string(std::max(u.s, u.t));
  out["v"] = coords(u.v);
  out["B"] = coords_list(u.b);
  return out;
}

Json h_summary(const AverageExpansion& e) {
  if (e.unit || e.lambda.is_zero()) return nullptr;
  HPolynomial h = h_polynomial(e);
  Json out;
  out["degree"] = h.degree;
  out["s_equals_t"] = h.s_equals_t;
  out["rule"] = h.rule;
  out["coefficients"] = coords_list(h.poly.coefficients());
  return out;
}

Json average_expansion(const AverageExpansion& e) {
  Json out;
  out["s"] = e.s;
  out["t"] = e.t;
  out["valid_for"] = "k >= " + std::to_string(average_min_k(e));
  if (e.unit) {
    out["form"] = "(1/k) [sum_{j=1}^{s} C(k,j) N^(j-1) x + sum_{j<t} C(k,j+2) N^j c]";
    out["x_terms"] = coords_list(e.x_terms);
    out["c_terms"] = coords_list(e.c_terms);
    return out;
  }
  out["form"] = "E + F/k + G(k)";
  out["lambda"] = scalar(e.lambda);
  out["E"] = coords(e.e);
  out["F"] = coords(e.f);
  out["A"] = coords_list(e.a);
  out["H"] = h_summary(e);
  return out;
}

Json sweep(const std::vector<SweepRow>& rows) {
  Json out = Json::array();
  for (const auto& row : rows) {
    Json r;
    r["identity"] = row.identity;
    r["range"] = row.range;
    r["cases"] = row.cases;
    r["failures"] = row.failures;
    r["pass"] = row.failures == 0;
    if (row.first_failure) r["first_failure"] = *row.first_failure;
    out.push_back(r);
  }
  return out;
}

}  // namespace orbit::report
