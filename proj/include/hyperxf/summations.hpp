#pragma once

// Closed-form evaluations of terminating unit-argument sums, each paired
// with a builder for the series it sums so the two can be checked against
// each other by direct summation.

#include <cstddef>
#include <map>
#include <string>

#include "hyperxf/rat.hpp"
#include "hyperxf/series.hpp"

namespace hyperxf {

struct ClosedForm {
  Rat value;
  std::map<std::string, Rat> aux;
};

// Auxiliary parameters. Each throws Error(AuxDenominatorZero) naming the
// vanishing denominator.

/// p(b-a-1)/(p-a).
Rat aux_ecv_q(const Rat& a, const Rat& b, const Rat& p);
/// p(c-a-1)(c-b-1)/(ab + p(c-a-b-1)).
Rat aux_rr_q(const Rat& a, const Rat& b, const Rat& c, const Rat& p);
/// p(a-p)(b+c-a)/(bc - p(a-p)).
Rat aux_rr_gamma1(const Rat& a, const Rat& b, const Rat& c, const Rat& p);
/// p(a-p)(a-b-c)(a-b-d)(a-c-d) / ((2a-b-c-d+n)(bcd + p(a-p)(a-b-c-d))).
Rat aux_svf_alpha(const Rat& a, const Rat& b, const Rat& c, const Rat& d, const Rat& p, std::size_t n);
/// lambda^2/4 - p(a-p)(a-b-c)(a-b-d)(a-c-d)/(bcd + p(a-p)(a-b-c-d)) with
/// lambda = 2a-b-c-d.
Rat aux_svf_gamma_sq(const Rat& a, const Rat& b, const Rat& c, const Rat& d, const Rat& p);

// 3F2(a, p+1, -n; b, p; 1) = (b-a-1)_n (q+1)_n / ((b)_n (q)_n).
SeriesSpec lhs_ext_chu_vandermonde(const Rat& a, const Rat& b, const Rat& p, std::size_t n);
ClosedForm sum_ext_chu_vandermonde(const Rat& a, const Rat& b, const Rat& p, std::size_t n);

// Saalschutzian 4F3(a, b, p+1, -n; c, p, 2+a+b-c-n; 1).
SeriesSpec lhs_rakha_rathie(const Rat& a, const Rat& b, const Rat& c, const Rat& p, std::size_t n);
ClosedForm sum_rakha_rathie(const Rat& a, const Rat& b, const Rat& c, const Rat& p, std::size_t n);

// 4F3(a-b-c, g1+1, a+n, -n; 1+a-b, 1+a-c, g1; 1).
SeriesSpec lhs_rr_formA(const Rat& a, const Rat& b, const Rat& c, const Rat& p, std::size_t n);
ClosedForm sum_rr_formA(const Rat& a, const Rat& b, const Rat& c, const Rat& p, std::size_t n);

// 4F3(c-a-1, c-b-1, g2+1, -n; c, g2, c-a-b-n; 1).
SeriesSpec lhs_rr_formB(const Rat& a, const Rat& b, const Rat& c, const Rat& p, std::size_t n);
ClosedForm sum_rr_formB(const Rat& a, const Rat& b, const Rat& c, const Rat& p, std::size_t n);

// Very-well-poised 9F8 extending Dougall's 7F6 sum.
SeriesSpec lhs_svf_9f8(const Rat& a, const Rat& b, const Rat& c, const Rat& d, const Rat& p, std::size_t n);
ClosedForm sum_svf_9f8(const Rat& a, const Rat& b, const Rat& c, const Rat& d, const Rat& p, std::size_t n);

// The same sum rewritten in lambda = 2a-b-c-d with the conjugate pair
// lambda/2 +- gamma stored through gamma^2.
SeriesSpec lhs_svf_formB(const Rat& a, const Rat& b, const Rat& c, const Rat& d, const Rat& p, std::size_t n);
ClosedForm sum_svf_formB(const Rat& a, const Rat& b, const Rat& c, const Rat& d, const Rat& p, std::size_t n);

// Classical baselines.

/// 2F1(a, -n; b; 1) = (b-a)_n / (b)_n.
SeriesSpec lhs_chu_vandermonde(const Rat& a, const Rat& b, std::size_t n);
ClosedForm sum_chu_vandermonde(const Rat& a, const Rat& b, std::size_t n);
/// 3F2(a, b, -n; c, 1+a+b-c-n; 1) = (c-a)_n (c-b)_n / ((c)_n (c-a-b)_n).
SeriesSpec lhs_pfaff_saalschutz(const Rat& a, const Rat& b, const Rat& c, std::size_t n);
ClosedForm sum_pfaff_saalschutz(const Rat& a, const Rat& b, const Rat& c, std::size_t n);
/// Very-well-poised 7F6(a, 1+a/2, b, c, d, 1+2a-b-c-d+n, -n; ...; 1).
SeriesSpec lhs_dougall(const Rat& a, const Rat& b, const Rat& c, const Rat& d, std::size_t n);
ClosedForm sum_dougall(const Rat& a, const Rat& b, const Rat& c, const Rat& d, std::size_t n);

}  // namespace hyperxf
