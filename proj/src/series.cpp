#include "hyperxf/series.hpp"

#include <string>

#include "hyperxf/error.hpp"
#include "hyperxf/poch.hpp"

namespace hyperxf {

namespace {

const Rat& rational_arg(const SeriesSpec& spec, const char* what) {
  const Rat* z = std::get_if<Rat>(&spec.arg);
  if (z == nullptr) {
    throw Error(ErrorKind::InvalidArgument, std::string(what) + " needs a rational argument");
  }
  return *z;
}

[[noreturn]] void throw_degenerate(const std::string& where) {
  throw Error(ErrorKind::DegenerateLower, "degenerate lower parameter at " + where);
}

void require_nondegenerate(const SeriesSpec& spec, std::size_t last_k) {
  if (auto why = find_degenerate_lower(spec, last_k)) throw_degenerate(*why);
}

// Ratio t_{k+1} / t_k without the argument factor; nullopt when the next
// coefficient vanishes because an upper factor is zero.
Rat coefficient_ratio(const SeriesSpec& spec, std::size_t k) {
  const Rat kk(static_cast<unsigned long>(k));
  Rat num(1);
  Rat den(static_cast<unsigned long>(k + 1));
  for (const auto& u : spec.upper) num *= u + kk;
  for (const auto& p : spec.upper_pairs) {
    const Rat c = p.center + kk;
    num *= c * c - p.square;
  }
  if (num.is_zero()) return Rat(0);
  for (const auto& l : spec.lower) den *= l + kk;
  for (const auto& p : spec.lower_pairs) {
    const Rat c = p.center + kk;
    den *= c * c - p.square;
  }
  if (den.is_zero()) throw_degenerate("k=" + std::to_string(k + 1));
  return num / den;
}

}  // namespace

std::size_t natural_last(const SeriesSpec& spec, std::size_t last_k) {
  for (const auto& u : spec.upper) {
    if (u.is_nonpositive_integer() && -u < Rat(static_cast<unsigned long>(last_k))) {
      last_k = (-u).num().get_ui();
    }
  }
  return last_k;
}

std::optional<std::string> find_degenerate_lower(const SeriesSpec& spec, std::size_t last_k) {
  // (l)_k for k <= last_k involves the factors l, l+1, ..., l+last_k-1.
  for (std::size_t i = 0; i < spec.lower.size(); ++i) {
    const Rat& l = spec.lower[i];
    if (l.is_nonpositive_integer() && -l < Rat(static_cast<unsigned long>(last_k))) {
      const mpz_class k = -l.num() + 1;
      return "k=" + k.get_str() + " (lower parameter #" + std::to_string(i) + " = " + l.str() + ")";
    }
  }
  for (std::size_t i = 0; i < spec.lower_pairs.size(); ++i) {
    Rat c = spec.lower_pairs[i].center;
    for (std::size_t j = 0; j < last_k; ++j, c += 1) {
      if (c * c == spec.lower_pairs[i].square) {
        return "k=" + std::to_string(j + 1) + " (lower pair #" + std::to_string(i) + " center " +
               spec.lower_pairs[i].center.str() + ", square " + spec.lower_pairs[i].square.str() + ")";
      }
    }
  }
  return std::nullopt;
}

Rat term_coefficient(const SeriesSpec& spec, std::size_t k) {
  Rat num(1);
  for (const auto& u : spec.upper) num *= poch(u, k);
  for (const auto& p : spec.upper_pairs) num *= paired_poch(p.center, p.square, k);
  Rat den = factorial(k);
  for (const auto& l : spec.lower) den *= poch(l, k);
  for (const auto& p : spec.lower_pairs) den *= paired_poch(p.center, p.square, k);
  if (den.is_zero()) throw_degenerate("k=" + std::to_string(k));
  return num / den;
}

Rat term(const SeriesSpec& spec, std::size_t k) {
  const Rat& z = rational_arg(spec, "term");
  return term_coefficient(spec, k) * pow(z, static_cast<long>(k));
}

Rat eval_terminating(const SeriesSpec& spec) {
  const auto* mode = std::get_if<Terminating>(&spec.mode);
  if (mode == nullptr) throw Error(ErrorKind::InvalidArgument, "eval_terminating needs Terminating mode");
  const Rat minus_n = -Rat(static_cast<unsigned long>(mode->n));
  bool terminates = false;
  for (const auto& u : spec.upper) terminates = terminates || u == minus_n;
  if (!terminates) {
    throw Error(ErrorKind::InvalidArgument,
                "terminating series needs an upper parameter equal to " + minus_n.str());
  }
  const Rat& z = rational_arg(spec, "eval_terminating");
  require_nondegenerate(spec, mode->n);
  Rat t(1);
  Rat sum(1);
  for (std::size_t k = 0; k < mode->n; ++k) {
    t *= coefficient_ratio(spec, k) * z;
    if (t.is_zero()) break;
    sum += t;
  }
  return sum;
}

PartialSum eval_partial(const SeriesSpec& spec, std::size_t terms) {
  if (terms == 0) throw Error(ErrorKind::InvalidArgument, "partial sum needs at least one term");
  const Rat& z = rational_arg(spec, "eval_partial");
  require_nondegenerate(spec, natural_last(spec, terms - 1));
  Rat t(1);
  Rat sum(1);
  for (std::size_t k = 0; k + 1 < terms; ++k) {
    if (!t.is_zero()) t *= coefficient_ratio(spec, k) * z;
    sum += t;
  }
  return {sum, t};
}

DyadicPartialSum eval_partial_dyadic(const SeriesSpec& spec, std::size_t terms, unsigned bits) {
  if (terms == 0) throw Error(ErrorKind::InvalidArgument, "partial sum needs at least one term");
  const Rat& z = rational_arg(spec, "eval_partial_dyadic");
  require_nondegenerate(spec, natural_last(spec, terms - 1));

  // Each factor of the term ratio is an integer polynomial in k over a
  // k-independent integer; the constants are folded into one fraction.
  struct Linear {
    mpz_class num, den;  // value (num + k*den)/den
  };
  struct Quadratic {
    mpz_class c_num, c_den, s_num, s_den;  // ((c_num + k c_den)^2 s_den - s_num c_den^2) / (c_den^2 s_den)
  };
  std::vector<Linear> up, lo;
  std::vector<Quadratic> up2, lo2;
  mpz_class const_num = z.num();
  mpz_class const_den = z.den();
  for (const auto& u : spec.upper) {
    up.push_back({u.num(), u.den()});
    const_den *= u.den();
  }
  for (const auto& l : spec.lower) {
    lo.push_back({l.num(), l.den()});
    const_num *= l.den();
  }
  for (const auto& p : spec.upper_pairs) {
    up2.push_back({p.center.num(), p.center.den(), p.square.num(), p.square.den()});
    const_den *= p.center.den() * p.center.den() * p.square.den();
  }
  for (const auto& p : spec.lower_pairs) {
    lo2.push_back({p.center.num(), p.center.den(), p.square.num(), p.square.den()});
    const_num *= p.center.den() * p.center.den() * p.square.den();
  }

  mpz_class scale(1);
  scale <<= bits;
  mpz_class t = scale;
  mpz_class sum = scale;
  mpz_class prev = scale;
  mpz_class num, den, f;
  for (std::size_t k = 0; k + 1 < terms; ++k) {
    prev = sum;
    if (t != 0) {
      const unsigned long kk = k;
      num = const_num;
      den = const_den;
      den *= kk + 1;
      for (const auto& p : up) {
        f = p.num + p.den * kk;
        num *= f;
      }
      for (const auto& p : up2) {
        f = p.c_num + p.c_den * kk;
        num *= f * f * p.s_den - p.s_num * p.c_den * p.c_den;
      }
      for (const auto& p : lo) {
        f = p.num + p.den * kk;
        den *= f;
      }
      for (const auto& p : lo2) {
        f = p.c_num + p.c_den * kk;
        den *= f * f * p.s_den - p.s_num * p.c_den * p.c_den;
      }
      t *= num;
      mpz_tdiv_q(t.get_mpz_t(), t.get_mpz_t(), den.get_mpz_t());
    }
    sum += t;
  }
  return {Rat(sum, scale), Rat(prev, scale), Rat(t, scale), terms};
}

PowerSeries eval_formal(const SeriesSpec& spec, std::size_t order, std::span<const XShiftPair> x_pairs) {
  const bool quadratic = std::holds_alternative<QuadraticX>(spec.arg);
  if (!quadratic && !std::holds_alternative<FormalX>(spec.arg)) {
    throw Error(ErrorKind::InvalidArgument, "eval_formal needs the formal argument x or -4x/(1-x)^2");
  }
  require_nondegenerate(spec, natural_last(spec, order));

  std::vector<PowerSeries> inverse_num;
  inverse_num.reserve(x_pairs.size());
  for (const auto& xp : x_pairs) {
    inverse_num.push_back(ps_invert(PowerSeries::linear(xp.num0, xp.num1, order)));
  }

  PowerSeries out(order);
  Rat c(1);
  for (std::size_t k = 0; k <= order; ++k) {
    if (k > 0) c *= coefficient_ratio(spec, k - 1);
    if (c.is_zero()) break;
    PowerSeries piece = PowerSeries::monomial(k, order);
    Rat scalar = c;
    if (quadratic) {
      scalar *= pow(Rat(-4), static_cast<long>(k));
      piece = ps_mul(piece, ps_binomial_one_minus_x(Rat(-2L * static_cast<long>(k)), order));
    }
    const Rat kk(static_cast<unsigned long>(k));
    for (std::size_t i = 0; i < x_pairs.size(); ++i) {
      const auto& xp = x_pairs[i];
      const PowerSeries shifted = PowerSeries::linear(xp.num0 + kk * xp.den0, xp.num1 + kk * xp.den1, order);
      piece = ps_mul(piece, ps_mul(shifted, inverse_num[i]));
    }
    out = ps_add(out, ps_scale(scalar, piece));
  }
  return out;
}

Rat eval_exact(const SeriesSpec& spec) {
  if (std::holds_alternative<Terminating>(spec.mode)) return eval_terminating(spec);
  if (const auto* p = std::get_if<Partial>(&spec.mode)) return eval_partial(spec, p->terms).value;
  throw Error(ErrorKind::InvalidArgument, "eval_exact does not handle Formal mode");
}

Rat excess(const SeriesSpec& spec) {
  if (spec.r() != spec.s() + 1) {
    throw Error(ErrorKind::InvalidArgument,
                "parametric excess needs r = s + 1, got r=" + std::to_string(spec.r()) +
                    " s=" + std::to_string(spec.s()));
  }
  Rat w(0);
  for (const auto& l : spec.lower) w += l;
  for (const auto& p : spec.lower_pairs) w += Rat(2) * p.center;
  for (const auto& u : spec.upper) w -= u;
  for (const auto& p : spec.upper_pairs) w -= Rat(2) * p.center;
  return w;
}

bool is_well_poised(const SeriesSpec& spec) {
  if (spec.upper.empty() || spec.upper.size() != spec.lower.size() + 1 ||
      spec.upper_pairs.size() != spec.lower_pairs.size()) {
    return false;
  }
  const Rat target = Rat(1) + spec.upper[0];
  for (std::size_t i = 0; i < spec.lower.size(); ++i) {
    if (spec.lower[i] + spec.upper[i + 1] != target) return false;
  }
  for (std::size_t i = 0; i < spec.upper_pairs.size(); ++i) {
    const auto& u = spec.upper_pairs[i];
    const auto& l = spec.lower_pairs[i];
    if (u.square != l.square || u.center + l.center != target) return false;
  }
  return true;
}

bool is_very_well_poised(const SeriesSpec& spec) {
  return is_well_poised(spec) && spec.upper.size() >= 2 &&
         spec.upper[1] == Rat(1) + spec.upper[0] / Rat(2);
}

}  // namespace hyperxf
