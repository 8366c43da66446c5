#include "hyperxf/poch.hpp"

namespace hyperxf {

Rat poch(const Rat& a, std::size_t k) {
  Rat out(1);
  Rat f = a;
  for (std::size_t j = 0; j < k; ++j) {
    if (f.is_zero()) return Rat(0);
    out *= f;
    f += 1;
  }
  return out;
}

Rat paired_poch(const Rat& s, const Rat& square, std::size_t k) {
  Rat out(1);
  Rat c = s;
  for (std::size_t j = 0; j < k; ++j) {
    Rat f = c * c - square;
    if (f.is_zero()) return Rat(0);
    out *= f;
    c += 1;
  }
  return out;
}

Rat factorial(std::size_t k) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(k));
  return Rat(f, mpz_class(1));
}

}  // namespace hyperxf
