#include "partalg/grothendieck.hpp"

#include <stdexcept>

#include "partalg/specht.hpp"

namespace partalg {

namespace {

// Multiplicity of the shape `lambda` in the product layer with `tl` labelled
// and `tn` plain through blocks, `ll` labels staying left, `lr` staying
// right. Character sum over one cycle type per group of strands; the three
// characters share the through-label cycle type, which is what couples the
// two factors.
Rational layer_constant(const IntegerPartition& nu1, const IntegerPartition& nu2,
                        const IntegerPartition& lambda, int tl, int tn, int ll,
                        int lr) {
  Rational total = 0;
  for (const auto& rho_a : enumerate_integer_partitions(tl)) {
    const BigInt za = centralizer_order(rho_a);
    for (const auto& rho_b : enumerate_integer_partitions(tn)) {
      const BigInt zb = centralizer_order(rho_b);
      const IntegerPartition ab = join_cycle_types(rho_a, rho_b);
      for (const auto& rho_c : enumerate_integer_partitions(ll)) {
        const BigInt zc = centralizer_order(rho_c);
        const BigInt left = symmetric_group_character(nu1, join_cycle_types(ab, rho_c));
        if (left == 0) continue;
        const IntegerPartition ac = join_cycle_types(rho_a, rho_c);
        for (const auto& rho_d : enumerate_integer_partitions(lr)) {
          const BigInt right =
              symmetric_group_character(nu2, join_cycle_types(ab, rho_d));
          if (right == 0) continue;
          const BigInt out =
              symmetric_group_character(lambda, join_cycle_types(ac, rho_d));
          if (out == 0) continue;
          const BigInt zd = centralizer_order(rho_d);
          total += Rational(left * right * out) / Rational(za * zb * zc * zd);
        }
      }
    }
  }
  return total;
}

}  // namespace

std::map<ClassLabel, BigInt> structure_constants(const ClassLabel& x,
                                                 const ClassLabel& y) {
  if (x.shape.weight() != x.r || y.shape.weight() != y.r)
    throw std::invalid_argument("shape weight must equal the label count");
  std::map<ClassLabel, BigInt> out;
  for (int through = 0; through <= std::min(x.r, y.r); ++through) {
    const int ll = x.r - through;
    const int lr = y.r - through;
    for (int tl = 0; tl <= through; ++tl) {
      const int tn = through - tl;
      const int r = tl + ll + lr;
      for (const auto& lambda : enumerate_integer_partitions(r)) {
        const Rational value =
            layer_constant(x.shape, y.shape, lambda, tl, tn, ll, lr);
        if (value == 0) continue;
        if (boost::multiprecision::denominator(value) != 1)
          throw std::logic_error("non-integral structure constant");
        out[ClassLabel{r, lambda}] += boost::multiprecision::numerator(value);
      }
    }
  }
  return out;
}

GrothendieckElement::GrothendieckElement(const ClassLabel& label) {
  terms_.emplace(label, 1);
}

void GrothendieckElement::add_term(const ClassLabel& label, const BigInt& coeff) {
  auto it = terms_.find(label);
  if (it == terms_.end()) {
    if (coeff != 0) terms_.emplace(label, coeff);
    return;
  }
  it->second += coeff;
  if (it->second == 0) terms_.erase(it);
}

GrothendieckElement& GrothendieckElement::operator+=(
    const GrothendieckElement& other) {
  for (const auto& [label, coeff] : other.terms_) add_term(label, coeff);
  return *this;
}

GrothendieckElement GrothendieckElement::operator*(
    const GrothendieckElement& other) const {
  GrothendieckElement out;
  for (const auto& [lx, cx] : terms_) {
    for (const auto& [ly, cy] : other.terms_) {
      for (const auto& [label, coeff] : structure_constants(lx, ly))
        out.add_term(label, cx * cy * coeff);
    }
  }
  return out;
}

std::vector<RingTableRow> ring_table(int max_total) {
  std::vector<RingTableRow> out;
  for (int r1 = 0; r1 <= max_total; ++r1) {
    for (const auto& shape1 : enumerate_integer_partitions(r1)) {
      for (int r2 = 0; r1 + r2 <= max_total; ++r2) {
        for (const auto& shape2 : enumerate_integer_partitions(r2)) {
          const ClassLabel x{r1, shape1};
          const ClassLabel y{r2, shape2};
          out.push_back(RingTableRow{x, y, structure_constants(x, y)});
        }
      }
    }
  }
  return out;
}

}  // namespace partalg
