// SPDX-License-Identifier: Apache-2.0
#include "tauplus/forward.hpp"

#include <stdexcept>

namespace tauplus {

namespace {

void check_operand(const Int& x, const TauPlusSet& set) {
  if (x < 0 || x >= set.dr)
    throw std::out_of_range("operand " + to_string(x) + " outside [0, " + to_string(set.dr) + ")");
}

void check_channel(int channel) {
  if (channel != 2 && channel != 3) throw std::invalid_argument("channel must be 2 or 3");
}

}  // namespace

OperandSlices split_operand(const Int& x, const TauPlusSet& set) {
  check_operand(x, set);
  const unsigned w = set.q + 1;
  return {bits(x, 3 * w, w), bits(x, 2 * w, w), bits(x, w, w), bits(x, 0, w)};
}

ChannelLut::ChannelLut(const TauPlusSet& set, int channel, unsigned materialize_max_q)
    : channel_(channel), q_(set.q), modulus_(channel == 2 ? set.m2 : set.m3), size_(pow2(set.q + 1)) {
  check_channel(channel);
  if (set.q <= materialize_max_q) {
    const std::uint64_t n = size_.get_ui();
    const std::uint64_t m = modulus_.get_ui();
    const std::uint64_t step = (std::uint64_t{1} << (q_ + 1)) % m;
    table_.resize(n);
    std::uint64_t v = 0;
    for (std::uint64_t z = 0; z < n; ++z) {
      table_[z] = v;
      v += step;
      if (v >= m) v -= m;
    }
  }
}

Int ChannelLut::operator()(const Int& z) const {
  if (z < 0 || z >= size_) throw std::out_of_range("LUT index " + to_string(z) + " outside table");
  if (materialized()) return Int(static_cast<unsigned long>(table_[z.get_ui()]));
  return mod(z << static_cast<mp_bitcnt_t>(q_ + 1), modulus_);
}

Int ChannelLut::chain(const Int& z, int k) const {
  Int v = z;
  for (int i = 0; i < k; ++i) v = (*this)(v);
  return v;
}

ChannelLut build_lut(const TauPlusSet& set, int channel) { return ChannelLut(set, channel); }

Int residue_m1(const Int& x, const TauPlusSet& set) {
  check_operand(x, set);
  return bits(x, 0, 2 * set.q + 1);
}

ForwardConverter::ForwardConverter(const TauPlusSet& set, unsigned materialize_max_q)
    : set_(set), lut2_(set, 2, materialize_max_q), lut3_(set, 3, materialize_max_q) {}

Int ForwardConverter::residue_staged(const Int& x, int channel, Int* raw_sum) const {
  check_channel(channel);
  const OperandSlices s = split_operand(x, set_);
  const ChannelLut& f = lut(channel);
  // X0 < 2^(q+1) < 2m, so it enters the sum after at most one subtraction.
  Int x0 = s.x0;
  if (x0 >= f.modulus()) x0 -= f.modulus();
  Int sum = f.chain(s.x3, 3) + f.chain(s.x2, 2) + f(s.x1) + x0;
  if (raw_sum) *raw_sum = sum;
  for (int i = 0; i < 3 && sum >= f.modulus(); ++i) sum -= f.modulus();
  return sum;
}

ResidueVector ForwardConverter::operator()(const Int& x) const {
  return {set_.q, residue_m1(x, set_), residue_staged(x, 2), residue_staged(x, 3)};
}

Int residue_mi_staged(const Int& x, const TauPlusSet& set, int channel) {
  return ForwardConverter(set, 0).residue_staged(x, channel);
}

ResidueVector forward(const Int& x, const TauPlusSet& set) { return ForwardConverter(set, 0)(x); }

}  // namespace tauplus
