// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "tauplus/integer.hpp"
#include "tauplus/modular_adder.hpp"
#include "tauplus/moduli.hpp"

namespace tauplus {

// X = 2^(3q+3) x3 + 2^(2q+2) x2 + 2^(q+1) x1 + x0
struct OperandSlices {
  Int x3;  // < 2^q
  Int x2, x1, x0;  // < 2^(q+1)

  friend bool operator==(const OperandSlices&, const OperandSlices&) = default;
};

OperandSlices split_operand(const Int& x, const TauPlusSet& set);

// Z -> |2^(q+1) Z| mod m_channel for Z < 2^(q+1).
class ChannelLut {
 public:
  // Widest q whose table is held in memory by default; wider tables evaluate entries on demand.
  static constexpr unsigned kDefaultMaterializeMaxQ = 20;

  ChannelLut(const TauPlusSet& set, int channel, unsigned materialize_max_q = kDefaultMaterializeMaxQ);

  int channel() const { return channel_; }
  const Int& modulus() const { return modulus_; }
  const Int& size() const { return size_; }
  bool materialized() const { return !table_.empty(); }

  Int operator()(const Int& z) const;
  // F^k(z), by chaining the single table k times.
  Int chain(const Int& z, int k) const;

 private:
  int channel_;
  unsigned q_;
  Int modulus_;
  Int size_;
  std::vector<std::uint64_t> table_;
};

ChannelLut build_lut(const TauPlusSet& set, int channel);

Int residue_m1(const Int& x, const TauPlusSet& set);

class ForwardConverter {
 public:
  explicit ForwardConverter(const TauPlusSet& set,
                            unsigned materialize_max_q = ChannelLut::kDefaultMaterializeMaxQ);

  const TauPlusSet& set() const { return set_; }
  const ChannelLut& lut(int channel) const { return channel == 2 ? lut2_ : lut3_; }

  // |F^3(X3) + F^2(X2) + F(X1) + X0| mod m_channel. If raw_sum is given it receives
  // the four-operand sum before the final reduction.
  Int residue_staged(const Int& x, int channel, Int* raw_sum = nullptr) const;

  ResidueVector operator()(const Int& x) const;

 private:
  TauPlusSet set_;
  ChannelLut lut2_, lut3_;
};

Int residue_mi_staged(const Int& x, const TauPlusSet& set, int channel);
ResidueVector forward(const Int& x, const TauPlusSet& set);

}  // namespace tauplus
