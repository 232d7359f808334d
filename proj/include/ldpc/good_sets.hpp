#pragma once

#include <string>

namespace ldpc {

/// Good message subsets (G_v, G_c) of a decoder with their strength beta:
/// beta(l-1) good inputs at a variable force a good output, all-good inputs
/// at a check force a good output.
struct GoodSetSpec {
  std::string g_v;      ///< description of G_v (interval or predicate)
  std::string g_c;      ///< description of G_c
  double beta = 0.0;    ///< strength; beta * (l-1) is an integer
  int beta_num = 0;     ///< beta * (l-1)
};

enum class GoodSetCatalog {
  BecBp,     ///< BEC with BP: good = known
  BscGalB,   ///< BSC with GalB: good = correct
  Ms5,       ///< MS(5), channel LLRs in [-1,1]: G_v = G_c = [4,5]
  Bp10,      ///< BP(10), l=5, r=6, channel LLRs in [-3,3]: G_v=[9,10], G_c=[14,43]
};

/// Returns the cataloged (G_v, G_c, beta) for the given entry and variable
/// degree. Throws std::invalid_argument for degrees outside an entry's
/// stated range.
GoodSetSpec good_set_for(GoodSetCatalog which, int l);

/// Derived constants of the two expansion conditions for a good set of
/// strength beta. The bit condition needs beta < 1; the block condition
/// beta < (l-2)/(l-1).
struct ExchangeConditionReport {
  bool bit_ok = false;
  bool block_ok = false;
  double gamma_bit = 0.0;   ///< (1 - 1/l)(1 + beta)/2
  double gamma_block = 0.0; ///< (1 - 1/l)(3 + beta)/4
  double p_bit = 0.0;       ///< alpha (1 - beta)(l - 1)/4
  double p_block = 0.0;     ///< alpha (l - beta(l-1)) / (2 l r)
};

ExchangeConditionReport exchange_conditions(int l, int r, double beta, double alpha);

}  // namespace ldpc
