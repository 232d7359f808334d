#include "ldpc/good_sets.hpp"

#include <stdexcept>

namespace ldpc {

GoodSetSpec good_set_for(GoodSetCatalog which, int l) {
  if (l < 2) throw std::invalid_argument("good_set_for: l must be >= 2");
  GoodSetSpec s;
  switch (which) {
    case GoodSetCatalog::BecBp:
      s.g_v = "known";
      s.g_c = "known";
      s.beta_num = 1;
      s.beta = 1.0 / (l - 1);
      break;
    case GoodSetCatalog::BscGalB:
      s.g_v = "correct";
      s.g_c = "correct";
      s.beta_num = (l - 1 + 1) / 2 + 1;  // ceil((l-1)/2) + 1
      s.beta = (double)s.beta_num / (l - 1);
      break;
    case GoodSetCatalog::Ms5:
      if (l < 5) throw std::invalid_argument("good_set_for: MS(5) entry requires l >= 5");
      s.g_v = "[4,5]";
      s.g_c = "[4,5]";
      s.beta = 0.75;  // the cataloged bound; beta(l-1) rounds to the integer below
      s.beta_num = (int)(s.beta * (l - 1));
      break;
    case GoodSetCatalog::Bp10:
      if (l != 5) throw std::invalid_argument("good_set_for: BP(10) entry is stated for l = 5");
      s.g_v = "[9,10]";
      s.g_c = "[14,43]";
      s.beta = 0.75;
      s.beta_num = 3;
      break;
  }
  return s;
}

ExchangeConditionReport exchange_conditions(int l, int r, double beta, double alpha) {
  if (l < 2 || r < 2) throw std::invalid_argument("exchange_conditions: degrees must be >= 2");
  ExchangeConditionReport rep;
  rep.bit_ok = beta < 1.0;
  rep.block_ok = beta < (double)(l - 2) / (l - 1);
  rep.gamma_bit = (1.0 - 1.0 / l) * (1.0 + beta) / 2.0;
  rep.gamma_block = (1.0 - 1.0 / l) * (3.0 + beta) / 4.0;
  rep.p_bit = alpha * (1.0 - beta) * (l - 1) / 4.0;
  rep.p_block = alpha * (l - beta * (l - 1)) / (2.0 * l * r);
  return rep;
}

}  // namespace ldpc
