#include "asph/oracle.hpp"

#include <algorithm>
#include <numeric>

namespace asph::oracle {

  TensorPartition naive_tensor_closure(RightAction const& A,
                                       LeftAction const&  B,
                                       Submonoid const&   U) {
    std::size_t const        m  = U.size();
    std::size_t const        nb = B.carrier;
    std::vector<std::size_t> label(A.carrier * nb);
    std::iota(label.begin(), label.end(), 0);
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t a = 0; a < A.carrier; ++a) {
        for (std::size_t b = 0; b < nb; ++b) {
          for (std::size_t i = 0; i < m; ++i) {
            std::size_t p = label[A.act[a * m + i] * nb + b];
            std::size_t q = label[a * nb + B.act[b * m + i]];
            if (p == q) {
              continue;
            }
            std::size_t keep = std::min(p, q), drop = std::max(p, q);
            for (auto& l : label) {
              if (l == drop) {
                l = keep;
              }
            }
            changed = true;
          }
        }
      }
    }
    return TensorPartition(A.carrier, nb, std::move(label));
  }

}  // namespace asph::oracle
