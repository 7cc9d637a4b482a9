#ifndef ASPH_ORACLE_HPP_
#define ASPH_ORACLE_HPP_

// Slow reference implementations used to cross-check the fast ones.

#include "asph/monoid.hpp"

namespace asph::oracle {

  // The tensor partition by repeated scanning: every pass walks all
  // generating pairs and relabels whole classes, until a pass changes
  // nothing.
  TensorPartition naive_tensor_closure(RightAction const& A,
                                       LeftAction const&  B,
                                       Submonoid const&   U);

}  // namespace asph::oracle

#endif  // ASPH_ORACLE_HPP_
