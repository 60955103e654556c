#ifndef SGTREE_SGTREE_HPP_
#define SGTREE_SGTREE_HPP_

#include "sgtree/chain.hpp"
#include "sgtree/counter.hpp"
#include "sgtree/explorer.hpp"
#include "sgtree/gap_set.hpp"
#include "sgtree/node.hpp"
#include "sgtree/oracle.hpp"

#endif  // SGTREE_SGTREE_HPP_
