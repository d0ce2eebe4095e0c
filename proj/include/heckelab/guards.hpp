#ifndef HECKELAB_GUARDS_HPP
#define HECKELAB_GUARDS_HPP

namespace heckelab {

// Fail-fast size guards. HECKE_LAB_MAX_DIM raises both caps.
int max_group_order();   // default 48
int max_module_dim();    // default 64

}  // namespace heckelab

#endif
