#include "ksym/hk.hpp"

#include <sstream>

namespace ksym {

unsigned long long torus_bound(unsigned b2) {
  if (b2 < 3) throw Error(ErrorCode::InvalidArgument, "b2 must be at least 3");
  return 1ULL << ((b2 - 1) / 2 - 1);
}

ObstructionVerdict ogrady_verdict(unsigned b2, unsigned manifold_dimC) {
  if (b2 < 3) throw Error(ErrorCode::InvalidArgument, "b2 must be at least 3");
  if (manifold_dimC < 2 || manifold_dimC % 2 != 0)
    throw Error(ErrorCode::InvalidArgument, "manifold_dimC must be even and at least 2");
  ObstructionVerdict v;
  v.b2 = b2;
  v.manifold_dimC = manifold_dimC;
  v.bbf_signature = {b2 - 3, 3};
  v.naive_torus_bound = torus_bound(b2);
  v.max_proper_subvariety_dimC = manifold_dimC - 2;

  const unsigned r = v.bbf_signature.r, s = v.bbf_signature.s;
  v.refined_applies = r > 0;
  unsigned long long strongest = v.naive_torus_bound;
  if (v.refined_applies) {
    v.clifford_signatures = {{r - 1, s}, {s - 1, r}};
    v.refined_b1_bound = std::min(minimal_module_dim(v.clifford_signatures[0]),
                                  minimal_module_dim(v.clifford_signatures[1]));
    v.refined_torus_dimC_bound = v.refined_b1_bound / 2;
    strongest = std::max(strongest, v.refined_torus_dimC_bound);
  } else {
    v.clifford_signatures = {{s - 1, r}};
  }
  v.torus_possible = strongest <= v.max_proper_subvariety_dimC;

  std::ostringstream os;
  os << "BBF form of signature (" << r << " minuses, " << s << " pluses). ";
  os << "Counting argument: dim_C T >= " << v.naive_torus_bound << ". ";
  if (v.refined_applies) {
    os << "H_1(T,R) is a module over Cl(" << r - 1 << "," << s << ") and Cl(" << s - 1 << "," << r
       << "), so b_1(T) >= " << v.refined_b1_bound << " and dim_C T >= " << v.refined_torus_dimC_bound << ". ";
  }
  os << "Proper trianalytic subvarieties have even complex dimension, at most " << v.max_proper_subvariety_dimC
     << ". ";
  if (v.torus_possible) {
    os << "No obstruction from these bounds; this does not show a torus exists.";
  } else {
    os << "A trianalytic torus would need dimension " << strongest << " > " << v.max_proper_subvariety_dimC
       << ", so none exists.";
  }
  v.narrative = os.str();
  return v;
}

bool b2_comparison_verdict(unsigned b2_ambient, unsigned b2_candidate) {
  return b2_candidate >= b2_ambient;
}

}  // namespace ksym
