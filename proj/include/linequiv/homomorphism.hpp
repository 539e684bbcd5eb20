#ifndef LINEQUIV_HOMOMORPHISM_HPP
#define LINEQUIV_HOMOMORPHISM_HPP

#include <utility>
#include <vector>

#include "linequiv/group.hpp"

namespace linequiv {

// A homomorphism between two enumerated groups, stored as the full
// element-wise map.  Construction verifies the map is multiplicative.
struct Homomorphism {
  GroupPtr source;
  GroupPtr target;
  std::vector<int> gen_images;  // target ids, one per source generator
  std::vector<int> elem_image;  // target id per source element id
  std::vector<int> kernel;      // sorted source ids

  bool injective() const {
    return kernel.size() == 1;
  }
  bool surjective() const;
  int apply(int source_id) const { return elem_image[source_id]; }

  static Homomorphism from_gen_images(GroupPtr source, GroupPtr target,
                                      const std::vector<int>& gen_images);
  // Inclusion of a subgroup (same degree, elements a subset).
  static Homomorphism inclusion(GroupPtr sub, GroupPtr parent);
  static Homomorphism identity(GroupPtr g);
};

// The subgroup with the given sorted element ids as a Group in its own
// right (same degree as the parent).
GroupPtr subgroup_as_group(const GroupPtr& parent, const std::vector<int>& ids);

// G/N realized by the left action of G on the cosets of N, together with
// the projection homomorphism.  Throws NotNormal.
std::pair<GroupPtr, Homomorphism> quotient_group(const GroupPtr& g,
                                                 const std::vector<int>& normal_ids);

}  // namespace linequiv

#endif
