#ifndef LINEQUIV_GROUP_HPP
#define LINEQUIV_GROUP_HPP

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "linequiv/permutation.hpp"

namespace linequiv {

inline constexpr long long kDefaultOrderCap = 10080;
inline constexpr long long kDefaultLatticeCap = 512;

class Group;
using GroupPtr = std::shared_ptr<const Group>;

// All subgroups of a group, partitioned into conjugacy classes.
// Subgroups are sorted vectors of element ids; the global subgroup list is
// sorted by (size, lexicographic), classes by their least member, so the
// trivial subgroup is class 0 and the whole group the last class.
struct SubgroupLattice {
  struct Class {
    int rep;                   // subgroup index of canonical representative
    std::vector<int> members;  // subgroup indices, ascending
    long long order;
    long long normalizer_order;
    std::vector<int> min_gens;  // canonical generating ids of rep
  };

  const Group* parent = nullptr;
  std::vector<std::vector<int>> subgroups;
  std::vector<Class> classes;
  std::vector<int> class_of;  // subgroup index -> class index
  // inclusion[i][j]: some member of class i is contained in the
  // representative of class j.
  std::vector<std::vector<char>> inclusion;

  int find_subgroup(const std::vector<int>& sorted_ids) const;  // -1 if absent
  // Resolves an arbitrary element set (closed or not) to its class.
  int class_of_element_set(const std::vector<int>& ids) const;
  long long index_of_class(int c) const;
  int num_classes() const { return static_cast<int>(classes.size()); }
};

// A finite permutation group with a cached, canonically sorted element list.
// Construction enumerates the closure of the generators; heavier structure
// (conjugacy classes, subgroup lattice) is built on demand and cached.
class Group : public std::enable_shared_from_this<Group> {
 public:
  static GroupPtr from_generators(std::vector<Permutation> gens,
                                  long long order_cap = kDefaultOrderCap,
                                  std::string spec = "");

  int degree() const { return degree_; }
  long long order() const { return static_cast<long long>(elems_.size()); }
  const std::vector<Permutation>& elements() const { return elems_; }
  const std::vector<Permutation>& generators() const { return gens_; }
  const std::vector<int>& generator_ids() const { return gen_ids_; }

  int element_id(const Permutation& p) const;  // -1 if not a member
  int identity_id() const { return 0; }

  int mul(int a, int b) const;  // id of elems_[a] after elems_[b]
  int inv(int a) const;
  int conj(int g, int x) const { return mul(mul(g, x), inv(g)); }
  long long element_order(int a) const { return orders_[a]; }

  // BFS factorization: element = factor_parent * generator[factor_gen];
  // the identity has parent -1.
  int factor_parent(int id) const { return parent_[id]; }
  int factor_gen(int id) const { return parent_gen_[id]; }

  struct ElementClass {
    int rep;
    std::vector<int> members;
  };
  const std::vector<ElementClass>& conj_classes() const;
  int class_of_element(int id) const;

  const SubgroupLattice& lattice(long long cap = kDefaultLatticeCap) const;
  bool lattice_built() const;

  // Closure of a set of element ids inside this group.
  std::vector<int> subgroup_closure(std::vector<int> seed) const;
  // Canonical minimal generating ids of a subgroup given as sorted ids.
  std::vector<int> min_generating_ids(const std::vector<int>& sub) const;

  bool is_abelian() const;
  bool is_cyclic() const;

  // Group-spec string this group was built from; derived groups get a
  // synthesized "perm: ... deg=n" spec that parses back to the same group.
  const std::string& spec_string() const { return spec_; }

 private:
  Group() = default;

  int degree_ = 0;
  std::vector<Permutation> gens_;
  std::vector<int> gen_ids_;
  std::vector<Permutation> elems_;  // sorted lexicographically
  std::vector<int> parent_, parent_gen_;
  std::vector<int> inv_;
  std::vector<long long> orders_;
  std::string spec_;

  std::vector<int> mult_table_;  // order x order when small enough, else empty

  mutable std::once_flag conj_once_;
  mutable std::vector<ElementClass> conj_classes_;
  mutable std::vector<int> class_of_;

  mutable std::once_flag lattice_once_;
  mutable std::unique_ptr<SubgroupLattice> lattice_;
};

// True when the two groups have identical degree and element lists.
bool same_group(const Group& a, const Group& b);

}  // namespace linequiv

#endif
