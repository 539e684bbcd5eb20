#include "linequiv/homomorphism.hpp"

#include <algorithm>

#include "linequiv/error.hpp"

namespace linequiv {

bool Homomorphism::surjective() const {
  std::vector<char> hit(target->order(), 0);
  long long count = 0;
  for (int t : elem_image)
    if (!hit[t]) {
      hit[t] = 1;
      ++count;
    }
  return count == target->order();
}

Homomorphism Homomorphism::from_gen_images(GroupPtr source, GroupPtr target,
                                           const std::vector<int>& gen_images) {
  if (gen_images.size() != source->generators().size())
    throw Error(ErrorKind::Spec, "one image per source generator required");
  Homomorphism h;
  h.source = source;
  h.target = target;
  h.gen_images = gen_images;
  h.elem_image.assign(source->order(), -1);
  h.elem_image[source->identity_id()] = target->identity_id();
  // Elements are ordered by BFS discovery in the factorization tree, but
  // sorted afterwards, so resolve parents recursively.
  for (int id = 0; id < source->order(); ++id) {
    if (h.elem_image[id] >= 0) continue;
    std::vector<int> chain;
    int cur = id;
    while (h.elem_image[cur] < 0) {
      chain.push_back(cur);
      cur = source->factor_parent(cur);
    }
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
      int p = source->factor_parent(*it);
      int gi = source->factor_gen(*it);
      h.elem_image[*it] = target->mul(h.elem_image[p], gen_images[gi]);
    }
  }
  // Right-multiplicativity by every generator extends to full
  // multiplicativity by induction on word length.
  for (int e = 0; e < source->order(); ++e)
    for (size_t gi = 0; gi < gen_images.size(); ++gi) {
      int lhs = h.elem_image[source->mul(e, source->generator_ids()[gi])];
      int rhs = target->mul(h.elem_image[e], gen_images[gi]);
      if (lhs != rhs)
        throw Error(ErrorKind::Spec,
                    "generator images do not define a homomorphism");
    }
  for (int e = 0; e < source->order(); ++e)
    if (h.elem_image[e] == target->identity_id()) h.kernel.push_back(e);
  return h;
}

Homomorphism Homomorphism::inclusion(GroupPtr sub, GroupPtr parent) {
  if (sub->degree() != parent->degree())
    throw Error(ErrorKind::Spec, "inclusion needs equal degrees");
  std::vector<int> gen_images;
  for (const auto& g : sub->generators()) {
    int id = parent->element_id(g);
    if (id < 0)
      throw Error(ErrorKind::NotSubgroup, "generator not in parent group");
    gen_images.push_back(id);
  }
  return from_gen_images(sub, parent, gen_images);
}

Homomorphism Homomorphism::identity(GroupPtr g) {
  return from_gen_images(g, g, g->generator_ids());
}

GroupPtr subgroup_as_group(const GroupPtr& parent, const std::vector<int>& ids) {
  std::vector<int> gens = parent->min_generating_ids(ids);
  std::vector<Permutation> gen_perms;
  if (gens.empty()) gen_perms.emplace_back(parent->degree());
  for (int id : gens) gen_perms.push_back(parent->elements()[id]);
  GroupPtr sub = Group::from_generators(std::move(gen_perms));
  if (sub->order() != static_cast<long long>(ids.size()))
    throw Error(ErrorKind::NotSubgroup, "element set is not closed");
  return sub;
}

std::pair<GroupPtr, Homomorphism> quotient_group(const GroupPtr& g,
                                                 const std::vector<int>& normal_ids) {
  const std::vector<int>& n = normal_ids;
  if (g->subgroup_closure(n) != n)
    throw Error(ErrorKind::NotSubgroup, "kernel candidate is not a subgroup");
  for (int x = 0; x < g->order(); ++x) {
    for (int m : n)
      if (!std::binary_search(n.begin(), n.end(), g->conj(x, m)))
        throw Error(ErrorKind::NotNormal, "subgroup is not normal");
  }

  // Left cosets in canonical order: a coset is numbered when its least
  // element is first met scanning ids upward; coset 0 contains the identity.
  long long order = g->order();
  std::vector<int> coset_of(order, -1);
  std::vector<int> reps;
  for (int x = 0; x < order; ++x) {
    if (coset_of[x] >= 0) continue;
    int c = static_cast<int>(reps.size());
    reps.push_back(x);
    for (int m : n) coset_of[g->mul(x, m)] = c;
  }
  int index = static_cast<int>(reps.size());

  std::vector<Permutation> qgens;
  for (int gid : g->generator_ids()) {
    std::vector<int> img(index);
    for (int c = 0; c < index; ++c) img[c] = coset_of[g->mul(gid, reps[c])];
    qgens.emplace_back(std::move(img));
  }
  if (qgens.empty()) qgens.emplace_back(index);
  GroupPtr q = Group::from_generators(std::move(qgens));
  if (q->order() != static_cast<long long>(index))
    throw Error(ErrorKind::InternalInvariant,
                "coset action order differs from index");

  std::vector<int> gen_images;
  for (const auto& qg : q->generators()) gen_images.push_back(q->element_id(qg));
  // generator order is preserved by from_generators, so images line up
  Homomorphism proj = Homomorphism::from_gen_images(g, q, gen_images);
  if (proj.kernel != n)
    throw Error(ErrorKind::InternalInvariant, "projection kernel mismatch");
  return {q, std::move(proj)};
}

}  // namespace linequiv
