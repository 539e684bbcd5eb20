#include "linequiv/group.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <unordered_map>

#include "linequiv/error.hpp"

namespace linequiv {

namespace {

constexpr long long kMultTableMaxOrder = 2048;

struct VecHash {
  size_t operator()(const std::vector<int>& v) const {
    size_t h = v.size();
    for (int x : v) h = h * 1000003u + static_cast<size_t>(x) + 0x9e3779b9u;
    return h;
  }
};

}  // namespace

GroupPtr Group::from_generators(std::vector<Permutation> gens,
                                long long order_cap, std::string spec) {
  if (order_cap < 1)
    throw Error(ErrorKind::Spec, "order cap must be at least 1");
  if (gens.empty())
    throw Error(ErrorKind::Spec, "at least the degree is needed; pass an identity generator");
  int degree = gens[0].degree();
  for (const auto& g : gens)
    if (g.degree() != degree)
      throw Error(ErrorKind::Spec, "generators have mixed degrees");

  // Breadth-first closure, recording one factorization per element.
  struct Node {
    Permutation perm;
    int parent, gen;
  };
  std::vector<Node> nodes;
  std::map<Permutation, int> index;
  Permutation id(degree);
  nodes.push_back({id, -1, -1});
  index.emplace(id, 0);
  std::queue<int> work;
  work.push(0);
  while (!work.empty()) {
    int cur = work.front();
    work.pop();
    for (size_t gi = 0; gi < gens.size(); ++gi) {
      Permutation nxt = nodes[cur].perm.after(gens[gi]);
      auto [it, fresh] = index.emplace(nxt, static_cast<int>(nodes.size()));
      if (fresh) {
        if (static_cast<long long>(nodes.size()) + 1 > order_cap)
          throw Error(ErrorKind::CapExceeded,
                      "closure exceeds order cap " + std::to_string(order_cap) +
                          " (partial count " + std::to_string(nodes.size() + 1) + ")");
        nodes.push_back({std::move(nxt), cur, static_cast<int>(gi)});
        work.push(static_cast<int>(nodes.size()) - 1);
      }
    }
  }

  auto g = std::shared_ptr<Group>(new Group());
  g->degree_ = degree;
  g->gens_ = std::move(gens);
  g->spec_ = std::move(spec);

  // std::map iteration is already lexicographic in the permutations.
  std::vector<int> new_id(nodes.size());
  g->elems_.reserve(nodes.size());
  int k = 0;
  for (const auto& [perm, old] : index) {
    new_id[old] = k++;
    g->elems_.push_back(perm);
  }
  g->parent_.assign(nodes.size(), -1);
  g->parent_gen_.assign(nodes.size(), -1);
  for (size_t old = 0; old < nodes.size(); ++old) {
    int nid = new_id[old];
    g->parent_[nid] = nodes[old].parent < 0 ? -1 : new_id[nodes[old].parent];
    g->parent_gen_[nid] = nodes[old].gen;
  }
  if (!g->elems_[0].is_identity())
    throw Error(ErrorKind::InternalInvariant, "identity is not element 0");

  g->inv_.resize(g->elems_.size());
  g->orders_.resize(g->elems_.size());
  for (size_t i = 0; i < g->elems_.size(); ++i) {
    g->inv_[i] = static_cast<int>(
        std::lower_bound(g->elems_.begin(), g->elems_.end(), g->elems_[i].inverse()) -
        g->elems_.begin());
    g->orders_[i] = g->elems_[i].order();
  }
  g->gen_ids_.reserve(g->gens_.size());
  for (const auto& gen : g->gens_) g->gen_ids_.push_back(g->element_id(gen));

  if (g->order() <= kMultTableMaxOrder) {
    size_t n = g->elems_.size();
    g->mult_table_.resize(n * n);
    for (size_t a = 0; a < n; ++a)
      for (size_t b = 0; b < n; ++b) {
        Permutation p = g->elems_[a].after(g->elems_[b]);
        g->mult_table_[a * n + b] = static_cast<int>(
            std::lower_bound(g->elems_.begin(), g->elems_.end(), p) -
            g->elems_.begin());
      }
  }
  if (g->spec_.empty()) {
    std::string s = "perm:";
    for (const auto& gen : g->gens_) s += " \"" + gen.cycle_string() + "\"";
    s += " deg=" + std::to_string(degree);
    g->spec_ = s;
  }
  return g;
}

int Group::element_id(const Permutation& p) const {
  auto it = std::lower_bound(elems_.begin(), elems_.end(), p);
  if (it == elems_.end() || !(*it == p)) return -1;
  return static_cast<int>(it - elems_.begin());
}

int Group::mul(int a, int b) const {
  if (!mult_table_.empty())
    return mult_table_[static_cast<size_t>(a) * elems_.size() + b];
  return element_id(elems_[a].after(elems_[b]));
}

int Group::inv(int a) const { return inv_[a]; }

const std::vector<Group::ElementClass>& Group::conj_classes() const {
  std::call_once(conj_once_, [this] {
    class_of_.assign(elems_.size(), -1);
    for (int x = 0; x < static_cast<int>(elems_.size()); ++x) {
      if (class_of_[x] >= 0) continue;
      ElementClass cls;
      cls.rep = x;
      int id = static_cast<int>(conj_classes_.size());
      // orbit of x under conjugation
      std::vector<int> stack{x};
      class_of_[x] = id;
      while (!stack.empty()) {
        int y = stack.back();
        stack.pop_back();
        cls.members.push_back(y);
        for (int g = 0; g < static_cast<int>(elems_.size()); ++g) {
          int z = conj(g, y);
          if (class_of_[z] < 0) {
            class_of_[z] = id;
            stack.push_back(z);
          }
        }
      }
      std::sort(cls.members.begin(), cls.members.end());
      conj_classes_.push_back(std::move(cls));
    }
  });
  return conj_classes_;
}

int Group::class_of_element(int id) const {
  conj_classes();
  return class_of_[id];
}

std::vector<int> Group::subgroup_closure(std::vector<int> seed) const {
  std::vector<char> in(elems_.size(), 0);
  std::vector<int> members{identity_id()};
  in[identity_id()] = 1;
  std::queue<int> work;
  work.push(identity_id());
  for (int s : seed)
    if (!in[s]) {
      in[s] = 1;
      members.push_back(s);
      work.push(s);
    }
  std::vector<int> gens = seed;
  while (!work.empty()) {
    int cur = work.front();
    work.pop();
    for (int g : gens) {
      int nxt = mul(cur, g);
      if (!in[nxt]) {
        in[nxt] = 1;
        members.push_back(nxt);
        work.push(nxt);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

std::vector<int> Group::min_generating_ids(const std::vector<int>& sub) const {
  std::vector<int> gens;
  std::vector<int> closed{identity_id()};
  for (int id : sub) {
    if (std::binary_search(closed.begin(), closed.end(), id)) continue;
    gens.push_back(id);
    closed = subgroup_closure(gens);
    if (closed.size() == sub.size()) break;
  }
  return gens;
}

bool Group::is_abelian() const {
  for (int a : gen_ids_)
    for (int b : gen_ids_)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

bool Group::is_cyclic() const {
  for (size_t i = 0; i < elems_.size(); ++i)
    if (orders_[i] == order()) return true;
  return false;
}

int SubgroupLattice::find_subgroup(const std::vector<int>& sorted_ids) const {
  auto cmp = [](const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  };
  auto it = std::lower_bound(subgroups.begin(), subgroups.end(), sorted_ids, cmp);
  if (it == subgroups.end() || *it != sorted_ids) return -1;
  return static_cast<int>(it - subgroups.begin());
}

int SubgroupLattice::class_of_element_set(const std::vector<int>& ids) const {
  std::vector<int> closed = parent->subgroup_closure(ids);
  int idx = find_subgroup(closed);
  if (idx < 0)
    throw Error(ErrorKind::InternalInvariant,
                "closed element set missing from lattice");
  return class_of[idx];
}

long long SubgroupLattice::index_of_class(int c) const {
  return parent->order() / classes[c].order;
}

const SubgroupLattice& Group::lattice(long long cap) const {
  // call_once leaves the flag unset when the callable throws, so a failed
  // attempt (cap too small) can be retried with a larger cap.
  std::call_once(lattice_once_, [this, cap] {
      if (order() > cap)
        throw Error(ErrorKind::CapExceeded,
                    "group order " + std::to_string(order()) +
                        " exceeds lattice cap " + std::to_string(cap));
      auto lat = std::make_unique<SubgroupLattice>();
      lat->parent = this;

      // Every subgroup arises from a maximal chain by adjoining one element
      // at a time, so closing the trivial subgroup under single-element
      // extension is exhaustive.
      std::unordered_map<std::vector<int>, int, VecHash> seen;
      std::vector<std::vector<int>> subs;
      std::vector<int> trivial{identity_id()};
      seen.emplace(trivial, 0);
      subs.push_back(trivial);
      std::queue<int> work;
      work.push(0);
      while (!work.empty()) {
        int cur = work.front();
        work.pop();
        std::vector<int> base = subs[cur];
        for (int g = 0; g < static_cast<int>(order()); ++g) {
          if (std::binary_search(base.begin(), base.end(), g)) continue;
          std::vector<int> seed = base;
          seed.push_back(g);
          std::vector<int> ext = subgroup_closure(seed);
          auto [it, fresh] = seen.emplace(ext, static_cast<int>(subs.size()));
          if (fresh) {
            subs.push_back(std::move(ext));
            work.push(static_cast<int>(subs.size()) - 1);
          }
        }
      }
      std::sort(subs.begin(), subs.end(),
                [](const std::vector<int>& a, const std::vector<int>& b) {
                  if (a.size() != b.size()) return a.size() < b.size();
                  return a < b;
                });
      lat->subgroups = std::move(subs);

      int nsub = static_cast<int>(lat->subgroups.size());
      lat->class_of.assign(nsub, -1);
      auto find_sub = [&](const std::vector<int>& v) {
        return lat->find_subgroup(v);
      };
      for (int s = 0; s < nsub; ++s) {
        if (lat->class_of[s] >= 0) continue;
        SubgroupLattice::Class cls;
        cls.rep = s;
        cls.order = static_cast<long long>(lat->subgroups[s].size());
        int cid = static_cast<int>(lat->classes.size());
        std::vector<int> stack{s};
        lat->class_of[s] = cid;
        while (!stack.empty()) {
          int t = stack.back();
          stack.pop_back();
          cls.members.push_back(t);
          for (int g = 0; g < static_cast<int>(order()); ++g) {
            std::vector<int> conj_sub(lat->subgroups[t].size());
            for (size_t i = 0; i < conj_sub.size(); ++i)
              conj_sub[i] = conj(g, lat->subgroups[t][i]);
            std::sort(conj_sub.begin(), conj_sub.end());
            int u = find_sub(conj_sub);
            if (u < 0)
              throw Error(ErrorKind::InternalInvariant,
                          "conjugate subgroup missing from lattice");
            if (lat->class_of[u] < 0) {
              lat->class_of[u] = cid;
              stack.push_back(u);
            }
          }
        }
        std::sort(cls.members.begin(), cls.members.end());
        long long nconj = 0;
        const std::vector<int>& rep = lat->subgroups[s];
        for (int g = 0; g < static_cast<int>(order()); ++g) {
          std::vector<int> conj_sub(rep.size());
          for (size_t i = 0; i < rep.size(); ++i) conj_sub[i] = conj(g, rep[i]);
          std::sort(conj_sub.begin(), conj_sub.end());
          if (conj_sub == rep) ++nconj;
        }
        cls.normalizer_order = nconj;
        cls.min_gens = min_generating_ids(rep);
        lat->classes.push_back(std::move(cls));
      }

      int ncls = lat->num_classes();
      lat->inclusion.assign(ncls, std::vector<char>(ncls, 0));
      for (int i = 0; i < ncls; ++i)
        for (int j = 0; j < ncls; ++j) {
          if (lat->classes[j].order % lat->classes[i].order != 0) continue;
          const std::vector<int>& repj = lat->subgroups[lat->classes[j].rep];
          for (int m : lat->classes[i].members) {
            const std::vector<int>& mem = lat->subgroups[m];
            if (std::includes(repj.begin(), repj.end(), mem.begin(), mem.end())) {
              lat->inclusion[i][j] = 1;
              break;
            }
          }
        }
      lattice_ = std::move(lat);
  });
  return *lattice_;
}

bool Group::lattice_built() const { return lattice_ != nullptr; }

bool same_group(const Group& a, const Group& b) {
  return a.degree() == b.degree() && a.elements() == b.elements();
}

}  // namespace linequiv
