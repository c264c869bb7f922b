#include "pgt/cosets.hpp"

#include <algorithm>
#include <unordered_map>

#include "pgt/errors.hpp"
#include "pgt/subgroups.hpp"

namespace pgt {

struct Transversal::Data {
  PermGroup parent;
  PermGroup subgroup;
  std::vector<Permutation> reps;
  // Every element of G mapped to the index of its coset.
  std::unordered_map<Permutation, std::uint32_t> lookup;
};

Transversal::Transversal(PermGroup parent, PermGroup subgroup, std::vector<Permutation> reps) {
  if (!is_subgroup(parent, subgroup)) throw InvalidArgument("transversal: H is not a subgroup of G");
  const std::uint64_t index = parent.order() / subgroup.order();
  if (reps.size() != index)
    throw InvalidArgument("transversal: expected " + std::to_string(index) + " representatives, got " +
                          std::to_string(reps.size()));
  require_within_cap(parent.order(), limits().element_cap, "transversal lookup");
  auto d = std::make_shared<Data>();
  d->parent = std::move(parent);
  d->subgroup = std::move(subgroup);
  d->reps = std::move(reps);
  d->lookup.reserve(static_cast<std::size_t>(d->parent.order()));
  const auto h_elems = d->subgroup.elements();
  for (std::size_t i = 0; i < d->reps.size(); ++i) {
    const auto& r = d->reps[i];
    if (!d->parent.contains(r)) throw InvalidArgument("transversal: representative not in G");
    for (const auto& h : h_elems) {
      if (!d->lookup.emplace(h * r, static_cast<std::uint32_t>(i)).second)
        throw InvalidArgument("transversal: two representatives lie in the same coset");
    }
  }
  data_ = std::move(d);
}

const PermGroup& Transversal::parent() const { return data_->parent; }
const PermGroup& Transversal::subgroup() const { return data_->subgroup; }
const std::vector<Permutation>& Transversal::reps() const { return data_->reps; }

std::size_t Transversal::coset_index(const Permutation& g) const {
  auto it = data_->lookup.find(g);
  if (it == data_->lookup.end()) throw InvalidArgument("coset lookup: element is not in G");
  return it->second;
}

std::size_t Transversal::index_of_rep(const Permutation& t) const {
  auto it = data_->lookup.find(t);
  if (it == data_->lookup.end() || data_->reps[it->second] != t)
    throw InvalidArgument("dot action: " + t.to_cycle_string() + " is not a listed representative");
  return it->second;
}

Transversal right_transversal(const PermGroup& G, const PermGroup& H) {
  if (!is_subgroup(G, H)) throw InvalidArgument("right_transversal: H is not a subgroup of G");
  auto elems = G.elements();
  std::sort(elems.begin(), elems.end());
  const auto h_elems = H.elements();
  std::unordered_map<Permutation, bool> covered;
  covered.reserve(elems.size());
  std::vector<Permutation> reps;
  for (const auto& g : elems) {
    if (covered.count(g)) continue;
    reps.push_back(g);
    for (const auto& h : h_elems) covered.emplace(h * g, true);
  }
  return Transversal(G, H, std::move(reps));
}

Permutation dot_action(const Transversal& T, const Permutation& t, const Permutation& g) {
  T.index_of_rep(t);
  return T.coset_rep(t * g);
}

std::vector<Permutation> double_coset_reps(const PermGroup& G, const PermGroup& H, const PermGroup& K) {
  if (!is_subgroup(G, K)) throw InvalidArgument("double_coset_reps: K is not a subgroup of G");
  Transversal T = right_transversal(G, H);
  const auto& reps = T.reps();
  std::vector<bool> seen(reps.size(), false);
  std::vector<Permutation> out;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    if (seen[i]) continue;
    out.push_back(reps[i]);
    seen[i] = true;
    std::vector<std::size_t> orbit{i};
    for (std::size_t j = 0; j < orbit.size(); ++j) {
      for (const auto& k : K.generators()) {
        std::size_t c = T.coset_index(reps[orbit[j]] * k);
        if (!seen[c]) {
          seen[c] = true;
          orbit.push_back(c);
        }
      }
    }
  }
  return out;
}

PermGroup core(const PermGroup& G, const PermGroup& H) {
  if (!is_subgroup(G, H)) throw InvalidArgument("core: H is not a subgroup of G");
  if (is_normal(G, H)) return H;
  PermGroup C = H;
  const Transversal T = right_transversal(G, H);
  for (const auto& t : T.reps()) {
    C = intersection(C, conjugate_subgroup(H, t));
    if (C.is_trivial()) break;
  }
  return C;
}

QuotientGroup::QuotientGroup(PermGroup source, PermGroup kernel)
    : source_(std::move(source)), kernel_(std::move(kernel)) {
  if (!is_normal(source_, kernel_)) throw InvalidArgument("quotient_group: N is not normal in G");
  if (kernel_.is_trivial()) {
    image_ = source_;
    return;
  }
  cosets_ = std::make_shared<const Transversal>(right_transversal(source_, kernel_));
  std::vector<Permutation> gens;
  for (const auto& g : source_.generators()) gens.push_back(project(g));
  image_ = PermGroup(cosets_->size(), std::move(gens));
  if (image_.order() * kernel_.order() != source_.order())
    throw std::logic_error("quotient_group: image order does not match the index");
}

Permutation QuotientGroup::project(const Permutation& g) const {
  if (!cosets_) return g;
  const auto& reps = cosets_->reps();
  std::vector<Point> img(reps.size());
  for (std::size_t i = 0; i < reps.size(); ++i) img[i] = static_cast<Point>(cosets_->coset_index(reps[i] * g));
  return Permutation(std::move(img));
}

Permutation QuotientGroup::lift(const Permutation& y) const {
  if (!cosets_) return y;
  // The image acts regularly, so y is the image of the representative of coset y(0).
  return cosets_->reps()[y[0]];
}

PermGroup QuotientGroup::project_subgroup(const PermGroup& H) const {
  std::vector<Permutation> gens;
  for (const auto& h : H.generators()) gens.push_back(project(h));
  return PermGroup(image_.degree(), std::move(gens));
}

PermGroup QuotientGroup::preimage(const PermGroup& sub) const {
  if (!cosets_) return sub;
  std::vector<Permutation> gens = kernel_.generators();
  for (const auto& y : sub.generators()) gens.push_back(lift(y));
  return PermGroup(source_.degree(), std::move(gens));
}

QuotientGroup quotient_group(const PermGroup& G, const PermGroup& N) { return QuotientGroup(G, N); }

bool is_maximal(const PermGroup& G, const PermGroup& H) {
  if (!is_subgroup(G, H)) throw InvalidArgument("is_maximal: H is not a subgroup of G");
  if (H.order() == G.order()) throw InvalidArgument("is_maximal: H equals G");
  const auto T = right_transversal(G, H);
  for (std::size_t i = 1; i < T.size(); ++i)
    if (H.with_generators({T.reps()[i]}).order() != G.order()) return false;
  return true;
}

}  // namespace pgt
