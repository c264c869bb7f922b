#include "pgt/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include "pgt/errors.hpp"

namespace pgt {

struct PermGroup::Data {
  std::size_t degree = 0;
  std::vector<Permutation> generators;
  std::vector<ChainLevel> levels;
  std::uint64_t order = 1;
};

namespace {

void rebuild_orbit(ChainLevel& level, std::size_t degree) {
  level.orbit.assign(1, level.base_point);
  level.rep_index.assign(degree, -1);
  level.reps.assign(1, Permutation(degree));
  level.rep_inverses.assign(1, Permutation(degree));
  level.rep_index[level.base_point] = 0;
  for (std::size_t k = 0; k < level.orbit.size(); ++k) {
    Point p = level.orbit[k];
    for (const auto& s : level.strong_generators) {
      Point q = s[p];
      if (level.rep_index[q] >= 0) continue;
      level.rep_index[q] = static_cast<std::int32_t>(level.orbit.size());
      level.orbit.push_back(q);
      Permutation rep = level.reps[k] * s;
      level.rep_inverses.push_back(rep.inverse());
      level.reps.push_back(std::move(rep));
    }
  }
}

// Strips h through levels [from, end); returns the residue and the level
// where stripping stopped (levels.size() when it passed every level).
std::pair<Permutation, std::size_t> strip(const std::vector<ChainLevel>& levels, Permutation h,
                                          std::size_t from) {
  for (std::size_t l = from; l < levels.size(); ++l) {
    Point beta = h[levels[l].base_point];
    std::int32_t idx = levels[l].rep_index[beta];
    if (idx < 0) return {std::move(h), l};
    h *= levels[l].rep_inverses[static_cast<std::size_t>(idx)];
  }
  return {std::move(h), levels.size()};
}

bool fixes_all(const Permutation& g, const std::vector<ChainLevel>& levels, std::size_t count) {
  for (std::size_t l = 0; l < count; ++l)
    if (g[levels[l].base_point] != levels[l].base_point) return false;
  return true;
}

void schreier_sims(PermGroup::Data& d) {
  auto& levels = d.levels;
  const std::size_t n = d.degree;
  if (d.generators.empty()) return;

  for (const auto& g : d.generators) {
    if (fixes_all(g, levels, levels.size())) {
      ChainLevel lvl;
      lvl.base_point = g.first_moved_point();
      levels.push_back(std::move(lvl));
    }
  }
  for (std::size_t l = 0; l < levels.size(); ++l) {
    for (const auto& g : d.generators)
      if (fixes_all(g, levels, l)) levels[l].strong_generators.push_back(g);
    rebuild_orbit(levels[l], n);
  }

  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(levels.size()) - 1;
  while (i >= 0) {
    bool changed = false;
    auto& lvl = levels[static_cast<std::size_t>(i)];
    for (std::size_t k = 0; !changed && k < lvl.orbit.size(); ++k) {
      for (std::size_t s = 0; s < lvl.strong_generators.size(); ++s) {
        const Permutation& x = lvl.strong_generators[s];
        Point img = x[lvl.orbit[k]];
        Permutation h = lvl.reps[k] * x;
        h *= lvl.rep_inverses[static_cast<std::size_t>(lvl.rep_index[img])];
        if (h.is_identity()) continue;
        auto [residue, j] = strip(levels, std::move(h), static_cast<std::size_t>(i) + 1);
        if (residue.is_identity()) continue;
        if (j == levels.size()) {
          ChainLevel fresh;
          fresh.base_point = residue.first_moved_point();
          levels.push_back(std::move(fresh));
        }
        for (std::size_t l = static_cast<std::size_t>(i) + 1; l <= j; ++l) {
          levels[l].strong_generators.push_back(residue);
          rebuild_orbit(levels[l], n);
        }
        i = static_cast<std::ptrdiff_t>(j);
        changed = true;
        break;
      }
    }
    if (!changed) --i;
  }

  std::uint64_t order = 1;
  for (const auto& l : levels) {
    std::uint64_t len = l.orbit.size();
    if (order > std::numeric_limits<std::uint64_t>::max() / len)
      throw ResourceCapExceeded("group order exceeds 64-bit range");
    order *= len;
  }
  d.order = order;
}

}  // namespace

PermGroup::PermGroup() : data_(std::make_shared<Data>()) {}

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators) {
  if (degree == 0 && !generators.empty()) throw InvalidArgument("degree must be positive");
  auto d = std::make_shared<Data>();
  d->degree = degree;
  for (auto& g : generators) {
    if (g.degree() != degree)
      throw InvalidArgument("generator degree " + std::to_string(g.degree()) + " does not match group degree " +
                            std::to_string(degree));
    if (!g.is_identity()) d->generators.push_back(std::move(g));
  }
  schreier_sims(*d);
  data_ = std::move(d);
}

std::size_t PermGroup::degree() const { return data_->degree; }
const std::vector<Permutation>& PermGroup::generators() const { return data_->generators; }
std::uint64_t PermGroup::order() const { return data_->order; }
const std::vector<ChainLevel>& PermGroup::chain() const { return data_->levels; }

std::vector<Point> PermGroup::base() const {
  std::vector<Point> b;
  for (const auto& l : data_->levels) b.push_back(l.base_point);
  return b;
}

Permutation PermGroup::sift(const Permutation& x) const {
  if (x.degree() != degree()) throw InvalidArgument("membership test with mismatched degree");
  return strip(data_->levels, x, 0).first;
}

bool PermGroup::contains(const Permutation& x) const {
  if (x.degree() != degree()) throw InvalidArgument("membership test with mismatched degree");
  const auto& levels = data_->levels;
  Permutation h = x;
  for (const auto& l : levels) {
    std::int32_t idx = l.rep_index[h[l.base_point]];
    if (idx < 0) return false;
    h *= l.rep_inverses[static_cast<std::size_t>(idx)];
  }
  return h.is_identity();
}

void PermGroup::for_each_element(const std::function<void(const Permutation&)>& visit) const {
  require_within_cap(order(), limits().element_cap, "element enumeration");
  const auto& levels = data_->levels;
  if (levels.empty()) {
    visit(identity());
    return;
  }
  // Element = r_{k-1} * ... * r_1 * r_0 with r_l a representative at level l.
  const std::size_t k = levels.size();
  std::vector<std::size_t> idx(k, 0);
  std::vector<Permutation> partial(k + 1, identity());
  // partial[l] = r_{k-1} * ... * r_l; partial[k] = identity.
  for (std::size_t l = k; l-- > 0;) partial[l] = partial[l + 1] * levels[l].reps[0];
  for (;;) {
    visit(partial[0]);
    std::size_t l = 0;
    while (l < k && ++idx[l] == levels[l].reps.size()) {
      idx[l] = 0;
      ++l;
    }
    if (l == k) break;
    for (std::size_t m = l + 1; m-- > 0;) partial[m] = partial[m + 1] * levels[m].reps[idx[m]];
  }
}

std::vector<Permutation> PermGroup::elements() const {
  std::vector<Permutation> out;
  out.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(order(), limits().element_cap)));
  for_each_element([&](const Permutation& p) { out.push_back(p); });
  return out;
}

PermGroup PermGroup::with_generators(const std::vector<Permutation>& extra) const {
  std::vector<Permutation> gens = generators();
  gens.insert(gens.end(), extra.begin(), extra.end());
  return PermGroup(degree(), std::move(gens));
}

PermGroup group_from_generators(std::size_t degree, std::vector<Permutation> generators) {
  return PermGroup(degree, std::move(generators));
}

}  // namespace pgt
