#include "spw/matrix_group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace spw {

FiniteMatrixGroup FiniteMatrixGroup::closure(const std::vector<FqMatrix>& gens, std::size_t limit) {
  if (gens.empty()) throw std::invalid_argument("closure needs at least one generator");
  const FqMatrix id = FqMatrix::identity(gens.front().field(), gens.front().rows());
  std::unordered_map<FqMatrix, int, FqMatrixHash> seen;
  std::vector<FqMatrix> elems{id};
  seen.emplace(id, 0);
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (const auto& g : gens) {
      FqMatrix x = elems[head] * g;
      if (seen.count(x)) continue;
      if (elems.size() >= limit) throw std::length_error("enumeration limit");
      seen.emplace(x, static_cast<int>(elems.size()));
      elems.push_back(std::move(x));
    }
  }
  return from_elements(std::move(elems), gens);
}

FiniteMatrixGroup FiniteMatrixGroup::from_elements(std::vector<FqMatrix> elems, std::vector<FqMatrix> gens) {
  if (elems.empty()) throw std::invalid_argument("empty group");
  FiniteMatrixGroup g;
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  g.elems_ = std::move(elems);
  g.gens_ = gens.empty() ? g.elems_ : std::move(gens);
  g.index_elements();
  return g;
}

void FiniteMatrixGroup::index_elements() {
  index_.reserve(elems_.size() * 2);
  for (std::size_t i = 0; i < elems_.size(); ++i) index_.emplace(elems_[i], static_cast<int>(i));
  const FqMatrix& first = elems_.front();
  identity_ = index_of(FqMatrix::identity(first.field(), first.rows()));
  if (identity_ < 0) throw std::invalid_argument("element list lacks the identity");
  inv_.assign(elems_.size(), -1);
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    if (inv_[i] >= 0) continue;
    int j = index_of(spw::inverse(elems_[i]));
    if (j < 0) throw std::invalid_argument("element list not closed under inverses");
    inv_[i] = j;
    inv_[j] = static_cast<int>(i);
  }
}

int FiniteMatrixGroup::index_of(const FqMatrix& m) const {
  auto it = index_.find(m);
  return it == index_.end() ? -1 : it->second;
}

int FiniteMatrixGroup::multiply(int a, int b) const {
  int r = index_of(elems_[a] * elems_[b]);
  if (r < 0) throw std::logic_error("product left the group");
  return r;
}

void FiniteMatrixGroup::compute_classes() {
  if (has_classes()) return;
  std::vector<int> gen_idx, gen_inv;
  for (const auto& g : gens_) {
    int i = index_of(g);
    if (i < 0) throw std::logic_error("generator not in group");
    gen_idx.push_back(i);
    gen_inv.push_back(inv_[i]);
  }
  std::vector<int> raw_class(elems_.size(), -1);
  std::vector<ConjugacyClass> found;
  for (std::size_t start = 0; start < elems_.size(); ++start) {
    if (raw_class[start] >= 0) continue;
    const int cid = static_cast<int>(found.size());
    ConjugacyClass c;
    c.rep = static_cast<int>(start);  // elements are sorted, so the first unvisited member is minimal
    std::deque<int> queue{static_cast<int>(start)};
    raw_class[start] = cid;
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop_front();
      ++c.size;
      for (std::size_t k = 0; k < gen_idx.size(); ++k) {
        int y = multiply(multiply(gen_idx[k], x), gen_inv[k]);
        if (raw_class[y] < 0) {
          raw_class[y] = cid;
          queue.push_back(y);
        }
      }
    }
    int ord = 1;
    for (int p = c.rep; p != identity_; p = multiply(p, c.rep)) ++ord;
    c.order = ord;
    found.push_back(c);
  }
  std::vector<int> perm(found.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](int a, int b) {
    const auto& x = found[a];
    const auto& y = found[b];
    bool xi = x.rep == identity_, yi = y.rep == identity_;
    if (xi != yi) return xi;
    return std::tie(x.order, x.size, x.rep) < std::tie(y.order, y.size, y.rep);
  });
  std::vector<int> new_id(found.size());
  for (std::size_t i = 0; i < perm.size(); ++i) {
    new_id[perm[i]] = static_cast<int>(i);
    classes_.push_back(found[perm[i]]);
  }
  class_of_.resize(elems_.size());
  for (std::size_t i = 0; i < elems_.size(); ++i) class_of_[i] = new_id[raw_class[i]];
}

const std::vector<ConjugacyClass>& FiniteMatrixGroup::classes() const {
  if (!has_classes()) throw std::logic_error("classes not computed");
  return classes_;
}

int FiniteMatrixGroup::class_of(int element) const {
  if (!has_classes()) throw std::logic_error("classes not computed");
  return class_of_[element];
}

int FiniteMatrixGroup::class_of(const FqMatrix& m) const {
  int i = index_of(m);
  if (i < 0) throw std::invalid_argument("matrix not in group");
  return class_of(i);
}

int FiniteMatrixGroup::power_class(int cls, long long e) const {
  const auto& c = classes()[cls];
  long long k = ((e % c.order) + c.order) % c.order;
  int x = identity_;
  for (long long i = 0; i < k; ++i) x = multiply(x, c.rep);
  return class_of_[x];
}

int FiniteMatrixGroup::exponent() const {
  int e = 1;
  for (const auto& c : classes()) e = std::lcm(e, c.order);
  return e;
}

}  // namespace spw
