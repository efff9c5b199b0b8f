#pragma once

// Finite matrix groups held as explicit element lists.

#include "spw/fq_matrix.hpp"
#include "spw/integer.hpp"

#include <cstddef>
#include <unordered_map>
#include <vector>

namespace spw {

struct ConjugacyClass {
  int rep = 0;            // element index of the minimal member
  std::size_t size = 0;
  int order = 1;          // common element order
};

class FiniteMatrixGroup {
 public:
  static constexpr std::size_t kDefaultLimit = 200000;

  /// Breadth-first closure of gens under right multiplication.
  /// Throws std::length_error("enumeration limit") once the limit is passed.
  static FiniteMatrixGroup closure(const std::vector<FqMatrix>& gens, std::size_t limit = kDefaultLimit);
  /// elems must already be a group containing gens; gens default to elems.
  static FiniteMatrixGroup from_elements(std::vector<FqMatrix> elems, std::vector<FqMatrix> gens = {});

  const std::vector<FqMatrix>& generators() const { return gens_; }
  /// Sorted ascending in the fixed matrix order.
  const std::vector<FqMatrix>& elements() const { return elems_; }
  const FqMatrix& element(int i) const { return elems_[i]; }
  std::size_t order() const { return elems_.size(); }
  int identity_index() const { return identity_; }
  /// -1 when absent.
  int index_of(const FqMatrix& m) const;
  bool contains(const FqMatrix& m) const { return index_of(m) >= 0; }
  int multiply(int a, int b) const;
  int inverse(int a) const { return inv_[a]; }

  /// Orbit partition under conjugation by the generators. Classes are sorted
  /// with the identity first, then by (element order, size, representative).
  void compute_classes();
  bool has_classes() const { return !classes_.empty(); }
  /// Throws std::logic_error before compute_classes().
  const std::vector<ConjugacyClass>& classes() const;
  int class_of(int element) const;
  int class_of(const FqMatrix& m) const;
  /// Class of rep^e.
  int power_class(int cls, long long e) const;
  /// lcm of element orders.
  int exponent() const;
  Integer centralizer_order(int cls) const { return Integer(static_cast<unsigned long long>(order() / classes()[cls].size)); }

 private:
  void index_elements();

  std::vector<FqMatrix> gens_;
  std::vector<FqMatrix> elems_;
  std::unordered_map<FqMatrix, int, FqMatrixHash> index_;
  std::vector<int> inv_;
  int identity_ = 0;
  std::vector<ConjugacyClass> classes_;
  std::vector<int> class_of_;
};

}  // namespace spw
