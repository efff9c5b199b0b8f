#pragma once

// Commutator counts #{(x, y) : x y x^-1 y^-1 = g}, the Frobenius character
// sum for them, and per-class deviation from the uniform count |G|.

#include "spw/chartab.hpp"

#include <optional>
#include <string>

namespace spw {

constexpr std::size_t kPairsLimit = 1000;
constexpr std::size_t kCentralizerLimit = 100000;

/// All pairs. Throws std::length_error above kPairsLimit.
Integer commutator_count_pairs(const FiniteMatrixGroup& g, int element);
/// Sum over x of |C(x)| when x^-1 g is conjugate to x^-1. Needs classes;
/// throws std::length_error above kCentralizerLimit.
Integer commutator_count(const FiniteMatrixGroup& g, int element);

/// sum over irreducibles of chi(g) / chi(1). Throws std::out_of_range for a bad class.
CycloNum frobenius_count(const CharacterTable& t, int cls);
CycloNum frobenius_count(const CharacterTable& t, const FqMatrix& g);

/// Nearest integer to log_q(dim), ties rounded up.
int log_bucket(long long dim, int q);

struct OreClassRow {
  int cls = 0;
  std::string rep;
  std::size_t size = 0;
  std::optional<Integer> brute_count;
  CycloNum frobenius;  // count / |G|
  CycloNum deviation;  // frobenius - 1
  double deviation_float = 0;
  bool bound_ok = true;  // |dev|^2 <= (#classes - 1)(|C(g)| - 1) for g != 1
};

struct OreRatioRow {
  int irrep = 0;
  long long dim = 0;
  int bucket = 0;
  CycloNum ratio;  // chi(T) / dim at the transvection
  std::string ratio_float;
};

struct OreReport {
  std::string group_id;
  std::size_t order = 0;
  std::size_t class_count = 0;
  int transvection_class = -1;
  std::vector<OreClassRow> per_class;
  std::vector<OreRatioRow> ratios;
  bool consistent = true;  // brute == frobenius * |G| wherever both exist

  bool ok() const;
};

/// t is a table of Sp_2n(F_q); the transvection is u(E_11). The brute path runs
/// when |G| <= kCentralizerLimit and brute is set.
OreReport uniformity_report(const CharacterTable& t, int q, int n, const std::string& group_id, bool brute = true);

}  // namespace spw
