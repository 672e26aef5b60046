#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "tropsing/lattice.hpp"
#include "tropsing/linalg.hpp"
#include "tropsing/secondary_fan.hpp"

namespace tropsing {

/// Rows (1, i, j) over the configuration, column k scaled by p^i q^j.
Matrix coefficient_matrix(const PointConfiguration& config, const Rational& p = 1,
                          const Rational& q = 1);

using PivotTriple = std::array<std::size_t, 3>;

struct GaleDual {
  Matrix b;            // (s-3) x s, rows span ker(A)
  PivotTriple pivots;  // sorted
};

/// First triple of columns of rank 3 in lexicographic index order.
PivotTriple default_pivots(const Matrix& a);

/// Gale dual built on the pivot columns: row r has a one in the r-th
/// non-pivot column and the negated transformed column entries at the pivots.
GaleDual gale_dual(const Matrix& a, std::optional<PivotTriple> pivots = std::nullopt);

/// B with the pivot columns moved to the front (in pivot order), other
/// columns in configuration order. The block structure is (-A1^t | 1).
Matrix pivot_first_form(const GaleDual& g);

/// The pivot columns of A mapped to unit vectors: A_p^{-1} A.
Matrix transformed_points(const Matrix& a, const PivotTriple& pivots);

using Bitset = std::uint32_t;

Bitset to_bits(const IndexSet& set);
IndexSet from_bits(Bitset bits);

/// Column matroid of a rational matrix, queried through a memoised rank oracle.
class Matroid {
 public:
  explicit Matroid(Matrix columns);

  std::size_t size() const noexcept { return m_.cols(); }
  std::size_t rank() const { return rank(full()); }
  std::size_t rank(Bitset set) const;
  Bitset closure(Bitset set) const;
  bool is_flat(Bitset set) const { return closure(set) == set; }
  Bitset full() const noexcept { return size() == 32 ? ~Bitset{0} : (Bitset{1} << size()) - 1; }

 private:
  Matrix m_;
  mutable std::unordered_map<Bitset, std::size_t> memo_;
};

bool is_flat(const GaleDual& g, const IndexSet& subset);

struct FlagOfFlats {
  std::vector<IndexSet> flats;  // F_1 ⊊ ... ⊊ F_r = ground set

  /// F'_k = F_k \ F_{k-1}.
  std::vector<IndexSet> blocks() const;

  friend bool operator==(const FlagOfFlats&, const FlagOfFlats&) = default;
};

/// Flag-enumeration guard: TROPSING_LIMIT if set, else 12.
std::size_t default_flag_limit();

std::vector<FlagOfFlats> enumerate_flags(const GaleDual& g, std::size_t limit = default_flag_limit());

struct FlagClass {
  enum class Case { A, B };
  Case which = Case::A;
  Circuit circuit;
  std::array<std::size_t, 2> pair{};  // case B only
  bool tail_on_line = false;          // case B only
};

FlagClass classify_flag(const FlagOfFlats& flag, const PointConfiguration& config);

struct WeightClass {
  std::vector<IndexSet> blocks;  // increasing height

  friend bool operator==(const WeightClass&, const WeightClass&) = default;
};

struct FlagFromWeight {
  WeightClass weight_class;
  FlagOfFlats flag;
  bool is_flag_of_flats = false;
};

FlagFromWeight flag_from_weight(const GaleDual& g, const HeightVector& u);

/// Block k (counted from 1) at height sum of the first k gaps; default gap 1.
HeightVector weight_class_sample(const FlagOfFlats& flag, std::size_t s,
                                 const std::vector<Rational>& gaps = {});

/// Every element lies in some basis of minimal w-weight.
bool bergman_member_loopfree(const GaleDual& g, const RationalVector& w);

/// For every minimal support of a nonzero vector of rowspace(A), the maximum
/// of w over the support is attained at least twice.
bool bergman_member_circuit_oracle(const Matrix& a, const RationalVector& w);

/// Minimal supports of the row space of a, as sorted index sets.
std::vector<IndexSet> rowspace_minimal_supports(const Matrix& a);

/// w lies in the closure of the weight class of one of the flags.
bool in_weight_class_closure(const FlagOfFlats& flag, const RationalVector& w);
bool bergman_member_weight_classes(const std::vector<FlagOfFlats>& flags, const RationalVector& w);

}  // namespace tropsing
