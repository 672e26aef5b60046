#include "tropsing/matroid.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <set>
#include <string>

#include "tropsing/error.hpp"

namespace tropsing {

namespace {

Rational power(const Rational& base, std::int64_t e) {
  Rational out = 1;
  const Rational b = e < 0 ? Rational(1 / base) : base;
  for (std::int64_t k = 0; k < (e < 0 ? -e : e); ++k) out *= b;
  return out;
}

}  // namespace

Matrix coefficient_matrix(const PointConfiguration& config, const Rational& p, const Rational& q) {
  if (p == 0 || q == 0) throw Error(ErrorCode::ZeroTorusCoordinate, "singular point must lie in the torus");
  Matrix a(3, config.size());
  for (std::size_t k = 0; k < config.size(); ++k) {
    const Rational scale = power(p, config[k].i) * power(q, config[k].j);
    a(0, k) = scale;
    a(1, k) = scale * config[k].i;
    a(2, k) = scale * config[k].j;
  }
  return a;
}

PivotTriple default_pivots(const Matrix& a) {
  const std::size_t s = a.cols();
  for (std::size_t x = 0; x < s; ++x) {
    for (std::size_t y = x + 1; y < s; ++y) {
      for (std::size_t z = y + 1; z < s; ++z) {
        const std::size_t cols[] = {x, y, z};
        if (column_rank(a, cols) == 3) return {x, y, z};
      }
    }
  }
  throw Error(ErrorCode::DependentPivots, "matrix has rank below three");
}

Matrix transformed_points(const Matrix& a, const PivotTriple& pivots) {
  if (a.rows() != 3) throw Error(ErrorCode::InvalidArgument, "coefficient matrix must have three rows");
  for (std::size_t p : pivots) {
    if (p >= a.cols()) throw Error(ErrorCode::InvalidArgument, "pivot index out of range");
  }
  if (column_rank(a, pivots) != 3) throw Error(ErrorCode::DependentPivots, "pivot columns are dependent");
  Matrix aug(3, 3 + a.cols());
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t k = 0; k < 3; ++k) aug(r, k) = a(r, pivots[k]);
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, 3 + c) = a(r, c);
  }
  const EchelonForm ef = reduced_row_echelon(aug);
  Matrix out(3, a.cols());
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = ef.reduced(r, 3 + c);
  }
  return out;
}

GaleDual gale_dual(const Matrix& a, std::optional<PivotTriple> pivots) {
  PivotTriple pv = pivots ? *pivots : default_pivots(a);
  std::sort(pv.begin(), pv.end());
  if (pv[0] == pv[1] || pv[1] == pv[2]) throw Error(ErrorCode::DependentPivots, "repeated pivot");
  const Matrix t = transformed_points(a, pv);
  const std::size_t s = a.cols();
  GaleDual g{Matrix(s - 3, s), pv};
  std::size_t row = 0;
  for (std::size_t c = 0; c < s; ++c) {
    if (std::find(pv.begin(), pv.end(), c) != pv.end()) continue;
    g.b(row, c) = 1;
    for (std::size_t k = 0; k < 3; ++k) g.b(row, pv[k]) = -t(k, c);
    ++row;
  }
  return g;
}

Matrix pivot_first_form(const GaleDual& g) {
  std::vector<std::size_t> order(g.pivots.begin(), g.pivots.end());
  for (std::size_t c = 0; c < g.b.cols(); ++c) {
    if (std::find(g.pivots.begin(), g.pivots.end(), c) == g.pivots.end()) order.push_back(c);
  }
  return g.b.select_columns(order);
}

Bitset to_bits(const IndexSet& set) {
  Bitset b = 0;
  for (std::size_t k : set) b |= Bitset{1} << k;
  return b;
}

IndexSet from_bits(Bitset bits) {
  IndexSet out;
  for (std::size_t k = 0; bits; ++k, bits >>= 1) {
    if (bits & 1) out.push_back(k);
  }
  return out;
}

Matroid::Matroid(Matrix columns) : m_(std::move(columns)) {
  if (m_.cols() > 32) throw Error(ErrorCode::TooLarge, "ground set exceeds 32 elements");
}

std::size_t Matroid::rank(Bitset set) const {
  if (set == 0) return 0;
  if (auto it = memo_.find(set); it != memo_.end()) return it->second;
  const IndexSet cols = from_bits(set);
  const std::size_t r = column_rank(m_, cols);
  memo_.emplace(set, r);
  return r;
}

Bitset Matroid::closure(Bitset set) const {
  const std::size_t r = rank(set);
  Bitset out = set;
  for (std::size_t k = 0; k < size(); ++k) {
    const Bitset bit = Bitset{1} << k;
    if (!(set & bit) && rank(set | bit) == r) out |= bit;
  }
  return out;
}

bool is_flat(const GaleDual& g, const IndexSet& subset) {
  return Matroid(g.b).is_flat(to_bits(subset));
}

std::vector<IndexSet> FlagOfFlats::blocks() const {
  std::vector<IndexSet> out;
  IndexSet prev;
  for (const auto& f : flats) {
    IndexSet block;
    std::set_difference(f.begin(), f.end(), prev.begin(), prev.end(), std::back_inserter(block));
    out.push_back(std::move(block));
    prev = f;
  }
  return out;
}

std::size_t default_flag_limit() {
  if (const char* env = std::getenv("TROPSING_LIMIT")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
  }
  return 12;
}

std::vector<FlagOfFlats> enumerate_flags(const GaleDual& g, std::size_t limit) {
  const std::size_t s = g.b.cols();
  if (s > limit) {
    throw Error(ErrorCode::TooLarge, "flag enumeration limited to " + std::to_string(limit) + " points");
  }
  const Matroid m(g.b);
  const std::size_t top = m.rank();
  std::vector<FlagOfFlats> out;
  std::vector<Bitset> chain;
  std::function<void(Bitset)> extend = [&](Bitset flat) {
    if (m.rank(flat) == top) {
      FlagOfFlats f;
      for (Bitset b : chain) f.flats.push_back(from_bits(b));
      out.push_back(std::move(f));
      return;
    }
    std::set<Bitset> covers;
    for (std::size_t k = 0; k < s; ++k) {
      const Bitset bit = Bitset{1} << k;
      if (!(flat & bit)) covers.insert(m.closure(flat | bit));
    }
    for (Bitset c : covers) {
      chain.push_back(c);
      extend(c);
      chain.pop_back();
    }
  };
  extend(m.closure(0));
  std::sort(out.begin(), out.end(), [](const FlagOfFlats& a, const FlagOfFlats& b) {
    return a.blocks() < b.blocks();
  });
  return out;
}

FlagClass classify_flag(const FlagOfFlats& flag, const PointConfiguration& config) {
  const auto blocks = flag.blocks();
  if (blocks.empty()) throw Error(ErrorCode::MalformedFlag, "empty flag");
  const IndexSet& last = blocks.back();
  FlagClass fc;
  try {
    if (last.size() == 4) {
      for (std::size_t k = 0; k + 1 < blocks.size(); ++k) {
        if (blocks[k].size() != 1) throw Error(ErrorCode::MalformedFlag, "early block is not a singleton");
      }
      const CircuitKind kind = circuit_kind(config, last);
      if (kind == CircuitKind::C) throw Error(ErrorCode::MalformedFlag, "four-point block is not a circuit");
      fc.which = FlagClass::Case::A;
      fc.circuit = {last, kind};
      return fc;
    }
    if (last.size() == 3) {
      if (circuit_kind(config, last) != CircuitKind::C) {
        throw Error(ErrorCode::MalformedFlag, "three-point block is not collinear");
      }
      std::optional<std::size_t> j;
      for (std::size_t k = 0; k + 1 < blocks.size(); ++k) {
        if (blocks[k].size() == 2) j = k;
        else if (blocks[k].size() != 1) throw Error(ErrorCode::MalformedFlag, "block larger than two");
      }
      if (!j) throw Error(ErrorCode::MalformedFlag, "no two-element block");
      fc.which = FlagClass::Case::B;
      fc.circuit = {last, CircuitKind::C};
      fc.pair = {blocks[*j][0], blocks[*j][1]};
      const LatticePoint& a = config[last[0]];
      const LatticePoint& b = config[last[1]];
      fc.tail_on_line = true;
      for (std::size_t k = *j + 1; k + 1 < blocks.size(); ++k) {
        for (std::size_t idx : blocks[k]) {
          if (orientation(a, b, config[idx]) != 0) fc.tail_on_line = false;
        }
      }
      if (!fc.tail_on_line) throw Error(ErrorCode::MalformedFlag, "tail leaves the circuit line");
      return fc;
    }
  } catch (const Error& e) {
    if (e.code() == ErrorCode::MalformedFlag) throw;
    throw Error(ErrorCode::MalformedFlag, e.what());
  }
  throw Error(ErrorCode::MalformedFlag, "last block has " + std::to_string(last.size()) + " elements");
}

FlagFromWeight flag_from_weight(const GaleDual& g, const HeightVector& u) {
  std::map<Rational, IndexSet> levels;
  for (std::size_t k = 0; k < u.size(); ++k) levels[u[k]].push_back(k);
  FlagFromWeight out;
  IndexSet acc;
  for (auto& [h, block] : levels) {
    out.weight_class.blocks.push_back(block);
    IndexSet merged;
    std::merge(acc.begin(), acc.end(), block.begin(), block.end(), std::back_inserter(merged));
    acc = std::move(merged);
    out.flag.flats.push_back(acc);
  }
  const Matroid m(g.b);
  out.is_flag_of_flats = std::all_of(out.flag.flats.begin(), out.flag.flats.end(),
                                     [&](const IndexSet& f) { return m.is_flat(to_bits(f)); });
  return out;
}

HeightVector weight_class_sample(const FlagOfFlats& flag, std::size_t s, const std::vector<Rational>& gaps) {
  HeightVector u(s);
  Rational h = 0;
  const auto blocks = flag.blocks();
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    h += k < gaps.size() ? gaps[k] : Rational(1);
    for (std::size_t idx : blocks[k]) u.at(idx) = h;
  }
  return u;
}

bool bergman_member_loopfree(const GaleDual& g, const RationalVector& w) {
  // e lies in a minimal-weight basis iff it is not spanned by the elements
  // of strictly smaller weight.
  const Matroid m(g.b);
  for (std::size_t e = 0; e < w.size(); ++e) {
    Bitset lower = 0;
    for (std::size_t k = 0; k < w.size(); ++k) {
      if (w[k] < w[e]) lower |= Bitset{1} << k;
    }
    if (m.rank(lower | (Bitset{1} << e)) == m.rank(lower)) return false;
  }
  return true;
}

std::vector<IndexSet> rowspace_minimal_supports(const Matrix& a) {
  // A nonzero vector y^t a has support equal to the complement of the
  // columns it annihilates; minimal supports are complements of hyperplanes
  // of the column matroid, i.e. closures of independent (r-1)-sets.
  const Matroid m(a);
  const std::size_t s = a.cols();
  const std::size_t r = m.rank();
  std::set<Bitset> hyperplanes;
  std::vector<std::size_t> pick;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (pick.size() + 1 == r) {
      const Bitset bits = to_bits(pick);
      if (m.rank(bits) == r - 1) hyperplanes.insert(m.closure(bits));
      return;
    }
    for (std::size_t k = start; k < s; ++k) {
      pick.push_back(k);
      rec(k + 1);
      pick.pop_back();
    }
  };
  if (r == 0) return {};
  rec(0);
  std::vector<IndexSet> out;
  for (Bitset h : hyperplanes) out.push_back(from_bits(m.full() & ~h));
  std::sort(out.begin(), out.end());
  return out;
}

bool bergman_member_circuit_oracle(const Matrix& a, const RationalVector& w) {
  for (const auto& support : rowspace_minimal_supports(a)) {
    Rational best;
    int count = 0;
    for (std::size_t k : support) {
      if (count == 0 || w[k] > best) {
        best = w[k];
        count = 1;
      } else if (w[k] == best) {
        ++count;
      }
    }
    if (count < 2) return false;
  }
  return true;
}

bool in_weight_class_closure(const FlagOfFlats& flag, const RationalVector& w) {
  std::optional<Rational> prev;
  for (const auto& block : flag.blocks()) {
    const Rational& h = w.at(block.front());
    for (std::size_t k : block) {
      if (w.at(k) != h) return false;
    }
    if (prev && h < *prev) return false;
    prev = h;
  }
  return true;
}

bool bergman_member_weight_classes(const std::vector<FlagOfFlats>& flags, const RationalVector& w) {
  return std::any_of(flags.begin(), flags.end(),
                     [&](const FlagOfFlats& f) { return in_weight_class_closure(f, w); });
}

}  // namespace tropsing
