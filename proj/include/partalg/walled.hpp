#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "partalg/halfdiagram.hpp"
#include "partalg/specht.hpp"

namespace partalg {

// Profile of a one-row diagram relative to a wall between dot m and dot m+1:
// how many blocks cross the wall (with and without a label) and how many
// labelled blocks sit entirely on each side. One-sided unlabelled blocks are
// not tracked.
struct WallTuple {
  int through_plain = 0;
  int through_labelled = 0;
  int left_labelled = 0;
  int right_labelled = 0;

  int rank() const { return through_labelled + left_labelled + right_labelled; }
  int through() const { return through_plain + through_labelled; }
  int left_rank() const { return through() + left_labelled; }
  int right_rank() const { return through() + right_labelled; }

  bool operator==(const WallTuple&) const = default;
  bool operator<(const WallTuple& other) const;  // container order only
  std::string to_string() const;                 // "(a,b,c,d)"
};

WallTuple classify(const HalfDiagram& v, int wall);

// Dominance-style strict order used by the restriction filtration. Both
// sides must carry the same number of labels.
bool tuple_less(const WallTuple& lhs, const WallTuple& rhs);
bool tuple_leq(const WallTuple& lhs, const WallTuple& rhs);

// All profiles realizable on m + n dots with r labels, sorted by
// (through_plain, through_labelled, left_labelled) ascending; that order
// refines tuple_less.
std::vector<WallTuple> enumerate_index_set(int m, int n, int r);

// A concrete one-row diagram on m + n dots with the requested profile.
HalfDiagram tuple_witness(int m, int n, const WallTuple& t);

// Closed count of one-row diagrams on m + n dots with the given profile.
BigInt count_with_tuple(int m, int n, const WallTuple& t);

// Scans every product diagram acting on every rank-r one-row diagram and
// reports the first action that raises a profile, if any.
std::optional<std::string> action_order_violation(int m, int n, int r);

// One-step profile transition model for actions by product diagrams:
// through labels may drop to either side freely; a one-sided label may cross
// or become a through label only by consuming a distinct plain through
// block; plain through blocks may vanish freely.
std::set<WallTuple> one_step_targets(const WallTuple& t);
std::set<WallTuple> reachable_tuples(const WallTuple& start);
// Covering relations of reachability restricted to what `start` reaches,
// as (lower, upper) pairs, sorted.
std::vector<std::pair<WallTuple, WallTuple>> covering_edges(const WallTuple& start);
// Exhaustive transition targets actually observed on m + n dots.
std::set<WallTuple> observed_one_step(int m, int n, const WallTuple& t);

// One summand of a filtration layer. The layer for profile t inside the
// rank-r cell space with shape lambda decomposes combinatorially into
// records (mu, mu_plain, mu_labelled, left_weight, right_weight) with
//   mu |- through(), mu_plain |- through_plain, mu_labelled |- through_labelled,
//   left_weight |- through_labelled + left_labelled, right_weight |- right_labelled,
// each weighted by c^lambda_{left_weight, right_weight} * c^mu_{mu_labelled, mu_plain}.
struct FiltrationRecord {
  IntegerPartition mu;
  IntegerPartition mu_plain;
  IntegerPartition mu_labelled;
  IntegerPartition left_weight;
  IntegerPartition right_weight;
  BigInt multiplicity;

  bool operator<(const FiltrationRecord& other) const;
};

std::vector<FiltrationRecord> layer_filtration(const WallTuple& t,
                                               const IntegerPartition& lambda);

// Multiplicity of the (nu1, nu2) cell pair inside one record: the right
// factor contributes c^{nu2}_{mu, right_weight}; the left factor couples
// the through labels by a Kronecker coefficient before inducing.
BigInt record_left_multiplicity(const FiltrationRecord& record,
                                const WallTuple& t, const IntegerPartition& nu1);
BigInt record_right_multiplicity(const FiltrationRecord& record,
                                 const IntegerPartition& nu2);

// (nu1, nu2) -> multiplicity for one layer; nu1 |- left_rank(),
// nu2 |- right_rank().
std::map<std::pair<IntegerPartition, IntegerPartition>, BigInt>
layer_cell_multiplicities(const WallTuple& t, const IntegerPartition& lambda);

struct RestrictionLayer {
  WallTuple tuple;
  std::vector<FiltrationRecord> records;
  std::map<std::pair<IntegerPartition, IntegerPartition>, BigInt>
      cell_multiplicities;
};

struct CellPairKey {
  int left_rank = 0;
  IntegerPartition left_shape;
  int right_rank = 0;
  IntegerPartition right_shape;

  bool operator==(const CellPairKey&) const = default;
  bool operator<(const CellPairKey& other) const;
};

struct RestrictionDecomposition {
  int m = 0;
  int n = 0;
  int r = 0;
  IntegerPartition shape;
  std::vector<RestrictionLayer> layers;
  std::map<CellPairKey, BigInt> cells;  // aggregated over all layers
};

RestrictionDecomposition restriction_decomposition(int m, int n, int r,
                                                   const IntegerPartition& shape);

}  // namespace partalg
