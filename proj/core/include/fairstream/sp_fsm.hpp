#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <vector>

#include "fairstream/candidate.hpp"
#include "fairstream/fairness.hpp"
#include "fairstream/oracle.hpp"
#include "fairstream/reservoir.hpp"
#include "fairstream/stream.hpp"
#include "fairstream/types.hpp"

namespace fairstream {

struct SpFsmConfig {
  static constexpr std::size_t kUnlimitedBuffer = std::numeric_limits<std::size_t>::max();

  double alpha = 0.5;  // threshold grid spacing, in (0, 1)
  double beta = 0.5;   // buffer admission slack, in (0, 1)
  std::size_t buffer_capacity = kUnlimitedBuffer;  // must be >= k when finite
  std::uint64_t seed = 0;                          // reservoir RNG seed
};

struct SpFsmReport {
  CandidateSolution solution;
  std::uint64_t oracle_calls;
  std::size_t peak_buffer;           // largest |B| at the end of any item step
  std::size_t live_candidates_peak;  // widest the threshold ladder ever got
  std::size_t items_visited;
  std::size_t audit_violations;  // accepted items whose recorded gain fell below their tau
};

/// Single-pass selection state. Thresholds tau = (1+alpha)^j live on a
/// geometric grid clipped to [max(delta_max, LB)/(2k), delta_max]; each live
/// tau grows its own candidate. Items that just miss every threshold wait in
/// a buffer, and per-group reservoirs guarantee the quotas can always be met.
/// Post-processing greedily completes the low-threshold candidates from the
/// buffer and reservoirs and returns the best fair solution. The group map
/// and budgets are copied in; only the oracle must outlive the run.
class SpFsmRun {
 public:
  SpFsmRun(const ValueOracle& oracle, GroupMap groups, FairnessSpec spec,
           const SpFsmConfig& cfg);

  /// Handles one arriving item; each item may arrive only once.
  void process_item(const StreamItem& it);

  /// Builds the final solution from snapshots; live state is untouched, so a
  /// solution can be requested at any point during the stream.
  CandidateSolution post_process() const;

  double delta_max() const { return delta_max_; }
  double lower_bound() const { return lower_bound_; }
  std::vector<double> live_thresholds() const;

  /// Read-only views of the live candidates in ascending threshold order,
  /// aligned with live_thresholds(). Invalidated by the next process_item.
  std::vector<const CandidateSolution*> live_solutions() const;
  std::vector<ItemId> buffered_items() const;
  std::size_t buffer_size() const { return buffer_.size(); }
  std::size_t peak_buffer() const { return peak_buffer_; }
  std::size_t live_candidates() const { return ladder_.size(); }
  std::size_t peak_live_candidates() const { return peak_live_; }
  std::size_t items_visited() const { return visited_; }

  /// Cross-checks every live candidate's acceptance log against its
  /// threshold; anything nonzero indicates a bookkeeping bug.
  std::size_t audit_violations() const;

 private:
  struct Candidate {
    double tau;
    CandidateSolution sol;
  };

  void refresh_ladder();
  void evict();
  void complete(CandidateSolution& sol, const std::vector<ItemId>& pool) const;

  const ValueOracle* oracle_;
  GroupMap groups_;
  FairnessSpec spec_;
  SpFsmConfig cfg_;

  double delta_max_ = 0.0;
  double lower_bound_ = 0.0;
  std::map<int, Candidate> ladder_;     // grid exponent j -> candidate, ascending tau
  std::map<ItemId, GroupId> buffer_;    // deterministic id order
  std::vector<Reservoir> reservoirs_;
  std::vector<bool> processed_;
  std::size_t visited_ = 0;
  std::size_t peak_buffer_ = 0;
  std::size_t peak_live_ = 0;
};

/// Runs the full pipeline on one pass of the stream.
SpFsmReport run_sp_fsm(Stream& stream, const ValueOracle& oracle, const GroupMap& groups,
                       const FairnessSpec& spec, const SpFsmConfig& cfg);

}  // namespace fairstream
