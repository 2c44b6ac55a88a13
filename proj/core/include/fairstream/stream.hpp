#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "fairstream/errors.hpp"
#include "fairstream/oracle.hpp"
#include "fairstream/rng.hpp"
#include "fairstream/types.hpp"

namespace fairstream {

/// Ordered sequence of stream items. Every pass yields the same order; the
/// number of completed passes is tracked so algorithms can report it.
class Stream {
 public:
  using Visitor = std::function<void(const StreamItem&)>;

  virtual ~Stream() = default;

  /// Runs one pass over the stream. Passes are 1-based and must be requested
  /// in order; a source that cannot rewind rejects pass 2 and later.
  void replay(std::size_t pass_index, const Visitor& visit);

  std::size_t passes() const { return passes_; }
  virtual std::size_t size() const = 0;
  virtual bool replayable() const = 0;

 protected:
  virtual void emit(const Visitor& visit) = 0;

 private:
  std::size_t passes_ = 0;
};

/// Stream backed by an in-memory buffer; supports any number of passes.
class MaterializedStream final : public Stream {
 public:
  explicit MaterializedStream(std::vector<StreamItem> items) : items_(std::move(items)) {}

  std::size_t size() const override { return items_.size(); }
  bool replayable() const override { return true; }
  const std::vector<StreamItem>& items() const { return items_; }

 protected:
  void emit(const Visitor& visit) override;

 private:
  std::vector<StreamItem> items_;
};

/// Stream that can be consumed exactly once, for exercising single-pass
/// algorithms under the strictest model.
class ForwardOnlyStream final : public Stream {
 public:
  explicit ForwardOnlyStream(std::vector<StreamItem> items) : items_(std::move(items)) {}

  std::size_t size() const override { return items_.size(); }
  bool replayable() const override { return false; }

 protected:
  void emit(const Visitor& visit) override;

 private:
  std::vector<StreamItem> items_;
};

/// Items in ascending id order.
std::vector<StreamItem> natural_order(const GroupMap& groups);

/// Seeded uniform permutation of the natural order.
std::vector<StreamItem> shuffled_order(const GroupMap& groups, std::uint64_t seed);

/// Items sorted ascending by singleton value, ties by lower id. This is the
/// hard case for threshold algorithms: the best items arrive last.
std::vector<StreamItem> adversarial_order(const GroupMap& groups, const ValueOracle& oracle);

}  // namespace fairstream
