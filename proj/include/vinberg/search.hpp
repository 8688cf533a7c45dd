#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "vinberg/lattice.hpp"

namespace vinberg {

/// One batch of Vinberg's algorithm: all candidates with the given k0 and norm.
struct BatchKey {
  Integer k0;
  Integer norm;

  Rational height() const {
    Rational h(k0 * k0, norm);
    h.canonicalize();
    return h;
  }
  /// Unreduced "k0^2/m", the form used in reference tables.
  std::string height_label() const { return Integer(k0 * k0).get_str() + "/" + norm.get_str(); }

  friend bool operator==(const BatchKey&, const BatchKey&) = default;
};

/// Strict batch order: increasing height, ties (never seen for prime p) broken
/// by larger norm first.
bool batch_before(const BatchKey& a, const BatchKey& b);

/// Lazy stream of batch keys in increasing height.
class BatchSequence {
 public:
  explicit BatchSequence(const QuadraticForm& form);

  const BatchKey& peek() const { return current_; }
  BatchKey next();
  /// Repositions so that peek() == key. The key's norm must be admissible.
  void skip_to(const BatchKey& key);

 private:
  void settle();

  std::vector<Integer> norms_;
  std::vector<Integer> k0_;
  BatchKey current_;
};

std::vector<BatchKey> first_batches(const QuadraticForm& form, std::size_t count);

/// Roots with the given k0 and norm whose spatial part is non-increasing and
/// non-negative, in lexicographically decreasing order.
std::vector<LatticeVector> enumerate_batch(const QuadraticForm& form, const BatchKey& key);

struct AcceptedRoot {
  Root root;
  std::optional<BatchKey> batch;  // empty for the initial roots
};

/// Same-batch pair with positive inner product, recorded when it occurs.
struct SameBatchConflict {
  LatticeVector earlier;
  LatticeVector later;
  Integer inner_product;
};

struct SearchState {
  explicit SearchState(QuadraticForm f);

  QuadraticForm form;
  std::vector<AcceptedRoot> accepted;
  BatchKey cursor;
  std::size_t batch_offset = 0;  // candidates of the cursor batch already processed
  std::size_t batches = 0;
  std::size_t candidates = 0;
  std::vector<SameBatchConflict> conflicts;

  std::vector<Root> roots() const;
};

struct Decision {
  bool accepted = false;
  std::optional<LatticeVector> witness;
};

/// Tests the candidate against every accepted root and appends it if all
/// inner products are non-positive.
Decision accept(SearchState& state, const LatticeVector& candidate, const BatchKey& key);

struct Budget {
  Rational max_height = 400;
  std::size_t max_roots = 64;
};

enum class StopRule { OnFiniteVolume, ExhaustBudget };
enum class CheckFrequency { EveryRoot, EveryBatch };
enum class SearchStatus { Terminated, BudgetExhausted, Interrupted };

std::string to_string(SearchStatus s);
std::string to_string(CheckFrequency c);

struct SearchOptions {
  Budget budget;
  StopRule stop_rule = StopRule::OnFiniteVolume;
  CheckFrequency check = CheckFrequency::EveryRoot;
  /// Called after each acceptance that did not terminate the run; returning
  /// true stops the search with status Interrupted.
  std::function<bool(const SearchState&)> interrupt;
};

struct SearchResult {
  SearchStatus status;
  SearchState state;
};

SearchState initial_state(const QuadraticForm& form);

/// Throws Error(InvalidBudget) for a non-positive budget.
SearchResult run_search(const QuadraticForm& form, const SearchOptions& options = {});
SearchResult resume_search(SearchState state, const SearchOptions& options = {});

/// Pairwise non-positivity of the accepted set.
bool is_acute(const std::vector<Root>& roots, const QuadraticForm& form);

}  // namespace vinberg
