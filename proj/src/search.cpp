#include "vinberg/search.hpp"

#include "vinberg/error.hpp"
#include "vinberg/finite_volume.hpp"

namespace vinberg {

bool batch_before(const BatchKey& a, const BatchKey& b) {
  // Compare k0a^2 / ma with k0b^2 / mb without division.
  Integer lhs = a.k0 * a.k0 * b.norm;
  Integer rhs = b.k0 * b.k0 * a.norm;
  if (lhs != rhs) return lhs < rhs;
  return a.norm > b.norm;
}

BatchSequence::BatchSequence(const QuadraticForm& form) : norms_(admissible_root_norms(form)) {
  k0_.assign(norms_.size(), Integer(1));
  settle();
}

void BatchSequence::settle() {
  std::size_t best = 0;
  for (std::size_t i = 1; i < norms_.size(); ++i)
    if (batch_before(BatchKey{k0_[i], norms_[i]}, BatchKey{k0_[best], norms_[best]})) best = i;
  current_ = BatchKey{k0_[best], norms_[best]};
}

BatchKey BatchSequence::next() {
  BatchKey out = current_;
  for (std::size_t i = 0; i < norms_.size(); ++i)
    if (norms_[i] == out.norm) k0_[i] += 1;
  settle();
  return out;
}

void BatchSequence::skip_to(const BatchKey& key) {
  bool found = false;
  for (std::size_t i = 0; i < norms_.size(); ++i) {
    if (norms_[i] == key.norm) {
      k0_[i] = key.k0;
      found = true;
      continue;
    }
    // Smallest k0 whose key does not precede the target.
    Integer k = sqrt(Integer(key.k0 * key.k0 * norms_[i] / key.norm));
    if (k < 1) k = 1;
    while (k > 1 && !batch_before(BatchKey{k - 1, norms_[i]}, key)) k -= 1;
    while (batch_before(BatchKey{k, norms_[i]}, key)) k += 1;
    k0_[i] = k;
  }
  if (!found || key.k0 < 1) throw Error(ErrorCode::InvalidBudget, "batch key with inadmissible norm or k0 < 1");
  settle();
}

std::vector<BatchKey> first_batches(const QuadraticForm& form, std::size_t count) {
  BatchSequence seq(form);
  std::vector<BatchKey> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(seq.next());
  return out;
}

namespace {

// Non-increasing sequences of length `slots`, entries multiples of `step`,
// each at most `cap`, with sum of squares `remaining`.
void squares_dfs(const Integer& remaining, std::size_t slots, const Integer& cap, const Integer& step,
                 std::vector<Integer>& prefix, std::vector<std::vector<Integer>>& out) {
  if (slots == 0) {
    if (remaining == 0) out.push_back(prefix);
    return;
  }
  Integer top = isqrt(remaining);
  if (top > cap) top = cap;
  top -= mod(top, step);
  for (Integer k = top; k >= 0; k -= step) {
    if (k * k * slots < remaining) break;
    prefix.push_back(k);
    squares_dfs(remaining - k * k, slots - 1, k, step, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<LatticeVector> enumerate_batch(const QuadraticForm& form, const BatchKey& key) {
  const Integer& m = key.norm;
  const bool high = m == form.p() || m == 2 * form.p();
  const Integer step = high ? form.p() : Integer(1);
  const Integer target = m + form.p() * key.k0 * key.k0;
  std::vector<std::vector<Integer>> tails;
  std::vector<Integer> prefix;
  squares_dfs(target, static_cast<std::size_t>(form.n()), target, step, prefix, tails);
  std::vector<LatticeVector> out;
  for (auto& tail : tails) {
    std::vector<Integer> coeffs;
    coeffs.reserve(tail.size() + 1);
    coeffs.push_back(key.k0);
    coeffs.insert(coeffs.end(), tail.begin(), tail.end());
    LatticeVector v(std::move(coeffs));
    if (is_root(v, form)) out.push_back(std::move(v));
  }
  return out;
}

SearchState::SearchState(QuadraticForm f) : form(std::move(f)), cursor(BatchSequence(form).peek()) {}

std::vector<Root> SearchState::roots() const {
  std::vector<Root> out;
  out.reserve(accepted.size());
  for (const auto& a : accepted) out.push_back(a.root);
  return out;
}

Decision accept(SearchState& state, const LatticeVector& candidate, const BatchKey& key) {
  Decision d;
  for (const auto& a : state.accepted) {
    Integer ip = inner_product(candidate, a.root.vector(), state.form);
    if (ip > 0) {
      if (a.batch && *a.batch == key)
        state.conflicts.push_back(SameBatchConflict{a.root.vector(), candidate, ip});
      if (!d.witness) d.witness = a.root.vector();
    }
  }
  if (d.witness) return d;
  state.accepted.push_back(AcceptedRoot{Root(candidate, state.form), key});
  d.accepted = true;
  return d;
}

std::string to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::Terminated: return "terminated";
    case SearchStatus::BudgetExhausted: return "budget_exhausted";
    case SearchStatus::Interrupted: return "interrupted";
  }
  return "unknown";
}

std::string to_string(CheckFrequency c) { return c == CheckFrequency::EveryRoot ? "root" : "batch"; }

SearchState initial_state(const QuadraticForm& form) {
  SearchState state(form);
  for (auto& r : initial_roots(form)) state.accepted.push_back(AcceptedRoot{std::move(r), std::nullopt});
  return state;
}

SearchResult run_search(const QuadraticForm& form, const SearchOptions& options) {
  return resume_search(initial_state(form), options);
}

SearchResult resume_search(SearchState state, const SearchOptions& options) {
  if (options.budget.max_height <= 0) throw Error(ErrorCode::InvalidBudget, "max_height must be positive");
  if (options.budget.max_roots == 0) throw Error(ErrorCode::InvalidBudget, "max_roots must be positive");
  const bool stop_on_volume = options.stop_rule == StopRule::OnFiniteVolume;
  auto finite = [&]() { return has_finite_volume(state.roots(), state.form); };

  BatchSequence seq(state.form);
  seq.skip_to(state.cursor);
  while (true) {
    if (state.accepted.size() >= options.budget.max_roots) return {SearchStatus::BudgetExhausted, std::move(state)};
    const BatchKey key = seq.peek();
    if (key.height() > options.budget.max_height) return {SearchStatus::BudgetExhausted, std::move(state)};
    const auto candidates = enumerate_batch(state.form, key);
    bool gained = false;
    while (state.batch_offset < candidates.size()) {
      const auto& cand = candidates[state.batch_offset];
      ++state.batch_offset;
      ++state.candidates;
      if (!accept(state, cand, key).accepted) continue;
      gained = true;
      if (stop_on_volume && options.check == CheckFrequency::EveryRoot && finite())
        return {SearchStatus::Terminated, std::move(state)};
      if (options.interrupt && options.interrupt(state)) return {SearchStatus::Interrupted, std::move(state)};
      if (state.accepted.size() >= options.budget.max_roots) return {SearchStatus::BudgetExhausted, std::move(state)};
    }
    seq.next();
    state.cursor = seq.peek();
    state.batch_offset = 0;
    ++state.batches;
    if (gained && stop_on_volume && options.check == CheckFrequency::EveryBatch && finite())
      return {SearchStatus::Terminated, std::move(state)};
  }
}

bool is_acute(const std::vector<Root>& roots, const QuadraticForm& form) {
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t j = i + 1; j < roots.size(); ++j)
      if (inner_product(roots[i].vector(), roots[j].vector(), form) > 0) return false;
  return true;
}

}  // namespace vinberg
