#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "vinberg/finite_volume.hpp"
#include "vinberg/json.hpp"
#include "vinberg/search.hpp"

namespace vinberg {

enum class Verdict { Reflective, NonReflective, Undecided };

std::string to_string(Verdict v);

struct ClassifyOptions {
  Budget budget;
  CheckFrequency check = CheckFrequency::EveryRoot;
  /// Look for an ideal-vertex obstruction after every accepted root instead
  /// of only when the budget runs out.
  bool eager_certificates = true;
  bool timings = false;
};

struct ClassificationReport {
  explicit ClassificationReport(QuadraticForm f) : form(f), state(std::move(f)) {}

  QuadraticForm form;
  Verdict verdict = Verdict::Undecided;
  bool searched = true;  // false for inherited verdicts
  std::optional<SearchStatus> status;
  SearchState state;
  std::optional<FiniteVolumeVerdict> finite_volume;
  std::vector<std::string> maximal_affine_types;
  Json certificate;  // null when undecided
  bool certificate_verified = false;
  Budget budget;
  CheckFrequency check = CheckFrequency::EveryRoot;
  double seconds = 0;
  bool timings = false;

  /// Deterministic unless timings were requested.
  Json to_json() const;
};

/// Throws Error(InvalidForm) for p not a prime >= 5 or n < 2.
ClassificationReport classify(long p, int n, const ClassifyOptions& options = {});
ClassificationReport classify(const QuadraticForm& form, const ClassifyOptions& options = {});
/// Continues a search from a saved state.
ClassificationReport classify_resume(SearchState state, const ClassifyOptions& options = {});

/// n = 2 .. n_max; ranks above the first non-reflective one are settled by
/// inheritance. With jobs > 1 the searched ranks run concurrently.
std::vector<ClassificationReport> classify_family(long p, int n_max, const ClassifyOptions& options = {},
                                                  unsigned jobs = 1);

enum class TableFormat { Json, Text };

/// Throws Error(UnknownFormat).
TableFormat parse_table_format(const std::string& name);

/// Found roots grouped by batch: height, vector, norm, label, and the ranks
/// n' <= n for which the root lies in the sublattice of rank n'.
std::string emit_table(const ClassificationReport& report, TableFormat format);

Json state_json(const SearchState& state);
/// Throws Error(MalformedCertificate) naming the missing field.
SearchState state_from_json(const Json& j);

}  // namespace vinberg
