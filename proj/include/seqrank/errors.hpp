#pragma once

#include <stdexcept>
#include <string>

namespace seqrank {

/// Base class for all recoverable input errors raised by this library.
/// Violations of internal invariants throw std::logic_error instead.
class error : public std::runtime_error {
 public:
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// Two input values compare equal where pairwise distinct values are required.
class duplicate_value_error : public error {
 public:
  using error::error;
};

/// A value is NaN or otherwise has no defined ordering.
class invalid_value_error : public error {
 public:
  using error::error;
};

/// A sequential-rank code has an entry outside {1..i}.
class malformed_code_error : public error {
 public:
  using error::error;
};

/// A rank vector is not a permutation of {0..n-1}.
class not_a_permutation_error : public error {
 public:
  using error::error;
};

/// The input is too short for the requested operation.
class too_short_error : public error {
 public:
  using error::error;
};

/// The requested size exceeds the exhaustive-enumeration bound.
class too_large_error : public error {
 public:
  using error::error;
};

/// A requested index or count is out of range for the input.
class bad_range_error : public error {
 public:
  using error::error;
};

/// Two inputs that must have equal length do not.
class length_mismatch_error : public error {
 public:
  using error::error;
};

/// A shape is not a weakly decreasing sequence of positive row lengths.
class invalid_shape_error : public error {
 public:
  using error::error;
};

/// Tableau entries violate the strict row/column ordering or entry-set rules.
class invalid_tableau_error : public error {
 public:
  using error::error;
};

/// The two tableaux of a pair do not have the same shape.
class shape_mismatch_error : public error {
 public:
  using error::error;
};

/// Graph vertices handed to a 2-interval query are not two levels apart.
class bad_levels_error : public error {
 public:
  using error::error;
};

/// The given vertex is not an intermediate vertex of the 2-interval.
class not_intermediate_error : public error {
 public:
  using error::error;
};

/// A 2-interval has more than two intermediate vertices, so no involution
/// transfer is defined on it.
class too_many_intermediates_error : public error {
 public:
  using error::error;
};

/// A local transfer rule produced a vertex that breaks the covering relation.
class rule_violation_error : public error {
 public:
  using error::error;
};

/// Consecutive vertices of a tree path are not parent and child.
class inconsistent_path_error : public error {
 public:
  using error::error;
};

/// A graph path does not respect levels or covering edges.
class invalid_path_error : public error {
 public:
  using error::error;
};

/// Experiment parameters are outside the documented ranges.
class bad_params_error : public error {
 public:
  using error::error;
};

}  // namespace seqrank
