#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace treepark {

enum class errc {
  multiple_roots,
  no_root,
  cycle_detected,
  label_out_of_range,
  vertex_out_of_range,
  length_mismatch,
  not_a_parking_function,
  not_prime,
  not_srp,
  not_132_avoiding,
  invalid_permutation,
  invalid_labeling,
  parse_error,
  branch_undefined,
  order_mismatch,
  identity_violated,
  fixed_point_not_converged,
  limit_exceeded,
};

constexpr std::string_view to_string(errc code) noexcept {
  switch (code) {
    case errc::multiple_roots: return "MultipleRoots";
    case errc::no_root: return "NoRoot";
    case errc::cycle_detected: return "CycleDetected";
    case errc::label_out_of_range: return "LabelOutOfRange";
    case errc::vertex_out_of_range: return "VertexOutOfRange";
    case errc::length_mismatch: return "LengthMismatch";
    case errc::not_a_parking_function: return "NotAParkingFunction";
    case errc::not_prime: return "NotPrime";
    case errc::not_srp: return "NotSRP";
    case errc::not_132_avoiding: return "Not132Avoiding";
    case errc::invalid_permutation: return "InvalidPermutation";
    case errc::invalid_labeling: return "InvalidLabeling";
    case errc::parse_error: return "ParseError";
    case errc::branch_undefined: return "BranchUndefined";
    case errc::order_mismatch: return "OrderMismatch";
    case errc::identity_violated: return "IdentityViolated";
    case errc::fixed_point_not_converged: return "FixedPointNotConverged";
    case errc::limit_exceeded: return "LimitExceeded";
  }
  return "Unknown";
}

// Every contract violation in the library surfaces as this exception. The
// vertex, when present, names the offending tree vertex (1-based label).
class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what, std::optional<int> vertex = std::nullopt)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code),
        vertex_(vertex) {}

  errc code() const noexcept { return code_; }
  std::optional<int> vertex() const noexcept { return vertex_; }

 private:
  errc code_;
  std::optional<int> vertex_;
};

}  // namespace treepark
