#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "cochain/complex.hpp"
#include "cochain/errors.hpp"
#include "cochain/field.hpp"
#include "cochain/spacetime.hpp"
#include "cochain/tensor.hpp"

namespace cochain {

// A document claimed K or G membership that the tensor does not satisfy.
class MembershipError : public InvalidMember {
 public:
  MembershipError(const std::string& what, MultiIndex witness)
      : InvalidMember(what), witness_(std::move(witness)) {}
  const MultiIndex& witness() const { return witness_; }

 private:
  MultiIndex witness_;
};

struct TensorDocument {
  Tensor tensor;
  std::optional<Space> space;  // nullopt for "generic"
};

// Tensor JSON:
//   {"dim": d, "rank": r, "space": "K"|"G"|"generic", "grade": q,
//    "entries": [{"index": [i, ...], "expr": "<s-expression>"}, ...]}
// Omitted indices are zero. Throws ParseError for malformed JSON (with byte
// offset), SchemaError with a JSON pointer, MembershipError when a claimed
// space fails validation under `policy`.
TensorDocument parse_tensor(std::string_view json_text, const EqualityPolicy& policy = {});

// Canonical form: keys in schema order, entries by ascending index, zero
// entries omitted, "grade" only for K/G. Ends with a newline.
std::string emit_tensor(const Tensor& t, const std::optional<Space>& space = std::nullopt);
std::string emit_tensor(const CochainElement& e);

// Metric JSON:
//   {"name": "mp"|"extreme_rn"|"schwarzschild"|"flat"|"custom",
//    "params": {"mass": "1", "omega": "4"}, "f": "...", "g": "...", "H": "..."}
spacetime::IsotropicMetric parse_metric(std::string_view json_text);

}  // namespace cochain
