#pragma once

#include "rwpair/connection.hpp"
#include "rwpair/diagram.hpp"
#include "rwpair/weight.hpp"

#include <json.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace rwpair {

using Json = nlohmann::ordered_json;

/// Malformed input. pointer() is the JSON pointer of the offending value.
class InputError : public std::runtime_error {
 public:
  InputError(const std::string& pointer, const std::string& message)
      : std::runtime_error(pointer.empty() ? message : pointer + ": " + message), pointer_(pointer) {}
  const std::string& pointer() const { return pointer_; }

 private:
  std::string pointer_;
};

/// Rationals are strings "p/q", or "p" when q = 1. Integers are accepted on input.
Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j, const std::string& pointer = "");

Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j, const std::string& pointer = "");

/// {"dim", "sub_dim", "brackets": [{"i", "j", "coeffs": {"k": "p/q"}}]}.
/// Pairs with i < j set both c(i,j,.) and c(j,i,.) = -c(i,j,.); entries with
/// i >= j override single values, which is how non-antisymmetric input is
/// expressed.
Json pair_to_json(const LiePair& p);
LiePair pair_from_json(const Json& j, const std::string& pointer = "");

/// A pair together with an optional "omega" member.
struct PairFile {
  PairPtr pair;
  std::optional<Matrix> omega;
};
PairFile pair_file_from_json(const Json& j);
Json pair_file_to_json(const LiePair& p, const std::optional<Matrix>& omega);

Json omega_to_json(const Matrix& omega);
Matrix omega_from_json(const Json& j, const std::string& pointer = "");

/// {"gamma": [i][in][out]}.
Json connection_to_json(const Connection& c);
Connection connection_from_json(const PairPtr& p, const Json& j, const std::string& pointer = "");
Connection connection_from_json(const ModuleRep& target, const Json& j, const std::string& pointer = "");

/// {"dim": D, "action": [one D x D matrix [out][in] per basis vector of h]}.
Json module_to_json(const ModuleRep& rep);
ModuleRep module_from_json(const PairPtr& p, const Json& j, const std::string& pointer = "");

Json diagram_to_json(const TrivalentDiagram& d);
TrivalentDiagram diagram_from_json(const Json& j, const std::string& pointer = "");
Json chord_to_json(const ChordDiagram& c);
ChordDiagram chord_from_json(const Json& j, const std::string& pointer = "");

/// {"dim_h", "degree", "value_shape", "components": [{"index", "entries":
/// [{"at", "value"}]}]}.
Json cochain_to_json(const CochainForm& f);
CochainForm cochain_from_json(const Json& j, const std::string& pointer = "");

/// Cocycle entries, cohomology dimension and class coordinates.
Json weight_class_to_json(const WeightClass& w);

/// Reads and parses a JSON file; InputError when unreadable or malformed.
Json read_json_file(const std::string& path);

}  // namespace rwpair
