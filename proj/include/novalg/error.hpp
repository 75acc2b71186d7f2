#pragma once

#include <stdexcept>
#include <string>

namespace novalg {

// All library failures carry a stable machine-readable kind string; the CLI
// maps kinds to exit codes.
class Error : public std::runtime_error {
public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

private:
  std::string kind_;
};

inline Error zero_division(const std::string& what) { return Error("ZeroDivision", what); }
inline Error index_out_of_range(const std::string& what) { return Error("IndexOutOfRange", what); }
inline Error malformed_structure(const std::string& what) { return Error("MalformedStructure", what); }
inline Error not_associative(const std::string& what) { return Error("NotAssociative", what); }
inline Error malformed_input(const std::string& what) { return Error("MalformedInput", what); }
inline Error malformed_generator(const std::string& what) { return Error("MalformedGenerator", what); }
inline Error not_a_chain_map(const std::string& what) { return Error("NotAChainMap", what); }
inline Error connecting_map_not_chain_map(const std::string& what) {
  return Error("ConnectingMapNotChainMap", what);
}
inline Error parameter_out_of_range(const std::string& what) {
  return Error("ParameterOutOfRange", what);
}
inline Error numerical_nonconvergence(const std::string& what) {
  return Error("NumericalNonconvergence", what);
}
inline Error non_zero_dimensional_ideal(const std::string& what) {
  return Error("NonZeroDimensionalIdeal", what);
}
inline Error not_a_bundle_family(const std::string& what) { return Error("NotABundleFamily", what); }
inline Error parse_error(const std::string& what) { return Error("ParseError", what); }

}  // namespace novalg
