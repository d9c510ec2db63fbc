#ifndef LGCALC_ERRORS_HPP
#define LGCALC_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace lgcalc {

// Error categories; the CLI maps them to exit codes (parse -> 2,
// semantic -> 3, cap -> 4).
enum class ErrorKind { parse, semantic, cap };

class LgError : public std::runtime_error {
 public:
  LgError(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

struct SyntaxError : LgError {
  SyntaxError(std::size_t position, const std::string& what)
      : LgError(ErrorKind::parse, what + " (at position " + std::to_string(position) + ")"),
        position(position) {}
  std::size_t position;
};

struct ZeroPolynomialError : LgError {
  ZeroPolynomialError() : LgError(ErrorKind::parse, "polynomial is zero") {}
};

struct DocumentError : LgError {
  explicit DocumentError(const std::string& what) : LgError(ErrorKind::parse, what) {}
};

struct UnusedVariableError : LgError {
  explicit UnusedVariableError(int variable)
      : LgError(ErrorKind::semantic,
                "variable x" + std::to_string(variable + 1) + " appears in no term"),
        variable(variable) {}
  int variable;  // 0-based
};

struct NotQuasiHomogeneousError : LgError {
  NotQuasiHomogeneousError()
      : LgError(ErrorKind::semantic, "no weight system makes the polynomial quasi-homogeneous") {}
};

struct AmbiguousWeightsError : LgError {
  AmbiguousWeightsError(std::vector<std::string> a, std::vector<std::string> b)
      : LgError(ErrorKind::semantic, "weight system is not unique"),
        witness_a(std::move(a)),
        witness_b(std::move(b)) {}
  // Two independent rational solutions of the weight equations, as "p/q".
  std::vector<std::string> witness_a, witness_b;
};

struct NoPositiveSolutionError : LgError {
  NoPositiveSolutionError()
      : LgError(ErrorKind::semantic, "weight equations admit no positive solution") {}
};

struct InfiniteKernelError : LgError {
  explicit InfiniteKernelError(std::vector<std::string> witness)
      : LgError(ErrorKind::semantic, "phase kernel is infinite"), witness(std::move(witness)) {}
  // A nonzero rational vector annihilated by the matrix, as "p/q" entries.
  std::vector<std::string> witness;
};

struct InfiniteAutError : LgError {
  explicit InfiniteAutError(std::vector<std::string> witness)
      : LgError(ErrorKind::semantic, "symmetry group of the polynomial is infinite"),
        witness(std::move(witness)) {}
  std::vector<std::string> witness;
};

struct JNotContainedError : LgError {
  JNotContainedError() : LgError(ErrorKind::semantic, "group does not contain the grading element") {}
};

struct NotSubgroupOfAutError : LgError {
  explicit NotSubgroupOfAutError(std::vector<std::string> witness)
      : LgError(ErrorKind::semantic, "group is not a subgroup of the polynomial's symmetries"),
        witness(std::move(witness)) {}
  // Offending generator as phase strings.
  std::vector<std::string> witness;
};

struct NotInvariantError : LgError {
  NotInvariantError() : LgError(ErrorKind::semantic, "monomial is not invariant under the group") {}
};

struct NonIntegralWeightError : LgError {
  NonIntegralWeightError()
      : LgError(ErrorKind::semantic, "monomial weight is not an integer (grading element missing)") {}
};

struct NotInGroupError : LgError {
  NotInGroupError() : LgError(ErrorKind::semantic, "phase vector does not lie in the group") {}
};

struct NonIntegralError : LgError {
  explicit NonIntegralError(const std::string& what) : LgError(ErrorKind::semantic, what) {}
};

struct CapExceededError : LgError {
  explicit CapExceededError(const std::string& required)
      : LgError(ErrorKind::cap, "enumeration would produce " + required + " elements"),
        required(required) {}
  std::string required;  // decimal count that was requested
};

struct SearchCapExceededError : LgError {
  SearchCapExceededError()
      : LgError(ErrorKind::cap, "graph too large for brute-force automorphism search") {}
};

struct NoSuchEdgeError : LgError {
  explicit NoSuchEdgeError(int edge)
      : LgError(ErrorKind::semantic, "no edge with index " + std::to_string(edge)), edge(edge) {}
  int edge;
};

struct DisconnectedError : LgError {
  DisconnectedError() : LgError(ErrorKind::semantic, "graph is not connected") {}
};

struct WrongDecorationError : LgError {
  WrongDecorationError()
      : LgError(ErrorKind::semantic, "tail decoration is not the grading element") {}
};

struct StabilizationConflictError : LgError {
  explicit StabilizationConflictError(int vertex)
      : LgError(ErrorKind::semantic,
                "inward decorations at vertex " + std::to_string(vertex) + " are not mutually inverse"),
        vertex(vertex) {}
  int vertex;
};

struct EpsilonZeroError : LgError {
  explicit EpsilonZeroError(int index)
      : LgError(ErrorKind::semantic,
                "delta_" + std::to_string(index + 1) + " equals d, shifted weight vanishes"),
        index(index) {}
  int index;
};

struct ZeroScaleError : LgError {
  ZeroScaleError() : LgError(ErrorKind::semantic, "cannot rescale series argument by zero") {}
};

struct NonUnitConstantTermError : LgError {
  NonUnitConstantTermError()
      : LgError(ErrorKind::semantic, "series constant term is not a nonzero rational") {}
};

}  // namespace lgcalc

#endif
