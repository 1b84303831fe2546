#pragma once

#include <stdexcept>
#include <string>

namespace domcube {

enum class Errc {
  order_out_of_range,
  invalid_edge,
  vertex_out_of_range,
  capacity_exceeded,
  bad_header,
  bad_length,
  non_printable_byte,
  nonzero_padding,
  parse_error,
  budget_exceeded,
  isolated_vertex_present,
  vertex_not_in_set,
  precondition_violated,
  not_full_dominating_graph,
  empty_graph,
  disconnected_triple,
  order_too_large,
  not_partial_cube,
  too_many_classes,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::order_out_of_range: return "OrderOutOfRange";
    case Errc::invalid_edge: return "InvalidEdge";
    case Errc::vertex_out_of_range: return "VertexOutOfRange";
    case Errc::capacity_exceeded: return "CapacityExceeded";
    case Errc::bad_header: return "BadHeader";
    case Errc::bad_length: return "BadLength";
    case Errc::non_printable_byte: return "NonPrintableByte";
    case Errc::nonzero_padding: return "NonzeroPadding";
    case Errc::parse_error: return "ParseError";
    case Errc::budget_exceeded: return "BudgetExceeded";
    case Errc::isolated_vertex_present: return "IsolatedVertexPresent";
    case Errc::vertex_not_in_set: return "VertexNotInSet";
    case Errc::precondition_violated: return "PreconditionViolated";
    case Errc::not_full_dominating_graph: return "NotFullDominatingGraph";
    case Errc::empty_graph: return "EmptyGraph";
    case Errc::disconnected_triple: return "DisconnectedTriple";
    case Errc::order_too_large: return "OrderTooLarge";
    case Errc::not_partial_cube: return "NotPartialCube";
    case Errc::too_many_classes: return "TooManyClasses";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace domcube
