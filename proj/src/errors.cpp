#include "sqw/errors.hpp"

#include <sstream>

namespace sqw {

namespace {

template <typename... Args>
std::string concat(const Args&... args) {
  std::ostringstream os;
  (os << ... << args);
  return os.str();
}

}  // namespace

Error::Error(std::string kind, const std::string& message)
    : std::runtime_error(message), kind_(std::move(kind)) {}

InvalidArgument::InvalidArgument(const std::string& message) : Error("InvalidArgument", message) {}

DanglingNode::DanglingNode(std::size_t node)
    : Error("DanglingNode", concat("node ", node, " has no outgoing weight")), node_(node) {}

NegativeWeight::NegativeWeight(std::size_t to, std::size_t from, double value)
    : Error("NegativeWeight", concat("weight of edge ", from, "->", to, " is negative (", value, ")")) {}

NotStochastic::NotStochastic(std::size_t column, double deviation)
    : Error("NotStochastic", concat("column ", column, " sum deviates from 1 by ", deviation)),
      column_(column),
      deviation_(deviation) {}

ParseError::ParseError(std::size_t line, std::size_t field, const std::string& message)
    : Error("ParseError", concat("line ", line, ", field ", field, ": ", message)),
      line_(line),
      field_(field) {}

IndexOutOfRange::IndexOutOfRange(std::size_t index, std::size_t bound)
    : Error("IndexOutOfRange", concat("index ", index, " out of range [0, ", bound, ")")) {}

DimensionMismatch::DimensionMismatch(std::size_t expected, std::size_t actual)
    : Error("DimensionMismatch", concat("expected dimension ", expected, ", got ", actual)) {}

TooLarge::TooLarge(std::size_t n, std::size_t cap)
    : Error("TooLarge", concat("node count ", n, " exceeds dense cap ", cap)) {}

TooSmall::TooSmall(std::size_t n, std::size_t minimum)
    : Error("TooSmall", concat("node count ", n, " is below the minimum ", minimum)) {}

InsufficientRange::InsufficientRange(int t_q_max)
    : Error("InsufficientRange",
            concat("family range ", t_q_max, " cannot witness any period twice")) {}

RankFailed::RankFailed(int t_q)
    : Error("RankFailed", concat("limiting distribution failed for t_q = ", t_q)), t_q_(t_q) {}

UnsupportedSize::UnsupportedSize(std::size_t n)
    : Error("UnsupportedSize", concat("circuit synthesis supports 2 nodes only, got ", n)) {}

}  // namespace sqw
