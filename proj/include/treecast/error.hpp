#pragma once

#include <stdexcept>
#include <string>

namespace treecast {

enum class Errc {
  parse,
  invalid_argument,
  precondition,
  limit,
  not_found,
  io,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

enum class ParseErrc {
  malformed,
  empty_tree,
  vertex_out_of_range,
  self_loop,
  duplicate_edge,
  wrong_edge_count,
  disconnected,
  duplicate_vertex,
};

const char* to_string(ParseErrc kind) noexcept;

class ParseError : public Error {
 public:
  ParseError(ParseErrc kind, const std::string& what)
      : Error(Errc::parse, std::string(to_string(kind)) + ": " + what), kind_(kind) {}
  ParseErrc kind() const noexcept { return kind_; }

 private:
  ParseErrc kind_;
};

}  // namespace treecast
