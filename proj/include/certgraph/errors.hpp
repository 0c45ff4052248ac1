// Copyright (c) certgraph contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

// Error types raised by the library. Every error carries a stable
// machine-readable code that the command-line front end forwards verbatim.

#include <concepts>
#include <sstream>
#include <stdexcept>
#include <string>

namespace certgraph {

class graph_error : public std::runtime_error {
  public:
    graph_error(std::string code, const std::string& what) : std::runtime_error(what), code_(std::move(code)) {}

    [[nodiscard]]
    const std::string& code() const noexcept {
        return code_;
    }

  private:
    std::string code_;
};

// A vertex required to be in the graph's domain is absent.
class missing_vertex_error : public graph_error {
  public:
    explicit missing_vertex_error(const std::string& what) : graph_error("missing_vertex", what) {}
};

// A checker or algorithm was called outside its precondition.
class precondition_error : public graph_error {
  public:
    explicit precondition_error(const std::string& what) : graph_error("precondition", what) {}
};

class empty_list_error : public graph_error {
  public:
    explicit empty_list_error(const std::string& what) : graph_error("empty_list", what) {}
};

class unsupported_input_error : public graph_error {
  public:
    explicit unsupported_input_error(const std::string& what) : graph_error("unsupported_input", what) {}
};

class size_bound_error : public graph_error {
  public:
    explicit size_bound_error(const std::string& what) : graph_error("size_bound", what) {}
};

// Raised by instrumented search when a loop invariant fails.
class invariant_error : public graph_error {
  public:
    explicit invariant_error(const std::string& what) : graph_error("invariant_violation", what) {}
};

class parse_error : public graph_error {
  public:
    parse_error(std::size_t line, const std::string& what)
        : graph_error("parse_error", "line " + std::to_string(line) + ": " + what), line_(line) {}

    [[nodiscard]]
    std::size_t line() const noexcept {
        return line_;
    }

  private:
    std::size_t line_;
};

namespace detail {

template <class T>
concept Streamable = requires(std::ostream& os, const T& v) { os << v; };

template <class T>
std::string describe(const T& value) {
    if constexpr (Streamable<T>) {
        std::ostringstream os;
        os << value;
        return os.str();
    } else {
        return "<vertex>";
    }
}

template <class T>
[[noreturn]] void throw_missing_vertex(const T& v) {
    throw missing_vertex_error("vertex " + describe(v) + " is not in the graph");
}

} // namespace detail

} // namespace certgraph
