// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace bcalc {

// Lookup of a field, manifold, case or scene id that is not registered.
class UnknownId : public std::invalid_argument {
 public:
  UnknownId(const std::string& kind, const std::string& id)
      : std::invalid_argument("unknown " + kind + " id '" + id + "'"), kind_(kind), id_(id) {}

  const std::string& kind() const { return kind_; }
  const std::string& id() const { return id_; }

 private:
  std::string kind_;
  std::string id_;
};

}  // namespace bcalc
