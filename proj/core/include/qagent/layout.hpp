// layout.hpp
// Labeled multipartite tensor layouts. A SystemLayout fixes which tensor
// factor plays which role (reference A, system S, environment E, observer
// memory O / O_A / O_B) and in what order. The convention throughout is:
// A first when present, then S, then E, then O (or O_A then O_B).

#pragma once

#include <string>
#include <vector>

#include "qagent/linalg.hpp"

namespace qagent {

enum class Label { A, S, E, O, O_A, O_B };

std::string to_string(Label label);
Label label_from_string(const std::string& s);

struct Factor {
  Label label;
  int dim;
  bool operator==(const Factor&) const = default;
};

// Ordered list of labeled subsystem dimensions. Labels are unique within a
// layout; a dim-1 factor is allowed and stands for an absent subsystem.
class SystemLayout {
 public:
  SystemLayout() = default;
  explicit SystemLayout(std::vector<Factor> factors);

  const std::vector<Factor>& factors() const { return factors_; }
  int factor_count() const { return static_cast<int>(factors_.size()); }
  Eigen::Index total_dim() const;
  std::vector<int> dims() const;

  bool has(Label label) const;
  int index_of(Label label) const;  // throws if the label is absent
  int dim_of(Label label) const;

  // Factor indices for a set of labels, ascending. Throws on unknown or
  // duplicate labels.
  std::vector<int> indices_of(const std::vector<Label>& labels) const;

  // Layout consisting of the given factor indices, in ascending order.
  SystemLayout subset(const std::vector<int>& keep) const;

  bool operator==(const SystemLayout&) const = default;

 private:
  std::vector<Factor> factors_;
};

}  // namespace qagent
