#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

namespace shr {

using Grade = boost::rational<std::int64_t>;

/// Parses "p/q", "p" or a decimal-free integer. Throws std::invalid_argument.
Grade parse_grade(std::string_view text);
std::string format_grade(const Grade& g);

/// Finite truth-value chain: strictly increasing exact rationals in [0,1],
/// starting at 0 and ending at 1. Fuzzy subsets store positions in it.
class GradeChain {
 public:
  explicit GradeChain(std::vector<Grade> grades);

  /// "0 1/2 1" or "0,1/2,1".
  static GradeChain parse(std::string_view text);
  static GradeChain boolean() { return GradeChain({Grade(0), Grade(1)}); }
  /// 0, 1/(k-1), ..., 1.
  static GradeChain uniform(std::size_t k);

  std::size_t size() const noexcept { return grades_.size(); }
  std::size_t top() const noexcept { return grades_.size() - 1; }
  const Grade& operator[](std::size_t i) const { return grades_.at(i); }
  const std::vector<Grade>& grades() const noexcept { return grades_; }
  std::optional<std::size_t> index_of(const Grade& g) const;

  std::string to_string() const;

  friend bool operator==(const GradeChain&, const GradeChain&) = default;

 private:
  std::vector<Grade> grades_;
};

}  // namespace shr
