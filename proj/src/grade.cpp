#include "shr/grade.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

#include "shr/errors.hpp"

namespace shr {

namespace {

std::int64_t parse_int(std::string_view s) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
  return v;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

}  // namespace

Grade parse_grade(std::string_view text) {
  text = trim(text);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Grade(parse_int(text));
  const auto den = parse_int(trim(text.substr(slash + 1)));
  if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return Grade(parse_int(trim(text.substr(0, slash))), den);
}

std::string format_grade(const Grade& g) {
  if (g.denominator() == 1) return std::to_string(g.numerator());
  return std::to_string(g.numerator()) + "/" + std::to_string(g.denominator());
}

GradeChain::GradeChain(std::vector<Grade> grades) : grades_(std::move(grades)) {
  if (grades_.size() < 2) throw DomainError("grade chain needs at least 0 and 1");
  if (grades_.front() != Grade(0) || grades_.back() != Grade(1))
    throw DomainError("grade chain must start at 0 and end at 1");
  for (std::size_t i = 1; i < grades_.size(); ++i)
    if (!(grades_[i - 1] < grades_[i])) throw DomainError("grade chain must strictly increase");
  if (grades_.size() > 255) throw CapacityError("grade chain longer than 255");
}

GradeChain GradeChain::parse(std::string_view text) {
  std::vector<Grade> grades;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const auto end = text.find_first_of(" ,\t", pos);
    const auto token = text.substr(pos, end == std::string_view::npos ? text.npos : end - pos);
    if (!trim(token).empty()) {
      try {
        grades.push_back(parse_grade(token));
      } catch (const std::invalid_argument& e) {
        throw DomainError(std::string("bad grade: ") + e.what());
      }
    }
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
  return GradeChain(std::move(grades));
}

GradeChain GradeChain::uniform(std::size_t k) {
  if (k < 2) throw DomainError("grade chain needs at least two grades");
  std::vector<Grade> grades;
  const auto den = static_cast<std::int64_t>(k - 1);
  for (std::int64_t i = 0; i <= den; ++i) grades.emplace_back(i, den);
  return GradeChain(std::move(grades));
}

std::optional<std::size_t> GradeChain::index_of(const Grade& g) const {
  auto it = std::lower_bound(grades_.begin(), grades_.end(), g);
  if (it == grades_.end() || *it != g) return std::nullopt;
  return static_cast<std::size_t>(it - grades_.begin());
}

std::string GradeChain::to_string() const {
  std::string out;
  for (const auto& g : grades_) {
    if (!out.empty()) out += ' ';
    out += format_grade(g);
  }
  return out;
}

}  // namespace shr
