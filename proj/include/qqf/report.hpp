#ifndef QQF_REPORT_HPP
#define QQF_REPORT_HPP

#include <string>
#include <utility>
#include <vector>

namespace qqf {

struct Finding {
  std::string check;
  std::string detail;
};

/// Ordered list of failures plus non-fatal notes.
class ValidationReport {
 public:
  void fail(std::string check, std::string detail) { failures_.push_back({std::move(check), std::move(detail)}); }
  void note(std::string check, std::string detail) { notes_.push_back({std::move(check), std::move(detail)}); }

  bool ok() const { return failures_.empty(); }
  const std::vector<Finding>& failures() const { return failures_; }
  const std::vector<Finding>& notes() const { return notes_; }

  bool failed(const std::string& check) const
  {
    for (const auto& f : failures_)
      if (f.check == check) return true;
    return false;
  }

  void merge(const ValidationReport& other, const std::string& prefix = {})
  {
    for (const auto& f : other.failures_) failures_.push_back({prefix + f.check, f.detail});
    for (const auto& f : other.notes_) notes_.push_back({prefix + f.check, f.detail});
  }

  std::string str() const
  {
    std::string out;
    for (const auto& f : failures_) out += "FAIL " + f.check + ": " + f.detail + "\n";
    for (const auto& f : notes_) out += "NOTE " + f.check + ": " + f.detail + "\n";
    return out;
  }

 private:
  std::vector<Finding> failures_;
  std::vector<Finding> notes_;
};

}  // namespace qqf

#endif  // QQF_REPORT_HPP
