#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <vector>

namespace dblgpd {

/// One violated axiom instance, with a printable counterexample.
struct Violation {
  std::string law;
  std::string witness;
};

/// Outcome of a bounded audit: how many instances of each law were
/// checked, and every instance that failed. Keys are kept sorted so that
/// serialization is deterministic.
class AuditReport {
 public:
  void count(const std::string& law, std::size_t n = 1) { checks_[law] += n; }

  void fail(const std::string& law, std::string witness) {
    checks_[law] += 0;
    violations_.push_back({law, std::move(witness)});
  }

  /// Records a check and a violation if `holds` is false.
  bool expect(bool holds, const std::string& law, const std::string& witness) {
    count(law);
    if (!holds) fail(law, witness);
    return holds;
  }

  void merge(const AuditReport& other, const std::string& prefix = {}) {
    for (const auto& [law, n] : other.checks_) checks_[prefix + law] += n;
    for (const auto& v : other.violations_)
      violations_.push_back({prefix + v.law, v.witness});
  }

  [[nodiscard]] bool ok() const { return violations_.empty(); }
  [[nodiscard]] const std::map<std::string, std::size_t>& checks() const { return checks_; }
  [[nodiscard]] const std::vector<Violation>& violations() const { return violations_; }

  [[nodiscard]] std::size_t total_checks() const {
    std::size_t total = 0;
    for (const auto& [law, n] : checks_) total += n;
    return total;
  }

  [[nodiscard]] std::size_t failures(const std::string& law) const {
    std::size_t n = 0;
    for (const auto& v : violations_)
      if (v.law == law) ++n;
    return n;
  }

  /// Structured text: one `check` record per law, one `violation` record
  /// per failure.
  void write(std::ostream& out, std::size_t max_violations = 20) const {
    for (const auto& [law, n] : checks_) {
      out << "check " << law << " instances=" << n
          << " failures=" << failures(law) << "\n";
    }
    std::size_t shown = 0;
    for (const auto& v : violations_) {
      if (shown++ == max_violations) {
        out << "violation ... (" << violations_.size() - max_violations << " more)\n";
        break;
      }
      out << "violation " << v.law << " " << v.witness << "\n";
    }
    out << "audit " << (ok() ? "pass" : "FAIL") << " checks=" << total_checks()
        << " violations=" << violations_.size() << "\n";
  }

 private:
  std::map<std::string, std::size_t> checks_;
  std::vector<Violation> violations_;
};

}  // namespace dblgpd
