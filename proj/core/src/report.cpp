#include <crossbraid/report.hpp>

#include <sstream>

namespace crossbraid {

bool Report::failed(const std::string& identity) const { return first_failure(identity) != nullptr; }

const Failure* Report::first_failure(const std::string& identity) const {
  for (const auto& f : failures)
    if (f.identity == identity) return &f;
  return nullptr;
}

void Report::merge(const Report& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
  failures.insert(failures.end(), other.failures.begin(), other.failures.end());
  notes.insert(notes.end(), other.notes.begin(), other.notes.end());
}

std::string Report::summary() const {
  std::ostringstream os;
  os << subject << ": " << (passed() ? "PASS" : "FAIL") << " (" << checks.size() << " checks, " << failures.size()
     << " failures)";
  for (const auto& f : failures) {
    os << "\n  - " << f.identity << " at [";
    for (std::size_t k = 0; k < f.witness.size(); ++k) os << (k ? "," : "") << f.witness[k];
    os << "]";
    if (!f.detail.empty()) os << " " << f.detail;
  }
  for (const auto& n : notes) os << "\n  note: " << n;
  return os.str();
}

}  // namespace crossbraid
