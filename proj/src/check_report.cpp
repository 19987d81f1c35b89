#include "stratsys/check_report.hpp"

namespace stratsys {

void CheckReport::merge(const CheckReport& other) {
  violations_.insert(violations_.end(), other.violations_.begin(), other.violations_.end());
  notes_.insert(notes_.end(), other.notes_.begin(), other.notes_.end());
}

}  // namespace stratsys
