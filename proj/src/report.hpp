#pragma once

#include <string>
#include <utility>
#include <vector>

#include "classify.hpp"
#include "gauge_field.hpp"

namespace gg {

// Ordered key/value report. The machine rendering is the exact sequence of
// "key: value" lines; the human rendering adds a title and aligns the keys.
// Both are byte-stable for identical inputs.
class Report {
public:
  explicit Report(std::string title) : title_(std::move(title)) {}

  void add(const std::string& key, const std::string& value);
  void add(const std::string& key, unsigned long long value);
  void add(const std::string& key, int value);
  void add_flag(const std::string& key, bool value);  // yes/no
  void add_check(const std::string& name, bool passed);

  const std::string& title() const { return title_; }
  bool all_passed() const;
  bool has_checks() const { return has_checks_; }

  std::string render_machine() const;
  std::string render_human() const;

private:
  std::string title_;
  std::vector<std::pair<std::string, std::string>> entries_;
  bool has_checks_ = false;
  bool all_passed_ = true;
};

std::string format_vector(const std::vector<Elem>& v);  // "[0 2 1]"

Report to_report(const ClassificationReport& r, const std::string& title);
Report to_report(const TheoremAReport& r);
Report to_report(const EquivariantReport& r);
Report to_report(const ReconstructionReport& r, const GaugeField& w);
Report holonomy_report(const GaugeField& w);
Report normalize_report(const GaugeField& original, const GaugeField& normalized,
                        const GaugeTransformation& chi);

}  // namespace gg
