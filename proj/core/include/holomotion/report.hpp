#pragma once

#include <array>
#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "holomotion/errors.hpp"
#include "holomotion/homotopy.hpp"
#include "holomotion/motion.hpp"

namespace holomotion {

/// Options shared by every CLI subcommand. Serialized as the `config`
/// object of a report and accepted back as a config file.
struct RunConfig {
  int n = 2;
  std::optional<double> R;
  std::optional<double> r;
  std::optional<double> z0;
  int samples = 1024;
  int max_depth = 16;
  double rtol = 1e-8;
  std::string out = ".";

  /// Throws DomainError on non-positive fields or a sample count that is not
  /// a power of two (and at least 16).
  void validate() const;

  bool operator==(const RunConfig&) const = default;
};

nlohmann::json config_to_json(const RunConfig& config);

/// Overlays the keys present in `j` onto `base`. Unknown keys are rejected.
RunConfig config_from_json(const nlohmann::json& j, RunConfig base = {});

struct WindingEntry {
  int value = 0;
  bool certified = false;
  std::size_t samples = 0;

  bool operator==(const WindingEntry&) const = default;
};

struct CheckEntry {
  std::string name;
  bool certified = false;
  double value = 0.0;

  bool operator==(const CheckEntry&) const = default;
};

struct InjectivityMargins {
  double min_abs_g = 0.0;
  double min_abs_g_minus_z0 = 0.0;
  double max_abs_g = 0.0;

  bool operator==(const InjectivityMargins&) const = default;
};

struct Certificates {
  double rouche_margin = 0.0;
  bool rouche_fragile = false;
  int zeros_of_h = 0;
  double g_unit_circle_dev = 0.0;
  InjectivityMargins injectivity_margins;
  double basepoint_residual = 0.0;
  double holomorphy_residual = 0.0;
  std::vector<CheckEntry> checks;

  bool operator==(const Certificates&) const = default;
};

struct HomotopyEntry {
  std::string word;
  std::string reduced_word;
  std::string cyclic_word;
  std::array<int, 2> abelianization{0, 0};
  bool agrees_with_lemma_pr = false;

  bool operator==(const HomotopyEntry&) const = default;
};

struct ReportParams {
  double R = 0.0;
  double r = 0.0;
  double m_est = 0.0;
  double z0 = 0.0;

  bool operator==(const ReportParams&) const = default;
};

struct Report {
  RunConfig config;
  double a_n = 0.0;
  ReportParams params;
  Certificates certificates;
  std::map<std::string, WindingEntry> windings;
  std::optional<bool> verdict_zero_winding;
  HomotopyEntry homotopy;
  std::vector<std::string> figures;

  /// Every `certified` flag in the report is true.
  bool all_certified() const;

  bool operator==(const Report&) const = default;
};

void to_json(nlohmann::json& j, const Report& report);
void from_json(const nlohmann::json& j, Report& report);

std::string emit_report(const Report& report);
Report parse_report(const std::string& text);

/// A pipeline stage failed. `stage()` is the operation name, `predicate()`
/// the violated constraint when there is one.
class StageError : public Error {
 public:
  StageError(std::string stage, std::string predicate, const std::string& what)
      : Error(stage + ": " + what),
        stage_(std::move(stage)),
        predicate_(std::move(predicate)) {}
  const std::string& stage() const { return stage_; }
  const std::string& predicate() const { return predicate_; }

 private:
  std::string stage_;
  std::string predicate_;
};

/// Parameters only; stage name "select_parameters" on failure.
ConstructionParams construct_params(const RunConfig& config);

/// solve_a -> select_parameters -> certify_construction -> axiom_check ->
/// zero_winding_verdict -> trace_word. Throws StageError.
Report run_construct(const RunConfig& config);

/// Winding data for one pair over the generator of X.
WindingReport run_winding(const RunConfig& config, LabelPair pair);

/// Free homotopy data of g(gamma) in C minus {0, z0}.
HomotopyClass run_word(const RunConfig& config);

/// Writes via a temporary file in the same directory and a rename.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

}  // namespace holomotion
