#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "qpredict/haar_average.hpp"

namespace qpredict::app {

enum class Family { BellDiagonal, Adc, Ttbar, Integrated };

struct Axis {
  std::string name;
  double min = 0.0;
  double max = 0.0;
  int count = 1;

  double value(int i) const;
};

struct SweepSpec {
  Family family = Family::BellDiagonal;
  std::vector<Axis> axes;  // in the family's own axis order
  std::vector<std::string> quantities;
  std::string out;
  int quad_n = kDefaultQuadratureN;
  std::uint64_t seed = 0;
};

Family parse_family(const std::string& name);
const char* family_name(Family f);
const std::vector<std::string>& family_axes(Family f);
const std::vector<std::string>& known_quantities();

// "beta=0:0.99:40,theta=0.05:3.09:40,w_gg=0". A bare value fixes the axis.
std::vector<Axis> parse_grid(Family f, const std::string& text);
std::vector<std::string> parse_quantities(const std::string& text);

// Throws ParseError on any malformed or inconsistent field.
SweepSpec sweep_spec_from_json(const nlohmann::json& j);
void check_spec(const SweepSpec& spec);

// Whole CSV as text: header, then one row per grid point in row-major order
// (last axis fastest).
std::string run_sweep(const SweepSpec& spec, unsigned threads = 0);

// run_sweep and write to spec.out; IoError when the file cannot be written.
void write_sweep(const SweepSpec& spec, unsigned threads = 0);

std::string format_double(double v);

}  // namespace qpredict::app
