#pragma once

// Exact MFPT to the central hub as explicit functions of (g, theta), with the
// generation recursions they solve kept alongside as self-checks.

#include <optional>

#include "recipwalk/walk_matrices.hpp"

namespace recipwalk {

/// First-passage times around a node when the network grows one generation:
/// a from the node to an old neighbour, b (c) from a new internal (external)
/// neighbour to an old neighbour.
struct GrowthSystem {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
};

/// Solves the 3x3 linear system for (a, b, c) numerically.
GrowthSystem solve_growth_system(double theta);

/// Per-generation first-passage multiplier 4(theta + 1). Cross-checked
/// against solve_growth_system on every call.
double growth_factor(double theta);

/// Sum of trapping times over the external nodes born at the last generation (g >= 2).
double t_ext_closed(int g, double theta);
double t_ext_recursive(int g, double theta);

/// Sum of trapping times over all non-trap nodes (g >= 1).
double t_tot_closed(int g, double theta);
double t_tot_recursive(int g, double theta);

/// Mean first-passage time to the trap, three-term closed form. Bit-identical
/// to t_tot_closed(g, theta) / 4^g.
double mfpt_closed(int g, double theta);

/// Leading exponent of MFPT against network size, 1 + log4(theta + 1).
double scaling_exponent(double theta);

struct ClosedFormBreakdown {
  int generation = 0;
  double theta = 1.0;
  double growth_factor = 0.0;
  // Sums over nodes born at generation g; defined for g >= 2 only.
  std::optional<double> t_ext;
  std::optional<double> t_int;
  std::optional<double> t_tot_new;
  double t_tot = 0.0;
  double mfpt = 0.0;
  double exponent = 0.0;
};

ClosedFormBreakdown closed_form_breakdown(int g, double theta);

/// MfptReport tagged closed_form; per_node is empty.
MfptReport closed_form_report(int g, double theta);

}  // namespace recipwalk
