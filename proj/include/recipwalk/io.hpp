#pragma once

// CSV and JSON encodings of every result type. Reals are written as the
// shortest decimal string that round-trips to the same double.

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "recipwalk/closed_form.hpp"
#include "recipwalk/monte_carlo.hpp"
#include "recipwalk/network.hpp"
#include "recipwalk/scaling.hpp"
#include "recipwalk/spectral.hpp"
#include "recipwalk/verify.hpp"
#include "recipwalk/walk_matrices.hpp"

namespace recipwalk::io {

using nlohmann::json;

std::string format_real(double value);

/// `src,dst,weight` with a header line.
void write_arcs_csv(std::ostream& out, const WeightedDigraph& net);
/// `label,birth_generation,role` with a header line.
void write_nodes_csv(std::ostream& out, const WeightedDigraph& net);
/// Parses the output of write_arcs_csv.
std::vector<Arc> read_arcs_csv(std::istream& in);

json to_json(const WeightedDigraph& net);

/// `label,T` with a header line.
void write_mfpt_csv(std::ostream& out, const MfptReport& report);
json to_json(const MfptReport& report);

json to_json(const ClosedFormBreakdown& breakdown);
json to_json(const SimReport& report);

/// `value,multiplicity,lineage` with a header line.
void write_spectrum_csv(std::ostream& out, const SpectrumMultiset& spec);
json to_json(const SpectrumMultiset& spec);

/// `g,N_minus_1,mfpt,log_slope`; log_slope is empty on the first row.
void write_scaling_csv(std::ostream& out, const ScalingFit& fit);
json to_json(const ScalingFit& fit);

json to_json(const VerifyReport& report);
/// Human-readable table, one line per check.
void write_verify_table(std::ostream& out, const VerifyReport& report);

}  // namespace recipwalk::io
