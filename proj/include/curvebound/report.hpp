#pragma once

#include <optional>
#include <string>
#include <vector>

#include "curvebound/decision.hpp"
#include "curvebound/oracle.hpp"
#include "curvebound/witness.hpp"

namespace curvebound {

struct RunOptions {
    bool want_witness = false;
    std::vector<unsigned long> scales = default_witness_scales();
    Rat width = default_witness_width();
    bool want_oracle = false;
    std::vector<Rat> radii = default_oracle_radii();
    int samples = kDefaultOracleSamples;
};

struct AnalysisResult {
    SparsePoly poly;
    NewtonPolygon polygon;
    Verdict verdict;
    std::optional<WitnessReport> witness;
    std::optional<std::string> witness_note;  // set when witness generation failed
    std::optional<UnboundednessReport> oracle;
    double elapsed_ms = 0.0;
};

// Runs the full pipeline: polygon, verdict, optional witnesses and oracle.
AnalysisResult analyze_polynomial(const SparsePoly& p, const RunOptions& opts);

// Machine-readable report; every rational is a "numerator/denominator"
// string. `input_echo` is the expression as the user supplied it.
std::string render_json(const AnalysisResult& result, const std::string& input_echo);

std::string render_text(const AnalysisResult& result, const std::string& input_echo);

// 0 compact, 1 noncompact, 2 unknown (64/65 are reserved for usage and
// parse failures at the command-line boundary).
int exit_code_for(Status status);

}  // namespace curvebound
