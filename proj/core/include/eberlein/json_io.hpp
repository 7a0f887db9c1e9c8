#pragma once

#include <json.hpp>

#include "eberlein/correlation.hpp"
#include "eberlein/hilbert.hpp"
#include "eberlein/sequences.hpp"
#include "eberlein/spectral.hpp"
#include "eberlein/windows.hpp"

namespace eberlein {

using nlohmann::json;

// complex numbers travel as [re, im]
json complex_to_json(const Complex& z);
Complex complex_from_json(const json& j);

json to_json(const WindowFamily& w);
WindowFamily window_family_from_json(const json& j);

json to_json(const SequenceSpec& s);
SequenceSpec sequence_spec_from_json(const json& j);

json to_json(const CorrelationEstimate& e);
CorrelationEstimate correlation_from_json(const json& j);

json to_json(const Autocorrelation& a);
Autocorrelation autocorrelation_from_json(const json& j);

json to_json(const FourierBohrEstimate& e);

json to_json(const SpectralMeasureEstimate& e);
SpectralMeasureEstimate spectral_measure_from_json(const json& j);

json to_json(const GramMatrix& g);
GramMatrix gram_from_json(const json& j);

json load_json_file(const std::string& path);
/// Writes via a temp file in the same directory, then renames (atomic).
void save_json_file(const json& j, const std::string& path);

}  // namespace eberlein
