#pragma once

#include <string>

#include "eegdur/types.hpp"

namespace eegdur {

// Load a dataset from a JSON manifest:
//   {"name": .., "fs": .., "channels": [..],
//    "recordings": [{"subject_id": .., "condition": .., "file": ..}, ..]}
// Each referenced file is a headerless CSV, one row per sample, one column
// per channel, decimal 64-bit floats. Paths are resolved relative to the
// manifest's directory. Throws data_error on missing files, column-count
// mismatches, non-numeric cells, or datasets with fewer than 2 subjects.
Dataset load_dataset(const std::string& manifest_path);

// Write a dataset in the manifest format into `dir`: one CSV per recording
// plus `manifest.json`. Returns the manifest path. Sample values are
// written in round-trip-exact decimal form.
std::string write_dataset(const Dataset& dataset, const std::string& dir);

}  // namespace eegdur
