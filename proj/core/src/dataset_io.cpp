#include "eegdur/dataset_io.hpp"

#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "eegdur/csv.hpp"
#include "eegdur/errors.hpp"

namespace eegdur {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

Recording read_recording_csv(const fs::path& path, std::size_t n_channels) {
  std::ifstream in(path);
  if (!in) throw data_error("recording file missing: '" + path.string() + "'");

  Recording rec;
  rec.data.assign(n_channels, {});
  std::string line;
  std::size_t row = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line == "\r") continue;
    const auto cells = split_csv_line(line);
    if (cells.size() != n_channels) {
      std::ostringstream msg;
      msg << "'" << path.string() << "' row " << row + 1 << ": inconsistent channels ("
          << cells.size() << " columns, expected " << n_channels << ")";
      throw data_error(msg.str());
    }
    for (std::size_t c = 0; c < n_channels; ++c) {
      double v = 0.0;
      if (!parse_double(cells[c], v)) {
        std::ostringstream msg;
        msg << "'" << path.string() << "' row " << row + 1 << " column " << c + 1
            << ": non-numeric cell '" << cells[c] << "'";
        throw data_error(msg.str());
      }
      rec.data[c].push_back(v);
    }
    ++row;
  }
  if (row == 0) throw data_error("'" + path.string() + "': no samples");
  return rec;
}

}  // namespace

Dataset load_dataset(const std::string& manifest_path) {
  const fs::path mpath(manifest_path);
  std::ifstream in(mpath);
  if (!in) throw data_error("manifest missing: '" + manifest_path + "'");

  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw data_error("manifest '" + manifest_path + "': invalid JSON: " + e.what());
  }

  Dataset ds;
  try {
    ds.name = doc.at("name").get<std::string>();
    const double fs_hz = doc.at("fs").get<double>();
    const auto channels = doc.at("channels").get<std::vector<std::string>>();
    if (fs_hz <= 0.0) throw data_error("manifest: fs must be > 0");
    if (channels.empty()) throw data_error("manifest: empty channel list");

    const fs::path base = mpath.has_parent_path() ? mpath.parent_path() : fs::path(".");
    for (const auto& entry : doc.at("recordings")) {
      Recording rec = read_recording_csv(base / entry.at("file").get<std::string>(),
                                         channels.size());
      rec.subject_id = entry.at("subject_id").get<std::string>();
      rec.condition = entry.value("condition", "");
      rec.fs = fs_hz;
      rec.channels = channels;
      ds.recordings.push_back(std::move(rec));
    }
  } catch (const json::exception& e) {
    throw data_error("manifest '" + manifest_path + "': " + e.what());
  }

  ds.validate();
  return ds;
}

std::string write_dataset(const Dataset& dataset, const std::string& dir) {
  dataset.validate();
  const fs::path base(dir);
  fs::create_directories(base);

  json manifest;
  manifest["name"] = dataset.name;
  manifest["fs"] = dataset.recordings.front().fs;
  manifest["channels"] = dataset.recordings.front().channels;
  manifest["recordings"] = json::array();

  std::size_t idx = 0;
  for (const auto& rec : dataset.recordings) {
    std::ostringstream name;
    name << "rec" << std::setw(3) << std::setfill('0') << idx << "_" << rec.subject_id
         << ".csv";
    std::string body;
    body.reserve(rec.n_samples() * rec.n_channels() * 12);
    for (std::size_t i = 0; i < rec.n_samples(); ++i) {
      for (std::size_t c = 0; c < rec.n_channels(); ++c) {
        if (c) body += ',';
        body += format_double(rec.data[c][i]);
      }
      body += '\n';
    }
    write_file_atomic((base / name.str()).string(), body);
    manifest["recordings"].push_back({{"subject_id", rec.subject_id},
                                      {"condition", rec.condition},
                                      {"file", name.str()}});
    ++idx;
  }

  const std::string mpath = (base / "manifest.json").string();
  write_file_atomic(mpath, manifest.dump(2) + "\n");
  return mpath;
}

}  // namespace eegdur
