#include "eegdur/types.hpp"

#include <unordered_set>

#include "eegdur/errors.hpp"

namespace eegdur {

void Recording::validate() const {
  if (fs <= 0.0) throw data_error("recording '" + subject_id + "': fs must be > 0");
  if (data.empty()) throw data_error("recording '" + subject_id + "': no channels");
  if (channels.size() != data.size())
    throw data_error("recording '" + subject_id + "': channel name count != channel count");
  const std::size_t n = data[0].size();
  if (n < 1) throw data_error("recording '" + subject_id + "': empty channel data");
  for (const auto& ch : data)
    if (ch.size() != n)
      throw data_error("recording '" + subject_id + "': channels have unequal lengths");
  std::unordered_set<std::string> names(channels.begin(), channels.end());
  if (names.size() != channels.size())
    throw data_error("recording '" + subject_id + "': duplicate channel names");
}

std::set<std::string> Dataset::subjects() const {
  std::set<std::string> s;
  for (const auto& r : recordings) s.insert(r.subject_id);
  return s;
}

void Dataset::validate() const {
  if (recordings.empty()) throw data_error("dataset '" + name + "': no recordings");
  const auto& ref = recordings.front().channels;
  for (const auto& r : recordings) {
    r.validate();
    if (r.channels != ref)
      throw data_error("dataset '" + name + "': inconsistent channels (recording '" +
                       r.subject_id + "')");
  }
  if (subjects().size() < 2)
    throw data_error("dataset '" + name + "': identification needs at least 2 subjects");
}

}  // namespace eegdur
