#pragma once

#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <string>

#include "qq/progression.hpp"

namespace qq::service {

/// One JSON document per player under <data_dir>/profiles/<id>.json, plus
/// the bearer-token table in <data_dir>/tokens.json. Every write goes
/// through a temporary file and a rename.
class ProfileStore {
 public:
  explicit ProfileStore(std::filesystem::path data_dir);

  std::filesystem::path path_for(const std::string& profile_id) const;

  /// nullopt when absent. Throws std::runtime_error when the document does
  /// not parse or its totals disagree with its award ledger.
  std::optional<progression::PlayerProfile> load(const std::string& profile_id) const;
  void save(const progression::PlayerProfile& profile) const;

  void register_token(const std::string& token, const std::string& profile_id);
  std::optional<std::string> profile_for_token(const std::string& token) const;

  const std::filesystem::path& data_dir() const noexcept { return data_dir_; }

 private:
  void write_tokens() const;

  std::filesystem::path data_dir_;
  mutable std::mutex tokens_mutex_;
  std::map<std::string, std::string> tokens_;
};

/// Lower-case hex of `bytes` random bytes from the OS entropy source.
std::string random_hex(std::size_t bytes);

/// Valid profile ids are 'p' followed by lower-case hex; anything else is
/// refused before it can reach a file path.
bool is_valid_profile_id(const std::string& id);

}  // namespace qq::service
