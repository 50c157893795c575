#include "qq/profile_store.hpp"

#include <algorithm>
#include <random>

#include "qq/codec.hpp"
#include "qq/content.hpp"

namespace qq::service {
namespace fs = std::filesystem;

std::string random_hex(std::size_t bytes) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::random_device rd;
  std::string out;
  out.reserve(bytes * 2);
  for (std::size_t i = 0; i < bytes; ++i) {
    const auto b = static_cast<unsigned>(rd()) & 0xFFu;
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 0xF]);
  }
  return out;
}

bool is_valid_profile_id(const std::string& id) {
  return id.size() > 1 && id.size() <= 64 && id[0] == 'p' &&
         std::all_of(id.begin() + 1, id.end(), [](char c) { return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'f'); });
}

ProfileStore::ProfileStore(fs::path data_dir) : data_dir_(std::move(data_dir)) {
  fs::create_directories(data_dir_ / "profiles");
  const auto tokens_file = data_dir_ / "tokens.json";
  if (fs::exists(tokens_file)) {
    const auto j = content::read_json_file(tokens_file);
    for (const auto& [token, id] : j.items()) tokens_[token] = id.get<std::string>();
  }
}

fs::path ProfileStore::path_for(const std::string& profile_id) const {
  if (!is_valid_profile_id(profile_id)) throw std::invalid_argument("invalid profile id");
  return data_dir_ / "profiles" / (profile_id + ".json");
}

std::optional<progression::PlayerProfile> ProfileStore::load(const std::string& profile_id) const {
  const auto path = path_for(profile_id);
  if (!fs::exists(path)) return std::nullopt;
  auto profile = codec::profile_from_json(content::read_json_file(path));
  const auto problems = progression::verify_profile(profile);
  if (!problems.empty()) throw std::runtime_error("profile " + profile_id + " is inconsistent: " + problems.front());
  return profile;
}

void ProfileStore::save(const progression::PlayerProfile& profile) const {
  content::write_file_atomic(path_for(profile.id), codec::canonical_dump(codec::to_json(profile)));
}

void ProfileStore::register_token(const std::string& token, const std::string& profile_id) {
  std::lock_guard lock(tokens_mutex_);
  tokens_[token] = profile_id;
  write_tokens();
}

std::optional<std::string> ProfileStore::profile_for_token(const std::string& token) const {
  std::lock_guard lock(tokens_mutex_);
  const auto it = tokens_.find(token);
  if (it == tokens_.end()) return std::nullopt;
  return it->second;
}

void ProfileStore::write_tokens() const {
  codec::json j = codec::json::object();
  for (const auto& [token, id] : tokens_) j[token] = id;
  content::write_file_atomic(data_dir_ / "tokens.json", codec::canonical_dump(j));
}

}  // namespace qq::service
