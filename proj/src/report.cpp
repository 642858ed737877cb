#include "mono/report.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>

namespace mono {

  namespace {
    constexpr std::uint64_t fnv_offset = 14695981039346656037ULL;
    constexpr std::uint64_t fnv_prime  = 1099511628211ULL;
  }  // namespace

  Report::Report(std::string command)
      : command_(std::move(command)), digest_(fnv_offset) {}

  void Report::add_input(std::string_view bytes) {
    for (unsigned char c : bytes) {
      digest_ ^= c;
      digest_ *= fnv_prime;
    }
    // Separator so that ("ab", "c") and ("a", "bc") differ.
    digest_ ^= 0xFFU;
    digest_ *= fnv_prime;
  }

  void Report::set(std::string const& key, std::string value) {
    values_[key] = std::move(value);
  }

  void Report::set(std::string const& key, bool value) {
    values_[key] = value ? "true" : "false";
  }

  void Report::set(std::string const& key, std::size_t value) {
    values_[key] = std::to_string(value);
  }

  void Report::add_block(std::string title, std::string body) {
    blocks_.emplace_back(std::move(title), std::move(body));
  }

  std::string Report::digest() const {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(digest_));
    return buf;
  }

  std::string Report::render_machine() const {
    std::string out = "command=" + command_ + "\n";
    out += "input_digest=" + digest() + "\n";
    for (auto const& [k, v] : values_) {
      out += k + "=" + v + "\n";
    }
    return out;
  }

  std::string Report::render_human() const {
    std::size_t width = 0;
    for (auto const& [k, v] : values_) {
      width = std::max(width, k.size());
    }
    std::string out = "mono " + command_ + "\n";
    for (auto const& [k, v] : values_) {
      out += "  " + k + std::string(width - k.size(), ' ') + "  " + v + "\n";
    }
    for (auto const& [title, body] : blocks_) {
      out += "\n" + title + ":\n" + body;
      if (!body.empty() && body.back() != '\n') {
        out += '\n';
      }
    }
    return out;
  }

}  // namespace mono
