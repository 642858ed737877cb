#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace mono {

  /// \brief Output of one CLI command.
  ///
  /// Values are keyed strings. The machine rendering is one `key=value` line
  /// per entry with keys sorted, so identical inputs give identical bytes.
  /// The human rendering adds free-form blocks (tables, files) after the
  /// values.
  class Report {
   public:
    explicit Report(std::string command);

    /// Feeds input bytes (file contents, arguments) into the digest.
    void add_input(std::string_view bytes);

    void set(std::string const& key, std::string value);
    void set(std::string const& key, bool value);
    void set(std::string const& key, std::size_t value);

    /// A block shown only in human output.
    void add_block(std::string title, std::string body);

    std::string const& command() const noexcept {
      return command_;
    }

    std::string digest() const;

    std::map<std::string, std::string> const& values() const noexcept {
      return values_;
    }

    std::string render_machine() const;
    std::string render_human() const;

   private:
    std::string                                      command_;
    std::uint64_t                                    digest_;
    std::map<std::string, std::string>               values_;
    std::vector<std::pair<std::string, std::string>> blocks_;
  };

}  // namespace mono
