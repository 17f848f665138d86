#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "ethframe/frame_model.hpp"

namespace ethframe {

// Static code -> name tables. Each registry starts from a compiled-in set and
// may be extended by the embedding application at construction time. Lookups
// never fail: unregistered codes render as "unknown (0x....)".

class EtherTypeRegistry {
 public:
  EtherTypeRegistry();
  EtherTypeRegistry(std::initializer_list<std::pair<const std::uint16_t, std::string>> extra);

  static const EtherTypeRegistry& builtin();

  [[nodiscard]] std::optional<std::string_view> find(std::uint16_t ether_type) const;
  [[nodiscard]] std::string name(std::uint16_t ether_type) const;

 private:
  std::map<std::uint16_t, std::string> names_;
};

/// LLC service access points. The I/G (or C/R) bit is ignored for lookup,
/// so 0x42 and 0x43 both name the spanning tree SAP.
class LsapRegistry {
 public:
  LsapRegistry();
  LsapRegistry(std::initializer_list<std::pair<const Byte, std::string>> extra);

  static const LsapRegistry& builtin();

  [[nodiscard]] std::optional<std::string_view> find(Byte sap) const;
  [[nodiscard]] std::string name(Byte sap) const;

 private:
  std::map<Byte, std::string> names_;
};

struct SnapProtocolKey {
  Oui oui{};
  std::uint16_t pid = 0;

  friend auto operator<=>(const SnapProtocolKey&, const SnapProtocolKey&) = default;
};

/// Organization-private SNAP protocols and organization names for OUIs.
class SnapProtocolRegistry {
 public:
  SnapProtocolRegistry();
  SnapProtocolRegistry(std::initializer_list<std::pair<const SnapProtocolKey, std::string>> protocols,
                       std::initializer_list<std::pair<const Oui, std::string>> organizations = {});

  static const SnapProtocolRegistry& builtin();

  [[nodiscard]] std::optional<std::string_view> find_protocol(const Oui& oui, std::uint16_t pid) const;
  [[nodiscard]] std::optional<std::string_view> find_organization(const Oui& oui) const;
  /// "Cisco", or "unknown (0xabcdef)".
  [[nodiscard]] std::string organization_name(const Oui& oui) const;

 private:
  std::map<SnapProtocolKey, std::string> protocols_;
  std::map<Oui, std::string> organizations_;
};

}  // namespace ethframe
