#include "ethframe/registry.hpp"

#include <fmt/format.h>

namespace ethframe {

namespace {

std::map<std::uint16_t, std::string> builtin_ether_types() {
  return {
      {0x0800, "IP"},
      {0x0806, "ARP"},
      {0x8035, "RARP"},
      {0x809B, "AppleTalk"},
      {0x8137, "IPX"},
      {0x86DD, "IPv6"},
  };
}

std::map<Byte, std::string> builtin_saps() {
  return {
      {0x00, "NULL LSAP"},
      {0x06, "IP"},
      {0x42, "Spanning Tree BPDU"},
      {0xAA, "SNAP"},
      {0xE0, "NetWare"},
      {0xF0, "NetBIOS"},
      {0xFE, "ISO Network Layer"},
  };
}

constexpr Byte sap_key(Byte sap) noexcept { return static_cast<Byte>(sap & 0xFE); }

}  // namespace

EtherTypeRegistry::EtherTypeRegistry() : names_(builtin_ether_types()) {}

EtherTypeRegistry::EtherTypeRegistry(
    std::initializer_list<std::pair<const std::uint16_t, std::string>> extra)
    : EtherTypeRegistry() {
  for (const auto& [code, name] : extra) names_[code] = name;
}

const EtherTypeRegistry& EtherTypeRegistry::builtin() {
  static const EtherTypeRegistry registry;
  return registry;
}

std::optional<std::string_view> EtherTypeRegistry::find(std::uint16_t ether_type) const {
  if (auto it = names_.find(ether_type); it != names_.end()) return it->second;
  return std::nullopt;
}

std::string EtherTypeRegistry::name(std::uint16_t ether_type) const {
  if (auto found = find(ether_type)) return std::string(*found);
  return fmt::format("unknown (0x{:04x})", ether_type);
}

LsapRegistry::LsapRegistry() : names_(builtin_saps()) {}

LsapRegistry::LsapRegistry(std::initializer_list<std::pair<const Byte, std::string>> extra)
    : LsapRegistry() {
  for (const auto& [sap, name] : extra) names_[sap_key(sap)] = name;
}

const LsapRegistry& LsapRegistry::builtin() {
  static const LsapRegistry registry;
  return registry;
}

std::optional<std::string_view> LsapRegistry::find(Byte sap) const {
  if (auto it = names_.find(sap_key(sap)); it != names_.end()) return it->second;
  return std::nullopt;
}

std::string LsapRegistry::name(Byte sap) const {
  if (auto found = find(sap)) return std::string(*found);
  return fmt::format("unknown (0x{:02x})", sap);
}

SnapProtocolRegistry::SnapProtocolRegistry()
    : protocols_{
          {{kCiscoOui, 0x2000}, "CDP"},
          {{kCiscoOui, 0x2003}, "VTP"},
      },
      organizations_{
          {kEncapsulatedEthernetOui, "Encapsulated Ethernet"},
          {kCiscoOui, "Cisco"},
      } {}

SnapProtocolRegistry::SnapProtocolRegistry(
    std::initializer_list<std::pair<const SnapProtocolKey, std::string>> protocols,
    std::initializer_list<std::pair<const Oui, std::string>> organizations)
    : SnapProtocolRegistry() {
  for (const auto& [key, name] : protocols) protocols_[key] = name;
  for (const auto& [oui, name] : organizations) organizations_[oui] = name;
}

const SnapProtocolRegistry& SnapProtocolRegistry::builtin() {
  static const SnapProtocolRegistry registry;
  return registry;
}

std::optional<std::string_view> SnapProtocolRegistry::find_protocol(const Oui& oui,
                                                                    std::uint16_t pid) const {
  if (auto it = protocols_.find(SnapProtocolKey{oui, pid}); it != protocols_.end()) {
    return it->second;
  }
  return std::nullopt;
}

std::optional<std::string_view> SnapProtocolRegistry::find_organization(const Oui& oui) const {
  if (auto it = organizations_.find(oui); it != organizations_.end()) return it->second;
  return std::nullopt;
}

std::string SnapProtocolRegistry::organization_name(const Oui& oui) const {
  if (auto found = find_organization(oui)) return std::string(*found);
  return fmt::format("unknown (0x{:02x}{:02x}{:02x})", oui[0], oui[1], oui[2]);
}

}  // namespace ethframe
