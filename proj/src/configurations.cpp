#include "cdc/configurations.hpp"

#include <array>
#include <sstream>
#include <stdexcept>
#include <string_view>

#include "cdc/plane_encoding.hpp"

namespace cdc {
namespace {

constexpr std::string_view kTable =
#include "configuration_data.inc"
    ;

constexpr std::array<std::size_t, kConfigurationCount> kTypes = {
    16, 16, 16, 16, 16, 16, 17, 17, 16, 16, 16, 16, 16, 16, 16, 16, 17, 16, 16,
    16, 16, 16, 16, 16, 16, 16, 16, 16, 16, 17, 16, 16, 16, 16, 16, 16, 16, 17};

void check_index(std::size_t index) {
  if (index < 1 || index > kConfigurationCount) {
    throw std::out_of_range("configuration index " + std::to_string(index) + " outside 1.." +
                            std::to_string(kConfigurationCount));
  }
}

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t");
  return std::string(s.substr(first, last - first + 1));
}

}  // namespace

std::size_t configuration_type(std::size_t index) {
  check_index(index);
  return kTypes[index - 1];
}

std::string configuration_text(std::size_t index) {
  check_index(index);
  std::istringstream in{std::string(kTable)};
  std::string line;
  while (std::getline(in, line)) {
    const auto amp = line.find('&');
    if (amp == std::string::npos) continue;
    if (std::stoul(line.substr(0, amp)) != index) continue;
    auto body = std::string_view(line).substr(amp + 1);
    if (const auto end = body.find("\\\\"); end != std::string_view::npos) body = body.substr(0, end);
    return trim(body);
  }
  throw std::runtime_error("configuration " + std::to_string(index) + " missing from embedded data");
}

std::vector<Subspace> parse_plane_list(const std::string& text) {
  std::vector<Subspace> planes;
  std::istringstream in(text);
  std::string token;
  while (std::getline(in, token, ',')) planes.push_back(parse_plane_encoding(trim(token)));
  return planes;
}

bool pairwise_disjoint(std::span<const Subspace> planes) {
  for (std::size_t i = 0; i < planes.size(); ++i) {
    for (std::size_t j = i + 1; j < planes.size(); ++j) {
      if (intersection_dim(planes[i], planes[j]) != 0) return false;
    }
  }
  return true;
}

std::vector<Subspace> load_configuration(std::size_t index) {
  auto planes = parse_plane_list(configuration_text(index));
  if (planes.size() != configuration_type(index)) {
    throw std::runtime_error("configuration " + std::to_string(index) + " has " + std::to_string(planes.size()) +
                             " planes, expected " + std::to_string(configuration_type(index)));
  }
  if (!pairwise_disjoint(planes)) {
    throw std::runtime_error("configuration " + std::to_string(index) + " contains two intersecting planes");
  }
  return planes;
}

std::vector<Subspace> dual_solids(std::span<const Subspace> planes) {
  std::vector<Subspace> out;
  out.reserve(planes.size());
  for (const auto& a : planes) out.push_back(dual(a));
  return out;
}

std::vector<Subspace> configuration_to_solids(std::span<const Subspace> planes) {
  std::vector<Subspace> out;
  out.reserve(planes.size());
  for (const auto& a : planes) out.push_back(embed_iota(dual(a)));
  return out;
}

}  // namespace cdc
