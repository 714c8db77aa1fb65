#pragma once

#include <array>
#include <fstream>
#include <sstream>
#include <string>

#include "metasched/instance_io.hpp"
#include "metasched/model.hpp"

namespace testsupport {

// Activity, ES, EF, LS, LF, TF as published for the 17-arc network.
inline constexpr std::array<std::array<int, 6>, 17> kTable1Golden{{
    {1, 0, 20, 15, 35, 15},    {2, 0, 33, 45, 78, 45},    {3, 0, 70, 24, 94, 24},
    {4, 0, 40, 0, 40, 0},      {5, 0, 37, 41, 78, 41},    {6, 0, 56, 41, 97, 41},
    {7, 20, 87, 48, 115, 28},  {8, 20, 79, 35, 94, 15},   {9, 20, 98, 48, 126, 28},
    {10, 40, 94, 40, 94, 0},   {11, 40, 94, 72, 126, 32}, {12, 0, 29, 49, 78, 49},
    {13, 0, 43, 54, 97, 54},   {14, 37, 74, 78, 115, 41}, {15, 56, 85, 97, 126, 41},
    {16, 87, 98, 115, 126, 28}, {17, 94, 126, 94, 126, 0},
}};

inline metasched::ProjectNetwork table1() { return metasched::load_network("table1"); }

inline metasched::TctpInstance table2(std::optional<metasched::Money> indirect = std::nullopt) {
  return metasched::parse_tctp_instance(metasched::load_document("table2"), indirect);
}

inline std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace testsupport
