#include "xxc/sweep.hpp"

#include <cstdlib>
#include <sstream>

#include "xxc/asymptotics.hpp"
#include "xxc/errors.hpp"

namespace xxc {

int worker_count() {
  int workers = static_cast<int>(std::thread::hardware_concurrency());
  if (workers < 1) workers = 1;
  if (const char* env = std::getenv("FERMI_SEAS_THREADS")) {
    char* end = nullptr;
    const long cap = std::strtol(env, &end, 10);
    if (end && *end == '\0' && cap >= 1 && cap < 1024)
      workers = std::min<long>(workers, cap);
  }
  return workers;
}

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream stream(text);
  while (std::getline(stream, item, sep)) parts.push_back(item);
  return parts;
}

double to_double(const std::string& text) {
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    throw ConfigError("not a number: '" + text + "'");
  }
  if (used != text.size()) throw ConfigError("not a number: '" + text + "'");
  return value;
}

int to_int(const std::string& text) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(text, &used);
  } catch (const std::exception&) {
    throw ConfigError("not an integer: '" + text + "'");
  }
  if (used != text.size()) throw ConfigError("not an integer: '" + text + "'");
  return value;
}

}  // namespace

std::vector<double> parse_value_list(const std::string& text) {
  if (text.empty()) throw ConfigError("empty value list");
  if (text.find(':') != std::string::npos) {
    const auto parts = split(text, ':');
    if (parts.size() != 3) throw ConfigError("range spec must be lo:hi:count");
    const double lo = to_double(parts[0]);
    const double hi = to_double(parts[1]);
    const int count = to_int(parts[2]);
    if (count < 2 || hi < lo) throw ConfigError("range spec must be lo:hi:count with count >= 2, hi >= lo");
    std::vector<double> values(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i)
      values[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (count - 1);
    return values;
  }
  std::vector<double> values;
  for (const auto& part : split(text, ',')) values.push_back(to_double(part));
  if (values.empty()) throw ConfigError("empty value list");
  return values;
}

std::vector<int> parse_block_list(const std::string& text) {
  if (text.empty()) throw ConfigError("empty block list");
  if (text.find(':') != std::string::npos) {
    const auto parts = split(text, ':');
    if (parts.size() != 2) throw ConfigError("block range must be lo:hi");
    const int lo = to_int(parts[0]);
    const int hi = to_int(parts[1]);
    if (lo < 1 || hi < lo) throw ConfigError("block range must satisfy 1 <= lo <= hi");
    std::vector<int> blocks;
    for (int b = lo; b <= hi; ++b) blocks.push_back(b);
    return blocks;
  }
  std::vector<int> blocks;
  for (const auto& part : split(text, ',')) {
    const int b = to_int(part);
    if (b < 1) throw ConfigError("block sizes must be >= 1");
    blocks.push_back(b);
  }
  if (blocks.empty()) throw ConfigError("empty block list");
  return blocks;
}

std::vector<int> parse_geometric_spec(const std::string& text) {
  const auto parts = split(text, ':');
  if (parts.size() != 3) throw ConfigError("geometric spec must be MIN:COUNT:MAX");
  return geometric_grid(to_int(parts[0]), to_int(parts[2]), to_int(parts[1]));
}

}  // namespace xxc
