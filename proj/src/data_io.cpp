#include "sparselin/data_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <utility>
#include <vector>

namespace sparselin {

namespace {

constexpr std::string_view kModelHeader = "sparselin-model v1";

void strip_cr(std::string& line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
}

bool is_space(char ch) { return ch == ' ' || ch == '\t' || ch == '\v' || ch == '\f'; }

// Splits on runs of blanks.
std::vector<std::string_view> tokenize(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i])) ++i;
    const std::size_t start = i;
    while (i < line.size() && !is_space(line[i])) ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

std::optional<double> to_double(std::string_view token) {
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  double value = 0.0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end || token.empty()) return std::nullopt;
  return value;
}

std::optional<std::size_t> to_size(std::string_view token) {
  std::size_t value = 0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end || token.empty()) return std::nullopt;
  return value;
}

struct ParsedLine {
  double label;
  std::vector<SparseEntry> entries;
};

ParsedLine parse_example_line(std::string_view line, std::size_t lineno,
                              std::optional<std::size_t> dim_override, bool labels_optional) {
  const auto tokens = tokenize(line);
  ParsedLine out{};
  std::size_t first = 1;
  if (labels_optional && tokens.front().find(':') != std::string_view::npos) {
    first = 0;
  } else {
    const auto label = to_double(tokens.front());
    if (!label || !std::isfinite(*label)) {
      throw ParseError("malformed label '" + std::string(tokens.front()) + "'", lineno);
    }
    out.label = *label;
  }

  std::size_t prev = 0;
  for (std::size_t j = first; j < tokens.size(); ++j) {
    const auto token = tokens[j];
    const auto colon = token.find(':');
    if (colon == std::string_view::npos) {
      throw ParseError("expected <index>:<value>, got '" + std::string(token) + "'", lineno);
    }
    const auto index = to_size(token.substr(0, colon));
    const auto value = to_double(token.substr(colon + 1));
    if (!index || !value) {
      throw ParseError("malformed feature '" + std::string(token) + "'", lineno);
    }
    if (*index == 0) throw ParseError("feature indices are 1-based, got 0", lineno);
    if (!std::isfinite(*value)) {
      throw ParseError("non-finite feature value in '" + std::string(token) + "'", lineno);
    }
    if (j > first && *index <= prev) {
      throw IndexOrderError("feature index " + std::to_string(*index) + " does not increase past " +
                                std::to_string(prev),
                            lineno);
    }
    if (dim_override && *index > *dim_override) {
      throw DimensionError("feature index " + std::to_string(*index) + " exceeds dimension " +
                               std::to_string(*dim_override),
                           lineno);
    }
    prev = *index;
    if (*value != 0.0) out.entries.push_back({*index - 1, *value});
  }
  return out;
}

}  // namespace

std::string format_double(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

Dataset parse_libsvm(std::istream& in, std::optional<std::size_t> dim_override,
                     bool labels_optional) {
  std::vector<ParsedLine> rows;
  std::size_t max_index = 0;  // one past the largest 0-based index
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    strip_cr(line);
    std::string_view view(line);
    if (const auto hash = view.find('#'); hash != std::string_view::npos) {
      view = view.substr(0, hash);
    }
    if (tokenize(view).empty()) continue;
    rows.push_back(parse_example_line(view, lineno, dim_override, labels_optional));
    if (!rows.back().entries.empty()) {
      max_index = std::max(max_index, rows.back().entries.back().index + 1);
    }
  }
  if (rows.empty()) throw EmptyDatasetError("no examples found", lineno == 0 ? 1 : lineno);

  Dataset data(dim_override.value_or(max_index));
  for (auto& row : rows) data.add(SparseVec(data.dim(), std::move(row.entries)), row.label);
  return data;
}

Dataset parse_libsvm(std::string_view text, std::optional<std::size_t> dim_override,
                     bool labels_optional) {
  std::istringstream in{std::string(text)};
  return parse_libsvm(in, dim_override, labels_optional);
}

Dataset load_libsvm(const std::filesystem::path& path, std::optional<std::size_t> dim_override,
                    bool labels_optional) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open data file '" + path.string() + "'");
  return parse_libsvm(in, dim_override, labels_optional);
}

void write_libsvm(const Dataset& data, std::ostream& out) {
  for (const auto& ex : data) {
    out << format_double(ex.y);
    for (const auto& e : ex.x) out << ' ' << (e.index + 1) << ':' << format_double(e.value);
    out << '\n';
  }
}

void write_model(const LinearModel& model, std::ostream& out) {
  if (!std::isfinite(model.b)) throw FormatError("refusing to write a non-finite bias");
  out << kModelHeader << '\n';
  out << "loss " << loss_name(model.loss) << '\n';
  out << "dim " << model.dim() << '\n';
  out << "bias " << format_double(model.b) << '\n';
  for (std::size_t i = 0; i < model.dim(); ++i) {
    const double w = model.w[i];
    if (w == 0.0) continue;
    if (!std::isfinite(w)) throw FormatError("refusing to write a non-finite weight");
    out << i << ':' << format_double(w) << '\n';
  }
}

std::string model_to_string(const LinearModel& model) {
  std::ostringstream out;
  write_model(model, out);
  return out.str();
}

void save_model(const LinearModel& model, const std::filesystem::path& path) {
  const std::string text = model_to_string(model);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot open model file '" + path.string() + "' for writing");
  out << text;
  if (!out) throw FormatError("failed writing model file '" + path.string() + "'");
}

LinearModel read_model(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  auto next_line = [&](std::string_view what) {
    if (!std::getline(in, line)) {
      throw FormatError("model file truncated, expected " + std::string(what), lineno + 1);
    }
    ++lineno;
    strip_cr(line);
    return std::string_view(line);
  };
  auto keyed = [&](std::string_view key) {
    const auto view = next_line(key);
    const std::string prefix = std::string(key) + ' ';
    if (view.substr(0, prefix.size()) != prefix) {
      throw FormatError("expected '" + prefix + "...'", lineno);
    }
    return view.substr(prefix.size());
  };

  if (next_line("header") != kModelHeader) {
    throw FormatError("unknown model format, expected '" + std::string(kModelHeader) + "'",
                      lineno);
  }
  const auto loss = parse_loss_name(keyed("loss"));
  if (!loss) throw FormatError("unknown loss '" + line.substr(5) + "'", lineno);
  const auto dim = to_size(keyed("dim"));
  if (!dim) throw FormatError("malformed dimension", lineno);
  const auto bias = to_double(keyed("bias"));
  if (!bias || !std::isfinite(*bias)) throw FormatError("malformed or non-finite bias", lineno);

  LinearModel model{DenseVec(*dim), *bias, *loss};
  std::optional<std::size_t> prev;
  while (std::getline(in, line)) {
    ++lineno;
    strip_cr(line);
    if (line.empty()) continue;
    const std::string_view view(line);
    const auto colon = view.find(':');
    if (colon == std::string_view::npos) throw FormatError("expected <index>:<weight>", lineno);
    const auto index = to_size(view.substr(0, colon));
    const auto value = to_double(view.substr(colon + 1));
    if (!index || !value) throw FormatError("malformed weight entry", lineno);
    if (!std::isfinite(*value)) throw FormatError("non-finite weight", lineno);
    if (*index >= *dim) throw FormatError("weight index beyond dimension", lineno);
    if (prev && *index <= *prev) throw FormatError("weight indices must ascend", lineno);
    prev = *index;
    model.w[*index] = *value;
  }
  return model;
}

LinearModel model_from_string(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_model(in);
}

LinearModel load_model(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open model file '" + path.string() + "'");
  return read_model(in);
}

}  // namespace sparselin
