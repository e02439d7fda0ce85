#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "sparselin/dataset.hpp"
#include "sparselin/model.hpp"

namespace sparselin {

/// Reads LIBSVM/SVMlight text: `<label> <idx>:<val> ...` per line, 1-based
/// strictly increasing indices, `#` comment lines and blank lines skipped,
/// LF or CRLF endings. Explicit zero values are dropped.
///
/// The dimension is `dim_override` when given, else max index + 1. Errors
/// carry the 1-based line number: ParseError for malformed tokens,
/// IndexOrderError for duplicate or decreasing indices, DimensionError for an
/// index beyond the override, EmptyDatasetError when no example is found.
///
/// With `labels_optional`, a line may start directly with `<idx>:<val>`; its
/// label reads as 0. Used for prediction inputs.
Dataset parse_libsvm(std::istream& in, std::optional<std::size_t> dim_override = std::nullopt,
                     bool labels_optional = false);
Dataset parse_libsvm(std::string_view text, std::optional<std::size_t> dim_override = std::nullopt,
                     bool labels_optional = false);
Dataset load_libsvm(const std::filesystem::path& path,
                    std::optional<std::size_t> dim_override = std::nullopt,
                    bool labels_optional = false);

/// Writes a dataset back out in the format parse_libsvm() reads.
void write_libsvm(const Dataset& data, std::ostream& out);

/// Model file:
///   sparselin-model v1
///   loss <name>
///   dim <n>
///   bias <float>
///   <idx>:<float>      one line per nonzero weight, 0-based ascending
/// Floats use the shortest decimal form that reads back to the same double.
void write_model(const LinearModel& model, std::ostream& out);
std::string model_to_string(const LinearModel& model);
void save_model(const LinearModel& model, const std::filesystem::path& path);

/// Throws FormatError (with line number) on a bad header, unknown loss,
/// malformed or out-of-order entries, or non-finite values.
LinearModel read_model(std::istream& in);
LinearModel model_from_string(std::string_view text);
LinearModel load_model(const std::filesystem::path& path);

/// Shortest round-trip decimal representation of a double.
std::string format_double(double value);

}  // namespace sparselin
