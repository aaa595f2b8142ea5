#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "bellforge/montecarlo.hpp"

namespace bellforge {

// Parsed state file: pure amplitudes or a mixed 4x4 matrix.
struct StateFile {
    std::variant<PureState2Q, Density2Q> state;
    std::optional<std::string> label;

    bool is_pure() const { return std::holds_alternative<PureState2Q>(state); }
};

// Thrown on malformed input documents (exit code 2 territory).
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when a document parses but describes an invalid state (exit code 3).
struct InvalidStateError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// 17 significant digits, lossless double round-trip.
std::string format_double(double v);

StateFile parse_state_file(const std::string &json_text);
StateFile load_state_file(const std::string &path);
std::string serialize_state_file(const StateFile &sf);
void save_state_file(const StateFile &sf, const std::string &path);

SweepSpec parse_sweep_spec(const std::string &json_text);
SweepSpec load_sweep_spec(const std::string &path);

std::string sample_csv(const std::vector<SampleRow> &rows);
std::string sweep_csv(const std::vector<SweepRow> &rows);

void write_file(const std::string &path, const std::string &content);

}  // namespace bellforge
