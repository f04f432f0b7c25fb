#include "bcn/trace.hpp"

#include <cctype>
#include <map>

#include "bcn/error.hpp"

namespace bcn {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_cells(std::string_view line) {
  std::vector<std::string_view> cells;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      cells.push_back(trim(line.substr(start)));
      break;
    }
    cells.push_back(trim(line.substr(start, comma - start)));
    start = comma + 1;
  }
  return cells;
}

enum class ColumnKind { Input, Output };

struct Column {
  ColumnKind kind;
  std::size_t position;  // input index, or position in model.outputs()
};

}  // namespace

std::vector<TraceRecord> read_trace(std::string_view text, const Model& model) {
  std::map<std::string, std::size_t, std::less<>> input_by_name, output_by_name;
  for (std::size_t q = 0; q < model.input_count(); ++q) input_by_name.emplace(model.input_name(q), q);
  for (std::size_t j = 0; j < model.output_count(); ++j) output_by_name.emplace(model.state_name(model.outputs()[j]), j);

  std::vector<Column> columns;
  bool have_header = false;
  std::vector<TraceRecord> records;
  std::vector<std::size_t> record_lines;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = trim(text.substr(pos, end - pos));
    ++line_no;
    pos = end + 1;
    if (line.empty()) continue;

    const auto cells = split_cells(line);
    if (!have_header) {
      have_header = true;
      if (cells[0] != "k") throw TraceError(line_no, "header must start with 'k'");
      std::vector<bool> input_seen(model.input_count(), false), output_seen(model.output_count(), false);
      for (std::size_t c = 1; c < cells.size(); ++c) {
        const std::string_view cell = cells[c];
        if (cell.starts_with("u:")) {
          const auto it = input_by_name.find(trim(cell.substr(2)));
          if (it == input_by_name.end()) throw TraceError(line_no, "unknown input column '" + std::string(cell) + "'");
          if (input_seen[it->second]) throw TraceError(line_no, "duplicate column '" + std::string(cell) + "'");
          input_seen[it->second] = true;
          columns.push_back({ColumnKind::Input, it->second});
        } else if (cell.starts_with("y:")) {
          const auto it = output_by_name.find(trim(cell.substr(2)));
          if (it == output_by_name.end())
            throw TraceError(line_no, "unknown output column '" + std::string(cell) + "'");
          if (output_seen[it->second]) throw TraceError(line_no, "duplicate column '" + std::string(cell) + "'");
          output_seen[it->second] = true;
          columns.push_back({ColumnKind::Output, it->second});
        } else {
          throw TraceError(line_no, "column '" + std::string(cell) + "' must be prefixed with u: or y:");
        }
      }
      for (std::size_t q = 0; q < input_seen.size(); ++q)
        if (!input_seen[q]) throw TraceError(line_no, "missing column u:" + model.input_name(q));
      for (std::size_t j = 0; j < output_seen.size(); ++j)
        if (!output_seen[j]) throw TraceError(line_no, "missing column y:" + model.state_name(model.outputs()[j]));
      continue;
    }

    if (cells.size() != columns.size() + 1)
      throw TraceError(line_no, "expected " + std::to_string(columns.size() + 1) + " cells, got " +
                                    std::to_string(cells.size()));
    const std::string expected_k = std::to_string(records.size());
    if (cells[0] != expected_k)
      throw TraceError(line_no, "time index '" + std::string(cells[0]) + "' breaks contiguity, expected " + expected_k);

    TraceRecord rec;
    rec.output = OutputVector(model.output_count());
    InputVector u(model.input_count());
    std::size_t empty_inputs = 0;
    for (std::size_t c = 0; c < columns.size(); ++c) {
      const std::string_view cell = cells[c + 1];
      if (cell.empty() && columns[c].kind == ColumnKind::Input) {
        ++empty_inputs;
        continue;
      }
      if (cell != "0" && cell != "1") throw TraceError(line_no, "'" + std::string(cell) + "' is not a bit");
      if (columns[c].kind == ColumnKind::Input) u.set(columns[c].position, cell == "1");
      else rec.output.set(columns[c].position, cell == "1");
    }
    if (empty_inputs != 0 && empty_inputs != model.input_count())
      throw TraceError(line_no, "input cells must be all filled or all empty");
    if (empty_inputs == 0) rec.input = std::move(u);
    records.push_back(std::move(rec));
    record_lines.push_back(line_no);
  }
  if (!have_header) throw TraceError(line_no, "missing header");

  for (std::size_t r = 0; r + 1 < records.size(); ++r)
    if (!records[r].input) throw TraceError(record_lines[r], "only the last row may omit inputs");
  if (model.input_count() == 0 && !records.empty()) records.back().input.reset();
  return records;
}

std::string write_trace(std::span<const TraceRecord> records, const Model& model) {
  std::string out = "k";
  for (const std::string& name : model.input_names()) out += ",u:" + name;
  for (std::size_t j : model.outputs()) out += ",y:" + model.state_name(j);
  out += '\n';
  for (std::size_t k = 0; k < records.size(); ++k) {
    const TraceRecord& r = records[k];
    if (r.output.size() != model.output_count())
      throw TraceError(k, "output width " + std::to_string(r.output.size()) + " does not match m=" +
                              std::to_string(model.output_count()));
    if (r.input && r.input->size() != model.input_count())
      throw TraceError(k, "input width " + std::to_string(r.input->size()) + " does not match p=" +
                              std::to_string(model.input_count()));
    out += std::to_string(k);
    for (std::size_t q = 0; q < model.input_count(); ++q) {
      out += ',';
      if (r.input) out += (*r.input)[q] ? '1' : '0';
    }
    for (std::size_t j = 0; j < model.output_count(); ++j) {
      out += ',';
      out += r.output[j] ? '1' : '0';
    }
    out += '\n';
  }
  return out;
}

std::vector<TraceRecord> make_trace(const Trajectory& trajectory, std::span<const InputVector> inputs) {
  std::vector<TraceRecord> records;
  records.reserve(trajectory.outputs.size());
  for (std::size_t k = 0; k < trajectory.outputs.size(); ++k) {
    TraceRecord r;
    r.output = trajectory.outputs[k];
    if (k + 1 < trajectory.outputs.size() && k < inputs.size()) r.input = inputs[k];
    records.push_back(std::move(r));
  }
  return records;
}

SplitTrace split_trace(std::span<const TraceRecord> records) {
  SplitTrace split;
  for (std::size_t k = 0; k < records.size(); ++k) {
    split.outputs.push_back(records[k].output);
    if (records[k].input) {
      split.inputs.push_back(*records[k].input);
    } else if (k + 1 < records.size()) {
      throw TraceError(k, "missing input before the last record");
    }
  }
  return split;
}

}  // namespace bcn
