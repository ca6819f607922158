#include "rbg/io/trajectory_csv.hpp"

#include "rbg/error.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace rbg::io {

namespace {

void append_double(std::string& out, double v) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    if (ec != std::errc())
        throw Error("io", "failed to format a floating point value");
    out.append(buf, ptr);
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string field;
    std::stringstream ss(line);
    while (std::getline(ss, field, ',')) out.push_back(field);
    if (!line.empty() && line.back() == ',') out.emplace_back();
    return out;
}

double parse_double(const std::string& s, const std::string& path, size_t line_no) {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw Error("io", "invalid number '" + s + "' in " + path + " line " +
                              std::to_string(line_no));
    return v;
}

} // namespace

void write_trajectory_csv(const Trajectory& tr, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("io", "cannot open '" + path + "' for writing");

    std::string line = "time_s";
    for (const auto& n : tr.state_names) line += "," + n;
    for (const auto& n : tr.alg_names) line += "," + n;
    for (const auto& n : tr.input_names) line += "," + n;
    line += "\n";
    out << line;

    for (Index k = 0; k < tr.sample_count(); ++k) {
        line.clear();
        append_double(line, tr.time[k]);
        for (Index r = 0; r < tr.state.rows(); ++r) {
            line += ',';
            append_double(line, tr.state(r, k));
        }
        for (Index r = 0; r < tr.alg.rows(); ++r) {
            line += ',';
            append_double(line, tr.alg(r, k));
        }
        for (Index r = 0; r < tr.inputs.rows(); ++r) {
            line += ',';
            append_double(line, tr.inputs(r, k));
        }
        line += "\n";
        out << line;
    }
    if (!out) throw Error("io", "failed while writing '" + path + "'");
}

Trajectory read_trajectory_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("io", "cannot open '" + path + "' for reading");

    std::string line;
    if (!std::getline(in, line)) throw Error("io", "'" + path + "' is empty");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::vector<std::string> header = split_csv_line(line);
    if (header.empty() || header.front() != "time_s")
        throw Error("io", "'" + path + "' must start with a header row whose first column "
                          "is time_s");

    const size_t cols = header.size();
    std::vector<std::vector<double>> data(cols);
    size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<std::string> fields = split_csv_line(line);
        if (fields.size() != cols)
            throw Error("io", "'" + path + "' line " + std::to_string(line_no) +
                                  " has " + std::to_string(fields.size()) +
                                  " fields, expected " + std::to_string(cols));
        for (size_t c = 0; c < cols; ++c)
            data[c].push_back(parse_double(fields[c], path, line_no));
    }
    if (data[0].empty()) throw Error("io", "'" + path + "' holds no samples");

    const Index samples = static_cast<Index>(data[0].size());
    Trajectory tr;
    tr.time = Eigen::Map<Vector>(data[0].data(), samples);
    tr.state.resize(static_cast<Index>(cols - 1), samples);
    for (size_t c = 1; c < cols; ++c) {
        tr.state_names.push_back(header[c]);
        tr.state.row(static_cast<Index>(c - 1)) =
            Eigen::Map<Vector>(data[c].data(), samples).transpose();
    }
    return tr;
}

Trajectory align_to_model(const Trajectory& generic, const DaeModel& model) {
    const Index samples = generic.sample_count();
    Trajectory tr;
    tr.time = generic.time;
    tr.point = generic.point;

    tr.state_names = model.space().diff_names;
    tr.state.resize(model.diff_count(), samples);
    for (Index i = 0; i < model.diff_count(); ++i)
        tr.state.row(i) = generic.series(tr.state_names[static_cast<size_t>(i)]).transpose();

    auto all_present = [&](const std::vector<std::string>& names) {
        for (const auto& n : names)
            if (!generic.has_series(n)) return false;
        return !names.empty();
    };
    if (all_present(model.space().alg_names)) {
        tr.alg_names = model.space().alg_names;
        tr.alg.resize(model.alg_count(), samples);
        for (Index i = 0; i < model.alg_count(); ++i)
            tr.alg.row(i) = generic.series(tr.alg_names[static_cast<size_t>(i)]).transpose();
    }
    if (all_present(model.input_names())) {
        tr.input_names = model.input_names();
        tr.inputs.resize(static_cast<Index>(tr.input_names.size()), samples);
        for (size_t i = 0; i < tr.input_names.size(); ++i)
            tr.inputs.row(static_cast<Index>(i)) = generic.series(tr.input_names[i]).transpose();
    }
    return tr;
}

InputChannel read_series_csv(const std::string& path) {
    Trajectory tr = read_trajectory_csv(path);
    if (tr.state.rows() != 1)
        throw Error("io", "drive-cycle file '" + path + "' must have exactly two columns "
                          "(time_s, value)");
    std::vector<double> times(tr.time.data(), tr.time.data() + tr.time.size());
    std::vector<double> values(tr.state.row(0).begin(), tr.state.row(0).end());
    return InputChannel::from_series(std::move(times), std::move(values));
}

} // namespace rbg::io
