#include "pipeclimb/trace_io.hpp"

#include <nlohmann/json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace pipeclimb {

namespace {

constexpr const char* kCsvHeader =
    "t,s,segment,vA,vB,vC,reqA,reqB,reqC,slipA,slipB,slipC,springA,springB,springC";

void append_double(std::string& out, double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    out += buf;
}

double parse_double(const std::string& token, std::size_t line_no) {
    char* end = nullptr;
    const double v = std::strtod(token.c_str(), &end);
    if (token.empty() || end != token.c_str() + token.size()) {
        throw std::runtime_error("trace CSV line " + std::to_string(line_no) +
                                 ": bad number '" + token + "'");
    }
    return v;
}

}  // namespace

std::string trace_to_csv(const Trace& trace) {
    std::string out = kCsvHeader;
    out += '\n';
    for (const auto& sample : trace.samples) {
        append_double(out, sample.time);
        out += ',';
        append_double(out, sample.arc_position);
        out += ',';
        out += std::to_string(sample.segment);
        for (const auto* block : {&sample.commanded, &sample.required, &sample.slip, &sample.spring}) {
            for (double v : *block) {
                out += ',';
                append_double(out, v);
            }
        }
        out += '\n';
    }
    return out;
}

std::string trace_to_jsonl(const Trace& trace) {
    std::string out;
    static const char* kTrackSuffix[3] = {"A", "B", "C"};
    for (const auto& sample : trace.samples) {
        out += "{\"t\":";
        append_double(out, sample.time);
        out += ",\"s\":";
        append_double(out, sample.arc_position);
        out += ",\"segment\":";
        out += std::to_string(sample.segment);
        const std::pair<const char*, const std::array<double, 3>*> blocks[] = {
            {"v", &sample.commanded},
            {"req", &sample.required},
            {"slip", &sample.slip},
            {"spring", &sample.spring},
        };
        for (const auto& [prefix, values] : blocks) {
            for (std::size_t i = 0; i < 3; ++i) {
                out += ",\"";
                out += prefix;
                out += kTrackSuffix[i];
                out += "\":";
                append_double(out, (*values)[i]);
            }
        }
        out += "}\n";
    }
    return out;
}

void export_trace(const Trace& trace, TraceFormat format, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open for writing: " + path.string());
    }
    out << (format == TraceFormat::Csv ? trace_to_csv(trace) : trace_to_jsonl(trace));
    out.flush();
    if (!out) {
        throw std::runtime_error("write failed: " + path.string());
    }
}

Trace import_trace_csv(const std::string& text) {
    Trace trace;
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        if (line_no == 1) {
            if (line != kCsvHeader) {
                throw std::runtime_error("trace CSV: unexpected header");
            }
            continue;
        }
        std::vector<std::string> tokens;
        std::istringstream row(line);
        std::string token;
        while (std::getline(row, token, ',')) tokens.push_back(token);
        if (tokens.size() != 15) {
            throw std::runtime_error("trace CSV line " + std::to_string(line_no) +
                                     ": expected 15 columns, got " + std::to_string(tokens.size()));
        }
        TraceSample sample;
        sample.time = parse_double(tokens[0], line_no);
        sample.arc_position = parse_double(tokens[1], line_no);
        sample.segment = static_cast<std::size_t>(std::strtoull(tokens[2].c_str(), nullptr, 10));
        for (std::size_t i = 0; i < 3; ++i) {
            sample.commanded[i] = parse_double(tokens[3 + i], line_no);
            sample.required[i] = parse_double(tokens[6 + i], line_no);
            sample.slip[i] = parse_double(tokens[9 + i], line_no);
            sample.spring[i] = parse_double(tokens[12 + i], line_no);
        }
        trace.samples.push_back(sample);
    }
    return trace;
}

Trace import_trace_jsonl(const std::string& text) {
    Trace trace;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto j = nlohmann::json::parse(line);
        TraceSample sample;
        sample.time = j.at("t").get<double>();
        sample.arc_position = j.at("s").get<double>();
        sample.segment = j.at("segment").get<std::size_t>();
        static const char* kTrackSuffix[3] = {"A", "B", "C"};
        for (std::size_t i = 0; i < 3; ++i) {
            sample.commanded[i] = j.at(std::string("v") + kTrackSuffix[i]).get<double>();
            sample.required[i] = j.at(std::string("req") + kTrackSuffix[i]).get<double>();
            sample.slip[i] = j.at(std::string("slip") + kTrackSuffix[i]).get<double>();
            sample.spring[i] = j.at(std::string("spring") + kTrackSuffix[i]).get<double>();
        }
        trace.samples.push_back(sample);
    }
    return trace;
}

Trace import_trace(TraceFormat format, const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open for reading: " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return format == TraceFormat::Csv ? import_trace_csv(buffer.str())
                                      : import_trace_jsonl(buffer.str());
}

}  // namespace pipeclimb
