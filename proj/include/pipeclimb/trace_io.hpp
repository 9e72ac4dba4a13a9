#pragma once

#include "pipeclimb/traversal.hpp"

#include <filesystem>
#include <string>

namespace pipeclimb {

enum class TraceFormat { Csv, JsonLines };

// CSV column order is fixed:
//   t,s,segment,vA,vB,vC,reqA,reqB,reqC,slipA,slipB,slipC,springA,springB,springC
// Floats are written with full round-trip precision, so identical traces
// produce byte-identical files. JSON lines mirror the same field names.

std::string trace_to_csv(const Trace& trace);
std::string trace_to_jsonl(const Trace& trace);

/// Writes the trace in the requested format; I/O failures surface as
/// std::runtime_error naming the path.
void export_trace(const Trace& trace, TraceFormat format, const std::filesystem::path& path);

Trace import_trace_csv(const std::string& text);
Trace import_trace_jsonl(const std::string& text);
Trace import_trace(TraceFormat format, const std::filesystem::path& path);

}  // namespace pipeclimb
