#pragma once

namespace lsl {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kReportSchema = "levelset-lab/1";
inline constexpr const char* kManifestSchema = "levelset-lab/manifest/1";
inline constexpr const char* kRngName = "philox4x32-10/1";

}  // namespace lsl
