#pragma once

namespace seqrank {

inline constexpr const char* version = "0.1.0";

}  // namespace seqrank
