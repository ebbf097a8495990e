#pragma once

namespace troprank {

/// Selects the OpenMP kernel or its serial reference twin. Both produce identical results.
enum class Execution { serial, parallel };

}  // namespace troprank
