#pragma once

namespace bimclp {

/// Selects between the OpenMP kernel and the serial reference path of the
/// data-parallel operations (grid sampling, coverage).
enum class Execution { Serial, Parallel };

/// Sets the OpenMP worker count used by Execution::Parallel kernels.
/// Values < 1 leave the runtime default in place.
void set_worker_count(int workers);
int worker_count();

}  // namespace bimclp
