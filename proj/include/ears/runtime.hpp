#pragma once

#include <cstddef>
#include <functional>

namespace ears {

/// Upper bound on worker threads used by the pairwise checkers. Defaults to
/// one worker; the CLI raises it from EARS_KIT_THREADS. Results are
/// deterministic for any cap because chunk results merge in index order.
size_t thread_cap();
void set_thread_cap(size_t n);

/// Splits [0, n) into contiguous chunks and runs `body(chunk_index, begin,
/// end)` on up to thread_cap() workers. Bodies must only touch their own
/// chunk's state.
void run_chunked(size_t n, const std::function<void(size_t, size_t, size_t)>& body);

} // namespace ears
