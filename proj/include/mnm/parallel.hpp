#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace mnm {

/// Runs body(chunk_index, begin, end) over [0, count) split into `workers`
/// contiguous chunks. Results must be written to per-chunk storage by the
/// caller; merging happens after all threads join, so output order never
/// depends on scheduling. The first exception thrown by any chunk is
/// rethrown on the calling thread.
template <class Body>
void parallel_chunks(std::size_t count, std::size_t workers, Body&& body) {
	workers = std::max<std::size_t>(1, std::min(workers, count == 0 ? 1 : count));
	if (workers == 1) {
		body(std::size_t{0}, std::size_t{0}, count);
		return;
	}
	std::vector<std::thread> threads;
	std::vector<std::exception_ptr> errors(workers);
	const std::size_t step = (count + workers - 1) / workers;
	for (std::size_t w = 0; w < workers; ++w) {
		const std::size_t lo = std::min(count, w * step), hi = std::min(count, lo + step);
		threads.emplace_back([&, w, lo, hi] {
			try {
				body(w, lo, hi);
			} catch (...) {
				errors[w] = std::current_exception();
			}
		});
	}
	for (auto& t : threads)
		t.join();
	for (auto& e : errors)
		if (e)
			std::rethrow_exception(e);
}

} // namespace mnm
