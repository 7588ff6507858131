#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace gammafuzz {

/// Splits [0, n) into at most `threads` contiguous chunks and runs
/// body(begin, end, chunk) for each, one thread per chunk. Chunk c always
/// covers lower indices than chunk c+1, so callers can merge per-chunk
/// results in chunk order and get the serial answer.
template <class Body>
std::size_t parallel_chunks(std::size_t n, unsigned threads, Body&& body) {
    const std::size_t chunks = std::max<std::size_t>(1, std::min<std::size_t>(threads, n));
    if (chunks == 1) {
        body(std::size_t{0}, n, std::size_t{0});
        return 1;
    }
    const std::size_t base = n / chunks;
    const std::size_t extra = n % chunks;
    std::vector<std::jthread> workers;
    workers.reserve(chunks - 1);
    std::size_t begin = 0;
    std::size_t first_end = 0;
    for (std::size_t c = 0; c < chunks; ++c) {
        const std::size_t end = begin + base + (c < extra ? 1 : 0);
        if (c == 0) {
            first_end = end;
        } else {
            workers.emplace_back([&body, begin, end, c] { body(begin, end, c); });
        }
        begin = end;
    }
    body(std::size_t{0}, first_end, std::size_t{0});
    return chunks;
}

} // namespace gammafuzz
