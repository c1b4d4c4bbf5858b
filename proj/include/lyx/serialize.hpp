#pragma once

#include <iosfwd>
#include <memory>

#include "lyx/applications.hpp"

namespace lyx {

// Versioned little-endian index file: magic "LYXIDX1", build options,
// text symbols, and the suffix/LCP tables for both text directions.
// Range-extreme structures and on-demand extenders are rebuilt on load.
void save_index(const Engine& engine, std::ostream& out);
std::unique_ptr<Engine> load_index(std::istream& in);

} // namespace lyx
