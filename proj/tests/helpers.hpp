#pragma once

#include "oracle.hpp"
#include "sccd/catalog.hpp"
#include "sccd/design.hpp"

inline oracle::Blocks raw(const sccd::Design& d) { return d.blocks(); }

inline const sccd::Design& cat(const char* name) { return sccd::catalog_get(name).design; }

inline std::vector<sccd::Label> L(std::initializer_list<sccd::Label> xs) { return xs; }
