#pragma once

#include "latvar/error.hpp"
#include "latvar/io.hpp"
#include "latvar/lattice.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <string>
#include <vector>

namespace testing_support {

inline std::string fixture(const std::string& name) { return std::string(LATVAR_SOURCE_DIR) + "/fixtures/" + name; }

// The ten-element tree lattice with a singular coordinate point.
inline latvar::Lattice singular10() { return latvar::load_from_ji(fixture("singular10.json"), 1u << 20); }
inline latvar::Lattice singular10_raw() { return latvar::load_from_lattice(fixture("singular10.json"), 1u << 20); }

inline latvar::Lattice boolean(std::size_t n) {
  return latvar::chain_product(std::vector<std::size_t>(n, 2));
}

inline latvar::Lattice chains(std::vector<std::size_t> sizes) { return latvar::chain_product(sizes); }

// Oracle masks of the library's elements, bits in base() index order.
inline std::vector<oracle::Mask> masks(const latvar::Lattice& l) {
  std::vector<oracle::Mask> out;
  for (const auto& ideal : l.ideals()) out.push_back(ideal.members.to_ulong());
  return out;
}

#define EXPECT_ERROR_CODE(stmt, expected)                                   \
  do {                                                                      \
    try {                                                                   \
      stmt;                                                                 \
      ADD_FAILURE() << "no exception from " #stmt;                          \
    } catch (const latvar::Error& e) {                                      \
      EXPECT_EQ(e.code(), expected) << e.what();                            \
    }                                                                       \
  } while (0)

}  // namespace testing_support
