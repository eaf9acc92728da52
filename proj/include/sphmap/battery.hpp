#pragma once

/*
 * The verify-paper battery: one entry per reproducible identity, each line
 * carrying the expected value, the computed value and a PASS/FAIL verdict.
 * Zero claims are additionally refereed numerically on seeded sphere samples.
 */

#include <string>
#include <vector>

#include "sphmap/fields.hpp"

namespace sphmap {

struct CheckResult {
    std::string id;
    std::string expected;
    std::string got;
    bool pass = false;
    std::string note;
};

// filter: substring match on the check id; empty runs everything.
std::vector<CheckResult> run_battery(const std::string& filter = "");

std::string format_check(const CheckResult& r);

// Independent composition-route referee for product-domain maps, built from
// the blockwise sphere Laplacian; used to cross-check the closed forms.
PolyMap product_reference_tension(const PolyMap& F, const SphereMapMeta& meta);
PolyMap product_reference_bitension(const PolyMap& F, const SphereMapMeta& meta);

}  // namespace sphmap
