#pragma once

#include <set>
#include <string>

// Call-coverage registry: every public operation of the measure, functional,
// ellipsoid and position modules registers its name on entry. The harness
// uses it to assert that the default suite exercises the whole surface.
namespace convexlab::coverage {

void touch(const char* op);
std::set<std::string> touched();
void reset();

}  // namespace convexlab::coverage
