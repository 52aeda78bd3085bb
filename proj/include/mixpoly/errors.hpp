#pragma once

#include <stdexcept>
#include <string>

namespace mixpoly
{

/// Malformed truth-table or polynomial text.
class parse_error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

} // namespace mixpoly
