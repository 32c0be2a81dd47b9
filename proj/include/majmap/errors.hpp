#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace majmap
{

/*! \brief Graph-shape violation: cycles, dangling bindings, arity mismatch. */
class structural_error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/*! \brief Malformed netlist text. Carries the 1-based line number (0 if unknown). */
class parse_error : public std::runtime_error
{
public:
  parse_error( std::size_t line, const std::string& msg )
      : std::runtime_error( line ? "line " + std::to_string( line ) + ": " + msg : msg ), line_( line )
  {
  }

  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

/*! \brief Invalid option or cell-library configuration. */
class config_error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/*! \brief Two networks cannot be compared (PI/PO/register name sets differ). */
class interface_error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/*! \brief A caller broke an operation precondition. */
class contract_violation : public std::logic_error
{
public:
  using std::logic_error::logic_error;
};

} // namespace majmap
