#pragma once

#include <ostream>

#include "betalab/error.hpp"

namespace betalab::cli {

template <class Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const Error& e) {
    err << "error [" << to_string(e.kind()) << "]: " << e.what() << '\n';
    if (e.kind() == ErrorKind::SampleMiss) {
      err << "hint: tabulated generators cannot be evaluated off their "
             "abscissae; use `fit` for sample files\n";
    }
    return kInputError;
  }
}

}  // namespace betalab::cli
