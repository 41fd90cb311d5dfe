#pragma once

#include <stdexcept>

namespace sl2rep {

/// A computed quantity that must be integral (an indicator, a fixed-point
/// dimension) was not, or two independent routes disagreed. Always a bug.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace sl2rep
