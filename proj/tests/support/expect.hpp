#ifndef CMNET_TESTS_EXPECT_HPP
#define CMNET_TESTS_EXPECT_HPP

#include <functional>
#include <optional>

#include "cmnet/error.hpp"

namespace oracle {

// Kind of the cmnet::Error thrown by fn, or nullopt when nothing is thrown.
inline std::optional<cmnet::ErrorKind> kind_of(const std::function<void()>& fn)
{
    try {
        fn();
    } catch (const cmnet::Error& e) {
        return e.kind();
    }
    return std::nullopt;
}

}  // namespace oracle

#endif
