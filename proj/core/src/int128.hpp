#ifndef CMNET_SRC_INT128_HPP
#define CMNET_SRC_INT128_HPP

namespace cmnet {
__extension__ typedef __int128 i128;
}

#endif
