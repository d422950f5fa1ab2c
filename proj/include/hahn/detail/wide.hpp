#ifndef HAHN_DETAIL_WIDE_HPP
#define HAHN_DETAIL_WIDE_HPP

// Internal working precisions. Both Hahn evaluation paths lose many digits
// near the ends of the grid (series terms reach 1e21 for N = 30 while the
// value is O(1); the upward recurrence amplifies rounding by a similar
// factor at x = 0 and x = N), so they run in IEEE binary128.

namespace hahn::detail {

__extension__ typedef __float128 Wide;
__extension__ typedef unsigned __int128 WideUInt;

inline Wide wide_abs(Wide v) { return v < 0 ? -v : v; }

}  // namespace hahn::detail

#endif  // HAHN_DETAIL_WIDE_HPP
