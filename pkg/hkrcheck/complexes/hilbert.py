#
# Author: Joed Lopes da Silva
#
# This work is licensed under the terms of the MIT license.
# For a copy, see <https://opensource.org/licenses/MIT>.

"""
Bigraded dimension tables, the common output of every formula and
every oracle.

Keys are (cohomological degree, internal degree). Tor_k and HH_k sit in
cohomological degree -k, Ext^q and HH^q in degree +q. Zero entries are
never stored, so two tables compare equal exactly when they agree on
every bidegree of their (common) window.
"""

from typing import Callable, Dict, Iterable, Iterator, List, Mapping, Optional, Tuple

from .modules import hilbert_function

Bidegree = Tuple[int, int]
Window = Tuple[int, int]


def check_window(window: Iterable[int]) -> Window:
    lo, hi = (int(v) for v in window)
    if lo > hi:
        raise ValueError("window [%d, %d] is empty" % (lo, hi))
    return (lo, hi)


class HilbertTable:
    __slots__ = ("_window", "_entries")

    def __init__(self, window: Iterable[int], entries: Optional[Mapping[Bidegree, int]] = None) -> None:
        self._window: Window = check_window(window)
        self._entries: Dict[Bidegree, int] = dict()
        lo, hi = self._window
        for (k, t), value in (entries or {}).items():
            if not isinstance(value, int) or value < 0:
                raise ValueError("dimension at (%d, %d) must be a non-negative integer" % (k, t))
            if not lo <= t <= hi:
                raise ValueError("internal degree %d outside window [%d, %d]" % (t, lo, hi))
            if value:
                self._entries[(int(k), int(t))] = value

    @classmethod
    def tabulate(
        cls,
        window: Iterable[int],
        degrees: Iterable[int],
        function: Callable[[int, int], int],
    ) -> "HilbertTable":
        """Fill a table from function(k, t) over the given cohomological degrees."""
        window = check_window(window)
        entries = {
            (k, t): function(k, t) for k in degrees for t in range(window[0], window[1] + 1)
        }
        return cls(window, entries)

    @classmethod
    def polynomial_ring(cls, window: Iterable[int], nvars: int, k: int = 0, shift: int = 0) -> "HilbertTable":
        """Hilbert function of k[x_1..x_nvars](-shift) placed in row k."""
        return cls.tabulate(window, [k], lambda _, t: hilbert_function(nvars, t - shift))

    @property
    def window(self) -> Window:
        return self._window

    @property
    def entries(self) -> Dict[Bidegree, int]:
        return dict(self._entries)

    def get(self, k: int, t: int) -> int:
        return self._entries.get((k, t), 0)

    def degrees(self) -> List[int]:
        """Cohomological degrees with at least one non-zero entry, ascending."""
        return sorted({k for k, _ in self._entries})

    def internal_degrees(self) -> range:
        return range(self._window[0], self._window[1] + 1)

    def row(self, k: int) -> List[int]:
        return [self.get(k, t) for t in self.internal_degrees()]

    def is_zero(self) -> bool:
        return not self._entries

    def items(self) -> Iterator[Tuple[Bidegree, int]]:
        for key in sorted(self._entries):
            yield key, self._entries[key]

    def total(self, k: int) -> int:
        return sum(v for (kk, _), v in self._entries.items() if kk == k)

    # arithmetic

    def _check_window(self, other: "HilbertTable") -> None:
        if other._window != self._window:
            raise ValueError("tables live on different windows %s vs %s" % (self._window, other._window))

    def __add__(self, other: "HilbertTable") -> "HilbertTable":
        self._check_window(other)
        entries = dict(self._entries)
        for key, value in other._entries.items():
            entries[key] = entries.get(key, 0) + value
        return HilbertTable(self._window, entries)

    def shift(self, cohomological: int = 0, internal: int = 0) -> "HilbertTable":
        """Move every entry (k, t) to (k + cohomological, t + internal); the window moves too."""
        lo, hi = self._window
        return HilbertTable(
            (lo + internal, hi + internal),
            {(k + cohomological, t + internal): v for (k, t), v in self._entries.items()},
        )

    def restrict(self, window: Iterable[int]) -> "HilbertTable":
        lo, hi = check_window(window)
        return HilbertTable(
            (lo, hi), {(k, t): v for (k, t), v in self._entries.items() if lo <= t <= hi}
        )

    def diff(self, other: "HilbertTable") -> Dict[Bidegree, Tuple[int, int]]:
        """Bidegrees where the tables disagree, mapped to (self, other)."""
        self._check_window(other)
        keys = set(self._entries) | set(other._entries)
        return {
            key: (self._entries.get(key, 0), other._entries.get(key, 0))
            for key in sorted(keys)
            if self._entries.get(key, 0) != other._entries.get(key, 0)
        }

    def euler_characteristic(self) -> List[int]:
        """sum_k (-1)^k dim at each internal degree of the window."""
        return [
            sum(v * (-1 if k % 2 else 1) for (k, tt), v in self._entries.items() if tt == t)
            for t in self.internal_degrees()
        ]

    # protocol

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HilbertTable):
            return NotImplemented
        return self._window == other._window and self._entries == other._entries

    def __hash__(self) -> int:
        return hash((self._window, frozenset(self._entries.items())))

    def __repr__(self) -> str:
        body = ", ".join("(%d,%d):%d" % (k, t, v) for (k, t), v in self.items())
        return "HilbertTable(window=[%d,%d], {%s})" % (self._window + (body,))


def sum_tables(window: Iterable[int], tables: Iterable[HilbertTable]) -> HilbertTable:
    total = HilbertTable(window)
    for table in tables:
        total = total + table
    return total
