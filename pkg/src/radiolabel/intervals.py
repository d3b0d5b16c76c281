"""Sorted disjoint sets of closed integer intervals."""

from collections.abc import Iterable, Iterator

from sortedcontainers import SortedDict


class IntervalSet:
    """A set of integers stored as sorted, disjoint, non-adjacent intervals.

    Intervals are closed on both ends. Adding an interval that overlaps or
    touches existing ones merges them, so every stored interval is separated
    from its neighbours by at least one missing integer.
    """

    def __init__(self, intervals: Iterable[tuple[int, int]] = ()) -> None:
        self._spans: SortedDict = SortedDict()
        for lo, hi in intervals:
            self.add(lo, hi)

    def add(self, lo: int, hi: int) -> None:
        """Add every integer in ``[lo, hi]``; empty ranges are ignored."""
        if lo > hi:
            return
        keys = self._spans.keys()
        idx = self._spans.bisect_right(lo) - 1
        if idx >= 0 and self._spans[keys[idx]] >= lo - 1:
            start = keys[idx]
            lo = start
            hi = max(hi, self._spans.pop(start))
        else:
            idx += 1
        while idx < len(keys) and keys[idx] <= hi + 1:
            hi = max(hi, self._spans.pop(keys[idx]))
        self._spans[lo] = hi

    def __contains__(self, value: object) -> bool:
        if not isinstance(value, int):
            return False
        idx = self._spans.bisect_right(value) - 1
        if idx < 0:
            return False
        return bool(self._spans.peekitem(idx)[1] >= value)

    def first_free(self, at_least: int) -> int:
        """Return the smallest integer ``>= at_least`` not in the set."""
        idx = self._spans.bisect_right(at_least) - 1
        if idx >= 0:
            end = self._spans.peekitem(idx)[1]
            if end >= at_least:
                return int(end) + 1
        return at_least

    def intervals(self) -> list[tuple[int, int]]:
        """Return the stored intervals in increasing order."""
        return [(int(lo), int(hi)) for lo, hi in self._spans.items()]

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.intervals())

    def __len__(self) -> int:
        """Number of integers covered."""
        return sum(hi - lo + 1 for lo, hi in self._spans.items())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntervalSet):
            return NotImplemented
        return self.intervals() == other.intervals()

    def __repr__(self) -> str:
        inner = ", ".join(f"[{lo}, {hi}]" for lo, hi in self._spans.items())
        return f"IntervalSet({inner})"
