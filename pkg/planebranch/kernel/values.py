"""Result values shared across the kernel."""

from dataclasses import dataclass
from typing import Optional, Union


class _Infinite:
    """Marker for a certified infinite colength, valuation or intersection number"""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "Infinite"

    def __str__(self) -> str:
        return "infinite"

    def __reduce__(self):
        return (_Infinite, ())

    def __eq__(self, other) -> bool:
        return isinstance(other, _Infinite)

    def __hash__(self) -> int:
        return hash("infinite")

    def __gt__(self, other) -> bool:
        return not isinstance(other, _Infinite)

    def __ge__(self, other) -> bool:
        return True

    def __lt__(self, other) -> bool:
        return False

    def __le__(self, other) -> bool:
        return isinstance(other, _Infinite)


INFINITE = _Infinite()

Count = Union[int, _Infinite]


def is_infinite(value) -> bool:
    return isinstance(value, _Infinite)


@dataclass(frozen=True)
class MuStability:
    """StableAt(stable_at) when stable_at is set, else UnknownUpTo(bound)"""

    stable_at: Optional[int]
    bound: int

    @property
    def is_stable(self) -> bool:
        return self.stable_at is not None

    def __str__(self) -> str:
        if self.stable_at is not None:
            return f"StableAt({self.stable_at})"
        return f"UnknownUpTo({self.bound})"
