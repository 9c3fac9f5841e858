"""Exact integer helpers with 64-bit overflow trapping.

Python integers never wrap, so the 64-bit contract is enforced by explicit
bound checks at the points where products or chain values can grow.
"""

INT64_MAX = 2**63 - 1


class RangeError(OverflowError):
    """A value left the signed 64-bit range the algorithms are specified for."""


def checked(value: int, what: str = "value") -> int:
    if value > INT64_MAX or value < -INT64_MAX - 1:
        raise RangeError(f"{what} = {value} exceeds the signed 64-bit range")
    return value


def ceil_div(a: int, b: int) -> int:
    """ceil(a / b) for a >= 0, b > 0, without touching floats."""
    if b <= 0 or a < 0:
        raise ValueError(f"ceil_div needs a >= 0 and b > 0, got {a}, {b}")
    return (a + b - 1) // b


def require_int(value, name: str, minimum: int) -> int:
    # bool is an int subclass; reject it so True never sneaks in as 1
    if isinstance(value, bool) or not isinstance(value, int):
        raise TypeError(f"{name} must be an int, got {type(value).__name__}")
    if value < minimum:
        raise ValueError(f"{name} must be >= {minimum}, got {value}")
    return value
