"""Shared enums for counting schemes and diagonal handling."""

import enum

__all__ = ["Scheme", "DiagonalPolicy"]


class Scheme(enum.Enum):
    """How a publication's co-occurrences are weighted.

    ``FULL`` counts every co-occurrence as 1. The fractional schemes divide
    the per-publication numerator ``a_ik * a_jk`` by a function of the
    publication size n:

    ``EQ1``  n - 1 (each entity has n - 1 partners)
    ``EQ2``  n ** 2 (product of the two fractional credits)
    ``EQ3``  n * (n - 1) / 2 (number of unordered pairs)
    """

    FULL = "full"
    EQ1 = "eq1"
    EQ2 = "eq2"
    EQ3 = "eq3"

    @classmethod
    def parse(cls, text: str) -> "Scheme":
        try:
            return cls(text.strip().lower())
        except ValueError:
            names = ", ".join(s.value for s in cls)
            raise ValueError(f"unknown counting scheme {text!r} (choose from {names})") from None


class DiagonalPolicy(enum.Enum):
    INCLUDE = "include"
    EXCLUDE = "exclude"
