from dataclasses import dataclass

from .errors import DomainError


@dataclass(frozen=True)
class SeriesConfig:
    """Truncation control for every series in the package.

    A term (or anti-diagonal, for double series) is considered negligible
    when it is below both ``abs_tol`` and ``rel_tol * |partial sum|``.
    """

    rel_tol: float = 1e-16
    abs_tol: float = 1e-16
    max_terms: int = 20000

    def __post_init__(self):
        if not (self.rel_tol > 0 and self.abs_tol > 0):
            raise DomainError("tolerances must be positive")
        if self.max_terms < 1:
            raise DomainError("max_terms must be at least 1")

    def negligible(self, term, total):
        term = abs(term)
        return term < self.abs_tol and term < self.rel_tol * abs(total)


DEFAULT_CONFIG = SeriesConfig()
