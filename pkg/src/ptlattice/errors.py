"""Exception types shared across the package."""

from __future__ import annotations


class RegimeError(ValueError):
    """Gain/loss strength lies outside the regime an operation supports."""


class BlowupError(RuntimeError):
    """Time integration produced non-finite amplitudes."""

    def __init__(self, time: float, message: str | None = None):
        self.time = float(time)
        super().__init__(
            message or f"integration produced non-finite amplitudes at t = {self.time:.6g}"
        )


class FitError(ValueError):
    """An exponential-rate fit window is unusable."""
