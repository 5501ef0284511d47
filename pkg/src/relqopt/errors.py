"""Exception types shared across the toolkit.

Three failure categories: bad configuration (files, unit tags, schema),
inputs outside a formula's domain, and numerical breakdown (non-convergence,
non-finite intermediates).
"""


class ConfigurationError(ValueError):
    """Bad scenario/config input: unknown key, unknown unit tag, bad value."""


class DomainError(ValueError):
    """Input outside the mathematical domain of an operation."""


class NumericFailure(ArithmeticError):
    """Iteration failed to converge or produced non-finite values."""


class EffectError(NumericFailure):
    """A report effect failed to evaluate; carries the effect name."""

    def __init__(self, effect: str, message: str):
        super().__init__(f"effect '{effect}' failed: {message}")
        self.effect = effect
