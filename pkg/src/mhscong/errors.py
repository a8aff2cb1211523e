"""Exception types shared across the package."""


class TooSmall(ValueError):
    """Modulus below the smallest supported prime (3)."""


class CompositeModulus(ValueError):
    """Modulus failed the primality certificate."""


class ZeroDivisor(ZeroDivisionError):
    """Inversion attempted on a multiple of p."""


class RangeError(ValueError):
    """Index or depth outside the range a table or polynomial supports."""


class HypothesisUnmet(ValueError):
    """A check was invoked outside the hypothesis of the statement it tests."""


class BudgetExceeded(RuntimeError):
    """Exact enumeration would exceed the configured work budget."""


class DenominatorDivisible(ZeroDivisionError):
    """Exact rational cannot be reduced mod p: p divides the denominator."""


class ConfigError(ValueError):
    """Invalid sweep configuration."""


class UnknownCheckId(ConfigError):
    """Check id not in the published vocabulary."""
