"""Exception types raised by ballotwalk."""


class OracleScaleError(ValueError):
    """Brute-force enumeration requested beyond its length cap."""


class ValidityError(ValueError):
    """A formula was evaluated outside the range where it holds."""


class PoleError(ValueError):
    """A zeta-type function was evaluated at its pole."""
