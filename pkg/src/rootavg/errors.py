"""Exception types raised across the package."""


class InvalidArgument(ValueError):
    pass


class SingularSpecialization(ValueError):
    """The specialization F_s(t) is singular (t**2 == s)."""


class UnsupportedPrime(ValueError):
    """Pointwise local root numbers are only available for p >= 5."""


class ContractViolation(RuntimeError):
    """An integrand evaluator gave inconsistent values on nested classes."""


class ResourceLimit(ValueError):
    pass
