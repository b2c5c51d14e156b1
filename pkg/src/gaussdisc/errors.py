"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the physically or mathematically valid range."""


class NumericalError(RuntimeError):
    """A numerical routine (eigensolver, minimizer, quadrature) failed to converge."""


class ConvergenceError(RuntimeError):
    """A truncated Fock-space construction lost too much trace to be trusted."""


class ReportFailure(RuntimeError):
    """A verification scan did not confirm the property it was asked to check."""
