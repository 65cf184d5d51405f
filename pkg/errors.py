"""
CableQSim - Errors

Every failure a compute module can report. The CLI prints `kind` so that the
single error line stays machine-parsable.
"""


class CableSimError(Exception):
    kind = "error"


class DomainError(CableSimError, ValueError):
    kind = "domain"


class ConfigError(CableSimError):
    kind = "config"


class HilbertSpaceTooLarge(CableSimError):
    kind = "hilbert-too-large"


class HamiltonianError(CableSimError):
    kind = "hamiltonian"


class LabelAmbiguityError(CableSimError):
    kind = "label-ambiguity"


class SingularityError(CableSimError):
    kind = "singularity"


class NoCrossingError(CableSimError):
    kind = "no-crossing"


class NoSignChangeError(CableSimError):
    kind = "no-sign-change"


class SingularPulseError(CableSimError):
    kind = "singular-pulse"


class ScheduleError(CableSimError):
    kind = "schedule"


class GateNotFoundError(CableSimError):
    kind = "gate-not-found"


class InfeasibleSearchError(CableSimError):
    kind = "infeasible"


class TraceMismatchError(CableSimError):
    kind = "trace-mismatch"
