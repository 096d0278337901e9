"""exceptions raised across the package

The command line maps these onto exit codes, so every failure a user can
trigger with bad input or an unlucky sample should be one of these.
"""


class AbmEviError(Exception):
    """base for every error raised on purpose by this package"""


class InvalidArgument(AbmEviError, ValueError):
    """an argument is outside the domain of the operation"""


class ConfigError(InvalidArgument):
    """an experiment configuration failed validation

    Attributes
    ----------
    field: str | list[str]
        name of the offending field, or the list of unknown keys
    """

    def __init__(self, message, *, field=None):
        super().__init__(message)
        self.field = field


class FitError(AbmEviError):
    """the weighted Frechet likelihood could not be maximized"""


class NoUniqueMaximizer(FitError):
    """all weighted observations share one value so Psi has no positive root"""


class BracketingFailed(FitError):
    """no sign change of Psi was found inside the allowed search range

    Attributes
    ----------
    lower, upper: float
        ends of the widest bracket tried
    psi_lower, psi_upper: float
        value of Psi at those ends
    """

    def __init__(self, lower, upper, psi_lower, psi_upper):
        super().__init__(
            f'Psi does not change sign on [{lower:g}, {upper:g}]'
            f' (Psi = {psi_lower:g}, {psi_upper:g})'
        )
        self.lower = lower
        self.upper = upper
        self.psi_lower = psi_lower
        self.psi_upper = psi_upper


class NoKestenIndex(AbmEviError):
    """E(l1 eps^2 + l2)^kappa = 1 has no root below the moment limit nu/2"""
