"""Exception types shared across the package."""


class FusionkitError(Exception):
    """Base class for all errors raised by fusionkit."""


class InvalidPermutation(FusionkitError):
    pass


class ClosureTooLarge(FusionkitError):
    pass


class TooLarge(FusionkitError):
    pass


class NotASubgroup(FusionkitError):
    pass


class NotAPGroup(FusionkitError):
    pass


class NotFullyNormalized(FusionkitError):
    pass


class BadObjectSet(FusionkitError):
    pass


class NotATransporterSystem(FusionkitError):
    pass


class NoSuchRestriction(FusionkitError):
    pass


class NoSuchExtension(FusionkitError):
    pass


class NotACocycle(FusionkitError):
    pass


class SearchSpaceTooLarge(FusionkitError):
    pass
