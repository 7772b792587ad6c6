"""Exception hierarchy shared by every module and the CLI exit-code map."""


class CycleWeightsError(Exception):
    """Base class for all toolkit errors."""


class UsageError(CycleWeightsError):
    """Invalid arguments, malformed input, or an out-of-range parameter.

    Maps to CLI exit code 2.
    """


class DegenerateError(CycleWeightsError):
    """Input is structurally fine but geometrically degenerate for the
    requested operation (e.g. all points coincident where a ratio is
    needed).

    Maps to CLI exit code 3.
    """
