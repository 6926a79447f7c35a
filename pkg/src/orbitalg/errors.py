"""Exception types shared across the package.

Two failure families matter to callers: bad input (files, parameters,
unsupported sizes) and internal inconsistency (a structural invariant that
is supposed to be guaranteed by construction was observed to fail).  The CLI
maps the former to exit code 2 and the latter to exit code 3.
"""


class InputError(ValueError):
    """The caller supplied something unusable (file, parameter, size)."""


class GroupFormatError(InputError):
    """A group file or generator string could not be parsed."""


class GraphFormatError(InputError):
    """A graph file could not be parsed."""


class ConsistencyError(RuntimeError):
    """An invariant that must hold by construction was violated.

    Seeing this means a bug somewhere upstream, not bad user input; callers
    should abort rather than continue with corrupt structures.
    """
