"""Exception hierarchy shared across the package.

Every domain error derives from :class:`EllabError` so callers (and the
command line front end) can catch one base class.  Errors that signal bad
user input additionally derive from the matching builtin.
"""


class EllabError(Exception):
    """Base class for all errors raised by this package."""


class MalformedInput(EllabError, ValueError):
    """Configuration or diagram text that cannot be parsed."""


class SumNot12(EllabError, ValueError):
    """Fiber indices do not sum to 12."""


class TooFewFibers(EllabError, ValueError):
    """Fewer than four singular fibers."""


class NotPrime(EllabError, ValueError):
    """An argument that must be prime is not."""


class UnsupportedPrime(EllabError, ValueError):
    """Torsion queries are restricted to p in {2, 3, 5}."""


class ConflictingLabels(EllabError, ValueError):
    """Point labels of two factors cannot be merged consistently."""


class SideMismatch(EllabError, ValueError):
    """An isogeny move does not match the chosen factor of a product."""


class NotInCatalog(EllabError, LookupError):
    """The configuration lies outside the embedded classification data."""


class MissingFlag(EllabError, ValueError):
    """Node/double-tangent flags do not cover exactly the I2 x I0 points."""


class MissingNodeCount(EllabError, ValueError):
    """The double-point count of the fixed curve is needed but unknown."""


class HypothesesNotMet(EllabError, ValueError):
    """A diagram fails the certification hypotheses."""


class TorsionContradiction(EllabError):
    """Internal soundness failure: a Yes and a No argument fired together."""
