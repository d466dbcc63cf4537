"""Exception types raised across the package."""


class GraphError(ValueError):
    """Malformed or unsupported plane graph input."""


class NonPlanarRotation(GraphError):
    """The rotation system does not satisfy Euler's formula."""


class Disconnected(GraphError):
    """The darts do not form a connected graph."""


class WouldDisconnect(GraphError):
    """A deletion would leave a disconnected (or empty) graph."""


class MissingElement(GraphError, KeyError):
    """A vertex, edge or face id does not exist in the graph."""


class MissingNode(KeyError):
    """A coloring is not total on the incidence graph's nodes."""


class PreconditionViolated(ValueError):
    """Input falls outside the hypotheses of the degree-choosability lemma."""


class BoundViolated(ValueError):
    """A list is shorter than the lower bound the strip sweep relies on."""


class ListTooShort(ValueError):
    """Some element has fewer than five colors."""


class NotASubdivision(ValueError):
    pass


class BaseColoringInvalid(ValueError):
    pass


class NotASubgraphOfWheel(ValueError):
    pass


class CaseMismatch(ValueError):
    """The supplied subgraph case does not describe the graph."""
