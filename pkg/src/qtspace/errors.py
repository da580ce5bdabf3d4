"""Exception hierarchy shared by all modules.

Every error carries a short machine-readable ``code`` which the CLI copies
into its JSON error object.
"""


class QTSpaceError(ValueError):
    code = "error"

    def __init__(self, message, path=None):
        super().__init__(message)
        self.message = message
        self.path = path


class TopologyError(QTSpaceError):
    code = "topology"


class OpenFamilyTooLarge(TopologyError):
    code = "open_family_too_large"


class GraphError(QTSpaceError):
    code = "graph"


class LinkError(QTSpaceError):
    code = "link"


class NotOpenError(QTSpaceError):
    code = "not_open"


class NetworkError(QTSpaceError):
    code = "network"


class NotAProjector(NetworkError):
    code = "not_a_projector"


class QuantumError(QTSpaceError):
    code = "quantum"


class ImpossibleOutcome(QuantumError):
    code = "impossible_outcome"


class SchemaError(QTSpaceError):
    code = "schema"
