"""Exceptions raised while relabeling and reconstructing."""


class DisconnectedInput(ValueError):
    """Matrix relabeling stalled because the input graph is not connected."""


class NotALineGraph(ValueError):
    """No root graph reproduces the input.

    ``component`` is the index of the failing connected component and
    ``stage`` names the step that rejected it (``"initialization"``,
    ``"construction"`` or ``"verification"``).
    """

    def __init__(self, message: str, component: int | None = None, stage: str | None = None):
        super().__init__(message)
        self.component = component
        self.stage = stage


class MalformedInput(NotALineGraph):
    """The endnode table still had undetermined entries after construction."""
