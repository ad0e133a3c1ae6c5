class TangleColorError(Exception):
    """
    Raised when a bounded or precondition-checked computation cannot proceed.

    Attributes:
        kind (str): The violated rule, e.g. "OrderOverflow" or "NotConnected".
        message (str): Human readable details, labels are 1-based.
    """

    def __init__(self, kind: str, message: str = "") -> None:
        self.kind = kind
        self.message = message
        super().__init__(f"{kind}: {message}" if message else kind)

    def __reduce__(self):
        return TangleColorError, (self.kind, self.message)
