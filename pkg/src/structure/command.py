from typing import List


class Command:
    """
    Represents one CLI subcommand invocation on its way through the handlers.

    Attributes:
        name (str): The registered command key, e.g. "quandle-check".
        params (dict): Parsed flags and arguments.
        valid (bool, optional): False once a handler rejected the command. Defaults to True.
        error (str, optional): The one-line diagnostic when invalid. Defaults to "".
        output (list[str], optional): Lines to print on success. Defaults to [].
    """

    def __init__(
        self,
        name: str,
        params: dict,
        valid: bool = True,
        error: str = "",
        output: List[str] = None,
    ) -> None:
        self.name = name
        self.params = params
        self.valid = valid
        self.error = error
        self.output = [] if output is None else output
