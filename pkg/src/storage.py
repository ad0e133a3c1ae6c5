from typing import Awaitable, Callable, Dict, Union

Handler = Callable[..., Awaitable]

registered_handlers: Dict[str, Handler] = {}


def register_handler(key: str):
    """
    Register a command handler under a command key such as "quandle-check".

    A key can only be taken once; registering it again is a wiring mistake
    and fails at import time.

    Args:
        key (str): The command key, "<group>-<subcommand>" or a bare command.

    Returns:
        function: The decorator function.

    Raises:
        KeyError: If the key already has a handler.
    """

    def decorator(func: Handler) -> Handler:
        if key in registered_handlers:
            raise KeyError(f"handler for {key!r} registered twice")
        registered_handlers[key] = func
        return func

    return decorator


def lookup_handler(key: str) -> Union[Handler, None]:
    return registered_handlers.get(key)
