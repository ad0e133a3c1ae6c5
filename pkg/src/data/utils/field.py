from typing import List, Union


def parse_count(token: str) -> Union[int, None]:
    """
    Parse a positive integer such as an order or a degree.

    Args:
        token (str): The token.

    Returns:
        Union[int, None]: The value or None if it cannot be parsed.
    """
    try:
        value = int(token)
    except ValueError:
        return None
    if value < 1:
        return None
    return value


def parse_labels(tokens: List[str], n: int) -> Union[List[int], None]:
    """
    Parse n 1-based labels into 0-based indices.

    Args:
        tokens (List[str]): The tokens.
        n (int): The expected count and the largest label.

    Returns:
        Union[List[int], None]: The indices or None if a token is bad.
    """
    if len(tokens) != n:
        return None
    try:
        labels = [int(t) - 1 for t in tokens]
    except ValueError:
        return None
    return labels


def parse_cycles(text: str, degree: int) -> Union[List[int], None]:
    """
    Parse cycle notation such as "(1 2)(3 4 5)" into an image list.

    Returns:
        Union[List[int], None]: 0-based images or None if malformed.
    """
    images = list(range(degree))
    text = text.replace(",", " ").strip()
    if not text.startswith("("):
        return None
    seen = set()
    for chunk in text.split("(")[1:]:
        if not chunk.strip().endswith(")"):
            return None
        try:
            cycle = [int(t) - 1 for t in chunk.strip()[:-1].split()]
        except ValueError:
            return None
        if any(x < 0 or x >= degree or x in seen for x in cycle):
            return None
        seen.update(cycle)
        for a, b in zip(cycle, cycle[1:] + cycle[:1]):
            images[a] = b
    return images


def parse_permutation(text: str, degree: int) -> Union[List[int], None]:
    """Accept either cycle notation or a full list of 1-based images."""
    if text.strip().startswith("("):
        return parse_cycles(text, degree)
    return parse_labels(text.replace(",", " ").split(), degree)


def parse_symmetries(text: str) -> Union[List[str], None]:
    """Parse a csv subset of m, r, rm."""
    if text.strip() in ("", "-"):
        return []
    items = [t.strip() for t in text.split(",")]
    if any(t not in ("m", "r", "rm") for t in items):
        return None
    return items


def format_labels(indices) -> str:
    return " ".join(str(int(i) + 1) for i in indices)
