"""Integer grid parsing for CLI flags."""


def parse_int_grid(text: str) -> list[int]:
    """Parse ``a:b[:step]`` (inclusive of b), comma lists, or a mix of both.

    Examples:
        ``"1:5"`` -> [1, 2, 3, 4, 5]; ``"100:400:100,1600"`` -> [100, 200, 300, 400, 1600]

    Raises:
        ValueError: On malformed items, a non-positive step or an empty grid
    """
    values: list[int] = []
    for item in text.split(","):
        item = item.strip()
        if not item:
            continue
        parts = item.split(":")
        try:
            numbers = [int(part) for part in parts]
        except ValueError:
            raise ValueError(f"malformed grid item {item!r}") from None
        if len(numbers) == 1:
            values.append(numbers[0])
        elif len(numbers) in (2, 3):
            start, stop = numbers[0], numbers[1]
            step = numbers[2] if len(numbers) == 3 else 1
            if step <= 0:
                raise ValueError(f"step must be positive in {item!r}")
            if stop < start:
                raise ValueError(f"empty range {item!r}")
            values.extend(range(start, stop + 1, step))
        else:
            raise ValueError(f"malformed grid item {item!r}")
    if not values:
        raise ValueError(f"grid {text!r} contains no values")
    return values
