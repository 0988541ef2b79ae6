"""A weight-preserving bijection between two-color partitions and
partitions counted by their alternating sum.

The forward map runs through four reversible steps: pad the two colors to
a common length, add a staircase so both sequences become strictly
decreasing, assemble the pair into a Young diagram (a diagonal of cells
with the first sequence as arms and the second as legs), decompose the
diagram's 2-modular filling into hooks cornered on the diagonal, and
finally subtract a staircase from the interleaved hook counts.  Every
step is exposed on its own so that each can be tested and inverted
independently; the composites are `two_color_to_schmidt` and
`schmidt_to_two_color`.
"""

from __future__ import annotations

from dataclasses import dataclass

from .partitions import Parts, TwoColorPartition, as_partition, conjugate


class NotInImageError(ValueError):
    """An inverse step received a value outside the image of its forward step."""


def _check_counts(name: str, seq: tuple[int, ...], strictly: bool) -> None:
    if len(seq) < 1:
        raise ValueError(f"{name} must be nonempty")
    if any(x < 0 for x in seq):
        raise ValueError(f"{name} entries must be nonnegative: {seq!r}")
    for a, b in zip(seq, seq[1:]):
        if strictly and a <= b:
            raise ValueError(f"{name} must be strictly decreasing: {seq!r}")
        if not strictly and a < b:
            raise ValueError(f"{name} must be weakly decreasing: {seq!r}")


@dataclass(frozen=True)
class PaddedPair:
    """Red and green part sequences padded with zeros to a common length."""

    red: tuple[int, ...]
    green: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "red", tuple(self.red))
        object.__setattr__(self, "green", tuple(self.green))
        if len(self.red) != len(self.green):
            raise ValueError("padded sequences must have equal length")
        _check_counts("padded red", self.red, strictly=False)
        _check_counts("padded green", self.green, strictly=False)
        if self.red[-1] < 1 and self.green[-1] < 1:
            raise ValueError("at least one color must be zero-free")

    @property
    def m(self) -> int:
        return len(self.red)


@dataclass(frozen=True)
class DistinctPair:
    """Strictly decreasing arm and leg lengths for a diagonal of cells."""

    arms: tuple[int, ...]
    legs: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "arms", tuple(self.arms))
        object.__setattr__(self, "legs", tuple(self.legs))
        if len(self.arms) != len(self.legs):
            raise ValueError("arm and leg sequences must have equal length")
        _check_counts("arms", self.arms, strictly=True)
        _check_counts("legs", self.legs, strictly=True)

    @property
    def m(self) -> int:
        return len(self.arms)


def pad_colors(two_color: TwoColorPartition) -> PaddedPair:
    """Extend the shorter color with zeros to length max(r, l)."""
    m = max(two_color.num_red, two_color.num_green)
    if m == 0:
        raise ValueError("cannot pad the empty two-color partition")
    red = two_color.red + (0,) * (m - two_color.num_red)
    green = two_color.green + (0,) * (m - two_color.num_green)
    return PaddedPair(red, green)


def add_staircase(padded: PaddedPair) -> DistinctPair:
    """Add m-1, m-2, ..., 1, 0 to both sequences, forcing distinct parts."""
    m = padded.m
    arms = tuple(x + (m - 1 - j) for j, x in enumerate(padded.red))
    legs = tuple(x + (m - 1 - j) for j, x in enumerate(padded.green))
    return DistinctPair(arms, legs)


def remove_staircase(pair: DistinctPair) -> tuple[TwoColorPartition, str]:
    """Invert `add_staircase` followed by the zero padding.

    Returns the recovered two-color partition together with the case tag
    "r<=l" or "r>l".  Raises NotInImageError when subtracting the
    staircase does not leave zero-padded partitions whose longer color has
    exactly m parts.
    """
    m = pair.m
    red_padded = tuple(x - (m - 1 - j) for j, x in enumerate(pair.arms))
    green_padded = tuple(x - (m - 1 - j) for j, x in enumerate(pair.legs))
    for seq in (red_padded, green_padded):
        if any(x < 0 for x in seq):
            raise NotInImageError(f"staircase removal went negative: {pair!r}")
        if any(a < b for a, b in zip(seq, seq[1:])):
            raise NotInImageError(f"staircase removal broke monotonicity: {pair!r}")
    red = tuple(x for x in red_padded if x > 0)
    green = tuple(x for x in green_padded if x > 0)
    if max(len(red), len(green)) != m:
        raise NotInImageError(f"padded length {m} does not match max(r, l): {pair!r}")
    case = "r<=l" if len(red) <= len(green) else "r>l"
    return TwoColorPartition(red, green), case


def wright_build(pair: DistinctPair) -> Parts:
    """Assemble a Young diagram from a diagonal with given arms and legs.

    Cell (j, j) is placed for j = 1..m, then arms[j] cells to its right
    and legs[j] cells below it.  For a valid pair the result is always a
    left-justified diagram with exactly sum(arms) + sum(legs) + m cells;
    both facts are re-checked defensively.
    """
    m = pair.m
    rows = [j + pair.arms[j - 1] for j in range(1, m + 1)]
    for i in range(m + 1, pair.legs[0] + 2):
        row = sum(1 for j in range(1, m + 1) if pair.legs[j - 1] + j >= i)
        if row == 0:
            break
        rows.append(row)
    shape = tuple(rows)
    if any(a < b for a, b in zip(shape, shape[1:])) or sum(shape) != sum(
        pair.arms
    ) + sum(pair.legs) + m:
        raise ValueError(f"cell set is not a Young diagram: {pair!r}")
    return shape


def durfee_square(shape: Parts) -> int:
    """Side of the largest top-left square inside the diagram."""
    d = 0
    while d < len(shape) and shape[d] >= d + 1:
        d += 1
    return d


def wright_split(shape: Parts) -> DistinctPair:
    """Read arms and legs off the diagonal of a nonempty diagram."""
    shape = as_partition(shape)
    if not shape:
        raise ValueError("cannot split the empty shape")
    m = durfee_square(shape)
    cols = conjugate(shape)
    arms = tuple(shape[j] - (j + 1) for j in range(m))
    legs = tuple(cols[j] - (j + 1) for j in range(m))
    return DistinctPair(arms, legs)


def hook_decompose(shape: Parts) -> tuple[int, ...]:
    """Interleaved cell and 2-count per hook of the 2-modular filling.

    The filling writes 2 in every cell except a 1 in the last cell of each
    row.  Hook j consists of the diagonal cell (j, j), its arm, and its
    leg; the output lists (cells in hook 1, 2's in hook 1, cells in hook
    2, 2's in hook 2, ...), which is strictly decreasing.
    """
    shape = as_partition(shape)
    if not shape:
        raise ValueError("cannot decompose the empty shape")
    cols = conjugate(shape)
    out = []
    for j in range(1, durfee_square(shape) + 1):
        arm = shape[j - 1] - j
        leg = cols[j - 1] - j
        cells = arm + leg + 1
        # row j always ends inside its hook; a leg cell (i, j) holds a 1
        # exactly when row i has length j
        ones = 1 + sum(1 for i in range(j + 1, j + leg + 1) if shape[i - 1] == j)
        out.append(cells)
        out.append(cells - ones)
    return tuple(out)


def check_hooks(hooks: tuple[int, ...]) -> tuple[int, ...]:
    """Validate an interleaved hook-count vector.

    Requires even positive length, nonnegative entries, and strictly
    decreasing order (which makes all parts distinct and every cell count
    positive).  Raises NotInImageError otherwise.
    """
    hooks = tuple(hooks)
    if not hooks or len(hooks) % 2 != 0:
        raise NotInImageError(f"hook vector must have even positive length: {hooks!r}")
    if any(x < 0 for x in hooks):
        raise NotInImageError(f"hook counts must be nonnegative: {hooks!r}")
    if any(a <= b for a, b in zip(hooks, hooks[1:])):
        raise NotInImageError(f"hook counts must be strictly decreasing: {hooks!r}")
    return hooks


def hook_compose(hooks: tuple[int, ...]) -> Parts:
    """Rebuild the unique shape whose hook decomposition is ``hooks``.

    With ones[j] the 1-count of hook j (cells minus 2's), the legs satisfy
    legs[j] = (m-j) + sum over k >= j of (ones[k] - 1) and the arms follow
    from cells[j] = arms[j] + legs[j] + 1.  The reconstruction is always
    re-checked by decomposing the rebuilt shape.
    """
    hooks = check_hooks(hooks)
    m = len(hooks) // 2
    ones = [hooks[2 * j] - hooks[2 * j + 1] for j in range(m)]
    legs = tuple(
        (m - j) + sum(o - 1 for o in ones[j - 1 :]) for j in range(1, m + 1)
    )
    arms = tuple(hooks[2 * j] - 1 - legs[j] for j in range(m))
    try:
        shape = wright_build(DistinctPair(arms, legs))
    except ValueError as exc:
        raise NotInImageError(f"no shape has hook counts {hooks!r}") from exc
    if hook_decompose(shape) != hooks:
        raise NotInImageError(f"round trip failed for hook counts {hooks!r}")
    return shape


def hooks_to_schmidt(hooks: tuple[int, ...]) -> Parts:
    """Subtract the staircase 2m-1, ..., 1, 0 and trim trailing zeros."""
    hooks = check_hooks(hooks)
    length = len(hooks)
    out = [x - (length - 1 - i) for i, x in enumerate(hooks[:-1])]
    out.append(hooks[-1])
    if any(x < 0 for x in out):
        raise NotInImageError(f"staircase removal went negative: {hooks!r}")
    while out and out[-1] == 0:
        out.pop()
    return as_partition(out)


def schmidt_to_hooks(partition: Parts) -> tuple[int, ...]:
    """Zero-pad to even length and add the staircase 2m-1, ..., 1, 0."""
    p = as_partition(partition)
    if not p:
        raise ValueError("cannot lift the empty partition")
    length = 2 * ((len(p) + 1) // 2)
    padded = p + (0,) * (length - len(p))
    out = tuple(x + (length - 1 - i) for i, x in enumerate(padded[:-1]))
    return out + (padded[-1],)


def two_color_to_schmidt(two_color: TwoColorPartition) -> Parts:
    """Full forward map; the result's alternating sum equals the weight."""
    if two_color.weight == 0:
        return ()
    pair = add_staircase(pad_colors(two_color))
    return hooks_to_schmidt(hook_decompose(wright_build(pair)))


def schmidt_to_two_color(partition: Parts) -> TwoColorPartition:
    """Full inverse map, defined for every ordinary partition."""
    p = as_partition(partition)
    if not p:
        return TwoColorPartition((), ())
    shape = hook_compose(schmidt_to_hooks(p))
    two_color, _ = remove_staircase(wright_split(shape))
    return two_color


def render_two_modular(shape: Parts) -> str:
    """ASCII 2-modular filling: one row per line, "2 " cells, final "1"."""
    shape = as_partition(shape)
    return "\n".join("2 " * (row - 1) + "1" for row in shape)
