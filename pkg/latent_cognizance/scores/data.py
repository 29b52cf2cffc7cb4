from enum import Enum
from typing import FrozenSet, List, NamedTuple, Optional

from ..shared.data import InvalidInputError


class ScorerKind(Enum):
    CR = 'cr'
    CS1 = 'cs1'
    CS2 = 'cs2'
    CS3 = 'cs3'
    CS4 = 'cs4'
    LC_IDENTITY = 'lc_identity'
    LC_EXP = 'lc_exp'
    LC_QUADRATIC = 'lc_quadratic'
    LC_CUBIC = 'lc_cubic'
    LC_ABSOLUTE = 'lc_absolute'

    def __str__(self):
        return self.value

    @property
    def is_confidence_score(self) -> bool:
        return self in CONFIDENCE_SCORE_KINDS

    @property
    def is_cognizance(self) -> bool:
        return self in COGNIZANCE_KINDS


# Formulation order used for every table the tool writes.
SCORER_KINDS: List[ScorerKind] = list(ScorerKind)
CONFIDENCE_SCORE_KINDS = frozenset({ScorerKind.CS1, ScorerKind.CS2, ScorerKind.CS3, ScorerKind.CS4})
COGNIZANCE_KINDS = frozenset({
    ScorerKind.LC_IDENTITY,
    ScorerKind.LC_EXP,
    ScorerKind.LC_QUADRATIC,
    ScorerKind.LC_CUBIC,
    ScorerKind.LC_ABSOLUTE,
})


class Orientation(Enum):
    HIGH_MEANS_SIGN = 'high_means_sign'
    HIGH_MEANS_NONSIGN = 'high_means_nonsign'

    def __str__(self):
        return self.value

    def apply(self, value: float) -> float:
        return value if self is Orientation.HIGH_MEANS_SIGN else -value

    @property
    def flipped(self) -> 'Orientation':
        if self is Orientation.HIGH_MEANS_SIGN:
            return Orientation.HIGH_MEANS_NONSIGN
        return Orientation.HIGH_MEANS_SIGN


def default_orientation(kind: ScorerKind) -> Orientation:
    # The summed identity cognizance grows for non-signs, unlike every other formulation.
    if kind is ScorerKind.LC_IDENTITY:
        return Orientation.HIGH_MEANS_NONSIGN
    return Orientation.HIGH_MEANS_SIGN


class ScorerSpec(NamedTuple):
    kind: ScorerKind
    orientation: Orientation

    @property
    def name(self) -> str:
        return self.kind.value

    def __str__(self):
        return self.name


def make_scorer_spec(kind: ScorerKind, orientation: Optional[Orientation] = None) -> ScorerSpec:
    return ScorerSpec(kind, orientation if orientation is not None else default_orientation(kind))


def get_scorer_names() -> List[str]:
    return [kind.value for kind in SCORER_KINDS]


def get_scorer_spec(name: str, orientation: Optional[Orientation] = None) -> ScorerSpec:
    """
    Looks up a scorer by its stable name (e.g. `cs2`, `lc_cubic`).

    @param name: The scorer name.
    @param orientation: Overrides the scorer's default orientation.
    @return: The scorer spec.
    """
    try:
        kind = ScorerKind(name.strip().lower())
    except ValueError:
        raise InvalidInputError(
            f'Unknown scorer "{name}". Valid scorers are: {", ".join(get_scorer_names())}') from None
    return make_scorer_spec(kind, orientation)


def parse_scorer_list(text: str) -> List[ScorerSpec]:
    """
    Parses `all` or a comma-separated list of scorer names. The result is always in formulation order,
    whatever order the names were given in.
    """
    if text.strip().lower() == 'all':
        return [make_scorer_spec(kind) for kind in SCORER_KINDS]
    names = [name for name in text.split(',') if name.strip()]
    if not names:
        raise InvalidInputError('No scorer names were given')
    specs = {spec.kind: spec for spec in (get_scorer_spec(name) for name in names)}
    return [specs[kind] for kind in SCORER_KINDS if kind in specs]


# Flags carried by a ScoreValue.
FLAG_UNRELIABLE = 'unreliable'
FLAG_CLAMPED = 'clamped'
FLAG_LOG_DOMAIN = 'log_domain'


class ScoreValue(NamedTuple):
    """
    A scalar score. `oriented` is `raw` flipped in sign when the scorer's orientation is high_means_nonsign, so that
    a higher oriented value always means more sign-like.

    `log_raw` is only set for the exponential cognizance and holds log(sum(e^a_i)). When the raw sum overflows,
    `raw` holds that log-domain value instead and the `log_domain` flag is set.
    """
    raw: float
    oriented: float
    orientation: Orientation = Orientation.HIGH_MEANS_SIGN
    flags: FrozenSet[str] = frozenset()
    log_raw: Optional[float] = None

    @property
    def ranking(self) -> float:
        """
        The value used to rank samples during evaluation. Equals `oriented` except for the exponential cognizance,
        which ranks by its (strictly increasing) log-domain value so that overflowed sums stay comparable.
        """
        if self.log_raw is None:
            return self.oriented
        return self.orientation.apply(self.log_raw)

    @property
    def is_unreliable(self) -> bool:
        return FLAG_UNRELIABLE in self.flags

    @property
    def is_clamped(self) -> bool:
        return FLAG_CLAMPED in self.flags

    @property
    def is_log_domain(self) -> bool:
        return FLAG_LOG_DOMAIN in self.flags

    @property
    def flags_text(self) -> str:
        return '|'.join(sorted(self.flags))
