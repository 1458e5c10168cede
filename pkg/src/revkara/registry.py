"""Field polynomials used in the published gate-count tables, with the published values."""

from __future__ import annotations

from dataclasses import dataclass

from .gf2poly import ModulusSpec, parse_modulus


@dataclass(frozen=True)
class FieldEntry:
    degree: int
    exponents: tuple[int, ...]
    source: str
    constmult_cnot: int  # published CNOTs for multiplication by 1 + x^ceil(n/2)
    constmult_depth: int

    @property
    def modulus(self) -> ModulusSpec:
        return ModulusSpec(self.exponents)

    @property
    def key(self) -> str:
        return f"{self.degree}/{self.source}"


FIELDS: tuple[FieldEntry, ...] = (
    FieldEntry(4, (4, 1, 0), "ehcc", 5, 4),
    FieldEntry(8, (8, 4, 3, 1, 0), "ehcc", 20, 14),
    FieldEntry(16, (16, 5, 3, 1, 0), "ehcc", 47, 30),
    FieldEntry(32, (32, 7, 3, 2, 0), "ehcc", 133, 93),
    FieldEntry(64, (64, 4, 3, 1, 0), "ehcc", 264, 182),
    FieldEntry(127, (127, 1, 0), "ehcc", 396, 293),
    FieldEntry(128, (128, 7, 2, 1, 0), "ehcc", 626, 443),
    FieldEntry(163, (163, 7, 6, 3, 0), "fips", 740, 975),
    FieldEntry(163, (163, 89, 74, 15, 0), "banegas", 1885, 1646),
    FieldEntry(233, (233, 74, 0), "fips", 3319, 2976),
    FieldEntry(256, (256, 10, 5, 2, 0), "ehcc", 1401, 1030),
    FieldEntry(283, (283, 12, 7, 5, 0), "fips", 2117, 1700),
    FieldEntry(283, (283, 160, 123, 37, 0), "banegas", 6785, 6368),
    FieldEntry(571, (571, 10, 5, 2, 0), "fips", 4027, 3177),
    FieldEntry(571, (571, 353, 218, 135, 0), "banegas", 33182, 32331),
    FieldEntry(1024, (1024, 19, 6, 1, 0), "seroussi", 8147, 6624),
)

# Published full-multiplier figures: degree -> (schoolbook TOF, TOF, CNOT, depth).
# Degree 2 uses 1 + x + x^2, which is not in the constant-multiplication table.
MODMULT_PUBLISHED: dict[int, tuple[int, int, int, int]] = {
    2: (4, 3, 9, 9),
    4: (16, 9, 44, 32),
    8: (64, 27, 200, 124),
    16: (256, 81, 678, 365),
    32: (1024, 243, 2238, 1110),
    64: (4096, 729, 6896, 3129),
    127: (16129, 2185, 20632, 8769),
    128: (16384, 2187, 21272, 9142),
    163: (26569, 4387, 37168, 17906),
    233: (54289, 6323, 63655, 29530),
    256: (65536, 6561, 64706, 26725),
    283: (80089, 10273, 89620, 41548),
    571: (326041, 31171, 270940, 121821),
    1024: (1048576, 59049, 591942, 234053),
}

EXTRA_MODULI = {2: (2, 1, 0)}

# Primary choice per degree: the first listed, which is also the cheaper one.
_DEFAULT = {}
for _e in FIELDS:
    _DEFAULT.setdefault(_e.degree, _e)


def default_modulus(degree: int) -> ModulusSpec:
    if degree in _DEFAULT:
        return _DEFAULT[degree].modulus
    if degree in EXTRA_MODULI:
        return ModulusSpec(EXTRA_MODULI[degree])
    raise KeyError(f"no registered field polynomial of degree {degree}")


def lookup(key: str) -> ModulusSpec:
    """Resolve ``"163"``, ``"163/banegas"`` or an explicit exponent list ``"163,7,6,3,0"``."""
    key = key.strip()
    if "," in key:
        return parse_modulus(key)
    if "/" in key:
        deg, src = key.split("/", 1)
        for e in FIELDS:
            if str(e.degree) == deg.strip() and e.source == src.strip():
                return e.modulus
        raise KeyError(f"no registered field polynomial {key!r}")
    try:
        return default_modulus(int(key))
    except ValueError:
        raise KeyError(f"unrecognized field {key!r}") from None
