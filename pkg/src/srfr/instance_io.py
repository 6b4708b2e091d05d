"""Line-oriented text format for SRFR instances.

Grammar (one record per line, ``#`` starts a comment, blank lines ignored)::

    p <prime>
    a <c0> <c1> ... <ck>      one line per modulus, coefficients low to high
    u <c0> <c1> ...           one line per residue, same order as the moduli
    N <N_1> ... <N_n>
    D <D>

``p`` must come first.  A ``u`` line with no coefficients is the zero
polynomial.  :func:`dumps` writes exactly this layout and :func:`loads`
inverts it.
"""

from __future__ import annotations

from pathlib import Path

from .field import PrimeField
from .poly import Polynomial
from .reconstruct import SRFRInstance
from .relation import ModuliSet


class InstanceFormatError(ValueError):
    pass


def dumps(inst: SRFRInstance) -> str:
    def coeffs(q: Polynomial) -> str:
        return " ".join(str(c) for c in q.coeffs)

    lines = [f"p {inst.field.p}"]
    lines += [f"a {coeffs(a)}".rstrip() for a in inst.mods.moduli]
    lines += [f"u {coeffs(u)}".rstrip() for u in inst.u]
    lines.append("N " + " ".join(str(x) for x in inst.N))
    lines.append(f"D {inst.D}")
    return "\n".join(lines) + "\n"


def loads(text: str) -> SRFRInstance:
    field = None
    a_lines: list[list[int]] = []
    u_lines: list[list[int]] = []
    N = D = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tag, *rest = line.split()
        try:
            nums = [int(t) for t in rest]
        except ValueError:
            raise InstanceFormatError(f"line {lineno}: non-integer token in {raw!r}") from None
        if tag == "p":
            if field is not None or len(nums) != 1:
                raise InstanceFormatError(f"line {lineno}: expected a single 'p <prime>' line")
            try:
                field = PrimeField(nums[0])
            except ValueError as exc:
                raise InstanceFormatError(f"line {lineno}: {exc}") from None
            continue
        if field is None:
            raise InstanceFormatError(f"line {lineno}: 'p' must come first")
        if tag == "a":
            a_lines.append(nums)
        elif tag == "u":
            u_lines.append(nums)
        elif tag == "N":
            N = nums
        elif tag == "D":
            if len(nums) != 1:
                raise InstanceFormatError(f"line {lineno}: expected 'D <int>'")
            D = nums[0]
        else:
            raise InstanceFormatError(f"line {lineno}: unknown record {tag!r}")
    if field is None or N is None or D is None or not a_lines:
        raise InstanceFormatError("instance needs p, at least one a, N and D")
    if len(u_lines) != len(a_lines):
        raise InstanceFormatError(f"{len(a_lines)} moduli but {len(u_lines)} residues")
    try:
        mods = ModuliSet([Polynomial(field, c) for c in a_lines])
        return SRFRInstance(mods, [Polynomial(field, c) for c in u_lines], N, D)
    except ValueError as exc:
        raise InstanceFormatError(str(exc)) from None


def load(path: str | Path) -> SRFRInstance:
    return loads(Path(path).read_text())


def dump(inst: SRFRInstance, path: str | Path) -> None:
    Path(path).write_text(dumps(inst))
