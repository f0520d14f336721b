"""Readers for the ideal / marked-set text interchange format.

Hand-rolled on purpose: fixtures must be produced without executing any
code from the library under test, so this module re-reads the *documented*
format (``ring:`` line, ``gens:`` block of monomials, optional ``marked:``
block of ``head => polynomial`` lines) and nothing more.  Only plain ``QQ``
coefficients are supported; that is all the fixtures use.
"""

import re
from dataclasses import dataclass
from fractions import Fraction


class OracleFormatError(ValueError):
    pass


_RING_RE = re.compile(r"^ring:\s*QQ\[([^\]]+)\]\s*$")
_TERM_FACTOR_RE = re.compile(r"^x(\d+)(?:\^(\d+))?$")


@dataclass(frozen=True)
class InputText:
    """A parsed input file: ring size, monomial generators, and (for
    marked-set files) the ``head => body`` pairs in file order."""

    nvars: int
    generators: tuple
    marked: tuple | None

    def ideal_polynomials(self):
        """The polynomials generating the ideal the file describes: the
        marked bodies when present, else the generator monomials."""
        if self.marked is not None:
            return [body for _, body in self.marked]
        return [{e: Fraction(1)} for e in self.generators]


def parse_term(text, nvars):
    """``x0^2*x1`` -> exponent tuple."""
    exps = [0] * nvars
    for factor in text.split("*"):
        m = _TERM_FACTOR_RE.match(factor.strip())
        if not m:
            raise OracleFormatError("bad term factor %r" % factor)
        i, p = int(m.group(1)), int(m.group(2) or 1)
        if i >= nvars:
            raise OracleFormatError("variable x%d outside the ring" % i)
        exps[i] += p
    return tuple(exps)


def _parse_coefficient(text):
    if "/" in text:
        num, den = text.split("/")
        return Fraction(int(num), int(den))
    return Fraction(int(text))


def parse_polynomial(text, nvars):
    """Canonical polynomial text -> {exponent tuple: Fraction}."""
    text = text.strip()
    if text == "0":
        return {}
    pieces = re.split(r" ([+-]) ", text)
    signed = [("-", pieces[0][1:]) if pieces[0].startswith("-")
              else ("+", pieces[0])]
    signed += list(zip(pieces[1::2], pieces[2::2]))
    poly = {}
    for sign, term in signed:
        term = term.strip()
        coeff = Fraction(1)
        if "*" in term and not term.startswith("x"):
            head, rest = term.split("*", 1)
            coeff, term = _parse_coefficient(head), rest
        elif not term.startswith("x"):
            coeff, term = _parse_coefficient(term), None
        if sign == "-":
            coeff = -coeff
        e = parse_term(term, nvars) if term else (0,) * nvars
        poly[e] = poly.get(e, Fraction(0)) + coeff
    return {e: c for e, c in poly.items() if c}


def parse_text(text):
    """Parse a whole ideal or marked-set file."""
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    if not lines:
        raise OracleFormatError("empty input")
    m = _RING_RE.match(lines[0])
    if not m:
        raise OracleFormatError("unsupported ring line %r" % lines[0])
    names = [s.strip() for s in m.group(1).split(",")]
    if names != ["x%d" % i for i in range(len(names))]:
        raise OracleFormatError("variables must be x0..x%d in order"
                                % (len(names) - 1))
    nvars = len(names)
    if len(lines) < 2 or lines[1] != "gens:":
        raise OracleFormatError("expected a gens: block")
    gens, marked = [], None
    block = gens
    for line in lines[2:]:
        if line == "marked:":
            if marked is not None:
                raise OracleFormatError("duplicate marked: block")
            marked = []
            block = marked
            continue
        if block is gens:
            gens.append(parse_term(line, nvars))
        else:
            if "=>" not in line:
                raise OracleFormatError("marked line without => : %r" % line)
            head_text, body_text = line.split("=>", 1)
            head = parse_term(head_text.strip(), nvars)
            body = parse_polynomial(body_text.strip(), nvars)
            if body.get(head) != Fraction(1):
                raise OracleFormatError(
                    "head %s must occur in the body with coefficient 1"
                    % head_text.strip())
            marked.append((head, body))
    return InputText(nvars, tuple(gens),
                     None if marked is None else tuple(marked))
