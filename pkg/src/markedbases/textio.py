"""Plain-text input files for ideals, polynomial lists and marked sets.

An ideal file is a header line naming the coefficient ring and the
variables, then a ``gens:`` block with one generator per line::

    ring: QQ[x0,x1,x2]
    gens:
    x2^2
    x1^2

The ring may be ``QQ``, ``GF(p)`` for a prime p, or either of those with
parameter names appended, as in ``QQ(d1,d2)[x0,x1]``.  Variables must be
named x0, x1, ... in order; blank lines and ``#`` comments are skipped
everywhere.

A marked-set file carries the same header plus a ``marked:`` block whose
lines read ``head => polynomial``; the heads must cover the Pommaret basis
of the ideal in the ``gens:`` block exactly.

Syntax problems raise FormatError; well-formed files describing invalid
objects (a non-monomial ideal generator, heads that miss the Pommaret
basis) raise RingError like the rest of the library.
"""

import re

from .monomials import MonomialIdeal, pommaret_basis
from .marked import MarkedSet
from .rings import (MarkedPolynomial, ParameterRing, ParseError, PrimeField,
                    QQ, Ring, RingError, parse_polynomial, polynomial_str,
                    term_str)


class FormatError(ValueError):
    """A file that does not match the documented shape."""


_RING_RE = re.compile(
    r"^\s*(QQ|GF\(\s*(\d+)\s*\))\s*(?:\(([^()\[\]]*)\))?\s*\[([^\[\]]*)\]\s*$")


def parse_ring(text):
    """Ring described by a header payload like ``QQ(d1)[x0,x1]``."""
    m = _RING_RE.match(text)
    if m is None:
        raise FormatError("cannot read ring description %r" % text.strip())
    base, prime, params, variables = m.groups()
    domain = QQ if base == "QQ" else PrimeField(int(prime))
    if params is not None:
        names = tuple(s.strip() for s in params.split(",") if s.strip())
        if not names:
            raise FormatError("empty parameter list in %r" % text.strip())
        domain = ParameterRing(domain, names)
    varnames = [s.strip() for s in variables.split(",") if s.strip()]
    if not varnames:
        raise FormatError("empty variable list in %r" % text.strip())
    expected = ["x%d" % i for i in range(len(varnames))]
    if varnames != expected:
        raise FormatError("variables must be %s, got %s"
                          % (",".join(expected), ",".join(varnames)))
    return Ring(domain, len(varnames))


def ring_repr(ring):
    """Header payload for a ring, inverse of parse_ring."""
    domain = ring.domain
    params = ""
    if isinstance(domain, ParameterRing):
        params = "(%s)" % ",".join(domain.names)
        domain = domain.base
    base = "GF(%d)" % domain.p if isinstance(domain, PrimeField) else "QQ"
    return "%s%s[%s]" % (base, params, ",".join(ring.names))


def _sections(text):
    """(ring, {section name: [payload lines]}) for a fixture file."""
    ring = None
    sections = {}
    current = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("ring:"):
            if ring is not None:
                raise FormatError("line %d: second ring line" % lineno)
            ring = parse_ring(line[len("ring:"):])
            continue
        if line.endswith(":") and " " not in line:
            current = line[:-1]
            if current in sections:
                raise FormatError("line %d: second %r block" % (lineno, line))
            sections[current] = []
            continue
        if ring is None:
            raise FormatError("line %d: content before the ring line" % lineno)
        if current is None:
            raise FormatError("line %d: content outside any block" % lineno)
        sections[current].append((lineno, line))
    if ring is None:
        raise FormatError("missing ring line")
    return ring, sections


def _parse_line(ring, lineno, line):
    try:
        return parse_polynomial(ring, line)
    except (ParseError, RingError) as exc:
        raise FormatError("line %d: %s" % (lineno, exc)) from exc


def _parse_dict_line(ring, lineno, line):
    """Exponent -> coefficient dict for one possibly inhomogeneous line."""
    out = {}
    dom = ring.domain
    for chunk in line.replace("-", "+-").split("+"):
        chunk = chunk.strip()
        if not chunk or chunk == "-":
            if chunk:
                raise FormatError("line %d: dangling sign" % lineno)
            continue
        term = _parse_line(ring, lineno, chunk)
        for e, c in term.coeffs.items():
            acc = dom.add(out.get(e, dom.zero), c)
            if dom.is_zero(acc):
                out.pop(e, None)
            else:
                out[e] = acc
    return out


def read_polys(text):
    """(ring, [polynomial]) from an ideal-shaped file, general entries."""
    ring, sections = _sections(text)
    unknown = set(sections) - {"gens"}
    if unknown:
        raise FormatError("unexpected block %r" % sorted(unknown)[0])
    entries = sections.get("gens", [])
    if not entries:
        raise FormatError("missing or empty gens block")
    return ring, [_parse_line(ring, n, line) for n, line in entries]


def read_poly_dicts(text):
    """(ring, [exponent -> coefficient dict]) from an ideal-shaped file.

    Unlike read_polys this accepts inhomogeneous entries, which is what a
    sampled regular-sequence candidate usually is."""
    ring, sections = _sections(text)
    unknown = set(sections) - {"gens"}
    if unknown:
        raise FormatError("unexpected block %r" % sorted(unknown)[0])
    entries = sections.get("gens", [])
    if not entries:
        raise FormatError("missing or empty gens block")
    return ring, [_parse_dict_line(ring, n, line) for n, line in entries]


def _monomial_exponent(f, source):
    support = f.support()
    if len(support) != 1 or not f.ring.domain.eq(f.coeff(support[0]),
                                                f.ring.domain.one):
        raise RingError("ideal generator %s is not a monomial" % source)
    return support[0]


def read_ideal(text):
    """(ring, MonomialIdeal) from an ideal file."""
    ring, polys = read_polys(text)
    gens = [_monomial_exponent(f, polynomial_str(f)) for f in polys]
    return ring, MonomialIdeal(ring.nvars, gens)


def read_marked(text):
    """(ring, MarkedSet) from a marked-set file."""
    ring, sections = _sections(text)
    unknown = set(sections) - {"gens", "marked"}
    if unknown:
        raise FormatError("unexpected block %r" % sorted(unknown)[0])
    gens_entries = sections.get("gens", [])
    if not gens_entries:
        raise FormatError("missing or empty gens block")
    marked_entries = sections.get("marked", [])
    if not marked_entries:
        raise FormatError("missing or empty marked block")
    gens = [_monomial_exponent(_parse_line(ring, n, line), line)
            for n, line in gens_entries]
    qs = pommaret_basis(MonomialIdeal(ring.nvars, gens))
    polys = []
    seen = set()
    for lineno, line in marked_entries:
        if "=>" not in line:
            raise FormatError("line %d: expected 'head => polynomial'" % lineno)
        head_text, body_text = line.split("=>", 1)
        head = _monomial_exponent(_parse_line(ring, lineno, head_text),
                                  head_text.strip())
        if head in seen:
            raise FormatError("line %d: head %s listed twice"
                              % (lineno, term_str(head)))
        seen.add(head)
        polys.append(MarkedPolynomial(head, _parse_line(ring, lineno, body_text)))
    missing = [a for a in qs.pommaret if a not in seen]
    extra = sorted(seen - set(qs.pommaret))
    if missing or extra:
        what = []
        if missing:
            what.append("missing %s" % ", ".join(term_str(a) for a in missing))
        if extra:
            what.append("extra %s" % ", ".join(term_str(a) for a in extra))
        raise RingError("marked heads do not match the Pommaret basis: "
                        + "; ".join(what))
    return ring, MarkedSet(qs, polys)


def write_ideal(ring, gens):
    """Ideal file text for exponent tuples ``gens``."""
    lines = ["ring: %s" % ring_repr(ring), "gens:"]
    lines.extend(term_str(e) for e in gens)
    return "\n".join(lines) + "\n"


def write_marked(ms):
    """Marked-set file text for a marked set or basis."""
    ring = ms.ring
    lines = ["ring: %s" % ring_repr(ring), "gens:"]
    lines.extend(term_str(e) for e in ms.qs.generators)
    lines.append("marked:")
    for h in ms:
        lines.append("%s => %s" % (term_str(h.head), polynomial_str(h.body)))
    return "\n".join(lines) + "\n"
