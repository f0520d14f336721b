"""Shapes of the CLI JSON payloads the fixtures target.

A committed fixture's ``expected`` object must be a sub-object of the
payload its command emits: same key names, same nesting, same leaf types.
The tables here describe those payloads; the validator walks an expected
object against them and complains with a path on any mismatch.
"""

import re

POLYNOMIAL_LIST = "polynomial list"
DEGREE_TABLE = "degree table"

SCHEMAS = {
    ("cm", "saturate"): {
        "m": int,
        "is_trivial": bool,
        "socle_like_generators": POLYNOMIAL_LIST,
        "hilbert": {"values": DEGREE_TABLE, "polynomial": str},
    },
    ("gor", "socle"): {
        "dimension": int,
        "socle": POLYNOMIAL_LIST,
    },
    ("ci", "check"): {
        "codimension": int,
        "complete_intersection": bool,
        "counts_by_degree": DEGREE_TABLE,
        "minimal_generator_count": int,
        "verdicts": list,
    },
}

_TERM = r"(?:\d+(?:/\d+)?\*)?x\d+(?:\^\d+)?(?:\*x\d+(?:\^\d+)?)*"
POLYNOMIAL_RE = re.compile(r"-?%(t)s(?: [+-] %(t)s)*$" % {"t": _TERM})


class SchemaError(ValueError):
    pass


def _fail(path, message):
    raise SchemaError("%s: %s" % (path, message))


def validate_expected(expected, schema, path="expected"):
    """Check that expected is a sub-object of schema (keys may be omitted,
    never invented) with well-formed leaves."""
    if isinstance(schema, dict):
        if not isinstance(expected, dict):
            _fail(path, "expected an object")
        for key, sub in expected.items():
            if key not in schema:
                _fail("%s.%s" % (path, key), "not a payload field")
            validate_expected(sub, schema[key], "%s.%s" % (path, key))
        return
    if schema is POLYNOMIAL_LIST:
        if not isinstance(expected, list):
            _fail(path, "expected a list of polynomials")
        for i, item in enumerate(expected):
            if not isinstance(item, str) or not POLYNOMIAL_RE.match(item):
                _fail("%s[%d]" % (path, i), "not canonical polynomial text")
        return
    if schema is DEGREE_TABLE:
        if not isinstance(expected, dict):
            _fail(path, "expected a degree table")
        for key, value in expected.items():
            if not (isinstance(key, str) and key.isdigit()):
                _fail(path, "degree key %r is not a digit string" % (key,))
            if type(value) is not int or value < 0:
                _fail(path, "entry %r is not a dimension" % (value,))
        return
    if schema is list:
        if not isinstance(expected, list):
            _fail(path, "expected a list")
        return
    if schema in (int, bool, str):
        if type(expected) is not schema:
            _fail(path, "expected %s, got %r" % (schema.__name__, expected))
        return
    raise AssertionError("unknown schema node %r" % (schema,))


def schema_for(command):
    try:
        return SCHEMAS[tuple(command)]
    except KeyError:
        raise SchemaError("no schema for command %r" % (command,))
